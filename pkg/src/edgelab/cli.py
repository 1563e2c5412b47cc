"""Command-line front end: ``edgelab params | construct | bound | certify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .canon import canonical_form
from .certify import TheoremId, build_grid, certify, specs_from_report
from .enumeration import MODES
from .errors import EdgelabError
from .exact import (
    CHROMATIC_INDEX_MAX_EDGES,
    CHROMATIC_MAX_N,
    chromatic_index,
    chromatic_number,
    independence_number,
)
from .extremal import (
    build_F,
    build_G,
    build_H,
    build_J,
    build_second_extremal,
    canonical_witness,
    e1,
    e2,
    e3,
)
from .gallai_edmonds import gallai_edmonds
from .graph import Graph, read_graph6_lines
from .matching import matching_number

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_grid(items: Sequence[str]) -> dict[str, list[int]]:
    """``["alpha=1..4", "nu=1,2"]`` -> ``{"alpha": [1, 2, 3, 4], "nu": [1, 2]}``."""
    grid: dict[str, list[int]] = {}
    for item in items:
        key, sep, spec = item.partition("=")
        if not sep or not key:
            raise UsageError(f"grid entry must look like key=lo..hi or key=a,b: {item!r}")
        values: list[int] = []
        try:
            for part in spec.split(","):
                lo, dots, hi = part.partition("..")
                values.extend(range(int(lo), int(hi) + 1) if dots else [int(lo)])
        except ValueError:
            raise UsageError(f"bad integer in grid entry {item!r}") from None
        if not values:
            raise UsageError(f"empty range in grid entry {item!r}")
        grid.setdefault(key.strip(), []).extend(values)
    return grid


def _read_graphs(path: str | None, args: Sequence[str] = ()) -> list[Graph]:
    if args:
        return list(read_graph6_lines(args))
    if path in (None, "-"):
        return list(read_graph6_lines(sys.stdin))
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- params ---------------------------------------------------------------------------


def graph_params(g: Graph) -> dict[str, object]:
    ge = gallai_edmonds(g)
    rec: dict[str, object] = {
        "graph6": g.to_graph6().decode("ascii"),
        "n": g.n,
        "edges": g.num_edges,
        "alpha": independence_number(g),
        "delta": g.max_degree() if g.n else 0,
        "nu": matching_number(g),
        "chi": chromatic_number(g)[0] if g.n <= CHROMATIC_MAX_N else None,
        "chi_prime": chromatic_index(g)[0] if g.num_edges <= CHROMATIC_INDEX_MAX_EDGES else None,
        "essential": ge.essential.to_list(),
        "D": ge.D.to_list(),
        "A": ge.A.to_list(),
        "C": ge.C.to_list(),
    }
    return rec


def _text_value(v: object) -> str:
    if isinstance(v, list):
        return "{" + ",".join(map(str, v)) + "}"
    return str(v)


def cmd_params(args: argparse.Namespace, out: TextIO) -> int:
    for g in _read_graphs(args.input, args.graph6):
        rec = graph_params(g)
        if args.format == "json":
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(" ".join(f"{k}={_text_value(v)}" for k, v in rec.items()) + "\n")
    return EXIT_PASS


# -- construct ------------------------------------------------------------------------

FAMILIES = {
    "G": (2, lambda a, b: [build_G(a, b)]),
    "H": (2, lambda a, b: [build_H(a, b)]),
    "F": (2, lambda a, b: [build_F(a, b)]),
    "J": (1, lambda d: [build_J(d)]),
    "witness": (2, lambda d, nu: [canonical_witness(d, nu)]),
    "second-extremal": (2, lambda d, nu: list(build_second_extremal(d, nu))),
}


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    arity, build = FAMILIES[args.family]
    if len(args.params) != arity:
        raise UsageError(f"construct {args.family} takes {arity} integer parameter(s)")
    for g in build(*args.params):
        text = str(canonical_form(g)) if args.canonical else g.to_graph6().decode("ascii")
        out.write(text + "\n")
    return EXIT_PASS


# -- bound ----------------------------------------------------------------------------


def cmd_bound(args: argparse.Namespace, out: TextIO) -> int:
    a, b = args.params
    if args.pair == "alpha-nu":
        case = e1(a, b)
    elif args.pair == "alpha-delta":
        case = e2(a, b)
    else:
        case = e3(a, b, args.mode or "eq")
    rec = {
        "pair": args.pair,
        "params": [a, b],
        "value": case.value,
        "regime": case.regime.value,
        "expected_extremal_count": case.expected_extremal_count.value,
    }
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"{case.value} {case.regime.value} {case.expected_extremal_count.value}\n")
    return EXIT_PASS


# -- certify --------------------------------------------------------------------------


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            theorem, specs = specs_from_report(json.load(fh))
    else:
        if args.theorem is None:
            raise UsageError("certify needs a theorem id or --replay REPORT")
        theorem = TheoremId(args.theorem)
        try:
            specs = build_grid(
                theorem,
                parse_grid(args.grid),
                n_cap=args.n_cap,
                modes=[args.mode] if args.mode else None,
                no_isolated=args.no_isolated,
            )
        except EdgelabError as exc:
            raise UsageError(str(exc)) from None
    source = _read_graphs(args.input) if args.input else None
    report = certify(theorem, specs, jobs=args.jobs, source=source, timing=args.timing)
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        _emit(text, args.out)
    else:
        out.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("EDGELAB_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgelab",
        description="Edge bounds under two restricted graph parameters, with exhaustive certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print graph parameters for graph6 input")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: read lines from --input or stdin)")
    p.add_argument("--input", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("construct", help="emit graph6 for an extremal construction")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=_positive_int)
    p.add_argument("--canonical", action=argparse.BooleanOptionalAction, default=True,
                   help="emit the canonical labelling (default) or the construction's own labelling")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", help="evaluate a closed-form edge bound")
    p.add_argument("pair", choices=("alpha-nu", "alpha-delta", "delta-nu"))
    p.add_argument("params", nargs=2, type=_positive_int)
    p.add_argument("--mode", choices=MODES, help="constraint reading for delta-nu (default eq)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="certify a theorem by exhaustive search")
    p.add_argument("theorem", nargs="?", choices=[t.value for t in TheoremId])
    p.add_argument("--grid", action="append", default=[], metavar="KEY=LO..HI",
                   help="axis values, e.g. alpha=1..4 or nu=1,2 (repeatable)")
    p.add_argument("--n-cap", type=_positive_int, help="vertex cap for bound theorems; n range for suites")
    p.add_argument("--mode", choices=MODES, help="constraint mode (default: per theorem)")
    p.add_argument("--no-isolated", action="store_true", help="exclude graphs with isolated vertices")
    p.add_argument("--jobs", type=_positive_int, default=_default_jobs(),
                   help="worker processes across cells (default: $EDGELAB_JOBS or 1)")
    p.add_argument("--input", help="scan graphs from a graph6 file ('-' for stdin) instead of generating")
    p.add_argument("--replay", metavar="REPORT", help="rerun the grid recorded in a JSON report")
    p.add_argument("--out", help="write the report to FILE")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="add wall_time to the report")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args, sys.stdout)
    except OSError as exc:
        print(f"edgelab: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, EdgelabError) as exc:
        print(f"edgelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

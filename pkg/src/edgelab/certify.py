"""Exhaustive certification runs and their machine-readable reports.

A run is a theorem id plus a grid of parameter cells.  Bound theorems compare
a closed-form edge bound and its predicted extremal graphs against an
exhaustive search; invariant suites check a structural statement on every
graph of a given order and count counterexamples.  Reports contain no timing
data unless asked for, so identical inputs give byte-identical reports.
"""

from __future__ import annotations

import enum
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .canon import canonical_form
from .enumeration import ENUM_MAX_N, GraphFilter, all_graphs, extremal_search
from .errors import CapacityError, EdgelabError
from .exact import chromatic_index, chromatic_number, independence_number
from .extremal import (
    ExtremalCount,
    build_F,
    build_second_extremal,
    canonical_witness,
    e1,
    e2,
    e3,
    erdos_gallai_bound,
    predicted_alpha_nu_extremal,
)
from .gallai_edmonds import verify_stability, verify_structure_theorem
from .graph import Graph, disjoint_union, g6_encode
from .matching import is_factor_critical, matching_number

MAX_COUNTEREXAMPLES = 10


class TheoremId(str, enum.Enum):
    ALPHA_NU = "ALPHA_NU"
    ALPHA_DELTA = "ALPHA_DELTA"
    DELTA_NU = "DELTA_NU"
    DELTA_NU_UNIQUE = "DELTA_NU_UNIQUE"
    ED_GAL_STRUCTURE = "ED_GAL_STRUCTURE"
    STABILITY = "STABILITY"
    GALLAI = "GALLAI"
    BROOKS = "BROOKS"
    VIZING = "VIZING"
    ERDOS_GALLAI = "ERDOS_GALLAI"
    ALPHA_NU_N2 = "ALPHA_NU_N2"


BOUND_THEOREMS = {
    TheoremId.ALPHA_NU,
    TheoremId.ALPHA_DELTA,
    TheoremId.DELTA_NU,
    TheoremId.DELTA_NU_UNIQUE,
}
N_NU_THEOREMS = {TheoremId.ERDOS_GALLAI, TheoremId.ALPHA_NU_N2}

GRID_AXES = {
    TheoremId.ALPHA_NU: ("alpha", "nu"),
    TheoremId.ALPHA_DELTA: ("alpha", "delta"),
    TheoremId.DELTA_NU: ("delta", "nu"),
    TheoremId.DELTA_NU_UNIQUE: ("delta", "nu"),
    TheoremId.ERDOS_GALLAI: ("n", "nu"),
    TheoremId.ALPHA_NU_N2: ("n", "nu"),
}
SUITE_AXES = ("n",)

DEFAULT_GRIDS: dict[TheoremId, dict[str, list[int]]] = {
    TheoremId.ALPHA_NU: {"alpha": [1, 2, 3, 4], "nu": [1, 2]},
    TheoremId.ALPHA_DELTA: {"alpha": [1, 2], "delta": [1, 2, 3]},
    TheoremId.DELTA_NU: {"delta": [2, 3, 4], "nu": [1, 2, 3]},
    TheoremId.DELTA_NU_UNIQUE: {"delta": [2, 3, 4], "nu": [1, 2, 3]},
    TheoremId.ERDOS_GALLAI: {"n": [6, 7, 8]},
    TheoremId.ALPHA_NU_N2: {"n": [6, 7, 8]},
}
DEFAULT_SUITE_N = list(range(1, 8))


@dataclass(frozen=True)
class CellSpec:
    theorem: TheoremId
    params: tuple[tuple[str, int], ...]
    mode: str
    n_cap: int
    no_isolated: bool

    @property
    def p(self) -> dict[str, int]:
        return dict(self.params)


@dataclass
class CellResult:
    spec: CellSpec
    graphs_scanned: int = 0
    predicted_bound: int | None = None
    observed_max: int | None = None
    predicted_extremal: list[str] = field(default_factory=list)
    observed_extremal: list[str] = field(default_factory=list)
    extremal_relation: str | None = None
    counterexamples: list[str] = field(default_factory=list)
    num_counterexamples: int = 0
    error: str | None = None
    passed: bool = False

    def to_dict(self) -> dict[str, object]:
        s = self.spec
        out: dict[str, object] = {
            "params": s.p,
            "constraint_mode": s.mode,
            "n_cap": s.n_cap,
            "no_isolated": s.no_isolated,
            "graphs_scanned": self.graphs_scanned,
        }
        if s.theorem in BOUND_THEOREMS or s.theorem in N_NU_THEOREMS:
            out.update(
                predicted_bound=self.predicted_bound,
                observed_max=self.observed_max,
                predicted_extremal=self.predicted_extremal,
                observed_extremal=self.observed_extremal,
                extremal_relation=self.extremal_relation,
            )
        if s.theorem not in BOUND_THEOREMS:
            out.update(
                counterexamples=self.counterexamples,
                num_counterexamples=self.num_counterexamples,
            )
        out["error"] = self.error
        out["pass"] = self.passed
        return out


# -- grid construction ------------------------------------------------------------


def default_n_cap(theorem: TheoremId, p: dict[str, int]) -> int:
    if theorem is TheoremId.ALPHA_NU:
        return min(2 * p["nu"] + p["alpha"] + 1, ENUM_MAX_N)
    if theorem is TheoremId.ALPHA_DELTA:
        return min(p["alpha"] * (p["delta"] + 1) + 2, ENUM_MAX_N)
    if theorem in (TheoremId.DELTA_NU, TheoremId.DELTA_NU_UNIQUE):
        return min(canonical_witness(p["delta"], p["nu"]).n + 2, ENUM_MAX_N)
    return p["n"]


def default_modes(theorem: TheoremId) -> list[str]:
    if theorem in (TheoremId.DELTA_NU, TheoremId.DELTA_NU_UNIQUE):
        return ["eq", "le"]
    if theorem in BOUND_THEOREMS:
        return ["eq"]
    return ["le"]


def build_grid(
    theorem: TheoremId,
    grid: dict[str, list[int]] | None = None,
    *,
    n_cap: int | None = None,
    modes: Sequence[str] | None = None,
    no_isolated: bool = False,
) -> list[CellSpec]:
    """Expand a grid of axis values into cell specs, in a fixed order."""
    theorem = TheoremId(theorem)
    axes = GRID_AXES.get(theorem, SUITE_AXES)
    values = dict(DEFAULT_GRIDS.get(theorem, {}))
    if theorem not in GRID_AXES:
        values = {"n": list(range(1, n_cap + 1)) if n_cap else DEFAULT_SUITE_N}
    if grid:
        unknown = set(grid) - set(axes)
        if unknown:
            raise EdgelabError(f"{theorem.value} grid axes are {axes}, got {sorted(unknown)}")
        values.update(grid)
    if theorem in N_NU_THEOREMS and "nu" not in values:
        combos = [(n, nu) for n in values["n"] for nu in range(1, (n - 2) // 2 + 1)]
    else:
        missing = [a for a in axes if a not in values]
        if missing:
            raise EdgelabError(f"{theorem.value} grid needs values for {missing}")
        combos = list(itertools.product(*(sorted(set(values[a])) for a in axes)))
    if theorem is TheoremId.ALPHA_DELTA and not (grid and "alpha" in grid and "delta" in grid):
        combos = [(a, d) for a, d in combos if a * (d + 1) <= 8]
    if theorem in N_NU_THEOREMS:
        combos = [(n, nu) for n, nu in combos if 2 * nu + 2 <= n]
    specs = []
    forced_isolated = no_isolated or theorem in (TheoremId.DELTA_NU, TheoremId.DELTA_NU_UNIQUE)
    for mode in modes or default_modes(theorem):
        for combo in combos:
            p = dict(zip(axes, combo))
            if theorem in BOUND_THEOREMS:
                cap = n_cap if n_cap else default_n_cap(theorem, p)
            else:
                cap = p["n"]
            specs.append(CellSpec(theorem, tuple(p.items()), mode, cap, forced_isolated))
    specs.sort(key=lambda s: (s.params, s.mode))
    return specs


# -- bound theorems ----------------------------------------------------------------


def _forms(graphs: Iterable[Graph], n_cap: int) -> list[str]:
    return sorted({str(canonical_form(g)) for g in graphs if g.n <= n_cap})


def _trivial_extremal(delta: int, nu: int, mode: str) -> list[Graph]:
    if mode == "le" and delta == 3 and nu == 1:
        return [Graph.complete(3), Graph.star(3)]
    return [canonical_witness(delta, nu)]


def _delta_nu_witnesses(delta: int, nu: int) -> list[Graph]:
    case = e3(delta, nu)
    if case.expected_extremal_count is ExtremalCount.MANY:
        return list(build_second_extremal(delta, nu))
    return [canonical_witness(delta, nu)]


def _bound_cell(spec: CellSpec, source: Sequence[Graph] | None) -> CellResult:
    res = CellResult(spec)
    p, mode, cap = spec.p, spec.mode, spec.n_cap
    th = spec.theorem
    if th is TheoremId.ALPHA_NU:
        filt = GraphFilter(alpha=p["alpha"], nu=p["nu"], mode=mode, no_isolated=spec.no_isolated)
        res.predicted_bound = e1(p["alpha"], p["nu"]).value
        predicted = predicted_alpha_nu_extremal(p["alpha"], p["nu"])
        res.extremal_relation = "equal"
    elif th is TheoremId.ALPHA_DELTA:
        filt = GraphFilter(alpha=p["alpha"], delta=p["delta"], mode=mode, no_isolated=spec.no_isolated)
        res.predicted_bound = e2(p["alpha"], p["delta"]).value
        predicted = [build_F(p["alpha"], p["delta"])]
        res.extremal_relation = "equal"
    else:
        delta, nu = p["delta"], p["nu"]
        filt = GraphFilter(delta=delta, nu=nu, mode=mode, no_isolated=spec.no_isolated)
        case = e3(delta, nu, mode)
        res.predicted_bound = case.value
        if delta == 1 or nu == 1:
            predicted = _trivial_extremal(delta, nu, mode)
        else:
            predicted = _delta_nu_witnesses(delta, nu)
        if th is TheoremId.DELTA_NU:
            res.extremal_relation = "superset"
        elif case.expected_extremal_count is ExtremalCount.MANY:
            res.extremal_relation = "superset_at_least_2"
        else:
            res.extremal_relation = "equal"
    found = extremal_search(filt, cap, source=source)
    res.graphs_scanned = found.scanned
    res.observed_max = found.max_edges
    res.observed_extremal = [str(f) for f in found.extremal]
    res.predicted_extremal = _forms(predicted, cap)
    obs, pred = set(res.observed_extremal), set(res.predicted_extremal)
    if res.extremal_relation == "equal":
        ok_set = obs == pred
    elif res.extremal_relation == "superset":
        ok_set = pred <= obs
    else:
        ok_set = pred <= obs and len(obs) >= 2
    res.passed = res.observed_max == res.predicted_bound and ok_set
    return res


# -- invariant suites ----------------------------------------------------------------


def _check_gallai(g: Graph) -> bool:
    if not g.is_connected():
        return True
    nu = matching_number(g)
    if all(matching_number(g.delete_vertex(x)) == nu for x in range(g.n)):
        return is_factor_critical(g)
    return True


def _check_brooks(g: Graph) -> bool:
    chi, cert = chromatic_number(g, with_certificate=True)
    assert cert is not None
    if not cert.is_valid_for(g) or cert.num_classes != chi:
        return False
    delta = g.max_degree()
    if chi > delta + 1:
        return False
    if g.is_connected() and not g.is_complete() and not g.is_odd_cycle():
        return chi <= delta
    return True


def _check_vizing(g: Graph) -> bool:
    chi_e, cert = chromatic_index(g, with_certificate=True)
    assert cert is not None
    if not cert.is_valid_for(g) or cert.num_classes != chi_e:
        return False
    delta = g.max_degree()
    return delta <= chi_e <= delta + 1 and g.num_edges <= chi_e * matching_number(g)


SUITES: dict[TheoremId, Callable[[Graph], bool]] = {
    TheoremId.GALLAI: _check_gallai,
    TheoremId.ED_GAL_STRUCTURE: verify_structure_theorem,
    TheoremId.STABILITY: verify_stability,
    TheoremId.BROOKS: _check_brooks,
    TheoremId.VIZING: _check_vizing,
}


def _graphs_of_order(n: int, filt: GraphFilter | None, source: Sequence[Graph] | None):
    if source is None:
        return all_graphs(n, filt)
    return (g for g in source if g.n == n and (filt is None or filt.accepts(g)))


def _suite_cell(spec: CellSpec, source: Sequence[Graph] | None) -> CellResult:
    res = CellResult(spec)
    check = SUITES[spec.theorem]
    filt = GraphFilter(no_isolated=True) if spec.no_isolated else None
    for g in _graphs_of_order(spec.p["n"], filt, source):
        res.graphs_scanned += 1
        if not check(g):
            res.num_counterexamples += 1
            if len(res.counterexamples) < MAX_COUNTEREXAMPLES:
                res.counterexamples.append(g6_encode(g).decode())
    res.passed = res.num_counterexamples == 0
    return res


def _pad(g: Graph, n: int) -> Graph:
    return disjoint_union([g, Graph.empty(n - g.n)]) if g.n < n else g


def _n_nu_cell(spec: CellSpec, source: Sequence[Graph] | None) -> CellResult:
    """Erdos-Gallai bound and its refinement for graphs with at most n vertices and nu <= nu0.

    Graphs of every order up to n are scanned.  For the refinement, attaining
    graphs are padded with isolated vertices to exactly n vertices before their
    independence number is compared with n - nu0 and n - 2*nu0.
    """
    res = CellResult(spec)
    n, nu0 = spec.p["n"], spec.p["nu"]
    bound = erdos_gallai_bound(n, nu0)
    split_term = (n - nu0) * nu0 + nu0 * (nu0 - 1) // 2
    res.predicted_bound = bound
    res.extremal_relation = "equal"
    lemma_applies = nu0 * (2 * nu0 + 1) < split_term
    filt = GraphFilter(nu=nu0, no_isolated=spec.no_isolated)
    best = None
    attaining: set[str] = set()
    bad: list[str] = []
    bad_count = 0
    for m in range(1, n + 1):
        for g in _graphs_of_order(m, filt, source):
            res.graphs_scanned += 1
            e = g.num_edges
            ok = e <= bound
            if spec.theorem is TheoremId.ERDOS_GALLAI and ok and lemma_applies:
                if independence_number(g) < n - nu0:
                    ok = e < split_term
            if spec.theorem is TheoremId.ALPHA_NU_N2 and e == bound:
                padded = _pad(g, n)
                form = str(canonical_form(padded))
                attaining.add(form)
                a = independence_number(padded)
                ok = matching_number(padded) == nu0 and a in (n - nu0, n - 2 * nu0)
                if ok:
                    ok = form in _forms(predicted_alpha_nu_extremal(a, nu0), n)
            if best is None or e > best:
                best = e
            if not ok:
                bad_count += 1
                if len(bad) < MAX_COUNTEREXAMPLES:
                    bad.append(g6_encode(g).decode())
    res.observed_max = best
    res.counterexamples = bad
    res.num_counterexamples = bad_count
    if spec.theorem is TheoremId.ALPHA_NU_N2:
        predicted = []
        for a in sorted({n - nu0, n - 2 * nu0}):
            if a >= 1:
                predicted += [
                    x for x in predicted_alpha_nu_extremal(a, nu0) if x.n <= n and x.num_edges == bound
                ]
        res.predicted_extremal = _forms((_pad(x, n) for x in predicted), n)
        res.observed_extremal = sorted(attaining)
        sets_ok = set(res.predicted_extremal) == set(res.observed_extremal)
    else:
        sets_ok = True
    res.passed = bad_count == 0 and best == bound and sets_ok
    return res


def run_cell(spec: CellSpec, source: Sequence[Graph] | None = None) -> CellResult:
    """Evaluate one cell; capacity and domain problems are recorded, not raised."""
    try:
        if spec.n_cap > ENUM_MAX_N:
            raise CapacityError(f"n_cap {spec.n_cap} exceeds the enumeration cap {ENUM_MAX_N}")
        if spec.theorem in BOUND_THEOREMS:
            return _bound_cell(spec, source)
        if spec.theorem in N_NU_THEOREMS:
            return _n_nu_cell(spec, source)
        return _suite_cell(spec, source)
    except EdgelabError as exc:
        return CellResult(spec, error=f"{type(exc).__name__}: {exc}", passed=False)


# -- reports -------------------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem_id: TheoremId
    cells: list[CellResult]
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return bool(self.cells) and all(c.passed for c in self.cells)

    def to_dict(self) -> dict[str, object]:
        out: dict[str, object] = {
            "theorem_id": self.theorem_id.value,
            "grid": [
                {
                    "params": c.spec.p,
                    "constraint_mode": c.spec.mode,
                    "n_cap": c.spec.n_cap,
                    "no_isolated": c.spec.no_isolated,
                }
                for c in self.cells
            ],
            "cells": [c.to_dict() for c in self.cells],
            "cells_passed": sum(c.passed for c in self.cells),
            "cells_total": len(self.cells),
            "pass": self.passed,
        }
        if self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"theorem {self.theorem_id.value}"]
        for c in self.cells:
            params = " ".join(f"{k}={v}" for k, v in c.spec.params)
            status = "PASS" if c.passed else "FAIL"
            detail = f"scanned={c.graphs_scanned}"
            if c.predicted_bound is not None:
                detail += f" bound={c.predicted_bound} observed={c.observed_max}"
                detail += f" extremal={len(c.observed_extremal)}"
            if c.spec.theorem not in BOUND_THEOREMS:
                detail += f" counterexamples={c.num_counterexamples}"
            if c.error:
                detail += f" error={c.error!r}"
            lines.append(f"{status} {params} mode={c.spec.mode} n_cap={c.spec.n_cap} {detail}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} {sum(c.passed for c in self.cells)}/{len(self.cells)} cells")
        if self.wall_time is not None:
            lines.append(f"wall_time {self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"


def specs_from_report(report: dict) -> tuple[TheoremId, list[CellSpec]]:
    """Rebuild the cell specs recorded in a report's ``grid`` so the run can be repeated."""
    theorem = TheoremId(report["theorem_id"])
    specs = [
        CellSpec(
            theorem,
            tuple((k, int(v)) for k, v in entry["params"].items()),
            entry["constraint_mode"],
            int(entry["n_cap"]),
            bool(entry["no_isolated"]),
        )
        for entry in report["grid"]
    ]
    return theorem, specs


def certify(
    theorem: TheoremId | str,
    specs: Sequence[CellSpec] | None = None,
    *,
    jobs: int = 1,
    source: Sequence[Graph] | None = None,
    timing: bool = False,
) -> VerificationReport:
    theorem = TheoremId(theorem)
    if specs is None:
        specs = build_grid(theorem)
    start = time.perf_counter()
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(run_cell, specs, itertools.repeat(source)))
    else:
        cells = [run_cell(s, source) for s in specs]
    wall = time.perf_counter() - start if timing else None
    return VerificationReport(theorem, cells, wall)

from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from edgelab.canon import canonical_form, is_isomorphic
from edgelab.cli import main, parse_grid, UsageError
from edgelab.extremal import build_G, build_J
from edgelab.graph import Graph, g6_decode


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params_k2(capsys):
    code, out, _ = run(["params", "A_"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert (rec["n"], rec["edges"], rec["alpha"], rec["delta"], rec["nu"]) == (2, 1, 1, 1, 1)


def test_params_j3_and_p3(capsys):
    j3 = build_J(3).to_graph6().decode()
    p3 = Graph.path(3).to_graph6().decode()
    code, out, _ = run(["params", j3, p3], capsys)
    a, b = map(json.loads, out.splitlines())
    assert (a["alpha"], a["delta"], a["nu"], a["edges"]) == (2, 3, 2, 7)
    assert (b["D"], b["A"], b["C"]) == ([0, 2], [1], [])


def test_params_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("A_\nBw\n"))
    code, out, _ = run(["params", "--format", "text"], capsys)
    assert code == 0 and len(out.splitlines()) == 2 and "nu=1" in out


def test_params_bad_input(capsys):
    code, _, err = run(["params", "A~"], capsys)
    assert code == 2 and "padding" in err


def test_construct_examples(capsys):
    _, out, _ = run(["construct", "J", "4"], capsys)
    assert out.strip() == str(canonical_form(Graph.complete(5)))
    _, out, _ = run(["construct", "G", "3", "1"], capsys)
    assert out.strip() == str(canonical_form(build_G(3, 1)))
    _, out, _ = run(["construct", "second-extremal", "3", "3"], capsys)
    lines = out.split()
    assert len(lines) == 2 and not is_isomorphic(g6_decode(lines[0]), g6_decode(lines[1]))


def test_construct_precondition_is_usage_error(capsys):
    assert run(["construct", "H", "1", "2"], capsys)[0] == 2
    assert run(["construct", "second-extremal", "3", "2"], capsys)[0] == 2
    assert run(["construct", "J", "3", "3"], capsys)[0] == 2


def test_bound_examples(capsys):
    assert run(["bound", "alpha-nu", "3", "1"], capsys)[1] == "3 ALPHA_NU_EQ two\n"
    assert run(["bound", "delta-nu", "3", "3"], capsys)[1] == "10 DELTA_NU_NONDIVIDES many\n"
    assert run(["bound", "alpha-delta", "2", "2"], capsys)[1] == "6 ALPHA_DELTA one\n"
    rec = json.loads(run(["bound", "delta-nu", "3", "1", "--mode", "le", "--format", "json"], capsys)[1])
    assert rec["expected_extremal_count"] == "two"


def test_usage_errors(capsys):
    assert run([], capsys)[0] == 2
    assert run(["bound", "alpha-nu", "0", "1"], capsys)[0] == 2
    assert run(["certify", "NOPE"], capsys)[0] == 2
    assert run(["certify", "ALPHA_NU", "--grid", "delta=1"], capsys)[0] == 2
    assert run(["certify"], capsys)[0] == 2


def test_parse_grid():
    assert parse_grid(["alpha=1..3", "nu=1,2", "nu=5"]) == {"alpha": [1, 2, 3], "nu": [1, 2, 5]}
    for bad in ["alpha", "=1", "nu=x", "nu=3..1"]:
        with pytest.raises(UsageError):
            parse_grid([bad])


def test_certify_gallai_passes(capsys):
    code, out, _ = run(["certify", "GALLAI", "--n-cap", "6"], capsys)
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["cells_total"] == 6


def test_certify_failing_cell_exit_code(capsys):
    code, out, _ = run(["certify", "ALPHA_NU", "--grid", "alpha=2", "--grid", "nu=2", "--n-cap", "3"], capsys)
    assert code == 1 and not json.loads(out)["pass"]


def test_certify_out_file_and_replay(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(["certify", "DELTA_NU_UNIQUE", "--grid", "delta=3", "--grid", "nu=2",
                        "--mode", "eq", "--out", str(report)], capsys)
    assert code == 0 and out == ""
    again = tmp_path / "again.json"
    code, _, _ = run(["certify", "--replay", str(report), "--out", str(again)], capsys)
    assert code == 0 and again.read_bytes() == report.read_bytes()


def test_certify_from_graph6_file(tmp_path, capsys):
    src = tmp_path / "g.g6"
    src.write_text("Bw\nBg\nCF\n")
    code, out, _ = run(["certify", "ALPHA_NU", "--grid", "alpha=1", "--grid", "nu=1", "--input", str(src)], capsys)
    data = json.loads(out)
    assert code == 0 and data["cells"][0]["graphs_scanned"] == 1


def test_missing_input_file_aborts(tmp_path, capsys):
    code, _, err = run(["certify", "GALLAI", "--input", str(tmp_path / "none.g6")], capsys)
    assert code == 2 and "I/O" in err


def test_jobs_env_default(monkeypatch):
    from edgelab.cli import build_parser

    monkeypatch.setenv("EDGELAB_JOBS", "3")
    assert build_parser().parse_args(["certify", "GALLAI"]).jobs == 3


@pytest.mark.skipif(shutil.which("edgelab") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["edgelab", "bound", "alpha-delta", "2", "2"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("6 ")

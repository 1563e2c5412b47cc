from __future__ import annotations

import json

from edgelab.canon import canonical_form
from edgelab.certify import (
    CellSpec,
    TheoremId,
    build_grid,
    certify,
    run_cell,
    specs_from_report,
)
from edgelab.extremal import build_J
from edgelab.graph import Graph


def _cell(theorem, mode="eq", n_cap=None, no_isolated=False, **params):
    specs = [
        s for s in build_grid(theorem, {k: [v] for k, v in params.items()}, n_cap=n_cap, modes=[mode],
                              no_isolated=no_isolated)
    ]
    assert len(specs) == 1
    return run_cell(specs[0])


def test_default_grids_have_expected_shape():
    assert len(build_grid(TheoremId.ALPHA_NU)) == 8
    assert len(build_grid(TheoremId.ALPHA_DELTA)) == 6
    assert len(build_grid(TheoremId.DELTA_NU)) == 18  # both constraint modes
    assert [s.p["n"] for s in build_grid(TheoremId.GALLAI)] == list(range(1, 8))
    eg = build_grid(TheoremId.ERDOS_GALLAI)
    assert all(2 * s.p["nu"] + 2 <= s.p["n"] for s in eg)
    assert {s.p["n"] for s in eg} == {6, 7, 8}


def test_default_caps():
    caps = {(s.p["alpha"], s.p["nu"]): s.n_cap for s in build_grid("ALPHA_NU")}
    assert caps[(1, 1)] == 4 and caps[(4, 2)] == 9
    caps = {(s.p["delta"], s.p["nu"]): s.n_cap for s in build_grid("DELTA_NU", modes=["eq"])}
    assert caps[(3, 2)] == 7 and caps[(4, 3)] == 9


def test_delta_nu_unique_cell_is_j3():
    cell = _cell(TheoremId.DELTA_NU_UNIQUE, delta=3, nu=2)
    assert cell.passed
    assert cell.observed_extremal == [str(canonical_form(build_J(3)))]


def test_trivial_cell_differs_by_mode():
    eq = _cell(TheoremId.DELTA_NU_UNIQUE, mode="eq", delta=3, nu=1)
    le = _cell(TheoremId.DELTA_NU_UNIQUE, mode="le", delta=3, nu=1)
    assert eq.passed and le.passed
    assert len(eq.observed_extremal) == 1 and len(le.observed_extremal) == 2


def test_cap_violation_is_reported_per_cell():
    spec = CellSpec(TheoremId.ALPHA_NU, (("alpha", 1), ("nu", 1)), "eq", 10, False)
    good = CellSpec(TheoremId.ALPHA_NU, (("alpha", 1), ("nu", 1)), "eq", 4, False)
    report = certify(TheoremId.ALPHA_NU, [spec, good])
    assert not report.passed
    assert "CapacityError" in report.cells[0].error
    assert report.cells[1].passed


def test_wrong_prediction_fails_cell():
    # Only graphs on <= 3 vertices: K_3 is fine for (1, 1), but for (2, 2) the
    # predicted bound 10 cannot be reached, so the cell must fail.
    cell = _cell(TheoremId.ALPHA_NU, n_cap=3, alpha=2, nu=2)
    assert not cell.passed


def test_suite_cell_counts_graphs():
    cell = _cell(TheoremId.GALLAI, mode="le", n=5)
    assert cell.passed and cell.graphs_scanned == 34 and cell.num_counterexamples == 0


def test_report_json_round_trip_and_replay():
    report = certify(TheoremId.ALPHA_NU, build_grid(TheoremId.ALPHA_NU, {"alpha": [1, 2], "nu": [1]}))
    data = json.loads(report.to_json())
    assert list(data) == ["theorem_id", "grid", "cells", "cells_passed", "cells_total", "pass"]
    theorem, specs = specs_from_report(data)
    again = certify(theorem, specs)
    assert again.to_json() == report.to_json()


def test_timing_is_opt_in():
    specs = build_grid(TheoremId.GALLAI, {"n": [3]})
    assert "wall_time" not in certify(TheoremId.GALLAI, specs).to_dict()
    assert "wall_time" in certify(TheoremId.GALLAI, specs, timing=True).to_dict()


def test_parallel_matches_serial():
    specs = build_grid(TheoremId.DELTA_NU, {"delta": [2, 3], "nu": [1, 2]})
    assert certify("DELTA_NU", specs, jobs=2).to_json() == certify("DELTA_NU", specs).to_json()


def test_ingestion_source():
    src = [Graph.complete(3), Graph.star(3), Graph.path(3)]
    spec = CellSpec(TheoremId.ALPHA_NU, (("alpha", 1), ("nu", 1)), "eq", 4, False)
    cell = run_cell(spec, src)
    assert cell.graphs_scanned == 1 and cell.passed

import pytest

from functions.igraph_core.errors import InvalidParameterError
from functions.igraph_core.graph_core import cycle, path
from functions.igraph_core.models import VerifyReport, VerifyRow
from functions.igraph_core.reconfig import build_igraph
from functions.igraph_core.verification import (
    bracelet_labels_hold,
    degree_law_holds,
    lattice_labels_hold,
    plan_sweep,
    run_sweep,
    verify_cycle,
    verify_path,
)


def test_label_checks_hold():
    assert lattice_labels_hold(10, build_igraph(path(10)))
    assert lattice_labels_hold(13, build_igraph(path(13)))
    assert bracelet_labels_hold(13, build_igraph(cycle(13)))
    assert degree_law_holds(13, build_igraph(cycle(13)))
    assert degree_law_holds(19, build_igraph(cycle(19)))


def test_verify_rows():
    row = verify_cycle(13)
    assert row.passed
    assert row.count_enumerated == 26
    assert row.labels_ok is True

    row = verify_path(9)
    assert row.passed
    assert row.count_closed_form == 1
    assert row.labels_ok is None


def test_row_fails_on_count_mismatch():
    row = VerifyRow(
        n=5,
        family="cycle",
        count_closed_form=5,
        count_enumerated=5,
        count_oracle=4,
        count_generating_function=5,
        iso_ok=True,
    )
    assert not row.passed
    report = VerifyReport.from_rows([row])
    assert (report.passed, report.failed) == (0, 1)


def test_plan_sweep():
    jobs = plan_sweep(3, 4)
    assert jobs == [("path", 1), ("path", 2), ("path", 3), ("cycle", 3), ("cycle", 4)]
    assert plan_sweep(None, 5) == [("cycle", 3), ("cycle", 4), ("cycle", 5)]
    with pytest.raises(InvalidParameterError):
        plan_sweep(None, 2)
    with pytest.raises(InvalidParameterError):
        plan_sweep(0, None)
    with pytest.raises(InvalidParameterError):
        plan_sweep(23, None)
    assert len(plan_sweep(23, None, allow_large=True)) == 23


def test_sweep_passes_and_orders_rows():
    seen = []
    report = run_sweep(plan_sweep(21, 22), on_row=seen.append)
    assert report.failed == 0
    assert report.passed == 21 + 20
    assert len(seen) == 41
    keys = [(r.family, r.n) for r in report.rows]
    assert keys == [("path", n) for n in range(1, 22)] + [("cycle", n) for n in range(3, 23)]
    by_key = {(r.family, r.n): r for r in report.rows}
    assert by_key[("cycle", 13)].count_enumerated == 26
    assert by_key[("path", 10)].count_enumerated == 10
    # vertexwise label laws at the top of the range
    assert by_key[("path", 19)].labels_ok is True
    assert by_key[("cycle", 19)].labels_ok is True
    assert by_key[("cycle", 22)].labels_ok is True


def test_sweep_on_worker_pool():
    report = run_sweep(plan_sweep(6, 7), workers=2)
    assert report.failed == 0
    assert [r.n for r in report.rows if r.family == "cycle"] == [3, 4, 5, 6, 7]


def test_report_json_excludes_timing():
    payload = VerifyReport.from_rows([verify_cycle(5)]).model_dump(mode="json")
    assert "seconds" not in payload["rows"][0]

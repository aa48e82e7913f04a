"""Tests for the grid runner, the built-in identity catalog and report handling."""

import pytest

from la_verifier.errors import InvalidParams
from la_verifier.harness.catalog import dsl_catalog, resolve, select, suite
from la_verifier.harness.context import SequenceContext
from la_verifier.harness.grid import BuiltinCheck, GridSpec, evaluate_params, index_points, reverify_counterexamples, run_check
from la_verifier.harness.identities import (
    check_character_formula,
    check_corollaries,
    check_summation,
    check_summation_leonardo,
    check_vajda,
)
from la_verifier.harness.reports import MUST_PASS, UNDER_TEST, exit_code_for
from la_verifier.schemas import SeqParams

CORRECTED = (
    "summation/corrected",
    "vajda-t2/corrected",
    "catalan/corrected",
    "cassini/corrected",
    "docagne/corrected",
)


@pytest.fixture
def indexed_grid(small_grid):
    return small_grid.with_indices(n=range(5), u=range(3), v=range(3), m=range(5))


def test_must_pass_suite(indexed_grid):
    reports = [run_check(check, indexed_grid) for check in suite(MUST_PASS)]
    for report in reports:
        assert report.ok or report.reclassified_from == MUST_PASS, report.identity
    assert exit_code_for(reports) == 0


@pytest.mark.parametrize("name", CORRECTED)
def test_corrected_readings_hold(indexed_grid, name):
    report = run_check(BuiltinCheck(name), indexed_grid)
    assert report.ok
    assert report.passed > 0


def test_vajda_t1_scales_quadratically(ernst):
    scaled = SeqParams(ernst.p, ernst.q, 2 * ernst.r, 2 * ernst.a, 2 * ernst.b)
    check = BuiltinCheck("vajda-t1")
    indices = {"n": 2, "u": 1, "v": 3}
    lhs, rhs = check.evaluate(SequenceContext(ernst), indices)
    lhs2, rhs2 = check.evaluate(SequenceContext(scaled), indices)
    assert lhs == rhs
    assert lhs2 == lhs * 4
    assert rhs2 == rhs * 4


def test_printed_vajda_is_reclassified(tiny_grid):
    grid = tiny_grid.with_indices(n=range(3), u=(1, 2), v=(1, 2))
    report = check_vajda(grid, "t2")
    assert report.failed > 0
    assert report.confirmed_failures == report.failed
    assert report.tier == UNDER_TEST
    assert report.catalog_tier == MUST_PASS
    assert report.reclassified_from == MUST_PASS
    assert all(c.confirmed for c in report.counterexamples)
    assert exit_code_for([report]) == 0


def test_printed_vajda_holds_without_r(tiny_grid):
    grid = tiny_grid.with_params(r=(0,)).with_indices(n=range(3), u=(1, 2), v=(1, 2))
    assert check_vajda(grid, "t2").ok


def test_vajda_without_delta_factor(tiny_grid):
    # r = 0 leaves only the Phi1 Phi2 term, which is off by Delta^2 = D
    grid = tiny_grid.with_params(r=(0,)).with_indices(n=range(3), u=(1, 2), v=(1, 2))
    report = check_vajda(grid, "t2/as-stated")
    assert report.failed > 0
    assert report.tier == UNDER_TEST
    assert report.reclassified_from is None
    assert exit_code_for([report]) == 3
    assert check_vajda(tiny_grid.with_indices(n=range(3), u=(0,), v=(1, 2)), "t2/as-stated").ok


def test_vajda_rejects_unknown_form(tiny_grid):
    with pytest.raises(ValueError):
        check_vajda(tiny_grid, "t3")


def test_character_at_leonardo(leonardo):
    ctx = SequenceContext(leonardo)
    assert BuiltinCheck("character").evaluate(ctx, {"m": 0}) == (-29, -29)
    assert check_character_formula(GridSpec.named("leonardo", m=range(3))).total == 3


def test_printed_summation_fails_at_leonardo():
    report = check_summation(GridSpec.named("leonardo", m=range(5)))
    assert not report.ok
    assert report.counterexamples[0].indices == {"m": 0}
    assert reverify_counterexamples(BuiltinCheck("summation"), report)
    assert exit_code_for([report]) == 3


def test_summation_leonardo():
    report = check_summation_leonardo(GridSpec.default())
    assert report.ok
    assert report.grid["params"] == {"fixed": {"p": "1", "q": "1", "r": "1", "a": "1", "b": "1"}}
    assert report.total == 21


def test_corollaries(tiny_grid):
    grid = tiny_grid.with_indices(n=range(4), u=range(3), m=range(4))
    reports = check_corollaries(grid, "cassini")
    assert [r.identity for r in reports] == ["cassini", "cassini/corrected", "cassini/via-vajda"]
    assert reports[1].ok
    assert reports[2].ok
    assert reports[0].reclassified_from == MUST_PASS
    with pytest.raises(ValueError):
        check_corollaries(grid, "lucas")


def test_totals_invariant(small_grid):
    grid = small_grid.with_indices(n=range(4))
    check = BuiltinCheck("binet")
    report = run_check(check, grid)
    assert report.total == report.passed + report.failed + report.skipped
    assert report.total == small_grid.param_count() * len(index_points(check, grid))
    # D = 0 and rho = 0 points are skipped
    assert report.skipped > 0


def test_counterexample_cap(tiny_grid):
    grid = tiny_grid.with_indices(n=range(3), u=(1, 2), v=(1, 2))
    report = run_check(BuiltinCheck("vajda-t2"), grid, cap=3)
    assert report.failed > 3
    assert len(report.counterexamples) == 3


def test_workers_do_not_change_reports(tiny_grid):
    grid = tiny_grid.with_indices(n=range(3), u=(1, 2), v=(1, 2))
    serial = run_check(BuiltinCheck("vajda-t2"), grid, workers=1)
    parallel = run_check(BuiltinCheck("vajda-t2"), grid, workers=2)
    assert serial.to_dict() == parallel.to_dict()


def test_dsl_catalog_agrees_with_builtins(small_grid):
    grid = small_grid.with_indices(n=range(4), u=range(3), m=range(4))
    compared = 0
    for dsl_check, mirror in dsl_catalog():
        if mirror is None:
            continue
        builtin = BuiltinCheck(mirror)
        points = index_points(builtin, grid)
        assert index_points(dsl_check, grid) == points
        for _, params in grid.param_points():
            ours = evaluate_params(dsl_check, params, points)
            theirs = evaluate_params(builtin, params, points)
            for a, b in zip(ours, theirs):
                if a[0] == "skip" or b[0] == "skip":
                    continue
                assert a[0] == b[0], (dsl_check.name, params, a, b)
                compared += 1
    assert compared > 0


def test_dsl_catalog_standalone_entries(small_grid):
    grid = small_grid.with_indices(n=range(6))
    for dsl_check, mirror in dsl_catalog():
        if mirror is None:
            assert run_check(dsl_check, grid).ok, dsl_check.name


def test_selection():
    assert resolve("cassini") == ["cassini"]
    assert resolve("vajda") == ["vajda-t1", "vajda-t2", "vajda-t2/corrected", "vajda-t2/as-stated"]
    assert resolve("cereceda-scalar") == ["cereceda-scalar/printed", "cereceda-scalar/pattern-corrected"]
    names = [c.name for c in select(["binet", "binet"], None)]
    assert names == ["binet"]
    with pytest.raises(InvalidParams):
        resolve("nonexistent")
    with pytest.raises(InvalidParams):
        select()
    with pytest.raises(InvalidParams):
        suite("some")


def test_unknown_grid():
    with pytest.raises(InvalidParams):
        GridSpec.named("fibonacci")

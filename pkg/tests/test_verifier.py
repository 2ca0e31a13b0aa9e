"""Define tests for the identity suites."""

from fractions import Fraction

import pytest

from lozenge.const import (
    KUO_MODE_BOTH,
    KUO_MODE_FORMULA,
    SUITE_CLOSING_IDENTITY,
    SUITE_CROSS_CHECK,
    SUITE_KUO,
)
from lozenge.tiling.engine import Engine
from lozenge.tiling.exceptions import InvalidParameters
from lozenge.tiling.regions import RegionFamily
from lozenge.verifier import (
    SUITES,
    CheckResult,
    SuiteOptions,
    base_case_check,
    closing_identity_check,
    cross_check,
    ddh_factorization_check,
    default_grid,
    grid_points,
    k_zero_check,
    kuo_check,
    kuo_rewrite_check,
    proctor_identity_check,
    run_suite,
    shift_check,
    split_suite,
    step_ratio_check,
    theorem_form_check,
)

FAMILY_CASES = [
    (RegionFamily.hexagon, False),
    (RegionFamily.proctor, False),
    (RegionFamily.proctor, True),
    (RegionFamily.r, False),
    (RegionFamily.r, True),
    (RegionFamily.ddh, False),
]


@pytest.mark.parametrize(("family", "weighted"), FAMILY_CASES)
def test_cross_check(family, weighted):
    """Test closed forms against the column sweep over the default grid."""
    report = cross_check(family, weighted=weighted)
    assert report.ok, [result for result in report.results if not result.passed]
    assert not report.has_skips


@pytest.mark.parametrize(("family", "weighted"), FAMILY_CASES)
def test_cross_check_brute(family, weighted):
    """Test closed forms against exhaustive recursion; only oversized members skip."""
    report = cross_check(family, engine=Engine.brute, weighted=weighted)
    assert report.ok, [result for result in report.results if not result.passed]
    assert report.summary["passed"] > 0
    assert all("cap" in result.note for result in report.results if result.skipped)


def test_cross_check_needs_family():
    """Test that the cross check refuses to guess a family."""
    with pytest.raises(InvalidParameters):
        run_suite(SUITE_CROSS_CHECK)


def test_cross_check_skips_large_regions():
    """Test that regions above the sweep cap are skipped, not failed."""
    report = cross_check(RegionFamily.hexagon, {"b": [3], "c": [3], "d": [3]}, dp_cell_cap=10)
    assert report.ok
    assert report.has_skips
    assert report.summary == {"total": 1, "passed": 0, "failed": 0, "skipped": 1}
    assert report.results[0].expected == 980


def test_proctor_identities():
    """Test the square and overhang identities."""
    assert proctor_identity_check().ok


def test_theorem_forms():
    """Test the explicit and factored R formulas over a grid."""
    report = theorem_form_check({"a": range(4), "k": range(3), "x": range(3)})
    assert report.ok
    assert report.summary["failed"] == 0


@pytest.mark.parametrize("mode", [KUO_MODE_FORMULA, KUO_MODE_BOTH])
@pytest.mark.parametrize("weighted", [False, True])
def test_kuo(mode, weighted):
    """Test the condensation recurrence at one tuple."""
    report = kuo_check(2, 1, 3, 0, mode=mode, weighted=weighted)
    assert report.ok
    notes = {result.note for result in report.results}
    assert "formula recurrence" in notes
    if mode == KUO_MODE_BOTH:
        assert "engine recurrence" in notes


@pytest.mark.parametrize("weighted", [False, True])
def test_kuo_formula_grid(weighted):
    """Test the recurrence on closed forms over 2 <= a <= 8, 1 <= k <= 4, x <= 4."""
    report = run_suite(SUITE_KUO, mode=KUO_MODE_FORMULA, weighted=weighted)
    assert report.ok
    assert report.grid["a"] == list(range(2, 9))
    assert not report.has_skips


@pytest.mark.parametrize("engine", list(Engine))
def test_kuo_engine_grid(engine):
    """Test the recurrence with engine counts over the default grid."""
    assert run_suite(SUITE_KUO, engine=engine).ok


def test_kuo_precondition():
    """Test that tuples outside the recurrence range are rejected."""
    with pytest.raises(InvalidParameters):
        kuo_check(2, 1, 4, 0)
    with pytest.raises(InvalidParameters):
        kuo_check(1, 1, 3, 0)


def test_kuo_rewrite():
    """Test the recurrence solved for its largest region over the default grid."""
    assert kuo_rewrite_check().ok
    assert kuo_rewrite_check(weighted=True).ok


def test_ratio_identities():
    """Test the step, shift and k = 0 identities."""
    assert step_ratio_check(3, 1, 2).ok
    assert shift_check(2, 1, 1).ok
    assert shift_check(0, 3, 0).ok
    assert k_zero_check(3, 5, 2).ok
    assert k_zero_check(2, -1, 1).ok


def test_ratio_identities_grid():
    """Test the ratio identities over their default grids."""
    assert run_suite("step_ratios").ok
    assert run_suite("shift").ok
    assert run_suite("k_zero").ok


def test_closing_identity_is_a_finding():
    """Test that the printed closing identity fails at (3, 1, 3)."""
    report = closing_identity_check(3, 1, 3)
    assert report.ok
    assert report.findings_only
    result = report.results[0]
    assert (result.expected, result.actual) == (15, 8)
    assert not result.passed


def test_closing_identity_precondition():
    """Test the closing identity parameter range."""
    with pytest.raises(InvalidParameters):
        closing_identity_check(2, 1, 3)


def test_closing_identity_default_grid():
    """Test that findings never fail the suite."""
    report = run_suite(SUITE_CLOSING_IDENTITY)
    assert report.ok
    assert report.summary["failed"] > 0


@pytest.mark.parametrize("weighted", [False, True])
def test_base_cases(weighted):
    """Test the a = 1 and a = 2 base cases."""
    report = base_case_check(weighted=weighted, grid={"k": [0, 1, 2], "x": [0, 1]})
    assert report.ok
    assert report.summary["total"] == 18


@pytest.mark.parametrize("engine", list(Engine))
def test_ddh_factorization(engine):
    """Test the halved-hexagon factorization over the default grid."""
    report = ddh_factorization_check(engine=engine)
    assert report.ok
    assert report.grid["b"] == list(range(5))
    if engine is Engine.dp:
        assert not report.has_skips


@pytest.mark.parametrize("weighted", [False, True])
def test_split(weighted):
    """Test the horizontal cuts below the defect."""
    report = split_suite({"a": range(3), "k": [1, 2], "x": [0, 1]}, weighted=weighted)
    assert report.ok
    assert "zero case" in {result.note for result in report.results}


def test_workers_match_serial():
    """Test that a process pool reproduces the serial report."""
    grid = {"a": range(3), "k": range(2), "x": range(2)}
    serial = cross_check(RegionFamily.r, grid)
    pooled = cross_check(RegionFamily.r, grid, workers=2)
    assert pooled.results == serial.results


def test_run_suite_rejects():
    """Test unknown suites, modes and empty grids."""
    with pytest.raises(InvalidParameters):
        run_suite("unknown")
    with pytest.raises(InvalidParameters):
        run_suite(SUITE_KUO, mode="fast")
    with pytest.raises(InvalidParameters):
        run_suite(SUITE_KUO, {"a": [2], "k": [1], "j": [4], "x": [0]})


def test_default_grid():
    """Test default grids and their expansion."""
    grid = default_grid(SUITE_KUO, SuiteOptions(mode=KUO_MODE_FORMULA))
    assert grid["a"] == list(range(2, 9))
    assert set(SUITES) >= {SUITE_KUO, SUITE_CROSS_CHECK, SUITE_CLOSING_IDENTITY}
    assert grid_points({"a": [1, 2], "b": [3]}) == [{"a": 1, "b": 3}, {"a": 2, "b": 3}]


def test_check_result():
    """Test pass and skip semantics of a single comparison."""
    assert CheckResult({"a": 1}, Fraction(1, 2), Fraction(1, 2)).passed
    assert not CheckResult({"a": 1}, Fraction(1), None, skipped=True).passed

"""Identity suites comparing closed forms, engines and recurrences."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import product
import logging
from typing import TYPE_CHECKING, Any

from .const import (
    DEFAULT_GRIDS,
    KUO_FORMULA_GRID,
    KUO_MODE_BOTH,
    KUO_MODE_ENGINE,
    KUO_MODE_FORMULA,
    KUO_MODES,
    SUITE_BASE_CASES,
    SUITE_CLOSING_IDENTITY,
    SUITE_CROSS_CHECK,
    SUITE_DDH,
    SUITE_K_ZERO,
    SUITE_KUO,
    SUITE_KUO_REWRITE,
    SUITE_PROCTOR_IDENTITIES,
    SUITE_SHIFT,
    SUITE_SPLIT,
    SUITE_STEP_RATIOS,
    SUITE_THEOREM_FORMS,
)
from .tiling.closed_forms import (
    DDHParams,
    HexParams,
    RParams,
    ddh_count,
    kuo_predict,
    macmahon,
    proctor,
    proctor_square,
    proctor_weighted,
    q_poly,
    q_prime_poly,
    r_count_explicit,
    r_count_factored,
    r_prime_explicit,
    r_prime_factored,
    r_value,
)
from .tiling.const import DEFAULT_BRUTE_VERTEX_CAP, DEFAULT_DP_CELL_CAP, ONE, ZERO
from .tiling.engine import Engine, count, split_counts
from .tiling.exceptions import InvalidParameters, ResourceCapExceeded
from .tiling.helpers import product_range, require_non_negative
from .tiling.regions import RegionFamily, build_family, build_r, r_region

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Mapping

    from .tiling.lattice import ReducedRegion, TriCell

_LOGGER = logging.getLogger(__name__)

Params = dict[str, int]
Grid = dict[str, list[int]]


@dataclass
class CheckResult:
    """Class to represent one comparison of a suite."""

    params: Params
    expected: Fraction | None
    actual: Fraction | None
    note: str = ""
    skipped: bool = False

    @property
    def passed(self) -> bool:
        """Return whether both sides were computed and agree exactly."""

        return not self.skipped and self.expected == self.actual

    def sort_key(self) -> tuple[Any, ...]:
        """Return a key ordering results by parameter tuple."""

        return (tuple(self.params.items()), self.note)


@dataclass
class VerificationReport:
    """Class to represent the outcome of a suite over a parameter grid."""

    suite: str
    grid: Grid
    results: list[CheckResult] = field(default_factory=list)
    findings_only: bool = False

    @property
    def summary(self) -> dict[str, int]:
        """Return the result counts."""

        skipped = sum(result.skipped for result in self.results)
        passed = sum(result.passed for result in self.results)
        return {
            "total": len(self.results),
            "passed": passed,
            "failed": len(self.results) - passed - skipped,
            "skipped": skipped,
        }

    @property
    def ok(self) -> bool:
        """Return whether no comparison failed; findings never fail."""

        return self.findings_only or self.summary["failed"] == 0

    @property
    def has_skips(self) -> bool:
        """Return whether any tuple was skipped."""

        return self.summary["skipped"] > 0


@dataclass(frozen=True)
class SuiteOptions:
    """Class to represent the knobs shared by every suite."""

    engine: Engine = Engine.dp
    weighted: bool = False
    mode: str = KUO_MODE_ENGINE
    family: RegionFamily | None = None
    brute_vertex_cap: int = DEFAULT_BRUTE_VERTEX_CAP
    dp_cell_cap: int = DEFAULT_DP_CELL_CAP


def engine_count(reduced: ReducedRegion, options: SuiteOptions) -> Fraction:
    """Count a reduced region, honoring the caps of both engines."""

    if options.engine is Engine.dp and len(reduced.region) > options.dp_cell_cap:
        msg = f"Region has {len(reduced.region)} cells, above the sweep cap of {options.dp_cell_cap}"
        raise ResourceCapExceeded(msg)
    return count(reduced, options.engine, options.brute_vertex_cap)


def family_formula(
    family: RegionFamily,
    params: Mapping[str, int],
    weighted: bool = False,
) -> Fraction:
    """Evaluate the closed form of a family member."""

    if family is RegionFamily.hexagon:
        return Fraction(macmahon(HexParams(params["b"], params["c"], params["d"])))
    if family is RegionFamily.proctor:
        if weighted:
            return proctor_weighted(params["a"], params["b"], params["c"])
        return Fraction(proctor(params["a"], params["b"], params["c"]))
    if family is RegionFamily.r:
        return r_value(RParams(params["a"], params["k"], params["j"], params["x"]), weighted)
    return Fraction(ddh_count(DDHParams(params["b"], params["c"], params["k"], params["j"])))


def _skipped(params: Params, expected: Fraction | None, err: Exception, note: str = "") -> CheckResult:
    _LOGGER.debug("Skipping %s: %s", params, err)
    return CheckResult(params, expected, None, note=note or str(err), skipped=True)


# Expanders turn one grid point into the tuples a suite evaluates.


def _single(point: Params, options: SuiteOptions) -> list[Params]:
    return [point]


def _with_j(point: Params, choices: Iterable[int]) -> list[Params]:
    if "j" in point:
        return [point] if point["j"] in set(choices) else []
    return [{**point, "j": j} for j in choices]


def _expand_family(point: Params, options: SuiteOptions) -> list[Params]:
    family = options.family
    if family is RegionFamily.hexagon:
        return [{name: point[name] for name in ("b", "c", "d")}]
    if family is RegionFamily.proctor:
        return [point] if point["a"] <= point["b"] else []
    if family is RegionFamily.r:
        return _with_j(point, range(1, point["a"] + point["k"] + 2))
    if point["c"] < 1:
        return []
    if point["k"] == 0:
        return [{**point, "j": 1}]
    return _with_j(point, range(1, point["c"] + point["k"] + 2))


def _expand_formula_j(point: Params, options: SuiteOptions) -> list[Params]:
    lowest = max(point["k"], 1)
    return _with_j(point, range(lowest, point["a"] + point["k"] + 2))


def _expand_kuo(point: Params, options: SuiteOptions) -> list[Params]:
    return _with_j(point, range(point["k"] + 2, point["a"] + point["k"] + 1))


def _expand_base_cases(point: Params, options: SuiteOptions) -> list[Params]:
    k = point["k"]
    return [
        {"a": a, "k": k, "j": j, "x": point["x"]}
        for a, j in ((1, k + 2), (2, k + 2), (2, k + 3))
    ]


def _expand_split(point: Params, options: SuiteOptions) -> list[Params]:
    return _with_j(point, range(1, point["k"] + 2))


def _expand_closing(point: Params, options: SuiteOptions) -> list[Params]:
    admissible = point["a"] > 2 and point["k"] > 0 and point["j"] > 2
    return [point] if admissible else []


# Evaluators return the comparisons for one tuple. They must stay
# module-level so that process pools can pickle them.


def _evaluate_cross_check(params: Params, options: SuiteOptions) -> list[CheckResult]:
    family = options.family
    assert family is not None
    expected = family_formula(family, params, options.weighted)
    results = []

    try:
        actual = engine_count(build_family(family, params, options.weighted), options)
        results.append(CheckResult(params, expected, actual))
    except ResourceCapExceeded as err:
        results.append(_skipped(params, expected, err))

    if family is RegionFamily.ddh and params["k"] == 0:
        hexagon = macmahon(HexParams(params["b"], params["c"], params["c"]))
        results.append(CheckResult(params, Fraction(hexagon), expected, note="plain hexagon"))
    return results


def _evaluate_proctor_identities(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, c = params["a"], params["c"]
    square = Fraction(proctor(a, a, c))
    return [
        CheckResult(params, square, Fraction(proctor_square(a, c)), note="square"),
        CheckResult(params, square, Fraction(proctor(a + 1, a, c)), note="overhang"),
        CheckResult(
            params,
            proctor_weighted(a, a, c),
            proctor_weighted(a + 1, a, c),
            note="weighted overhang",
        ),
    ]


def _evaluate_theorem_forms(params: Params, options: SuiteOptions) -> list[CheckResult]:
    p = RParams(params["a"], params["k"], params["j"], params["x"])
    return [
        CheckResult(params, Fraction(r_count_explicit(p)), Fraction(r_count_factored(p)), note="unweighted"),
        CheckResult(params, r_prime_explicit(p), r_prime_factored(p), note="weighted"),
    ]


def _kuo_terms(a: int, k: int, j: int, x: int) -> list[tuple[int, int, int, int]]:
    return [
        (a, k, j, x),
        (a - 1, k - 1, j - 1, x + 1),
        (a, k - 1, j - 1, x + 1),
        (a - 1, k, j, x),
        (a + 1, k - 1, j + 1, x),
        (a - 2, k, j - 2, x + 1),
    ]


def _recurrence(values: list[Fraction]) -> tuple[Fraction, Fraction]:
    return (
        values[0] * values[1],
        values[2] * values[3] + values[4] * values[5],
    )


def _evaluate_kuo(params: Params, options: SuiteOptions) -> list[CheckResult]:
    terms = _kuo_terms(params["a"], params["k"], params["j"], params["x"])
    results = []

    formula = [r_value(RParams(*term), options.weighted) for term in terms]
    if options.mode in (KUO_MODE_FORMULA, KUO_MODE_BOTH):
        lhs, rhs = _recurrence(formula)
        results.append(CheckResult(params, lhs, rhs, note="formula recurrence"))
        results.append(
            CheckResult(params, ONE, ONE if formula[5] != ZERO else ZERO, note="formula divisor nonzero"),
        )

    if options.mode in (KUO_MODE_ENGINE, KUO_MODE_BOTH):
        try:
            counted = [engine_count(build_r(*term, weighted=options.weighted), options) for term in terms]
        except ResourceCapExceeded as err:
            results.append(_skipped(params, None, err, note="engine recurrence"))
            return results

        lhs, rhs = _recurrence(counted)
        results.append(CheckResult(params, lhs, rhs, note="engine recurrence"))
        results.append(
            CheckResult(params, ONE, ONE if counted[5] != ZERO else ZERO, note="engine divisor nonzero"),
        )
        if options.mode == KUO_MODE_BOTH:
            results.extend(
                CheckResult(params, value, engine, note=f"term R{term}")
                for term, value, engine in zip(terms, formula, counted)
            )
    return results


def _evaluate_kuo_rewrite(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, k, j, x = params["a"], params["k"], params["j"], params["x"]
    return [
        CheckResult(
            params,
            r_value(RParams(a + 1, k - 1, j + 1, x), options.weighted),
            kuo_predict(a, k, j, x, options.weighted),
        ),
    ]


def _evaluate_step_ratios(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, k, x = params["a"], params["k"], params["x"]

    first = product_range((a + 3) // 2, a + 1, lambda t: x + k + t)
    second = product_range((a + 2) // 2, a, lambda t: 2 * x + 2 * k + 2 * t + 1)
    step = (
        Fraction(x + a + 1, 2 * x + a + 1)
        * product_range(1, a + 1, lambda i: Fraction(2 * x + a + i, a + i))
    )
    return [
        CheckResult(params, Fraction(q_poly(a + 1, k, x)), q_poly(a, k, x) * first * second, note="Q step"),
        CheckResult(
            params,
            Fraction(proctor_square(a + 1, x)),
            proctor_square(a, x) * step,
            note="Proctor step",
        ),
    ]


def _evaluate_shift(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, k, x = params["a"], params["k"], params["x"]
    return [
        CheckResult(
            params,
            Fraction(proctor_square(a, x + k) * q_poly(a, k, 0)),
            Fraction(q_poly(a, k, x) * proctor_square(a, k)),
            note="unweighted",
        ),
        CheckResult(
            params,
            proctor_weighted(a, a, x + k) * q_prime_poly(a, k, 0),
            q_prime_poly(a, k, x) * proctor_weighted(a, a, k),
            note="weighted",
        ),
    ]


def _evaluate_k_zero(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, j, x = params["a"], params["j"], params["x"]
    collapsed = (
        Fraction(q_poly(a, 0, x), q_poly(a, 0, 0))
        * Fraction(q_poly(j - 1, 0, 0), q_poly(j - 1, 0, x))
        * proctor_square(j - 1, x)
    )
    return [CheckResult(params, Fraction(proctor_square(a, x)), collapsed)]


def _evaluate_closing_identity(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, k, j = params["a"], params["k"], params["j"]
    lhs = (
        Fraction((3 * k + 2 * a - j - 1) * (3 * k + 2 * a - j), (2 * k + a) * (2 * k + a - 1))
        * (k + a - (a + 1) // 2)
        * (2 * k + 2 * a - 2 * (a // 2) - 1)
    )
    rhs = Fraction(2 * k + a - j, k + a) * (k + 1) * (2 * k + 2 * a - 1) + Fraction(
        (j - k - 1) * (j - k),
        2,
    )
    return [CheckResult(params, lhs, rhs, note="finding")]


def _evaluate_base_case(params: Params, options: SuiteOptions) -> list[CheckResult]:
    p = RParams(params["a"], params["k"], params["j"], params["x"])
    expected = r_value(p, options.weighted)
    try:
        actual = engine_count(build_r(p.a, p.k, p.j, p.x, options.weighted), options)
    except ResourceCapExceeded as err:
        return [_skipped(params, expected, err)]
    return [CheckResult(params, expected, actual)]


def _evaluate_split(params: Params, options: SuiteOptions) -> list[CheckResult]:
    a, k, j, x = params["a"], params["k"], params["j"], params["x"]
    region = r_region(a, k, j, x, options.weighted)
    # H ends directly south of the defect; for j = k the cut also sits at row 2k
    boundary = 2 * k if j >= k else j + k - 1

    def cut(cell: TriCell) -> bool:
        return cell.row < boundary

    try:
        outcome = split_counts(region, cut, options.engine, options.brute_vertex_cap)
    except ResourceCapExceeded as err:
        return [_skipped(params, None, err)]

    results = [
        CheckResult(params, outcome.whole, outcome.part * outcome.rest, note="product"),
    ]
    if j < k:
        results.append(CheckResult(params, ZERO, outcome.whole, note="zero case"))
        return results

    side = k - 1 if j == k else k
    if options.weighted:
        part, rest = proctor_weighted(side, side, x), proctor_weighted(a, a, x + k)
    else:
        part, rest = Fraction(proctor_square(side, x)), Fraction(proctor_square(a, x + k))
    results.append(CheckResult(params, part, outcome.part, note="north factor"))
    results.append(CheckResult(params, rest, outcome.rest, note="south factor"))
    return results


@dataclass(frozen=True)
class Suite:
    """Class to represent a registered identity suite."""

    name: str
    evaluate: Callable[[Params, SuiteOptions], list[CheckResult]]
    expand: Callable[[Params, SuiteOptions], list[Params]] = _single
    findings_only: bool = False


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(SUITE_CROSS_CHECK, _evaluate_cross_check, _expand_family),
        Suite(SUITE_PROCTOR_IDENTITIES, _evaluate_proctor_identities),
        Suite(SUITE_THEOREM_FORMS, _evaluate_theorem_forms, _expand_formula_j),
        Suite(SUITE_KUO, _evaluate_kuo, _expand_kuo),
        Suite(SUITE_KUO_REWRITE, _evaluate_kuo_rewrite, _expand_kuo),
        Suite(SUITE_STEP_RATIOS, _evaluate_step_ratios),
        Suite(SUITE_SHIFT, _evaluate_shift),
        Suite(SUITE_K_ZERO, _evaluate_k_zero),
        Suite(SUITE_CLOSING_IDENTITY, _evaluate_closing_identity, _expand_closing, True),
        Suite(SUITE_BASE_CASES, _evaluate_base_case, _expand_base_cases),
        Suite(SUITE_DDH, _evaluate_cross_check, _expand_family),
        Suite(SUITE_SPLIT, _evaluate_split, _expand_split),
    )
}


def default_grid(name: str, options: SuiteOptions) -> Grid:
    """Return the default grid of a suite."""

    if name == SUITE_CROSS_CHECK:
        if options.family is None:
            msg = "Cross check needs a region family"
            raise InvalidParameters(msg)
        source = DEFAULT_GRIDS[options.family.value]
    elif name == SUITE_DDH:
        source = DEFAULT_GRIDS[RegionFamily.ddh.value]
    elif name == SUITE_KUO and options.mode == KUO_MODE_FORMULA:
        source = KUO_FORMULA_GRID
    elif name == SUITE_KUO_REWRITE:
        source = KUO_FORMULA_GRID
    else:
        source = DEFAULT_GRIDS[name]
    return {key: list(values) for key, values in source.items()}


def grid_points(grid: Mapping[str, Iterable[int]]) -> list[Params]:
    """Return every point of the cartesian grid, in grid order."""

    names = list(grid)
    return [dict(zip(names, values)) for values in product(*(list(grid[name]) for name in names))]


def run_suite(
    name: str,
    grid: Mapping[str, Iterable[int]] | None = None,
    *,
    family: RegionFamily | None = None,
    engine: Engine = Engine.dp,
    weighted: bool = False,
    mode: str = KUO_MODE_ENGINE,
    brute_vertex_cap: int = DEFAULT_BRUTE_VERTEX_CAP,
    dp_cell_cap: int = DEFAULT_DP_CELL_CAP,
    workers: int = 1,
) -> VerificationReport:
    """Run a registered suite over a grid; missing names take default ranges."""

    if (suite := SUITES.get(name)) is None:
        msg = f"Unknown suite {name!r}, expected one of {sorted(SUITES)}"
        raise InvalidParameters(msg)
    if mode not in KUO_MODES:
        msg = f"Unknown mode {mode!r}, expected one of {KUO_MODES}"
        raise InvalidParameters(msg)
    if name == SUITE_DDH:
        family = RegionFamily.ddh

    options = SuiteOptions(
        engine=Engine(engine),
        weighted=weighted,
        mode=mode,
        family=family,
        brute_vertex_cap=brute_vertex_cap,
        dp_cell_cap=dp_cell_cap,
    )
    effective = default_grid(name, options)
    effective.update({key: list(values) for key, values in (grid or {}).items()})

    tuples = [
        params
        for point in grid_points(effective)
        for params in suite.expand(point, options)
    ]
    if not tuples:
        msg = f"Grid {effective} has no admissible tuples for suite {name}"
        raise InvalidParameters(msg)
    _LOGGER.info("Running suite %s over %d tuples", name, len(tuples))

    evaluate = partial(suite.evaluate, options=options)
    if workers > 1 and len(tuples) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(evaluate, tuples))
    else:
        batches = [evaluate(params) for params in tuples]

    report = VerificationReport(
        suite=name,
        grid=effective,
        results=sorted(
            (result for batch in batches for result in batch),
            key=CheckResult.sort_key,
        ),
        findings_only=suite.findings_only,
    )
    _LOGGER.info("Suite %s: %s", name, report.summary)
    return report


def cross_check(
    family: RegionFamily,
    grid: Mapping[str, Iterable[int]] | None = None,
    engine: Engine = Engine.dp,
    weighted: bool = False,
    **kwargs: Any,
) -> VerificationReport:
    """Compare closed forms with engine counts over a family grid."""

    return run_suite(
        SUITE_CROSS_CHECK,
        grid,
        family=RegionFamily(family),
        engine=engine,
        weighted=weighted,
        **kwargs,
    )


def proctor_identity_check(grid: Mapping[str, Iterable[int]] | None = None) -> VerificationReport:
    """Check the square and overhang identities of the Proctor formulas."""

    return run_suite(SUITE_PROCTOR_IDENTITIES, grid)


def theorem_form_check(grid: Mapping[str, Iterable[int]] | None = None) -> VerificationReport:
    """Check that the explicit and factored R formulas agree."""

    return run_suite(SUITE_THEOREM_FORMS, grid)


def kuo_check(
    a: int,
    k: int,
    j: int,
    x: int,
    mode: str = KUO_MODE_ENGINE,
    weighted: bool = False,
    **kwargs: Any,
) -> VerificationReport:
    """Check the six-region condensation recurrence at one tuple."""

    if not (a >= 2 and k >= 1 and k + 2 <= j <= a + k and x >= 0):
        msg = f"Recurrence needs a >= 2, k >= 1, k + 2 <= j <= a + k, x >= 0; got {(a, k, j, x)}"
        raise InvalidParameters(msg)
    return run_suite(
        SUITE_KUO,
        {"a": [a], "k": [k], "j": [j], "x": [x]},
        mode=mode,
        weighted=weighted,
        **kwargs,
    )


def kuo_rewrite_check(
    grid: Mapping[str, Iterable[int]] | None = None,
    weighted: bool = False,
) -> VerificationReport:
    """Check the recurrence solved for its largest region."""

    return run_suite(SUITE_KUO_REWRITE, grid, weighted=weighted)


def step_ratio_check(a: int, k: int, x: int) -> VerificationReport:
    """Check the one-step growth of Q_{a,k,x} and of P_{a,a,x} in a."""

    require_non_negative(a=a, k=k, x=x)
    return run_suite(SUITE_STEP_RATIOS, {"a": [a], "k": [k], "x": [x]})


def shift_check(a: int, k: int, x: int) -> VerificationReport:
    """Check that shifting P_{a,a,k} by x multiplies it by a Q ratio."""

    require_non_negative(a=a, k=k, x=x)
    return run_suite(SUITE_SHIFT, {"a": [a], "k": [k], "x": [x]})


def k_zero_check(a: int, j: int, x: int) -> VerificationReport:
    """Check that the factored formula with k = 0 collapses to P_{a,a,x} for any j."""

    require_non_negative(a=a, x=x)
    return run_suite(SUITE_K_ZERO, {"a": [a], "j": [j], "x": [x]})


def closing_identity_check(a: int, k: int, j: int) -> VerificationReport:
    """Evaluate both sides of the closing rational identity as printed."""

    if not (a > 2 and k > 0 and j > 2):
        msg = f"Closing identity needs a > 2, k > 0, j > 2; got {(a, k, j)}"
        raise InvalidParameters(msg)
    return run_suite(SUITE_CLOSING_IDENTITY, {"a": [a], "k": [k], "j": [j]})


def base_case_check(weighted: bool = False, **kwargs: Any) -> VerificationReport:
    """Check the induction base cases a = 1, 2 against engine counts."""

    return run_suite(SUITE_BASE_CASES, weighted=weighted, **kwargs)


def ddh_factorization_check(
    grid: Mapping[str, Iterable[int]] | None = None,
    engine: Engine = Engine.dp,
    **kwargs: Any,
) -> VerificationReport:
    """Compare the halved-hexagon factorization with direct counts."""

    return run_suite(SUITE_DDH, grid, engine=engine, **kwargs)


def split_suite(
    grid: Mapping[str, Iterable[int]] | None = None,
    weighted: bool = False,
    engine: Engine = Engine.dp,
    **kwargs: Any,
) -> VerificationReport:
    """Check the horizontal cuts of R regions below their defect."""

    return run_suite(SUITE_SPLIT, grid, weighted=weighted, engine=engine, **kwargs)

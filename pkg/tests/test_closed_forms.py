"""Define tests for the closed-form counts."""

from fractions import Fraction
import math

from hypothesis import given, settings, strategies as st
import pytest

from lozenge.tiling.closed_forms import (
    DDHParams,
    HexParams,
    RParams,
    ddh_count,
    f_exp,
    kuo_predict,
    macmahon,
    proctor,
    proctor_square,
    proctor_weighted,
    q_poly,
    q_prime_poly,
    r_count_explicit,
    r_count_factored,
    r_count_total,
    r_prime_explicit,
    r_prime_factored,
    r_prime_total,
    r_value,
)
from lozenge.tiling.exceptions import FormulaDomainError, InvalidParameters
from lozenge.tiling.helpers import is_dyadic

sides = st.integers(min_value=0, max_value=5)


@st.composite
def r_params(draw, lowest_j=None):
    """Draw R parameters with k <= j <= a + k + 1."""
    a = draw(st.integers(min_value=0, max_value=4))
    k = draw(st.integers(min_value=0, max_value=3))
    x = draw(st.integers(min_value=0, max_value=3))
    low = max(k, 1) if lowest_j is None else max(k, lowest_j)
    j = draw(st.integers(min_value=low, max_value=a + k + 1))
    return RParams(a, k, j, x)


@pytest.mark.parametrize(
    "b,c,d,expected",
    [(0, 0, 0, 1), (1, 1, 1, 2), (2, 1, 1, 3), (2, 2, 1, 6), (2, 2, 2, 20), (3, 3, 3, 980), (0, 3, 4, 1)],
)
def test_macmahon(b, c, d, expected):
    """Test known hexagon counts."""
    assert macmahon(HexParams(b, c, d)) == expected


@given(sides, sides, sides)
def test_macmahon_symmetric(b, c, d):
    """Test that the hexagon count ignores the order of its sides."""
    assert macmahon(HexParams(b, c, d)) == macmahon(HexParams(c, d, b)) == macmahon(HexParams(d, c, b))


@given(sides, sides)
def test_macmahon_thin_hexagon(b, c):
    """Test that a hexagon of height one counts lattice paths."""
    assert macmahon(HexParams(b, c, 1)) == math.comb(b + c, b)


def test_hex_params_negative():
    """Test that negative sides are rejected."""
    with pytest.raises(InvalidParameters):
        HexParams(1, -1, 2)


@pytest.mark.parametrize("i,expected", [(1, 1), (2, 2), (3, 2), (4, 1)])
def test_f_exp(i, expected):
    """Test the tent exponents for a = 4."""
    assert f_exp(4, i) == expected


@given(st.integers(min_value=1, max_value=30), st.data())
def test_f_exp_symmetric(a, data):
    """Test that the tent exponent reads the same from both ends."""
    i = data.draw(st.integers(min_value=1, max_value=a))
    assert f_exp(a, i) == f_exp(a, a + 1 - i)


@pytest.mark.parametrize("i", [0, 5])
def test_f_exp_out_of_range(i):
    """Test that exponents outside 1..a are rejected."""
    with pytest.raises(InvalidParameters):
        f_exp(4, i)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_q_polynomials_degree_one(k, x):
    """Test the linear members of both Q families."""
    assert q_poly(1, k, x) == x + k + 1
    assert q_prime_poly(1, k, x) == 2 * x + 2 * k + 1


def test_q_polynomials_empty():
    """Test that non-positive a gives the empty product."""
    assert q_poly(0, 2, 3) == 1
    assert q_poly(-2, 2, 3) == 1
    assert q_prime_poly(-1, 0, 0) == 1
    assert q_poly(2, 0, 0) == 6


@pytest.mark.parametrize(
    "a,b,c,expected",
    [(0, 3, 3, 1), (1, 1, 1, 2), (1, 2, 2, 6), (2, 2, 1, 5), (3, 2, 1, 5)],
)
def test_proctor(a, b, c, expected):
    """Test known Proctor counts, including the overhanging a = b + 1."""
    assert proctor(a, b, c) == expected


def test_proctor_too_tall():
    """Test that a > b + 1 is rejected."""
    with pytest.raises(InvalidParameters):
        proctor(4, 2, 1)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=5))
def test_proctor_square_matches_general(a, c):
    """Test the square specialization against the general product."""
    assert proctor_square(a, c) == proctor(a, a, c)
    assert proctor(a + 1, a, c) == proctor(a, a, c)


@given(st.integers(min_value=0, max_value=8))
def test_proctor_square_small(c):
    """Test P_{1,1,c} = c + 1 and the empty case."""
    assert proctor_square(1, c) == c + 1
    assert proctor_square(0, c) == 1
    assert proctor_square(-3, c) == 1


def test_proctor_weighted():
    """Test a weighted count and its dyadic denominator."""
    assert proctor_weighted(1, 2, 2) == Fraction(9, 2)
    assert proctor_weighted(2, 1, 3) == proctor_weighted(1, 1, 3)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5))
def test_proctor_weighted_no_width(a, extra):
    """Test that a region of width zero weighs 2^-a."""
    assert proctor_weighted(a, a + extra, 0) == Fraction(1, 2**a)


@given(sides, sides, st.integers(min_value=0, max_value=4))
def test_proctor_weighted_dyadic(a, extra, c):
    """Test that weighted Proctor counts have power-of-two denominators."""
    assert is_dyadic(proctor_weighted(a, a + extra, c))


def test_r_counts_by_hand():
    """Test R counts evaluated by hand."""
    assert r_count_explicit(RParams(1, 1, 2, 1)) == 6
    assert r_count_factored(RParams(1, 1, 2, 1)) == 6
    assert r_count_explicit(RParams(2, 1, 3, 1)) == 28
    assert r_count_factored(RParams(2, 1, 3, 1)) == 28
    assert r_prime_explicit(RParams(1, 1, 2, 1)) == Fraction(15, 4)
    assert r_prime_factored(RParams(1, 1, 2, 1)) == Fraction(15, 4)


@settings(max_examples=200)
@given(r_params())
def test_r_forms_agree(p):
    """Test the explicit and factored forms against each other."""
    assert r_count_explicit(p) == r_count_factored(p)
    assert r_prime_explicit(p) == r_prime_factored(p)


@given(r_params())
def test_r_prime_dyadic(p):
    """Test that weighted R counts have power-of-two denominators."""
    assert is_dyadic(r_prime_explicit(p))


def test_r_below_defect_range():
    """Test that j < k means no tilings."""
    assert r_count_total(RParams(1, 2, 1, 0)) == 0
    assert r_prime_total(RParams(1, 2, 1, 3)) == 0
    assert r_value(RParams(1, 2, 1, 0), weighted=True) == 0
    assert r_count_total(RParams(2, 4, 3, 3)) == 0
    assert r_prime_total(RParams(2, 4, 3, 3)) == 0


def test_r_out_of_range():
    """Test that defects outside the side are rejected."""
    with pytest.raises(InvalidParameters):
        r_count_explicit(RParams(1, 1, 4, 0))
    with pytest.raises(InvalidParameters):
        r_count_total(RParams(1, 1, 0, 0))
    with pytest.raises(InvalidParameters):
        RParams(-1, 0, 1, 0)


def test_r_prime_factored_needs_positive_j():
    """Test the weighted factored form at j = 0."""
    with pytest.raises(FormulaDomainError):
        r_prime_factored(RParams(1, 0, 0, 1))


def test_kuo_predict():
    """Test the solved recurrence at an admissible tuple."""
    assert kuo_predict(2, 1, 3, 0) == r_value(RParams(3, 0, 4, 0))
    assert kuo_predict(2, 1, 3, 1, weighted=True) == r_value(RParams(3, 0, 4, 1), weighted=True)


def test_kuo_predict_zero_divisor():
    """Test that a vanishing divisor is reported."""
    with pytest.raises(FormulaDomainError):
        kuo_predict(2, 2, 3, 0)


@pytest.mark.parametrize(
    "b,c,k,j,expected",
    [(2, 1, 0, 1, 3), (1, 1, 0, 1, 2), (3, 2, 0, 5, 50), (2, 1, 1, 1, 0), (3, 2, 2, 1, 0)],
)
def test_ddh_count(b, c, k, j, expected):
    """Test doubly-dented hexagons with known counts."""
    assert ddh_count(DDHParams(b, c, k, j)) == expected


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=1, max_value=4))
def test_ddh_without_dents_is_hexagon(b, c):
    """Test that k = 0 gives the hexagon b, c, c."""
    assert ddh_count(DDHParams(b, c, 0, 1)) == macmahon(HexParams(b, c, c))


def test_ddh_invalid():
    """Test rejected doubly-dented hexagons."""
    with pytest.raises(InvalidParameters):
        ddh_count(DDHParams(2, 0, 1, 1))
    with pytest.raises(InvalidParameters):
        ddh_count(DDHParams(2, 1, 1, 4))

"""Closed-form product formulas for tiling counts.

Unweighted formulas return ``int``; weighted formulas return ``Fraction``
values whose denominators are powers of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import TYPE_CHECKING

from .exceptions import FormulaDomainError, InvalidParameters
from .helpers import as_integer, hyperfactorial, product_range, require_non_negative

if TYPE_CHECKING:
    from collections.abc import Callable

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class RParams:
    """Class to represent the parameters of a defected R region."""

    a: int
    k: int
    j: int
    x: int

    def __post_init__(self) -> None:
        """Validate the side lengths."""

        require_non_negative(a=self.a, k=self.k, x=self.x)


@dataclass(frozen=True)
class HexParams:
    """Class to represent the side lengths b, c, d of a hexagon."""

    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        """Validate the side lengths."""

        require_non_negative(b=self.b, c=self.c, d=self.d)


@dataclass(frozen=True)
class DDHParams:
    """Class to represent a doubly-dented hexagon."""

    b: int
    c: int
    k: int
    j: int

    def __post_init__(self) -> None:
        """Validate the side lengths."""

        require_non_negative(b=self.b, c=self.c, k=self.k)


def f_exp(a: int, i: int) -> int:
    """Return the tent exponent min(i, a + 1 - i) for 1 <= i <= a."""

    if not 1 <= i <= a:
        msg = f"f_exp needs 1 <= i <= a, got a={a}, i={i}"
        raise InvalidParameters(msg)
    return min(i, a + 1 - i)


def _tent_product(size: int, factor: Callable[[int], int | Fraction]) -> Fraction:
    """Multiply factor(i) ** f_exp(size, i) over 1 <= i <= size."""

    return product_range(1, size, lambda i: factor(i) ** f_exp(size, i))


def _triangle_product(size: int, shift: int) -> Fraction:
    """Multiply (shift + i + j - 1) / (i + j - 1) over 1 <= i <= j <= size."""

    return product_range(
        1,
        size,
        lambda i: product_range(i, size, lambda j: Fraction(shift + i + j - 1, i + j - 1)),
    )


def q_poly(a: int, k: int, x: int) -> int:
    """Return the polynomial Q_{a,k,x}; 1 whenever a <= 0."""

    require_non_negative(k=k, x=x)
    if a <= 0:
        return 1

    value = _tent_product(a, lambda i: x + k + i) * _tent_product(
        a - 1,
        lambda i: 2 * x + 2 * k + 2 * i + 1,
    )
    return as_integer(value, "Q polynomial")


def q_prime_poly(a: int, k: int, x: int) -> int:
    """Return the polynomial Q'_{a,k,x}; 1 whenever a <= 0."""

    require_non_negative(k=k, x=x)
    if a <= 0:
        return 1

    value = _tent_product(a, lambda i: 2 * x + 2 * k + 2 * i - 1) * _tent_product(
        a - 1,
        lambda i: x + k + i,
    )
    return as_integer(value, "Q' polynomial")


def macmahon(p: HexParams) -> int:
    """Return the number of lozenge tilings of the hexagon b, c, d, b, c, d."""

    b, c, d = p.b, p.c, p.d
    numerator = (
        hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(d) * hyperfactorial(b + c + d)
    )
    denominator = hyperfactorial(b + c) * hyperfactorial(b + d) * hyperfactorial(c + d)
    return as_integer(Fraction(numerator, denominator), "hexagon count")


def _check_proctor(a: int, b: int, c: int) -> None:
    require_non_negative(a=a, b=b, c=c)
    if a > b + 1:
        msg = f"Proctor region needs a <= b + 1, got a={a}, b={b}"
        raise InvalidParameters(msg)


def _proctor_product(a: int, b: int, c: int) -> Fraction:
    """Evaluate the Proctor double product literally."""

    def row(i: int) -> Fraction:
        return product_range(
            1,
            b - a + 1,
            lambda j: Fraction(c + i + j - 1, i + j - 1),
        ) * product_range(
            b - a + 2,
            b - a + i,
            lambda j: Fraction(2 * c + i + j - 1, i + j - 1),
        )

    return product_range(1, a, row)


def proctor(a: int, b: int, c: int) -> int:
    """Return the number of tilings of the Proctor region P_{a,b,c}."""

    _check_proctor(a, b, c)
    if a == b + 1:
        return proctor(b, b, c)
    return as_integer(_proctor_product(a, b, c), "Proctor count")


def proctor_square(a: int, c: int) -> int:
    """Return the tiling count of P_{a,a,c}; the empty product for a <= 0."""

    require_non_negative(c=c)
    if a <= 0:
        return 1

    value = product_range(1, a, lambda i: Fraction(c + i, 2 * c + i)) * _triangle_product(
        a,
        2 * c,
    )
    return as_integer(value, "Proctor count")


def proctor_weighted(a: int, b: int, c: int) -> Fraction:
    """Return the weighted count of P'_{a,b,c}, bump lozenges weighing 1/2."""

    _check_proctor(a, b, c)
    if a == b + 1:
        return proctor_weighted(b, b, c)

    correction = product_range(
        1,
        a,
        lambda i: Fraction(2 * c + b - a + i, c + b - a + i),
    )
    return Fraction(proctor(a, b, c), 2**a) * correction


def _check_r_range(p: RParams, lowest: int) -> None:
    if not lowest <= p.j <= p.a + p.k + 1:
        msg = f"Defect position j={p.j} outside [{lowest}, {p.a + p.k + 1}]"
        raise InvalidParameters(msg)


def r_count_explicit(p: RParams) -> int:
    """Return M(R_{a,k,j,x}) from the explicit product, for k <= j."""

    _check_r_range(p, p.k)
    a, k, j, x = p.a, p.k, p.j, p.x

    value = (
        _tent_product(a, lambda n: Fraction(x + k + n, k + n))
        * _tent_product(a - 1, lambda n: Fraction(2 * x + 2 * k + 2 * n + 1, 2 * k + 2 * n + 1))
        * _tent_product(j - k - 1, lambda n: Fraction(k + n, x + k + n))
        * _tent_product(j - k - 2, lambda n: Fraction(2 * k + 2 * n + 1, 2 * x + 2 * k + 2 * n + 1))
        * product_range(1, j - 1, lambda n: Fraction(x + n, 2 * x + n))
        * _triangle_product(j - 1, 2 * x)
        * _proctor_product(a - j + k + 1, a, k)
    )
    return as_integer(value, "R count")


def r_count_factored(p: RParams) -> int:
    """Return M(R_{a,k,j,x}) through Q-polynomial ratios and Proctor counts."""

    _check_r_range(p, p.k)
    a, k, j, x = p.a, p.k, p.j, p.x

    ratio = Fraction(q_poly(a, k, x), q_poly(a, k, 0)) * Fraction(
        q_poly(j - k - 1, k, 0),
        q_poly(j - k - 1, k, x),
    )
    # P_{a-j+1,a,0} has a single tiling whatever its indices
    tail = 1 if k == 0 else proctor(a - j + k + 1, a, k)
    return as_integer(ratio * proctor_square(j - 1, x) * tail, "R count")


def r_prime_explicit(p: RParams) -> Fraction:
    """Return M(R'_{a,k,j,x}) from the explicit product, for k <= j."""

    _check_r_range(p, p.k)
    a, k, j, x = p.a, p.k, p.j, p.x

    return (
        _tent_product(a, lambda n: Fraction(2 * x + 2 * k + 2 * n - 1, 2 * k + 2 * n - 1))
        * _tent_product(a - 1, lambda n: Fraction(x + k + n, k + n))
        * _tent_product(j - k - 1, lambda n: Fraction(2 * k + 2 * n - 1, 2 * x + 2 * k + 2 * n - 1))
        * _tent_product(j - k - 2, lambda n: Fraction(k + n, x + k + n))
        * _triangle_product(j - 1, 2 * x)
        * product_range(1, a - j + k + 1, lambda n: Fraction(k + j + n - 1, j + n - 1))
        * Fraction(1, 2 ** (a + k))
        * _proctor_product(a - j + k + 1, a, k)
    )


def r_prime_factored(p: RParams) -> Fraction:
    """Return M(R'_{a,k,j,x}) through Q'-polynomial ratios and weighted Proctor counts."""

    _check_r_range(p, p.k)
    a, k, j, x = p.a, p.k, p.j, p.x

    if j < 1:
        msg = f"Weighted factored form needs j >= 1, got j={j}"
        raise FormulaDomainError(msg)

    ratio = Fraction(q_prime_poly(a, k, x), q_prime_poly(a, k, 0)) * Fraction(
        q_prime_poly(j - k - 1, k, 0),
        q_prime_poly(j - k - 1, k, x),
    )
    return ratio * proctor_weighted(j - 1, j - 1, x) * proctor_weighted(a - j + k + 1, a, k)


def r_count_total(p: RParams) -> int:
    """Return M(R_{a,k,j,x}) for every constructible j, zero when j < k."""

    _check_r_range(p, 1)
    if p.j < p.k:
        return 0
    return r_count_explicit(p)


def r_prime_total(p: RParams) -> Fraction:
    """Return M(R'_{a,k,j,x}) for every constructible j, zero when j < k."""

    _check_r_range(p, 1)
    if p.j < p.k:
        return Fraction(0)
    return r_prime_explicit(p)


def r_value(p: RParams, weighted: bool = False) -> Fraction:
    """Return the (weighted) count of the R region as a Fraction."""

    if weighted:
        return r_prime_total(p)
    return Fraction(r_count_total(p))


def kuo_predict(a: int, k: int, j: int, x: int, weighted: bool = False) -> Fraction:
    """Predict M(R_{a+1,k-1,j+1,x}) from five smaller regions."""

    def m(a_: int, k_: int, j_: int, x_: int) -> Fraction:
        return r_value(RParams(a_, k_, j_, x_), weighted)

    if (denominator := m(a - 2, k, j - 2, x + 1)) == 0:
        msg = f"Recurrence divisor vanishes at a={a}, k={k}, j={j}, x={x}"
        raise FormulaDomainError(msg)

    numerator = m(a, k, j, x) * m(a - 1, k - 1, j - 1, x + 1) - m(
        a,
        k - 1,
        j - 1,
        x + 1,
    ) * m(a - 1, k, j, x)
    return numerator / denominator


def ddh_count(p: DDHParams) -> int:
    """Return the tiling count of DDH_{b,c,2k,j} from its two R factors."""

    b, c, k, j = p.b, p.c, p.k, p.j
    if c < 1:
        msg = f"Doubly-dented hexagon needs c >= 1, got c={c}"
        raise InvalidParameters(msg)

    if k == 0:
        j = 2
    elif not 1 <= j <= c + k + 1:
        msg = f"Defect position j={j} outside [1, {c + k + 1}]"
        raise InvalidParameters(msg)
    elif j == 1:
        LOG.debug("Defect of DDH(%s, %s, %s, 1) sits in a forced row", b, c, k)
        return 0

    if b % 2 == 0:
        value = (
            2 ** (c + k)
            * r_count_total(RParams(c - 1, k, j - 1, b // 2))
            * r_prime_total(RParams(c, k, j, b // 2))
        )
    else:
        value = (
            2 ** (c + k)
            * r_count_total(RParams(c, k, j, (b - 1) // 2))
            * r_prime_total(RParams(c - 1, k, j - 1, (b + 1) // 2))
        )
    return as_integer(value, "doubly-dented hexagon count")

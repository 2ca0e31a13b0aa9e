"""Collection of helper functions."""

from __future__ import annotations

import logging
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING

from .exceptions import FormulaDomainError, InvalidParameters, NonIntegralValue

if TYPE_CHECKING:
    from collections.abc import Callable

LOG: logging.Logger = logging.getLogger(__name__)

FRACTION_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


@lru_cache(maxsize=None)
def hyperfactorial(n: int) -> int:
    """Return 0! 1! ... (n-1)!, the empty product being 1 for n = 0."""

    if n < 0:
        msg = f"Hyperfactorial needs a non-negative argument, got {n}"
        raise InvalidParameters(msg)

    return math.prod(math.factorial(i) for i in range(n))


def product_range(
    lo: int,
    hi: int,
    term: Callable[[int], int | Fraction],
) -> Fraction:
    """Multiply term(i) for lo <= i <= hi.

    The product over an empty range is 1. Numerators and denominators are
    accumulated separately and reduced once.
    """

    numerator, denominator = 1, 1
    try:
        for i in range(lo, hi + 1):
            value = term(i)
            numerator *= value.numerator
            denominator *= value.denominator
        return Fraction(numerator, denominator)
    except ZeroDivisionError as err:
        msg = f"A factor of the product over [{lo}, {hi}] divides by zero"
        raise FormulaDomainError(msg) from err


def as_integer(value: int | Fraction, context: str = "value") -> int:
    """Return value as an int, raising when it has a denominator."""

    if (value := Fraction(value)).denominator != 1:
        msg = f"Expected an integral {context}, got {value}"
        raise NonIntegralValue(msg)
    return value.numerator


def is_dyadic(value: Fraction) -> bool:
    """Check whether the denominator of value is a power of two."""

    denominator = value.denominator
    return denominator & (denominator - 1) == 0


def require_non_negative(**params: int) -> None:
    """Raise InvalidParameters naming the first negative parameter."""

    for name, value in params.items():
        if value < 0:
            msg = f"Parameter {name} must be non-negative, got {value}"
            raise InvalidParameters(msg)


def fraction_to_str(value: int | Fraction) -> str:
    """Render an exact rational as "n" or "p/q"."""

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_str(text: str) -> Fraction:
    """Parse the output of fraction_to_str."""

    if not (match := FRACTION_PATTERN.match(text)):
        msg = f"Not an exact rational: {text!r}"
        raise ValueError(msg)

    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        msg = f"Zero denominator in {text!r}"
        raise ValueError(msg)
    return Fraction(int(numerator), int(denominator or 1))

"""Common constants."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

# Special types
RawData = dict[str, Any]
Point = tuple[int, int]
Step = tuple[int, int]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

# Boundary steps in doubled lattice coordinates (dX, dy), y grows southward.
# A lattice vertex (X, y) always satisfies X = y (mod 2).
EAST: Step = (2, 0)
WEST: Step = (-2, 0)
NORTHEAST: Step = (1, -1)
NORTHWEST: Step = (-1, -1)
SOUTHEAST: Step = (1, 1)
SOUTHWEST: Step = (-1, 1)

DEFAULT_BRUTE_VERTEX_CAP = 70
DEFAULT_DP_CELL_CAP = 400

# Lozenge weight carried by every bump of a weighted region
BUMP_WEIGHT = HALF

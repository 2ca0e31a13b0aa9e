"""Unit triangles, regions and forced-lozenge reduction."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from types import MappingProxyType
from typing import TYPE_CHECKING

from .const import ONE, ZERO, RawData
from .exceptions import InvalidRegion
from .helpers import fraction_from_str, fraction_to_str

if TYPE_CHECKING:
    from .const import Point

LOG = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TriCell:
    """Class to represent a unit triangle by row (southward) and column.

    The cell points up when row + col is even.
    """

    row: int
    col: int

    @property
    def is_up(self) -> bool:
        """Return whether the triangle points up."""

        return (self.row + self.col) % 2 == 0

    def neighbors(self) -> tuple[TriCell, TriCell, TriCell]:
        """Return the three edge-adjacent triangles."""

        vertical = self.row + 1 if self.is_up else self.row - 1
        return (
            TriCell(self.row, self.col - 1),
            TriCell(self.row, self.col + 1),
            TriCell(vertical, self.col),
        )

    def vertices(self) -> tuple[Point, Point, Point]:
        """Return the corners in doubled lattice coordinates (X, y)."""

        r, c = self.row, self.col
        if self.is_up:
            return ((c, r), (c - 1, r + 1), (c + 1, r + 1))
        return ((c - 1, r), (c + 1, r), (c, r + 1))

    def mirror(self, axis: int) -> TriCell:
        """Reflect across the vertical line X = axis."""

        return TriCell(self.row, 2 * axis - self.col)


Lozenge = tuple[TriCell, TriCell]


def lozenge(first: TriCell, second: TriCell) -> Lozenge:
    """Return the canonical (sorted) key of the lozenge made of two triangles."""

    return (first, second) if first <= second else (second, first)


@dataclass(frozen=True)
class Region:
    """Class to represent a finite set of unit triangles with lozenge weights.

    Lozenges missing from ``weights`` weigh 1.
    """

    cells: frozenset[TriCell]
    weights: Mapping[Lozenge, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Normalize and validate the weights."""

        object.__setattr__(self, "cells", frozenset(self.cells))
        normalized: dict[Lozenge, Fraction] = {}
        for (first, second), weight in self.weights.items():
            if first not in self.cells or second not in self.cells:
                msg = f"Weighted lozenge {first}-{second} is not inside the region"
                raise InvalidRegion(msg)
            if second not in first.neighbors():
                msg = f"Weighted cells {first} and {second} are not adjacent"
                raise InvalidRegion(msg)
            if (weight := Fraction(weight)) <= 0:
                msg = f"Lozenge {first}-{second} has non-positive weight {weight}"
                raise InvalidRegion(msg)
            if weight != ONE:
                normalized[lozenge(first, second)] = weight
        object.__setattr__(self, "weights", MappingProxyType(normalized))

    def __len__(self) -> int:
        """Return the number of triangles."""

        return len(self.cells)

    @property
    def up_cells(self) -> list[TriCell]:
        """Return the up-pointing triangles in row-major order."""

        return sorted(cell for cell in self.cells if cell.is_up)

    @property
    def down_cells(self) -> list[TriCell]:
        """Return the down-pointing triangles in row-major order."""

        return sorted(cell for cell in self.cells if not cell.is_up)

    @property
    def is_weighted(self) -> bool:
        """Return whether any lozenge weighs something other than 1."""

        return bool(self.weights)

    def weight(self, first: TriCell, second: TriCell) -> Fraction:
        """Return the weight of the lozenge formed by two adjacent cells."""

        return self.weights.get(lozenge(first, second), ONE)

    def neighbors_in(self, cell: TriCell) -> list[TriCell]:
        """Return the neighbors of cell that belong to the region."""

        return [nbr for nbr in cell.neighbors() if nbr in self.cells]

    def restrict(self, cells: Iterable[TriCell]) -> Region:
        """Return the induced sub-region on cells, keeping inner weights."""

        kept = frozenset(cells) & self.cells
        return Region(
            kept,
            {
                pair: weight
                for pair, weight in self.weights.items()
                if pair[0] in kept and pair[1] in kept
            },
        )

    def without(self, cells: Iterable[TriCell]) -> Region:
        """Return the region with cells removed."""

        return self.restrict(self.cells - frozenset(cells))

    def mirror(self, axis: int) -> Region:
        """Reflect the region across the vertical line X = axis."""

        return Region(
            frozenset(cell.mirror(axis) for cell in self.cells),
            {
                lozenge(first.mirror(axis), second.mirror(axis)): weight
                for (first, second), weight in self.weights.items()
            },
        )


@dataclass(frozen=True)
class ReducedRegion:
    """Class to represent a region stripped of its forced lozenges."""

    region: Region
    prefactor: Fraction

    @property
    def is_zero(self) -> bool:
        """Return whether reduction proved the region untileable."""

        return self.prefactor == ZERO


def is_balanced(region: Region) -> bool:
    """Check whether the region has as many up as down triangles."""

    return len(region.up_cells) == len(region.down_cells)


def reduce_forced(region: Region) -> ReducedRegion:
    """Remove lozenges forced on cells with a single neighbor.

    The product of the removed lozenge weights becomes the prefactor. A cell
    left without neighbors makes the prefactor 0.
    """

    remaining = set(region.cells)
    prefactor = ONE
    forced = 0
    pending = deque(sorted(remaining))

    while pending:
        if (cell := pending.popleft()) not in remaining:
            continue

        partners = [nbr for nbr in cell.neighbors() if nbr in remaining]
        if not partners:
            LOG.debug("Cell %s cannot be covered, region has no tilings", cell)
            return ReducedRegion(Region(frozenset()), ZERO)
        if len(partners) > 1:
            continue

        partner = partners[0]
        prefactor *= region.weight(cell, partner)
        remaining -= {cell, partner}
        forced += 1
        pending.extend(
            nbr for nbr in (*cell.neighbors(), *partner.neighbors()) if nbr in remaining
        )

    LOG.debug(
        "Removed %d forced lozenges from %d cells, prefactor %s",
        forced,
        len(region),
        prefactor,
    )
    return ReducedRegion(region.restrict(remaining), prefactor)


def region_to_json(region: Region) -> RawData:
    """Serialize a region to the documented cell-list format."""

    return {
        "cells": [[cell.row, cell.col] for cell in sorted(region.cells)],
        "weights": [
            [[first.row, first.col], [second.row, second.col], fraction_to_str(weight)]
            for (first, second), weight in sorted(region.weights.items())
        ],
    }


def region_from_json(raw_data: RawData) -> Region:
    """Rebuild a region from the cell-list format."""

    try:
        cells = frozenset(TriCell(int(row), int(col)) for row, col in raw_data["cells"])
        weights = {
            lozenge(TriCell(*map(int, first)), TriCell(*map(int, second))): fraction_from_str(
                str(weight),
            )
            for first, second, weight in raw_data.get("weights", [])
        }
    except (KeyError, TypeError, ValueError) as err:
        msg = f"Malformed region data: {err}"
        raise InvalidRegion(msg) from err

    return Region(cells, weights)

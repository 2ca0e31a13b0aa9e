"""Base class for lattice regions bounded by a closed boundary walk."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import TYPE_CHECKING

from ..exceptions import InvalidRegion
from ..lattice import Region, TriCell, lozenge

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from ..const import Point, Step

LOG = logging.getLogger(__name__)


def _inside(point: Point, polygon: list[Point]) -> bool:
    """Even-odd test of a point against a polygon, both scaled to integers."""

    px, py = point
    inside = False
    for (x1, y1), (x2, y2) in zip(polygon, polygon[1:] + polygon[:1]):
        if (y1 > py) == (y2 > py):
            continue
        crossing = x1 + Fraction((py - y1) * (x2 - x1), y2 - y1)
        if px < crossing:
            inside = not inside
    return inside


@dataclass(frozen=True)
class BoundaryWalk:
    """Class to represent a closed walk of unit steps along lattice lines."""

    start: Point = (0, 0)
    steps: tuple[tuple[Step, int], ...] = field(default_factory=tuple)

    def then(self, step: Step, length: int = 1) -> BoundaryWalk:
        """Return the walk extended by length unit steps."""

        if length < 0:
            msg = f"Negative side length {length}"
            raise InvalidRegion(msg)
        return BoundaryWalk(self.start, (*self.steps, (step, length)))

    def vertices(self) -> list[Point]:
        """Return the corners of the walk, without the closing repeat."""

        x, y = self.start
        corners = [(x, y)]
        for (dx, dy), length in self.steps:
            if length == 0:
                continue
            x, y = x + dx * length, y + dy * length
            corners.append((x, y))

        if corners[-1] != corners[0]:
            msg = f"Boundary walk from {corners[0]} ends at {corners[-1]}"
            raise InvalidRegion(msg)
        return corners[:-1]

    def cells(self) -> frozenset[TriCell]:
        """Return the unit triangles enclosed by the walk."""

        if len(corners := self.vertices()) < 3:
            return frozenset()

        # Centroids sit at y + 1/3 (down) and y + 2/3 (up), so scale y by 3.
        polygon = [(x, 3 * y) for x, y in corners]
        xs = [x for x, _ in corners]
        ys = [y for _, y in corners]

        def candidates() -> Iterator[TriCell]:
            for row in range(min(ys), max(ys)):
                for col in range(min(xs) - 1, max(xs) + 2):
                    yield TriCell(row, col)

        return frozenset(
            cell
            for cell in candidates()
            if _inside((cell.col, 3 * cell.row + (2 if cell.is_up else 1)), polygon)
        )


class RegionBuilder:
    """Base class for region families drawn as a boundary walk."""

    def __init__(self, walk: BoundaryWalk) -> None:
        """Initialize a region builder."""

        self.walk = walk
        self.removed: set[TriCell] = set()
        self.weighted: dict[tuple[TriCell, TriCell], Fraction] = {}

    def remove(self, cells: Iterable[TriCell]) -> None:
        """Mark cells (dents) to be removed from the enclosed area."""

        self.removed.update(cells)

    def weigh(self, first: TriCell, second: TriCell, weight: Fraction) -> None:
        """Assign a weight to the lozenge formed by two cells."""

        self.weighted[lozenge(first, second)] = weight

    def build(self) -> Region:
        """Return the enclosed area minus the dents, with surviving weights."""

        if missing := self.removed - (enclosed := self.walk.cells()):
            msg = f"Dents {sorted(missing)} lie outside the boundary"
            raise InvalidRegion(msg)

        cells = enclosed - self.removed
        region = Region(
            cells,
            {
                pair: weight
                for pair, weight in self.weighted.items()
                if pair[0] in cells and pair[1] in cells
            },
        )
        LOG.debug(
            "Built region with %d cells, %d dents, %d weighted lozenges",
            len(region),
            len(self.removed),
            len(region.weights),
        )
        return region

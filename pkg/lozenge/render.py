"""SVG drawings of regions and tilings."""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import svgwrite

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from .tiling.const import Point
    from .tiling.lattice import Region, TriCell

_LOGGER = logging.getLogger(__name__)

SIDE = 24.0
MARGIN = 12.0

CELL_FILL = {True: "#f4e3b5", False: "#c9d9ef"}
STROKE = "#555555"


class RegionDrawing:
    """Class to lay out a region on an SVG canvas."""

    def __init__(self, region: Region, dents: Iterable[TriCell] = ()) -> None:
        """Initialize a drawing of the region and its removed dents."""

        self.region = region
        self.dents = sorted(dents)
        corners = [
            corner
            for cell in (*region.cells, *self.dents)
            for corner in cell.vertices()
        ] or [(0, 0)]
        self.min_x = min(x for x, _ in corners)
        self.min_y = min(y for _, y in corners)
        self.width = (max(x for x, _ in corners) - self.min_x) * SIDE / 2 + 2 * MARGIN
        self.height = (max(y for _, y in corners) - self.min_y) * SIDE * math.sqrt(3) / 2 + 2 * MARGIN

    def point(self, corner: Point) -> tuple[float, float]:
        """Map a lattice vertex to canvas coordinates."""

        x, y = corner
        return (
            MARGIN + (x - self.min_x) * SIDE / 2,
            MARGIN + (y - self.min_y) * SIDE * math.sqrt(3) / 2,
        )

    def outline(self, corners: Sequence[Point]) -> list[tuple[float, float]]:
        """Map a polygon, ordering its corners around their center."""

        cx = sum(x for x, _ in corners) / len(corners)
        cy = sum(y for _, y in corners) / len(corners)
        ordered = sorted(corners, key=lambda c: math.atan2((c[1] - cy) * math.sqrt(3), c[0] - cx))
        return [self.point(corner) for corner in ordered]

    def render(self, tiling: Sequence[tuple[TriCell, TriCell]] | None = None) -> str:
        """Return the SVG document as a string."""

        dwg = svgwrite.Drawing(size=(f"{self.width:.1f}", f"{self.height:.1f}"), profile="full")

        cells = dwg.add(dwg.g(id="cells", stroke=STROKE, stroke_width=0.5))
        for cell in sorted(self.region.cells):
            cells.add(
                dwg.polygon(
                    [self.point(corner) for corner in cell.vertices()],
                    fill=CELL_FILL[cell.is_up],
                    class_="up" if cell.is_up else "down",
                ),
            )

        dents = dwg.add(dwg.g(id="dents", fill="none", stroke="#b03030", stroke_dasharray="3,2"))
        for cell in self.dents:
            dents.add(dwg.polygon([self.point(corner) for corner in cell.vertices()]))

        if tiling is not None:
            lozenges = dwg.add(dwg.g(id="tiling", fill="none", stroke="black", stroke_width=1.5))
            for first, second in tiling:
                corners = sorted(set(first.vertices()) | set(second.vertices()))
                lozenges.add(dwg.polygon(self.outline(corners)))

        weights = dwg.add(dwg.g(id="weights", fill="none", stroke="#206020"))
        for first, second in sorted(self.region.weights):
            corners = sorted(set(first.vertices()) | set(second.vertices()))
            points = [self.point(corner) for corner in corners]
            center = (
                sum(x for x, _ in points) / len(points),
                sum(y for _, y in points) / len(points),
            )
            vertical = first.col == second.col
            radii = (SIDE / 5, SIDE / 2.6) if vertical else (SIDE / 2.6, SIDE / 5)
            weights.add(dwg.ellipse(center=center, r=radii))

        _LOGGER.debug(
            "Rendered %d cells, %d dents, %d weighted lozenges",
            len(self.region),
            len(self.dents),
            len(self.region.weights),
        )
        return dwg.tostring()


def render_region(
    region: Region,
    dents: Iterable[TriCell] = (),
    tiling: Sequence[tuple[TriCell, TriCell]] | None = None,
) -> str:
    """Return an SVG drawing of region, its dents and optionally one tiling."""

    return RegionDrawing(region, dents).render(tiling)

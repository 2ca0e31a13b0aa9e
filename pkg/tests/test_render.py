"""Define tests for SVG drawings."""

from lozenge.render import RegionDrawing, render_region
from lozenge.tiling.engine import dual_graph, first_matching
from lozenge.tiling.regions import build_hexagon, r_dents, r_region


def test_render_hexagon():
    """Test one polygon per triangle."""
    svg = render_region(build_hexagon(2, 2, 2))
    assert svg.startswith("<svg")
    assert svg.count('class="up"') == 12
    assert svg.count('class="down"') == 12
    assert 'id="tiling"' not in svg


def test_render_tiling_and_dents():
    """Test the dent outlines, weights and tiling groups."""
    region = r_region(1, 1, 2, 1, weighted=True)
    tiling = first_matching(dual_graph(region))
    svg = render_region(region, r_dents(1, 1, 2, 1), tiling)
    assert 'id="dents"' in svg
    assert 'id="tiling"' in svg
    assert svg.count("<ellipse") == len(region.weights)


def test_drawing_size():
    """Test that the canvas covers the region plus margins."""
    drawing = RegionDrawing(build_hexagon(1, 1, 1))
    assert drawing.point((drawing.min_x, drawing.min_y)) == (12.0, 12.0)
    assert drawing.width == 72.0

"""Define tests for triangles, regions and forced-lozenge reduction."""

from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from lozenge.tiling.exceptions import InvalidRegion
from lozenge.tiling.lattice import (
    Region,
    TriCell,
    is_balanced,
    lozenge,
    reduce_forced,
    region_from_json,
    region_to_json,
)

cells = st.builds(TriCell, st.integers(-20, 20), st.integers(-20, 20))


def test_orientation():
    """Test the parity rule for up and down triangles."""
    assert TriCell(0, 0).is_up
    assert not TriCell(0, 1).is_up
    assert not TriCell(3, 0).is_up
    assert TriCell(3, -1).is_up


def test_neighbors():
    """Test the neighbors of an up and a down triangle."""
    assert TriCell(0, 0).neighbors() == (TriCell(0, -1), TriCell(0, 1), TriCell(1, 0))
    assert TriCell(0, 1).neighbors() == (TriCell(0, 0), TriCell(0, 2), TriCell(-1, 1))


@given(cells)
def test_neighbors_are_mutual(cell):
    """Test that adjacency is symmetric and alternates orientation."""
    for nbr in cell.neighbors():
        assert cell in nbr.neighbors()
        assert nbr.is_up is not cell.is_up


@given(cells)
def test_neighbors_share_an_edge(cell):
    """Test that adjacent triangles share exactly two corners."""
    for nbr in cell.neighbors():
        assert len(set(cell.vertices()) & set(nbr.vertices())) == 2


def test_vertices():
    """Test the corners in doubled coordinates."""
    assert TriCell(0, 0).vertices() == ((0, 0), (-1, 1), (1, 1))
    assert TriCell(0, 1).vertices() == ((0, 0), (2, 0), (1, 1))


@given(cells, st.integers(-10, 10))
def test_mirror(cell, axis):
    """Test that reflection keeps orientation and is an involution."""
    image = cell.mirror(axis)
    assert image.is_up is cell.is_up
    assert image.mirror(axis) == cell


def test_lozenge_key_is_sorted():
    """Test the canonical lozenge key."""
    assert lozenge(TriCell(0, 1), TriCell(0, 0)) == (TriCell(0, 0), TriCell(0, 1))


def test_region_weights(unit_hexagon_cells, half_weighted_hexagon):
    """Test weight lookup in either order and the default weight."""
    region = half_weighted_hexagon
    assert region.is_weighted
    assert region.weight(TriCell(0, 1), TriCell(0, 0)) == Fraction(1, 2)
    assert region.weight(TriCell(0, 1), TriCell(0, 2)) == 1

    plain = Region(
        frozenset(unit_hexagon_cells),
        {lozenge(TriCell(0, 0), TriCell(0, 1)): Fraction(1)},
    )
    assert not plain.is_weighted
    assert len(plain) == 6
    assert is_balanced(plain)


@pytest.mark.parametrize(
    "weights",
    [
        {(TriCell(0, 0), TriCell(0, 2)): Fraction(1, 2)},
        {(TriCell(0, 0), TriCell(0, 1)): Fraction(0)},
        {(TriCell(0, 0), TriCell(0, -1)): Fraction(2)},
    ],
)
def test_region_rejects_weights(unit_hexagon_cells, weights):
    """Test non-adjacent, non-positive and outside weights."""
    with pytest.raises(InvalidRegion):
        Region(frozenset(unit_hexagon_cells), weights)


def test_restrict_and_without(half_weighted_hexagon):
    """Test that sub-regions keep only inner weights."""
    top = half_weighted_hexagon.restrict(cell for cell in half_weighted_hexagon.cells if cell.row == 0)
    assert len(top) == 3
    assert top.is_weighted

    rest = half_weighted_hexagon.without([TriCell(0, 0)])
    assert len(rest) == 5
    assert not rest.is_weighted


def test_region_mirror(half_weighted_hexagon):
    """Test that mirroring the unit hexagon about its axis fixes it."""
    image = half_weighted_hexagon.mirror(1)
    assert image.cells == half_weighted_hexagon.cells
    assert image.weight(TriCell(0, 2), TriCell(0, 1)) == Fraction(1, 2)


def test_reduce_forced_nothing_forced(unit_hexagon):
    """Test that a cycle has no forced lozenges."""
    reduced = reduce_forced(unit_hexagon)
    assert reduced.prefactor == 1
    assert reduced.region.cells == unit_hexagon.cells


def test_reduce_forced_chain():
    """Test that a path of four triangles is fully forced."""
    region = Region(
        frozenset({TriCell(0, 0), TriCell(0, 1), TriCell(0, 2), TriCell(0, 3)}),
        {lozenge(TriCell(0, 2), TriCell(0, 3)): Fraction(1, 2)},
    )
    reduced = reduce_forced(region)
    assert not reduced.is_zero
    assert len(reduced.region) == 0
    assert reduced.prefactor == Fraction(1, 2)


def test_reduce_forced_isolated_cell():
    """Test that an isolated triangle proves there is no tiling."""
    region = Region(frozenset({TriCell(0, 0), TriCell(0, 1), TriCell(0, 2)}))
    assert reduce_forced(region).is_zero


def test_region_json(half_weighted_hexagon):
    """Test the cell-list format."""
    raw_data = region_to_json(half_weighted_hexagon)
    assert raw_data["cells"][0] == [0, 0]
    assert raw_data["weights"] == [[[0, 0], [0, 1], "1/2"]]
    assert region_from_json(raw_data) == half_weighted_hexagon


@pytest.mark.parametrize(
    "raw_data",
    [{}, {"cells": [[0]]}, {"cells": [[0, 0], [0, 1]], "weights": [[[0, 0], [0, 1], "x"]]}],
)
def test_region_json_malformed(raw_data):
    """Test that malformed data raises InvalidRegion."""
    with pytest.raises(InvalidRegion):
        region_from_json(raw_data)

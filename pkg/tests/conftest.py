"""Fixtures shared by the lozenge tests."""

from fractions import Fraction
import logging

import pytest

from lozenge.tiling.lattice import Region, TriCell, lozenge


@pytest.fixture(name="unit_hexagon_cells")
def unit_hexagon_cells_fixture():
    """Return the six triangles of the unit hexagon, in cycle order."""

    return [
        TriCell(0, 0),
        TriCell(0, 1),
        TriCell(0, 2),
        TriCell(1, 2),
        TriCell(1, 1),
        TriCell(1, 0),
    ]


@pytest.fixture(name="unit_hexagon")
def unit_hexagon_fixture(unit_hexagon_cells):
    """Return the unit hexagon as an unweighted region."""

    return Region(frozenset(unit_hexagon_cells))


@pytest.fixture(name="half_weighted_hexagon")
def half_weighted_hexagon_fixture(unit_hexagon_cells):
    """Return the unit hexagon with one horizontal lozenge weighing 1/2."""

    return Region(
        frozenset(unit_hexagon_cells),
        {lozenge(TriCell(0, 0), TriCell(0, 1)): Fraction(1, 2)},
    )


@pytest.fixture(name="missing_config")
def missing_config_fixture(tmp_path):
    """Return the path of a configuration file that does not exist."""

    return tmp_path / "missing.yaml"


@pytest.fixture(autouse=True)
def restore_root_logger():
    """Undo handler and level changes made by setup_logging."""

    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)

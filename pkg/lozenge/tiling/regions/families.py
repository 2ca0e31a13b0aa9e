"""Definitions of the region families."""

from __future__ import annotations

from enum import Enum
import logging
from typing import TYPE_CHECKING

from ..const import BUMP_WEIGHT, EAST, NORTHEAST, NORTHWEST, SOUTHEAST, SOUTHWEST, WEST
from ..exceptions import InvalidParameters
from ..helpers import require_non_negative
from ..lattice import ReducedRegion, TriCell, reduce_forced
from .base_class import BoundaryWalk, RegionBuilder

if TYPE_CHECKING:
    from collections.abc import Mapping

    from ..lattice import Region

LOG = logging.getLogger(__name__)


class RegionFamily(str, Enum):
    """Class to represent the region families."""

    hexagon = "hexagon"
    proctor = "proctor"
    r = "r"
    ddh = "ddh"


FAMILY_PARAMETERS: dict[RegionFamily, tuple[str, ...]] = {
    RegionFamily.hexagon: ("b", "c", "d"),
    RegionFamily.proctor: ("a", "b", "c"),
    RegionFamily.r: ("a", "k", "j", "x"),
    RegionFamily.ddh: ("b", "c", "k", "j"),
}

WEIGHTED_FAMILIES = frozenset({RegionFamily.proctor, RegionFamily.r})


def _zigzag(walk: BoundaryWalk, bumps: int) -> BoundaryWalk:
    """Climb north with bumps pairs of north-west and north-east steps."""

    for _ in range(bumps):
        walk = walk.then(NORTHWEST).then(NORTHEAST)
    return walk


def hexagon_walk(b: int, c: int, d: int) -> BoundaryWalk:
    """Return the boundary of the hexagon b, c, d, b, c, d starting north."""

    require_non_negative(b=b, c=c, d=d)
    return (
        BoundaryWalk()
        .then(EAST, b)
        .then(SOUTHEAST, c)
        .then(SOUTHWEST, d)
        .then(WEST, b)
        .then(NORTHWEST, c)
        .then(NORTHEAST, d)
    )


def build_hexagon(b: int, c: int, d: int) -> Region:
    """Build the hexagon with sides b, c, d, b, c, d clockwise from north."""

    return RegionBuilder(hexagon_walk(b, c, d)).build()


def proctor_region(a: int, b: int, c: int, weighted: bool = False) -> Region:
    """Build P_{a,b,c}: the hexagon c, a, b, c, a, b minus its maximal staircase.

    The west side is a zigzag of a bumps followed by a straight north-east
    run of length b - a. With weighted set, each bump lozenge weighs 1/2.
    """

    require_non_negative(a=a, b=b, c=c)
    if a > b:
        msg = f"Proctor region needs a <= b, got a={a}, b={b}"
        raise InvalidParameters(msg)

    walk = BoundaryWalk().then(EAST, c).then(SOUTHEAST, a).then(SOUTHWEST, b).then(WEST, c)
    builder = RegionBuilder(_zigzag(walk, a).then(NORTHEAST, b - a))

    if weighted:
        col = a - b
        for bump in range(a):
            top = a + b - 2 * bump - 2
            builder.weigh(TriCell(top, col), TriCell(top + 1, col), BUMP_WEIGHT)

    return builder.build()


def build_proctor(a: int, b: int, c: int, weighted: bool = False) -> Region:
    """Build the (weighted) Proctor region P_{a,b,c}."""

    return proctor_region(a, b, c, weighted)


def _check_r(a: int, k: int, j: int, x: int) -> None:
    require_non_negative(a=a, k=k, x=x)
    if not 1 <= j <= a + k + 1:
        msg = f"Defect position j={j} outside [1, {a + k + 1}]"
        raise InvalidParameters(msg)


def r_dents(a: int, k: int, j: int, x: int) -> frozenset[TriCell]:
    """Return the k north-east boundary cells removed after a gap of j - 1."""

    _check_r(a, k, j, x)
    return frozenset(TriCell(row, 2 * x + row) for row in range(j - 1, j + k - 1))


def r_region(a: int, k: int, j: int, x: int, weighted: bool = False) -> Region:
    """Build R_{a,k,j,x} before forced lozenges are removed."""

    _check_r(a, k, j, x)
    walk = (
        BoundaryWalk()
        .then(EAST, x)
        .then(SOUTHEAST, a + 2 * k)
        .then(SOUTHWEST, a)
        .then(WEST, x + k)
    )
    builder = RegionBuilder(_zigzag(walk, a + k))
    builder.remove(r_dents(a, k, j, x))

    if weighted:
        for bump in range(a + k):
            builder.weigh(TriCell(2 * bump, 0), TriCell(2 * bump + 1, 0), BUMP_WEIGHT)

    return builder.build()


def build_r(a: int, k: int, j: int, x: int, weighted: bool = False) -> ReducedRegion:
    """Build the reduced R_{a,k,j,x}, or R'_{a,k,j,x} when weighted."""

    return reduce_forced(r_region(a, k, j, x, weighted))


def _check_ddh(b: int, c: int, k: int, j: int) -> None:
    require_non_negative(b=b, c=c, k=k)
    if k > 0 and not 1 <= j <= c + k + 1:
        msg = f"Defect position j={j} outside [1, {c + k + 1}]"
        raise InvalidParameters(msg)


def ddh_dents(b: int, c: int, k: int, j: int) -> frozenset[TriCell]:
    """Return the north-east dents and their mirror images on the north-west side."""

    _check_ddh(b, c, k, j)
    east = {TriCell(row, 2 * b + row) for row in range(j - 1, j + k - 1)}
    return frozenset(east | {cell.mirror(b) for cell in east})


def ddh_region(b: int, c: int, k: int, j: int) -> Region:
    """Build DDH_{b,c,2k,j} before forced lozenges are removed.

    The hexagon has sides b, c+2k, c, b+2k, c, c+2k and is symmetric about
    the vertical line X = b.
    """

    _check_ddh(b, c, k, j)
    walk = (
        BoundaryWalk()
        .then(EAST, b)
        .then(SOUTHEAST, c + 2 * k)
        .then(SOUTHWEST, c)
        .then(WEST, b + 2 * k)
        .then(NORTHWEST, c)
        .then(NORTHEAST, c + 2 * k)
    )
    builder = RegionBuilder(walk)
    builder.remove(ddh_dents(b, c, k, j))
    return builder.build()


def build_ddh(b: int, c: int, k: int, j: int) -> ReducedRegion:
    """Build the reduced doubly-dented hexagon DDH_{b,c,2k,j}."""

    return reduce_forced(ddh_region(b, c, k, j))


def family_region(
    family: RegionFamily,
    params: Mapping[str, int],
    weighted: bool = False,
) -> Region:
    """Return the unreduced region of a family member."""

    if weighted and family not in WEIGHTED_FAMILIES:
        msg = f"Family {family.value} has no weighted variant"
        raise InvalidParameters(msg)

    values = [params[name] for name in FAMILY_PARAMETERS[family]]
    if family is RegionFamily.hexagon:
        return build_hexagon(*values)
    if family is RegionFamily.proctor:
        return proctor_region(*values, weighted=weighted)
    if family is RegionFamily.r:
        return r_region(*values, weighted=weighted)
    return ddh_region(*values)


def family_dents(family: RegionFamily, params: Mapping[str, int]) -> frozenset[TriCell]:
    """Return the cells removed from the boundary of a family member."""

    if family is RegionFamily.r:
        return r_dents(*(params[name] for name in FAMILY_PARAMETERS[family]))
    if family is RegionFamily.ddh:
        return ddh_dents(*(params[name] for name in FAMILY_PARAMETERS[family]))
    return frozenset()


def build_family(
    family: RegionFamily,
    params: Mapping[str, int],
    weighted: bool = False,
) -> ReducedRegion:
    """Return the reduced region of a family member."""

    reduced = reduce_forced(family_region(family, params, weighted))
    LOG.debug(
        "Family %s %s reduced to %d cells (prefactor %s)",
        family.value,
        dict(params),
        len(reduced.region),
        reduced.prefactor,
    )
    return reduced

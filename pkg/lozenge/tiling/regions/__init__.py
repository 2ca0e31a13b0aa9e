"""Expose submodules."""

from .base_class import BoundaryWalk, RegionBuilder
from .families import (
    FAMILY_PARAMETERS,
    WEIGHTED_FAMILIES,
    RegionFamily,
    build_ddh,
    build_family,
    build_hexagon,
    build_proctor,
    build_r,
    ddh_dents,
    ddh_region,
    family_dents,
    family_region,
    proctor_region,
    r_dents,
    r_region,
)

__all__ = [
    "BoundaryWalk",
    "FAMILY_PARAMETERS",
    "RegionBuilder",
    "RegionFamily",
    "WEIGHTED_FAMILIES",
    "build_ddh",
    "build_family",
    "build_hexagon",
    "build_proctor",
    "build_r",
    "ddh_dents",
    "ddh_region",
    "family_dents",
    "family_region",
    "proctor_region",
    "r_dents",
    "r_region",
]

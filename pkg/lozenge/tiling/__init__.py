"""Expose submodules."""

from . import closed_forms, const, engine, helpers, lattice, regions
from .closed_forms import DDHParams, HexParams, RParams
from .engine import DualGraph, Engine, count, dual_graph, split_check
from .exceptions import (
    FormulaDomainError,
    InvalidConfiguration,
    InvalidCut,
    InvalidParameters,
    InvalidRegion,
    NonIntegralValue,
    ResourceCapExceeded,
)
from .lattice import ReducedRegion, Region, TriCell
from .regions import RegionFamily

__all__ = [
    "DDHParams",
    "DualGraph",
    "Engine",
    "FormulaDomainError",
    "HexParams",
    "InvalidConfiguration",
    "InvalidCut",
    "InvalidParameters",
    "InvalidRegion",
    "NonIntegralValue",
    "RParams",
    "ReducedRegion",
    "Region",
    "RegionFamily",
    "ResourceCapExceeded",
    "TriCell",
    "closed_forms",
    "const",
    "count",
    "dual_graph",
    "engine",
    "helpers",
    "lattice",
    "regions",
    "split_check",
]

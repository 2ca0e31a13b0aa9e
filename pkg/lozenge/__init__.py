"""Exact enumeration of lozenge tilings."""

from . import tiling
from .cli import run
from .config import LozengeConfig, load_config
from .verifier import CheckResult, VerificationReport, run_suite

__all__ = [
    "CheckResult",
    "LozengeConfig",
    "VerificationReport",
    "load_config",
    "run",
    "run_suite",
    "tiling",
]

"""Command line interface of the lozenge tool."""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
import sys
from typing import TYPE_CHECKING, Any

import voluptuous as vol

from .config import LozengeConfig, load_config, setup_logging
from .const import (
    DEFAULT_CONFIG_PATH,
    DOMAIN,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_SKIPPED,
    EXIT_USAGE,
    KUO_MODE_ENGINE,
    KUO_MODES,
    OUTPUT_JSON,
    OUTPUT_FORMATS,
    OUTPUT_TEXT,
    SUITE_CROSS_CHECK,
)
from .diagnostics import report_to_json, report_to_table, value_to_dict
from .render import render_region
from .tiling.engine import Engine, count, dual_graph, first_matching
from .tiling.exceptions import (
    FormulaDomainError,
    InvalidConfiguration,
    InvalidParameters,
    InvalidRegion,
    NonIntegralValue,
    ResourceCapExceeded,
)
from .tiling.helpers import fraction_to_str
from .tiling.regions import FAMILY_PARAMETERS, RegionFamily, build_family, family_dents, family_region
from .verifier import SUITES, VerificationReport, family_formula, run_suite

if TYPE_CHECKING:
    from collections.abc import Sequence
    from fractions import Fraction

_LOGGER = logging.getLogger(__name__)

PARAMETER_NAMES = ("a", "b", "c", "d", "k", "j", "x")

RANGE_SCHEMA = vol.All(str, vol.Match(r"^-?\d+(:-?\d+)?$", msg="expected N or LO:HI"))

DOMAIN_ERRORS = (FormulaDomainError, InvalidParameters, InvalidRegion, NonIntegralValue)


def parse_range(text: str) -> list[int]:
    """Parse "N" or the inclusive range "LO:HI"."""

    lo, _, hi = RANGE_SCHEMA(text).partition(":")
    return list(range(int(lo), int(hi or lo) + 1))


def family_schema(family: RegionFamily) -> vol.Schema:
    """Return the schema of the single-valued parameters of a family."""

    schema: dict[Any, Any] = {}
    for name in FAMILY_PARAMETERS[family]:
        if family is RegionFamily.ddh and name == "j":
            schema[vol.Optional(name, default=1)] = vol.Coerce(int)
        else:
            schema[vol.Required(name)] = vol.Coerce(int)
    return vol.Schema(schema, extra=vol.REMOVE_EXTRA)


def _given(args: argparse.Namespace) -> dict[str, str]:
    return {name: value for name in PARAMETER_NAMES if (value := getattr(args, name)) is not None}


def _invalid_flag(err: vol.Invalid) -> str:
    flag = f"--{err.path[0]}" if err.path else "parameters"
    return f"{flag}: {err.msg}"


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output is None:
        print(text)
        return
    Path(args.output).write_text(text + "\n", encoding="utf-8")
    _LOGGER.info("Wrote %s", args.output)


def _value_output(args: argparse.Namespace, subject: str, params: dict[str, int], value: Fraction, **extra: Any) -> str:
    if args.format == OUTPUT_JSON:
        return json.dumps(value_to_dict(subject, params, value, **extra), indent=2)
    return fraction_to_str(value)


def _report_exit(report: VerificationReport, config: LozengeConfig) -> int:
    if not report.ok:
        return EXIT_FAILED
    if report.has_skips and config.fail_on_skip:
        return EXIT_SKIPPED
    return EXIT_OK


def _report_output(args: argparse.Namespace, report: VerificationReport) -> str:
    if args.format == OUTPUT_JSON:
        return report_to_json(report)
    return report_to_table(report)


def cmd_count(args: argparse.Namespace, config: LozengeConfig) -> int:
    """Build a region and count it with an engine."""

    family = RegionFamily(args.family)
    params = family_schema(family)(_given(args))
    engine = Engine(args.engine or config.engine)

    value = count(build_family(family, params, args.weighted), engine, config.brute_vertex_cap)
    _emit(
        args,
        _value_output(args, "count", params, value, family=family.value, engine=engine.value, weighted=args.weighted),
    )
    return EXIT_OK


def cmd_formula(args: argparse.Namespace, config: LozengeConfig) -> int:
    """Evaluate the closed form of a family member."""

    family = RegionFamily(args.family)
    params = family_schema(family)(_given(args))

    value = family_formula(family, params, args.weighted)
    _emit(args, _value_output(args, "formula", params, value, family=family.value, weighted=args.weighted))
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: LozengeConfig) -> int:
    """Draw a region as SVG, optionally with its first tiling."""

    family = RegionFamily(args.family)
    params = family_schema(family)(_given(args))
    region = family_region(family, params, args.weighted)

    tiling = None
    if args.tiling:
        if (tiling := first_matching(dual_graph(region), config.brute_vertex_cap)) is None:
            _LOGGER.warning("Region %s %s has no tiling to draw", family.value, params)

    _emit(args, render_region(region, family_dents(family, params), tiling))
    return EXIT_OK


def _grid(args: argparse.Namespace) -> dict[str, list[int]]:
    grid = {}
    for name, value in _given(args).items():
        try:
            grid[name] = parse_range(value)
        except vol.Invalid as err:
            raise vol.Invalid(err.msg, path=[name]) from err
    return grid


def cmd_verify(args: argparse.Namespace, config: LozengeConfig) -> int:
    """Run a named identity suite."""

    report = run_suite(
        args.suite,
        _grid(args),
        family=RegionFamily(args.family) if args.family else None,
        engine=Engine(args.engine or config.engine),
        weighted=args.weighted,
        mode=args.mode,
        brute_vertex_cap=config.brute_vertex_cap,
        dp_cell_cap=config.dp_cell_cap,
        workers=args.workers or config.workers,
    )
    _emit(args, _report_output(args, report))
    return _report_exit(report, config)


def cmd_sweep(args: argparse.Namespace, config: LozengeConfig) -> int:
    """Cross-check a family over a parameter grid."""

    report = run_suite(
        SUITE_CROSS_CHECK,
        _grid(args),
        family=RegionFamily(args.family),
        engine=Engine(args.engine or config.engine),
        weighted=args.weighted,
        brute_vertex_cap=config.brute_vertex_cap,
        dp_cell_cap=config.dp_cell_cap,
        workers=args.workers or config.workers,
    )
    _emit(args, _report_output(args, report))
    return _report_exit(report, config)


def _add_parameters(parser: argparse.ArgumentParser, ranges: bool) -> None:
    for name in PARAMETER_NAMES:
        parser.add_argument(
            f"--{name}",
            metavar="LO:HI" if ranges else "N",
            help=f"parameter {name}" + (" (value or inclusive range)" if ranges else ""),
        )


def _add_common(parser: argparse.ArgumentParser, family_required: bool = True) -> None:
    parser.add_argument(
        "--family",
        choices=[family.value for family in RegionFamily],
        required=family_required,
    )
    parser.add_argument("--weighted", action="store_true", help="use the weighted variant")
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")


def _add_engine(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--engine", choices=[engine.value for engine in Engine])


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=OUTPUT_TEXT)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser."""

    parser = argparse.ArgumentParser(prog=DOMAIN, description="Exact lozenge tiling enumeration")
    parser.add_argument("--config", type=Path, default=DEFAULT_CONFIG_PATH, help="YAML configuration")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    count_parser = commands.add_parser("count", help="count the tilings of a region")
    _add_common(count_parser)
    _add_parameters(count_parser, ranges=False)
    _add_engine(count_parser)
    _add_format(count_parser)
    count_parser.set_defaults(handler=cmd_count)

    formula_parser = commands.add_parser("formula", help="evaluate a closed form")
    _add_common(formula_parser)
    _add_parameters(formula_parser, ranges=False)
    _add_format(formula_parser)
    formula_parser.set_defaults(handler=cmd_formula)

    verify_parser = commands.add_parser("verify", help="run an identity suite")
    verify_parser.add_argument("--suite", choices=sorted(SUITES), required=True)
    verify_parser.add_argument("--mode", choices=KUO_MODES, default=KUO_MODE_ENGINE)
    verify_parser.add_argument("--workers", type=int)
    _add_common(verify_parser, family_required=False)
    _add_parameters(verify_parser, ranges=True)
    _add_engine(verify_parser)
    _add_format(verify_parser)
    verify_parser.set_defaults(handler=cmd_verify)

    render_parser = commands.add_parser("render", help="draw a region as SVG")
    render_parser.add_argument("--tiling", action="store_true", help="draw the first tiling found")
    _add_common(render_parser)
    _add_parameters(render_parser, ranges=False)
    render_parser.set_defaults(handler=cmd_render)

    sweep_parser = commands.add_parser("sweep", help="cross-check a family over a grid")
    sweep_parser.add_argument("--workers", type=int)
    _add_common(sweep_parser)
    _add_parameters(sweep_parser, ranges=True)
    _add_engine(sweep_parser)
    _add_format(sweep_parser)
    sweep_parser.set_defaults(handler=cmd_sweep)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run the tool and return its exit code."""

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE

    try:
        config = load_config(args.config)
    except InvalidConfiguration as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(config, args.verbose)

    try:
        return args.handler(args, config)
    except vol.Invalid as err:
        print(f"error: {_invalid_flag(err)}", file=sys.stderr)
    except DOMAIN_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
    except ResourceCapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SKIPPED
    return EXIT_USAGE


def main() -> None:
    """Entry point of the console script."""

    sys.exit(run())

"""Configuration loading for the lozenge tool."""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
from pathlib import Path
from typing import Any

import colorlog
import voluptuous as vol
import yaml

from .const import (
    CONF_BRUTE_VERTEX_CAP,
    CONF_DEFAULT,
    CONF_DP_CELL_CAP,
    CONF_ENGINE,
    CONF_FAIL_ON_SKIP,
    CONF_LOGGER,
    CONF_LOGS,
    CONF_VERIFY,
    CONF_WORKERS,
    DEFAULT_LOG_LEVEL,
    LOG_LEVELS,
)
from .tiling.const import DEFAULT_BRUTE_VERTEX_CAP, DEFAULT_DP_CELL_CAP
from .tiling.engine import Engine
from .tiling.exceptions import InvalidConfiguration

_LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(log_color)s%(asctime)s %(levelname)-8s%(reset)s %(name)s: %(message)s"

LEVEL_SCHEMA = vol.All(str, vol.Lower, vol.In(LOG_LEVELS))

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_LOGGER, default={}): vol.Schema(
            {
                vol.Optional(CONF_DEFAULT, default=DEFAULT_LOG_LEVEL): LEVEL_SCHEMA,
                vol.Optional(CONF_LOGS, default={}): {str: LEVEL_SCHEMA},
            },
        ),
        vol.Optional(CONF_ENGINE, default={}): vol.Schema(
            {
                vol.Optional(CONF_DEFAULT, default=Engine.dp.value): vol.In(
                    [engine.value for engine in Engine],
                ),
                vol.Optional(CONF_BRUTE_VERTEX_CAP, default=DEFAULT_BRUTE_VERTEX_CAP): vol.All(
                    vol.Coerce(int),
                    vol.Range(min=0),
                ),
                vol.Optional(CONF_DP_CELL_CAP, default=DEFAULT_DP_CELL_CAP): vol.All(
                    vol.Coerce(int),
                    vol.Range(min=0),
                ),
            },
        ),
        vol.Optional(CONF_VERIFY, default={}): vol.Schema(
            {
                vol.Optional(CONF_WORKERS, default=1): vol.All(vol.Coerce(int), vol.Range(min=1)),
                vol.Optional(CONF_FAIL_ON_SKIP, default=False): bool,
            },
        ),
    },
    extra=vol.ALLOW_EXTRA,
)


@dataclass
class LozengeConfig:
    """Class to represent the validated configuration."""

    log_default: str = DEFAULT_LOG_LEVEL
    log_levels: dict[str, str] = field(default_factory=dict)
    engine: Engine = Engine.dp
    brute_vertex_cap: int = DEFAULT_BRUTE_VERTEX_CAP
    dp_cell_cap: int = DEFAULT_DP_CELL_CAP
    workers: int = 1
    fail_on_skip: bool = False

    @classmethod
    def from_raw(cls, raw_data: dict[str, Any] | None) -> LozengeConfig:
        """Validate raw YAML data and build a configuration."""

        try:
            data = CONFIG_SCHEMA(raw_data or {})
        except vol.Invalid as err:
            msg = f"Invalid configuration: {err}"
            raise InvalidConfiguration(msg) from err

        return cls(
            log_default=data[CONF_LOGGER][CONF_DEFAULT],
            log_levels=dict(data[CONF_LOGGER][CONF_LOGS]),
            engine=Engine(data[CONF_ENGINE][CONF_DEFAULT]),
            brute_vertex_cap=data[CONF_ENGINE][CONF_BRUTE_VERTEX_CAP],
            dp_cell_cap=data[CONF_ENGINE][CONF_DP_CELL_CAP],
            workers=data[CONF_VERIFY][CONF_WORKERS],
            fail_on_skip=data[CONF_VERIFY][CONF_FAIL_ON_SKIP],
        )


def load_config(path: Path | None) -> LozengeConfig:
    """Load a YAML configuration file; a missing file gives the defaults."""

    if path is None or not path.is_file():
        _LOGGER.debug("No configuration at %s, using defaults", path)
        return LozengeConfig()

    try:
        raw_data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as err:
        msg = f"Cannot parse {path}: {err}"
        raise InvalidConfiguration(msg) from err

    if raw_data is not None and not isinstance(raw_data, dict):
        msg = f"Configuration in {path} must be a mapping"
        raise InvalidConfiguration(msg)
    return LozengeConfig.from_raw(raw_data)


def setup_logging(config: LozengeConfig, verbose: bool = False) -> None:
    """Install a colored console handler and apply per-logger levels."""

    handler = colorlog.StreamHandler()
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))

    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else config.log_default.upper())

    for name, level in config.log_levels.items():
        logging.getLogger(name).setLevel(level.upper())

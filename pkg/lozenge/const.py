"""Constants used by the lozenge command line tool."""

from pathlib import Path

DOMAIN = "lozenge"

DEFAULT_CONFIG_PATH = Path("config") / "configuration.yaml"

# Configuration keys
CONF_LOGGER = "logger"
CONF_DEFAULT = "default"
CONF_LOGS = "logs"
CONF_ENGINE = "engine"
CONF_BRUTE_VERTEX_CAP = "brute_vertex_cap"
CONF_DP_CELL_CAP = "dp_cell_cap"
CONF_VERIFY = "verify"
CONF_WORKERS = "workers"
CONF_FAIL_ON_SKIP = "fail_on_skip"

LOG_LEVELS = ["critical", "error", "warning", "info", "debug"]
DEFAULT_LOG_LEVEL = "warning"

OUTPUT_TEXT = "text"
OUTPUT_JSON = "json"
OUTPUT_FORMATS = [OUTPUT_TEXT, OUTPUT_JSON]

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SKIPPED = 3

# Suite names
SUITE_CROSS_CHECK = "cross_check"
SUITE_PROCTOR_IDENTITIES = "proctor_identities"
SUITE_THEOREM_FORMS = "theorem_forms"
SUITE_KUO = "kuo"
SUITE_KUO_REWRITE = "kuo_rewrite"
SUITE_STEP_RATIOS = "step_ratios"
SUITE_SHIFT = "shift"
SUITE_K_ZERO = "k_zero"
SUITE_CLOSING_IDENTITY = "closing_identity"
SUITE_BASE_CASES = "base_cases"
SUITE_DDH = "ddh_factorization"
SUITE_SPLIT = "split"

KUO_MODE_ENGINE = "engine"
KUO_MODE_FORMULA = "formula"
KUO_MODE_BOTH = "both"
KUO_MODES = [KUO_MODE_ENGINE, KUO_MODE_FORMULA, KUO_MODE_BOTH]

# Default parameter grids
DEFAULT_GRIDS: dict[str, dict[str, range]] = {
    "hexagon": {"b": range(4), "c": range(4), "d": range(4)},
    "proctor": {"a": range(5), "b": range(5), "c": range(4)},
    "r": {"a": range(4), "k": range(3), "x": range(3)},
    "ddh": {"b": range(5), "c": range(1, 3), "k": range(3)},
    SUITE_PROCTOR_IDENTITIES: {"a": range(6), "c": range(5)},
    SUITE_THEOREM_FORMS: {"a": range(5), "k": range(4), "x": range(4)},
    SUITE_KUO: {"a": range(2, 4), "k": range(1, 3), "x": range(2)},
    SUITE_STEP_RATIOS: {"a": range(7), "k": range(5), "x": range(5)},
    SUITE_SHIFT: {"a": range(7), "k": range(5), "x": range(5)},
    SUITE_K_ZERO: {"a": range(7), "j": range(-2, 9), "x": range(5)},
    SUITE_CLOSING_IDENTITY: {"a": range(3, 9), "k": range(1, 5), "j": range(3, 9)},
    SUITE_BASE_CASES: {"k": range(5), "x": range(4)},
    SUITE_SPLIT: {"a": range(4), "k": range(1, 4), "x": range(3)},
}

# Formula mode of the Kuo suite reaches further than the engines can
KUO_FORMULA_GRID: dict[str, range] = {"a": range(2, 9), "k": range(1, 5), "x": range(5)}

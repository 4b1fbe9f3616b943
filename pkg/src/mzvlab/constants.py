"""Constants for mzvlab."""

from pathlib import Path

DATE_FORMAT = "%Y-%m-%d"
TIME_FORMAT = "%H:%M:%S"
DATETIME_FORMAT = f"{DATE_FORMAT}T{TIME_FORMAT}"

MODULE_PATH = Path(__file__).parent
SOURCE_PATH = MODULE_PATH.parent
PROJECT_PATH = SOURCE_PATH.parent

DATA_PATH = PROJECT_PATH / "data"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

PYPROJECT_PATH = PROJECT_PATH / "pyproject.toml"

CACHE_ENVNAME = "MZVLAB_CACHE"
DEFAULT_CACHE_PATH = DATA_PATH / "constants.jsonl"

DEFAULT_DIGITS = 40
DEFAULT_MAX_TERMS = 10**6
MIN_DIGITS = 10
MIN_MAX_TERMS = 10**3
GUARD_DIGITS = 5
BACKENDS = ("auto", "direct", "holder")
BOUND_KINDS = ("rigorous", "heuristic")

# extrapolation ladder for slowly convergent nested sums
LADDER_TOP = 2**13
LADDER_COLUMNS = 12
LADDER_RATIO = 1.5
LADDER_BOTTOM = 16
EXTRA_FIT_DIGITS = 20

TOL_HOLDER = "1e-20"
TOL_SERIES = "1e-8"
TOL_INTERIOR = "1e-5"
TOL_STRUCTURAL = "1e-25"

REPORT_FIELDS = (
    "id",
    "params",
    "lhs",
    "rhs",
    "abs_diff",
    "tolerance",
    "bound",
    "passed",
    "terms_used",
    "seconds",
)
REPORT_DIGITS = 20
REPORT_FORMATS = ("text", "json", "csv")
STATUSES = ("theorem", "cited", "conjecture")

from collections.abc import Generator
from pathlib import Path
from tempfile import TemporaryDirectory

from mpmath import mp, mpf
from pytest import FixtureRequest, fixture

from mzvlab.constants import (
    DATE_FORMAT,
    DATETIME_FORMAT,
    LOG_FORMAT,
    MODULE_PATH,
    PROJECT_PATH,
    PYPROJECT_PATH,
    SOURCE_PATH,
    TIME_FORMAT,
    TOL_HOLDER,
    TOL_INTERIOR,
    TOL_SERIES,
    TOL_STRUCTURAL,
)
from mzvlab.precision import PrecisionConfig
from mzvlab.words import clear_memo

CORE_PATHS = (
    MODULE_PATH,
    SOURCE_PATH,
    PROJECT_PATH,
    PYPROJECT_PATH,
)
CORE_STRINGS = (
    LOG_FORMAT,
    DATE_FORMAT,
    TIME_FORMAT,
    DATETIME_FORMAT,
    TOL_HOLDER,
    TOL_SERIES,
    TOL_INTERIOR,
    TOL_STRUCTURAL,
)


@fixture(scope="session", params=CORE_PATHS)
def core_path(request: FixtureRequest) -> Path:
    return request.param


@fixture(scope="session", params=CORE_STRINGS)
def core_string(request: FixtureRequest) -> str:
    return request.param


@fixture(scope="session")
def cfg() -> PrecisionConfig:
    return PrecisionConfig(digits=30)


@fixture(scope="session")
def direct_cfg() -> PrecisionConfig:
    return PrecisionConfig(digits=15, max_terms=20_000, backend="direct")


@fixture(scope="session")
def tight() -> mpf:
    """agreement expected from the word engine at 30 digits"""
    return mpf("1e-25")


@fixture(scope="session")
def consts(cfg: PrecisionConfig) -> dict[str, mpf]:
    with cfg.workdps():
        return {
            "pi": +mp.pi,
            "log2": +mp.ln2,
            "zeta3": mp.zeta(3),
            "zeta5": mp.zeta(5),
        }


@fixture(scope="session")
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory and return its path."""
    with TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@fixture(scope="function")
def cache_path(temp_dir: Path, request: FixtureRequest) -> Generator[Path, None, None]:
    path = temp_dir / f"{request.node.name}.jsonl"
    yield path
    path.unlink(missing_ok=True)


@fixture(scope="function")
def fresh_memo() -> Generator[None, None, None]:
    clear_memo()
    yield
    clear_memo()


@fixture(scope="session", autouse=True)
def session_dps() -> Generator[int, None, None]:
    """comparisons in tests run well above the precision under test"""
    before = mp.dps
    mp.dps = 45
    yield mp.dps
    mp.dps = before

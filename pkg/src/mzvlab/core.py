"""
This module provides the small set of helpers every other mzvlab module leans on:
type checking, environment variable handling, and the exception hierarchy raised
for bad indices, divergent requests, malformed expressions and unknown identities.

Key functionalities include:
- `isnone`, `istrue`: lenient parsing of flag-like strings.
- `chkenv`, `envcast`: read and convert environment variables.
- `chktype`: confirm an object's type, and that a path exists when asked to.
- `MZVError` and its subclasses, each carrying enough context for the CLI to
  print a structured message.
"""

from logging import getLogger
from os import getenv
from pathlib import Path
from typing import Any

logger = getLogger(__name__)


class MZVError(ValueError):
    """base class for every error mzvlab raises on purpose"""


class DomainError(MZVError):
    """input outside the domain of an operation"""


class DivergenceError(MZVError):
    """requested series does not converge"""

    def __init__(self, condition: str, message: str = None) -> None:
        self.condition = condition
        super().__init__(message or f"divergent request ({condition})")


class ParseError(MZVError):
    """expression text does not match the grammar"""

    def __init__(self, message: str, offset: int, text: str = None) -> None:
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class UnknownIdentityError(MZVError, KeyError):
    """catalog lookup miss"""

    def __init__(self, identity_id: str) -> None:
        self.identity_id = identity_id
        super().__init__(f"unknown identity {identity_id!r}")

    def __str__(self) -> str:
        return self.args[0]


def isnone(w: str) -> bool:
    """checks if input is None or empty string"""
    if isinstance(w, str):
        processed_str = w.strip().lower()
        return processed_str == "none" or len(processed_str) == 0
    return w is None


def istrue(w: str | int) -> bool:
    """checks if input is True or 1"""
    if isnone(w):
        return False
    if isinstance(w, bool):
        return w
    if isinstance(w, (int, float)):
        return bool(w)
    if isinstance(w, str):
        return w.strip().lower() in ("true", "t", "1", "yes", "y", "on")
    raise TypeError(f"input is {type(w)}, which is not supported")


def chktype(
    obj: object,
    type_: type | tuple[type, ...],
    mustexist: bool = True,
    nonempty: bool = False,
) -> object:
    """confirms correct type or raises error"""
    if not isinstance(obj, type_):
        raise TypeError(f"input is {type(obj)}, not {type_}")
    if isinstance(obj, Path) and mustexist and not obj.exists():
        raise FileNotFoundError(f"{obj} must exist but doesn't")
    if nonempty and len(obj) == 0:
        raise DomainError(f"{type(obj).__name__} must be nonempty")
    return obj


def envcast(val: str, astype: type, need: bool = False) -> Any:
    """converts environment text to specified type"""
    if not isinstance(astype, type):
        raise TypeError(f"astype must be type but is {type(astype)}")
    if isnone(val):
        if need:
            raise ValueError(f"input must be {astype}")
        return None
    if issubclass(astype, bool):
        return istrue(val)
    if issubclass(astype, Path):
        return Path(val).expanduser()
    return astype(val)


def chkenv(
    envname: str,
    need: bool = True,
    ifnull: Any = None,
    astype: type = None,
) -> Any:
    """gets/checks/converts environment variable"""
    val = getenv(envname)
    if isnone(val):
        if ifnull is not None:
            return ifnull
        if need:
            raise ValueError(envname)
        return None
    if astype is None:
        return val
    try:
        return envcast(val, astype, need=need)
    except (TypeError, ValueError) as e:
        raise DomainError(f"{envname}={val!r} is not a valid {astype.__name__}") from e

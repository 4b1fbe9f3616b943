"""
This module provides the small set of file helpers mzvlab needs: reading the
project manifest, writing reports, and maintaining the line-delimited JSON
constants cache.

Key functionalities include:
- `read_json`, `write_json`: one JSON document per file, indented by four.
- `read_jsonl`, `append_jsonl`: one JSON record per line, append-only.
- `read_toml`: the pyproject manifest, through tomllib.
"""

from collections.abc import Hashable, Iterable, Iterator
from json import JSONDecodeError, dumps
from json import loads as json_loads
from logging import getLogger
from pathlib import Path
try:
    from tomllib import loads as toml_loads
except ModuleNotFoundError:  # Python < 3.11
    from tomli import loads as toml_loads

from mzvlab.core import chktype

logger = getLogger(__name__)


def read_json(path: Path) -> dict[Hashable, str]:
    """reads json file"""
    chktype(path, Path, mustexist=True)
    return json_loads(path.read_text())


def write_json(dict_: dict | list, path: Path) -> Path:
    """writes dict or list to path"""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(dict_, indent=4) + "\n")
    return path


def read_toml(path: Path) -> dict[str, str]:
    """reads toml file"""
    chktype(path, Path, mustexist=True)
    return toml_loads(path.read_text())


def iter_jsonl(path: Path) -> Iterator[dict]:
    """yields one record per nonblank line, skipping lines that do not parse"""
    chktype(path, Path, mustexist=True)
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield json_loads(line)
        except JSONDecodeError:
            logger.warning("%s:%d is not valid json, skipped", path, lineno)


def read_jsonl(path: Path) -> list[dict]:
    """reads a jsonl file, an absent file reads as empty"""
    if not path.exists():
        return []
    return list(iter_jsonl(path))


def append_jsonl(records: Iterable[dict], path: Path) -> int:
    """appends records as single lines, returns how many were written"""
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [dumps(record, sort_keys=True) for record in records]
    if lines:
        with path.open("a") as f:
            f.write("\n".join(lines) + "\n")
    return len(lines)

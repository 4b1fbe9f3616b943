"""
Persistent constants cache for `mzvlab eval`.

One JSON record per line, keyed by the canonical expression string together
with the backend and term cap it was computed under. The file is only ever
appended to; when a key repeats, the last line wins. A stored value answers a
request only when it was computed with at least as many digits.
"""

from dataclasses import asdict, dataclass
from datetime import datetime
from logging import getLogger
from pathlib import Path

from mpmath import mpf

from mzvlab.constants import CACHE_ENVNAME, DATETIME_FORMAT, DEFAULT_CACHE_PATH
from mzvlab.core import chkenv
from mzvlab.files.utils import append_jsonl, read_jsonl
from mzvlab.precision import PrecisionConfig, ValueWithError, render

logger = getLogger(__name__)

CacheKey = tuple[str, str, int]


def default_cache_path() -> Path:
    return chkenv(CACHE_ENVNAME, need=False, ifnull=DEFAULT_CACHE_PATH, astype=Path)


def cache_key(key: str, cfg: PrecisionConfig) -> CacheKey:
    """values from different backends or term caps never share a slot"""
    return key, cfg.backend, cfg.max_terms


@dataclass(frozen=True, slots=True)
class CacheEntry:
    key: str
    backend: str
    max_terms: int
    digits: int
    value: str
    bound: str
    bound_kind: str
    terms: int
    timestamp: str

    @classmethod
    def from_value(
        cls, key: str, value: ValueWithError, cfg: PrecisionConfig
    ) -> "CacheEntry":
        return cls(
            key=key,
            backend=cfg.backend,
            max_terms=cfg.max_terms,
            digits=cfg.digits,
            value=render(value.value, cfg.dps),
            bound=render(value.bound, cfg.dps),
            bound_kind=value.bound_kind,
            terms=value.terms,
            timestamp=datetime.now().strftime(DATETIME_FORMAT),
        )

    @property
    def slot(self) -> CacheKey:
        return self.key, self.backend, self.max_terms

    def to_value(self, cfg: PrecisionConfig) -> ValueWithError:
        with cfg.workdps():
            return ValueWithError(
                mpf(self.value), mpf(self.bound), self.bound_kind, self.terms
            )


class ConstantsCache:
    """jsonl-backed map from canonical expression to its best known value"""

    def __init__(self, path: Path = None) -> None:
        self.path = Path(path) if path is not None else default_cache_path()
        self._entries: dict[CacheKey, CacheEntry] = None

    @property
    def entries(self) -> dict[CacheKey, CacheEntry]:
        if self._entries is None:
            self._entries = {}
            for record in read_jsonl(self.path):
                try:
                    entry = CacheEntry(**record)
                except TypeError:
                    logger.warning("%s: malformed cache record %r", self.path, record)
                    continue
                self._entries[entry.slot] = entry
            logger.debug("loaded %d cache entries from %s", len(self._entries), self.path)
        return self._entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, key: str, cfg: PrecisionConfig) -> ValueWithError | None:
        """the cached value when it was stored with at least cfg.digits digits"""
        entry = self.entries.get(cache_key(key, cfg))
        if entry is None or entry.digits < cfg.digits:
            logger.debug("cache miss for %s at %d digits", key, cfg.digits)
            return None
        logger.debug("cache hit for %s (%d digits stored)", key, entry.digits)
        return entry.to_value(cfg)

    def put(self, key: str, value: ValueWithError, cfg: PrecisionConfig) -> CacheEntry:
        entry = CacheEntry.from_value(key, value, cfg)
        append_jsonl([asdict(entry)], self.path)
        self.entries[entry.slot] = entry
        return entry

    def clear(self) -> int:
        """removes the cache file, returns how many entries it held"""
        count = len(self.entries)
        self.path.unlink(missing_ok=True)
        self._entries = {}
        return count

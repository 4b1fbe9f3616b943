"""
Iterated-integral words and the split-at-one-half MZV backend.

A word is a tuple over {0, 1}, letter 0 standing for dt/t and letter 1 for
dt/(1-t), read from the outermost integration variable inwards. An index
(k_1, ..., k_r) becomes 0^(k_1-1) 1 ... 0^(k_r-1) 1.

`z_half(w)` integrates a word from 0 to 1/2 by pushing power-series coefficients
through the letters (innermost first). `mzv_holder` splits the integral over
[0, 1] at 1/2, sending the upper piece back to [0, 1/2] with `tau`, so every
factor converges like 2^-n.
"""

from collections.abc import Sequence
from logging import getLogger
from math import ceil, log2
from threading import Lock

from mpmath import mpf

from mzvlab.core import DivergenceError, DomainError
from mzvlab.indices import Index, admissible
from mzvlab.precision import PrecisionConfig, ValueWithError

logger = getLogger(__name__)

Word = tuple[int, ...]

_MEMO: dict[tuple[Word, int], mpf] = {}
_MEMO_LOCK = Lock()


def word_str(w: Sequence[int]) -> str:
    return "".join(str(x) for x in w)


def _pattern(k: Sequence[int]) -> Word:
    """0^(k_j-1) 1 per part, without any admissibility check"""
    letters: list[int] = []
    for part in k:
        letters.extend([0] * (part - 1))
        letters.append(1)
    return tuple(letters)


def index_to_word(k: Sequence[int]) -> Word:
    """encodes an admissible index as a word"""
    k = Index(k)
    if not k or not admissible(k):
        raise DomainError(f"index {k} is empty or not admissible")
    return _pattern(k)


def word_to_index(w: Sequence[int]) -> Index:
    """decodes a word starting with 0 and ending with 1"""
    w = tuple(w)
    if not w or w[0] != 0 or w[-1] != 1 or any(x not in (0, 1) for x in w):
        raise DomainError(f"malformed MZV word {word_str(w)!r}")
    parts, run = [], 1
    for letter in w:
        if letter == 0:
            run += 1
        else:
            parts.append(run)
            run = 1
    return Index(parts)


def tau(w: Sequence[int]) -> Word:
    """reverses the word and swaps 0 and 1"""
    return tuple(1 - x for x in reversed(w))


def dual_index(k: Sequence[int]) -> Index:
    """returns the index whose MZV equals zeta(k) by the t -> 1-t symmetry"""
    return word_to_index(tau(index_to_word(k)))


def series_terms(dps: int) -> int:
    """number of power-series terms for a 2^-n tail below 10^-dps"""
    return ceil(dps * log2(10)) + 10


def _z_half_uncached(w: Word, nterms: int) -> mpf:
    coeffs = [mpf(0)] * (nterms + 1)
    coeffs[0] = mpf(1)
    for letter in reversed(w):
        if letter == 1:
            running = mpf(0)
            nxt = [mpf(0)] * (nterms + 1)
            for n in range(1, nterms + 1):
                running += coeffs[n - 1]
                nxt[n] = running / n
            coeffs = nxt
        else:
            coeffs = [mpf(0)] + [coeffs[n] / n for n in range(1, nterms + 1)]
    total, power = mpf(0), mpf(1)
    half = mpf(1) / 2
    for c in coeffs:
        total += c * power
        power *= half
    return total


def z_half(w: Sequence[int], cfg: PrecisionConfig) -> mpf:
    """integrates the word from 0 to 1/2"""
    w = tuple(w)
    if not w:
        return mpf(1)
    if w[-1] != 1:
        raise DivergenceError(
            "trailing-zero-word", f"word {word_str(w)} ends with dt/t at 0"
        )
    key = (w, cfg.dps)
    with _MEMO_LOCK:
        hit = _MEMO.get(key)
    if hit is not None:
        return hit
    with cfg.workdps():
        value = _z_half_uncached(w, series_terms(cfg.dps))
    with _MEMO_LOCK:
        _MEMO.setdefault(key, value)
    return value


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def mzv_holder(k: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """zeta(k) as a sum of products of half-interval integrals"""
    k = Index(k)
    if not k:
        raise DomainError("mzv_holder needs a nonempty index")
    if not admissible(k):
        raise DivergenceError("non-admissible", f"zeta({k}) diverges")
    w = index_to_word(k)
    with cfg.workdps():
        total = mpf(0)
        for j in range(len(w) + 1):
            prefix, suffix = tau(w[:j]), w[j:]
            assert not prefix or prefix[-1] == 1
            assert not suffix or suffix[-1] == 1
            total += z_half(prefix, cfg) * z_half(suffix, cfg)
        bound = (len(w) + 1) * mpf(10) ** (3 - cfg.digits)
    logger.debug("zeta(%s) via %d convolution terms", k, len(w) + 1)
    return ValueWithError(+total, bound, "rigorous", len(w) * series_terms(cfg.dps))


def li_half(k: Sequence[int], cfg: PrecisionConfig) -> mpf:
    """Li_k(1/2) for any nonempty index"""
    k = Index(k)
    if not k:
        raise DomainError("li_half needs a nonempty index")
    return z_half(_pattern(k), cfg)

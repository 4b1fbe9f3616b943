"""
Summation of slowly convergent nested series.

Two strategies are provided on top of a plain truncated sum:

- `euler_transform` repeatedly averages the partial sums of an alternating
  series; the error shrinks like 2^-passes times a high difference of the terms.
- `accelerated_sum` records partial sums S(M) on a geometric ladder of even
  cutoffs and fits S(M) = S + sum c_ij M^-(a0+i) log^j M by solving a square
  linear system. The leading tail exponent a0 and the log power d come from
  the shape of the nested sum (see `TailShape`).

Rigorous tails for the direct MZV and central-binomial series use the integral
comparison sum_{n>N} f(n) <= int_N^inf f with f(t) = (1+log t)^r t^-s, which
closes in terms of the upper incomplete gamma function.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from logging import getLogger
from math import ceil

from mpmath import mp, mpf

from mzvlab.constants import (
    EXTRA_FIT_DIGITS,
    LADDER_BOTTOM,
    LADDER_COLUMNS,
    LADDER_RATIO,
    LADDER_TOP,
)
from mzvlab.core import DomainError
from mzvlab.maths import get_list_mids
from mzvlab.precision import PrecisionConfig, ValueWithError, as_mpf

logger = getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TailShape:
    """asymptotic form of a tail: M^-a0 times a polynomial of degree d in log M"""

    a0: object
    logs: int = 0

    def __post_init__(self) -> None:
        if as_mpf(self.a0) <= 0:
            raise DomainError(f"tail exponent must be positive, got {self.a0}")
        if self.logs < 0:
            raise DomainError("log power must be nonnegative")

    @property
    def rows(self) -> int:
        """number of exponent steps a0, a0+1, ... used in the fit"""
        return max(3, LADDER_COLUMNS // (self.logs + 1))

    @property
    def columns(self) -> int:
        return 1 + self.rows * (self.logs + 1)


def ladder_nodes(top: int, count: int) -> list[int]:
    """returns `count` distinct even cutoffs, geometric, ending at top"""
    if top < 2 * count:
        raise DomainError(f"cannot place {count} ladder nodes below {top}")
    ratio = min(LADDER_RATIO, (top / LADDER_BOTTOM) ** (1 / count))
    nodes: set[int] = set()
    position = float(top)
    while len(nodes) < count and position >= 2:
        node = int(round(position / 2)) * 2
        if node >= 2:
            nodes.add(node)
        position /= ratio
    if len(nodes) < count:
        nodes.update(range(2, 2 * count + 2, 2))
    return sorted(nodes)[-count:]


def _basis(cutoff: int, shape: TailShape, rows: int) -> list[mpf]:
    m = mpf(cutoff)
    logm = mp.log(m)
    a0 = as_mpf(shape.a0)
    row = [mpf(1)]
    for i in range(rows):
        power = m ** -(a0 + i)
        for j in range(shape.logs + 1):
            row.append(power * logm**j)
    return row


def richardson_limit(
    nodes: list[int], sums: list[mpf], shape: TailShape, rows: int
) -> mpf:
    """solves for the constant term using the last nodes that fit the basis"""
    width = 1 + rows * (shape.logs + 1)
    nodes, sums = nodes[-width:], sums[-width:]
    if len(nodes) < width:
        raise DomainError(f"need {width} ladder nodes, have {len(nodes)}")
    matrix = mp.matrix([_basis(m, shape, rows) for m in nodes])
    solution = mp.lu_solve(matrix, mp.matrix(sums))
    return solution[0]


def accelerated_sum(
    terms: Iterable, shape: TailShape, cfg: PrecisionConfig
) -> ValueWithError:
    """sum_{n>=1} terms[n-1] by ladder extrapolation of its partial sums"""
    top = min(cfg.max_terms, LADDER_TOP)
    nodes = ladder_nodes(top, shape.columns)
    marks = set(nodes)
    sums: list[mpf] = []
    with cfg.workdps(EXTRA_FIT_DIGITS):
        total = mpf(0)
        for n, term in enumerate(terms, start=1):
            total += term
            if n in marks:
                sums.append(+total)
            if n >= top:
                break
        if len(sums) < len(nodes):
            raise DomainError("term stream ended before the ladder was filled")
        full = richardson_limit(nodes, sums, shape, shape.rows)
        reduced = richardson_limit(nodes, sums, shape, shape.rows - 1)
        error = abs(full - reduced)
    logger.debug(
        "ladder fit a0=%s logs=%d nodes=%d top=%d err=%s",
        shape.a0,
        shape.logs,
        len(nodes),
        top,
        mp.nstr(error, 3),
    )
    return ValueWithError(+full, +error, "heuristic", top)


def plain_sum(
    terms: Iterable, shape: TailShape, cfg: PrecisionConfig
) -> ValueWithError:
    """truncated sum to max_terms with a two-cutoff tail estimate"""
    top = cfg.max_terms - cfg.max_terms % 2
    half = top // 2 - (top // 2) % 2
    with cfg.workdps():
        total, at_half = mpf(0), mpf(0)
        for n, term in enumerate(terms, start=1):
            total += term
            if n == half:
                at_half = +total
            if n >= top:
                break
        factor = mpf(2) ** as_mpf(shape.a0) - 1
        estimate = 2 * abs(total - at_half) / factor
    logger.debug("plain sum to %d, tail estimate %s", top, mp.nstr(estimate, 3))
    return ValueWithError(+total, +estimate, "heuristic", top)


def euler_transform(terms: Iterable, cfg: PrecisionConfig) -> ValueWithError:
    """sums an alternating series by iterated averaging of 4P partial sums"""
    count = 4 * cfg.dps
    passes = min(ceil(1.7 * cfg.dps), count - 2)
    with cfg.workdps(EXTRA_FIT_DIGITS):
        sums, total = [], mpf(0)
        for n, term in enumerate(terms, start=1):
            total += term
            sums.append(+total)
            if n >= count:
                break
        for _ in range(passes):
            sums = get_list_mids(sums)
        value, error = sums[-1], abs(sums[-1] - sums[-2])
    logger.debug("euler transform: %d sums, %d passes", count, passes)
    return ValueWithError(+value, +error, "heuristic", count)


def zeta_tail_bound(k1: int, depth: int, cutoff: int) -> mpf:
    """bounds sum_{n>N} zeta_{n-1}(k_2..k_r)/n^k1 for an admissible index"""
    s = mpf(k1) - 1
    if s <= 0:
        raise DomainError("tail bound needs k1 >= 2")
    u = s * (1 + mp.log(cutoff))
    return (
        mp.e**s * s**-depth * mp.gammainc(depth, u) / mp.factorial(depth - 1)
    )


def binomial_tail_bound(k1: int, inner_depth: int, cutoff: int) -> mpf:
    """bounds sum_{n>N} C(2n,n) 4^-n n^-k1 zeta*_n(k_2..k_r)"""
    s = mpf(k1) - mpf(1) / 2
    u = s * (1 + mp.log(cutoff))
    power = inner_depth + 1
    return mp.e**s * s**-power * mp.gammainc(power, u) / mp.sqrt(mp.pi)

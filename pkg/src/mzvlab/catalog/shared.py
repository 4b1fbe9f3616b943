"""index builders and parameter grids shared by the identity families"""

from collections.abc import Iterator, Sequence
from itertools import product
from math import comb, prod
from typing import Any

from mzvlab.indices import Index, hoffman_dual, index_transform_mj, rev_slice_plus


def dual_mj(m: Sequence[int], j: int) -> Index:
    """m_j^v, the dual of (m_1, m_2+1, ..., m_j+1)"""
    return hoffman_dual(index_transform_mj(m, j))


def rev_plus(
    m: Sequence[int], i: int, j: int, extra: Sequence[int] = None
) -> Index:
    """(m_j+e_j+1, ..., m_i+e_i+1), empty when i > j"""
    if i > j:
        return Index()
    extra = (0,) * (j - i + 1) if extra is None else tuple(extra)
    return rev_slice_plus(m, i, j, [e + 1 for e in extra])


def bumped(m: Sequence[int], j: int) -> Index:
    """(m_p+1, ..., m_j+2, ..., m_1+1)"""
    extra = [0] * len(m)
    extra[j - 1] = 1
    return rev_plus(m, 1, len(m), extra)


def binomial_weight(m: Sequence[int], i: Sequence[int]) -> int:
    """prod C(m_l + i_l, i_l)"""
    return prod(comb(a + b, b) for a, b in zip(m, i, strict=True))


def mvectors(p: int, high: int, inner_low: int = 0) -> Iterator[tuple[int, ...]]:
    """m in N_0^p with 1 <= m_1, m_p <= high and inner_low <= m_j <= high"""
    ends = range(1, high + 1)
    inner = range(inner_low, high + 1)
    if p == 1:
        yield from ((x,) for x in ends)
        return
    for first, *middle, last in product(ends, *([inner] * (p - 2)), ends):
        yield (first, *middle, last)


def mvector_ends(params: dict[str, Any]) -> str | None:
    """constraint: m_1 >= 1 and m_p >= 1"""
    m = params["m"]
    if m[0] < 1 or m[-1] < 1:
        return f"m needs m_1 >= 1 and m_p >= 1, got {m}"
    return None


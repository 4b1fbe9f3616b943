"""
Relations between Kaneko-Yamamoto values, MZVs and multiple zeta star values.

Notation used throughout:
- m is an m-vector (m_1, ..., m_p) with m_1 >= 1 and m_j >= 0
- m_j^v is `dual_mj(m, j)`
- <-(m+1)_{i,j} is `rev_plus(m, i, j)`
- the index with m_j+2 in place of m_j+1 is `bumped(m, j)`
- ky(k, l) is zeta(k circled l*)

The x = 1/2 entries evaluate the single-parametric series on the left directly
and compare against polylogarithms at 1 - x on the right.
"""

from fractions import Fraction
from math import comb, factorial

from mpmath import mp

from mzvlab.catalog.base import Identity, Param, grid, register
from mzvlab.catalog.shared import (
    binomial_weight,
    bumped,
    dual_mj,
    mvector_ends,
    mvectors,
    rev_plus,
)
from mzvlab.constants import TOL_HOLDER, TOL_INTERIOR, TOL_SERIES
from mzvlab.indices import Index, compositions, ones, repeat
from mzvlab.precision import PrecisionConfig, ValueWithError, as_mpf
from mzvlab.series import (
    bell_zeta_sum,
    kyzv,
    kyzv_param,
    kyzv_series,
    mpl,
    mzv,
    zeta_star,
)

SMALL_MVECTORS = (*mvectors(1, 2), *mvectors(2, 2))
STAR_MVECTORS = (
    (1,),
    (2,),
    (1, 1),
    (1, 2),
    (2, 1),
    (2, 2),
    (1, 0, 1),
    (1, 1, 1),
    (2, 1, 1),
    (1, 1, 2),
    (1, 2, 1),
    (2, 0, 2),
)


def _k_ones(k: int, r: int) -> tuple[int, ...]:
    """(k, {1}_{r-1})"""
    return (k, *ones(r - 1))


def _one_two_one(a: int, b: int) -> tuple[int, ...]:
    """({1}_a, 2, {1}_b)"""
    return (*ones(a), 2, *ones(b))


def _alternating_ky(
    k: tuple[int, ...], m: tuple[int, ...], cfg: PrecisionConfig
) -> ValueWithError:
    """sum_j (-1)^{j+1} ky(k, (1, m_j^v)) zeta(<-(m+1)_{j+1,p})"""
    p = len(m)
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        term = kyzv(k, (1, *dual_mj(m, j)), cfg) * mzv(rev_plus(m, j + 1, p), cfg)
        total = total + term * (-1) ** (j + 1)
    return total


def _compositions_side(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, m = params["k"], params["r"], params["m"]
    p = len(m)
    total = ValueWithError.exact(0)
    for js in compositions(r, k):
        tail = tuple(j + 1 for j in js[:-1])
        for i in compositions(js[-1], p):
            total = total + mzv(rev_plus(m, 1, p, i) + tail, cfg) * binomial_weight(m, i)
    total = total * (-1) ** (k - 1)
    for j in range(k - 1):
        term = mzv(_k_ones(k - j, r), cfg) * mzv(rev_plus(m, 1, p) + ones(j), cfg)
        total = total + term * (-1) ** j
    return total


def _ky_side(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return _alternating_ky(_k_ones(params["k"], params["r"]), params["m"], cfg)


def _ky_one_two_one_side(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return _alternating_ky(_one_two_one(params["a"], params["b"]), params["m"], cfg)


def _one_two_one_zeta_side(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b, m = params["a"], params["b"], params["m"]
    p = len(m)
    total = ValueWithError.exact(0)
    for j in range(a + 1):
        inner = ValueWithError.exact(0)
        for i in compositions(a - j, p):
            inner = inner + mzv(rev_plus(m, 1, p, i), cfg) * binomial_weight(m, i)
        scale = (-1) ** j * comb(j + b + 1, j)
        total = total + mzv((j + b + 2,), cfg) * inner * scale
    for j in range(b + 2):
        inner = ValueWithError.exact(0)
        for i in compositions(b + 1 - j, p):
            index = rev_plus(m, 1, p, i) + (a + 1 + j,)
            inner = inner + mzv(index, cfg) * binomial_weight(m, i)
        total = total - inner * ((-1) ** a * comb(j + a, j))
    return total


def _star_side(params: dict, cfg: PrecisionConfig, head: tuple[int, ...]):
    """sum_j (-1)^{j+1} zeta(<-(m+1)_{j+1,p}) zeta*(head, m_j^v)"""
    m = params["m"]
    p = len(m)
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        star = zeta_star(head + dual_mj(m, j), cfg)
        total = total + mzv(rev_plus(m, j + 1, p), cfg) * star * (-1) ** (j + 1)
    return total


def _bumped_sum(m: tuple[int, ...], cfg: PrecisionConfig, tail=()) -> ValueWithError:
    """sum_j (m_j+1) zeta(bumped(m, j), tail)"""
    total = ValueWithError.exact(0)
    for j, mj in enumerate(m, start=1):
        total = total + mzv(bumped(m, j) + tail, cfg) * (mj + 1)
    return total


def _star_two(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return _star_side(params, cfg, (2,))


def _star_two_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return _bumped_sum(params["m"], cfg)


def _star_two_two_mixed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m = params["m"]
    p = len(m)
    total = ValueWithError.exact(0)
    zeta2 = mzv((2,), cfg)
    for j in range(1, p + 1):
        v = dual_mj(m, j)
        bracket = zeta2 * zeta_star((2, *v), cfg) - zeta_star((2, 2, *v), cfg)
        total = total + mzv(rev_plus(m, j + 1, p), cfg) * bracket * (-1) ** (j + 1)
    return total


def _star_two_two_mixed_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m = params["m"]
    full = rev_plus(m, 1, len(m))
    total = mzv((2,), cfg) * _bumped_sum(m, cfg) + _bumped_sum(m, cfg, (2,))
    total = total - mzv((3,), cfg) * mzv(full, cfg) * 2
    return total + mzv(full + (3,), cfg) * 2


def _star_two_two(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return _star_side(params, cfg, (2, 2))


def _star_two_two_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m = params["m"]
    full = rev_plus(m, 1, len(m))
    total = mzv((3,), cfg) * mzv(full, cfg) * 2 - mzv(full + (3,), cfg) * 2
    return total - _bumped_sum(m, cfg, (2,))


def _constant_block(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, p = params["m"], params["p"]
    total = ValueWithError.exact(0)
    for a in range(p):
        index = (*repeat((m + 1,), a), m + 2, *repeat((m + 1,), p - 1 - a))
        total = total + mzv(index, cfg)
    return total


def _constant_block_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, p = params["m"], params["p"]
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        term = mzv(((m + 1) * j + 1,), cfg) * mzv(repeat((m + 1,), p - j), cfg)
        total = total + term * (-1) ** (j + 1)
    return total


def _star_two_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return zeta_star((2, *ones(params["m"])), cfg)


def _star_two_ones_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m = params["m"]
    return mzv((m + 2,), cfg) * (m + 1)


def _star_two_two_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return zeta_star((2, 2, *ones(params["m"])), cfg)


def _star_two_two_ones_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m = params["m"]
    total = mzv((3, m + 1), cfg) * 2 + mzv((m + 4,), cfg) * 2
    return total - mzv((m + 2, 2), cfg) * (m + 1)


def _two_ones_blocks(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, n = params["m"], params["n"]
    return zeta_star(repeat((2, *ones(m - 1)), n) + (1,), cfg)


def _two_ones_blocks_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, n = params["m"], params["n"]
    return mzv(((m + 1) * n + 1,), cfg) * (m + 1)


def _twos_and_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b = params["a"], params["b"]
    return zeta_star((*repeat((2,), a), 1, *repeat((2,), b), 1), cfg)


def _twos_and_ones_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b = params["a"], params["b"]
    star = zeta_star((2 * a + 1, 2 * b + 1), cfg) * 4
    return star - mzv((2 * a + 2 * b + 2,), cfg) * 2


def _three_twos_one(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    p = params["p"]
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        star = zeta_star((3, *repeat((2,), j - 1), 1), cfg)
        total = total + star * mzv(repeat((2,), p - j), cfg) * (-1) ** (j + 1)
    return total


def _three_twos_one_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    p = params["p"]
    total = mzv((2,), cfg) * mzv(repeat((2,), p), cfg) - mzv(repeat((2,), p + 1), cfg)
    for a in range(p):
        index = (*repeat((2,), a), 3, *repeat((2,), p - 1 - a), 1)
        total = total - mzv(index, cfg) * 2
    return total


def _ones_with_two(m: int) -> Index:
    """({1}_m, 2, {1}_m)"""
    return Index(_one_two_one(m, m))


def _ones_ky_one_two_one(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return kyzv(ones(params["r"]), _ones_with_two(params["m"]), cfg)


def _pairs(r: int, m1: int, m2: int, cfg: PrecisionConfig) -> ValueWithError:
    """sum_{k1+k2=r, k_i >= 1} C(m1+k1,k1) C(m2+k2,k2) zeta(m1+k1+1) zeta(m2+k2+1)"""
    total = ValueWithError.exact(0)
    for k1, k2 in compositions(r, 2, minpart=1):
        term = mzv((m1 + k1 + 1,), cfg) * mzv((m2 + k2 + 1,), cfg)
        total = total + term * (comb(m1 + k1, k1) * comb(m2 + k2, k2))
    return total


def _ones_ky_one_two_one_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r, m = params["r"], params["m"]
    single = mzv((2 * m + r + 2,), cfg) * comb(2 * m + r + 1, r)
    return (single - _pairs(r, m, m, cfg)) / 2


def _ones_ky_two_twos(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r, m = params["r"], params["m"]
    l = (*ones(m), 2, *ones(m - 1), 2, *ones(m))
    return kyzv(ones(r), l, cfg)


def _ones_ky_two_twos_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r, m = params["r"], params["m"]
    total = mzv((3 * m + r + 3,), cfg) * Fraction(comb(3 * m + r + 2, r), 3)
    total = total - rev_pairs_half(r, m, cfg)
    triple = ValueWithError.exact(0)
    for ks in compositions(r, 3, minpart=1):
        term = ValueWithError.exact(1)
        for kk in ks:
            term = term * mzv((m + kk + 1,), cfg) * comb(m + kk, kk)
        triple = triple + term
    return total + triple / 6


def rev_pairs_half(r: int, m: int, cfg: PrecisionConfig) -> ValueWithError:
    """(1/2) sum C(m+k1,k1) C(2m+k2+1,k2) zeta(m+k1+1) zeta(2m+k2+2)"""
    return _pairs(r, m, 2 * m + 1, cfg) / 2


def _one_two_one_ky_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, b = params["m"], params["b"]
    return kyzv(_one_two_one(m, b), ones(m + 1), cfg)


def _one_two_one_ky_ones_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, b = params["m"], params["b"]
    total = ValueWithError.exact(0)
    for j in range(m):
        term = mzv((j + b + 2,), cfg) * mzv((2 * m + 1 - j,), cfg)
        total = total + term * ((-1) ** j * comb(j + b + 1, j) * comb(2 * m - j, m))
    sign = Fraction((-1) ** m, 2)
    total = total - _pairs(b + 1, m, m, cfg) * sign
    return total + mzv((2 * m + b + 3,), cfg) * (sign * comb(2 * m + b + 2, b + 1))


def _conjecture_ky(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r, m, p = params["r"], params["m"], params["p"]
    l = (1, *repeat((*ones(m - 1), 2), p - 1), *ones(m))
    return kyzv(ones(r), l, cfg)


def _conjecture_bell(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r, m, p = params["r"], params["m"], params["p"]
    return bell_zeta_sum(m, p, r, 1, cfg) * (-1) ** (p + 1)


def _ky_series(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return kyzv_series(params["k"], params["l"], cfg)


def _ky_special(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, l = Index(params["k"]), Index(params["l"])
    if l == (1,):
        return mzv((k.head + 1, *k.tail), cfg)
    return zeta_star((l.head + 1, *l.tail), cfg)


def _ky_special_shape(params: dict) -> str | None:
    if tuple(params["k"]) != (1,) and tuple(params["l"]) != (1,):
        return "one of k, l must be (1)"
    return None


def _parametric_terms(
    m: tuple[int, ...], total: int, log1, cfg: PrecisionConfig, y, tail=()
) -> ValueWithError:
    """
    sum over i_0 + ... + i_p = total of (-1)^i_0 log^i_0(1-x) / i_0!
    times prod C(m_l+i_l, i_l) Li_{<-(m+i+1)_{1,p}, tail}(1-x)
    """
    p = len(m)
    out = ValueWithError.exact(0)
    for i in compositions(total, p + 1):
        i0, rest = i[0], i[1:]
        scale = (-1) ** i0 * log1**i0 / factorial(i0) * binomial_weight(m, rest)
        out = out + mpl(rev_plus(m, 1, p, rest) + tail, y, cfg) * scale
    return out


def _reflected_ky(
    k: tuple[int, ...], m: tuple[int, ...], y, cfg: PrecisionConfig
) -> ValueWithError:
    """sum_j (-1)^{p-j} ky(k, (1, m_j^v)) Li_{<-(m+1)_{j+1,p}}(1-x)"""
    p = len(m)
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        term = kyzv(k, (1, *dual_mj(m, j)), cfg) * mpl(rev_plus(m, j + 1, p), y, cfg)
        total = total + term * (-1) ** (p - j)
    return total


def _param_k_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, m, x = params["k"], params["r"], params["m"], params["x"]
    return kyzv_param(_k_ones(k, r), (1, *dual_mj(m, len(m))), x, cfg)


def _param_k_ones_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, m, x = params["k"], params["r"], params["m"], params["x"]
    p, y = len(m), 1 - x
    log1 = mp.log(as_mpf(y))
    first = ValueWithError.exact(0)
    for js in compositions(r, k):
        tail = tuple(j + 1 for j in js[:-1])
        first = first + _parametric_terms(m, js[-1], log1, cfg, y, tail)
    second = ValueWithError.exact(0)
    for j in range(k - 1):
        li = mpl(rev_plus(m, 1, p) + ones(j), y, cfg)
        second = second + mzv(_k_ones(k - j, r), cfg) * li * (-1) ** j
    total = first * (-1) ** (p + k - 1) + second * (-1) ** p
    return total + _reflected_ky(_k_ones(k, r), m, y, cfg)


def _param_one_two_one(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b, m, x = params["a"], params["b"], params["m"], params["x"]
    return kyzv_param(_one_two_one(a, b), (1, *dual_mj(m, len(m))), x, cfg)


def _param_one_two_one_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b, m, x = params["a"], params["b"], params["m"], params["x"]
    p, y = len(m), 1 - x
    log1 = mp.log(as_mpf(y))
    first = ValueWithError.exact(0)
    for j in range(a + 1):
        zeta = mzv((j + b + 2,), cfg) * ((-1) ** j * comb(j + b + 1, j))
        first = first + zeta * _parametric_terms(m, a - j, log1, cfg, y)
    second = ValueWithError.exact(0)
    for j in range(b + 2):
        inner = _parametric_terms(m, b + 1 - j, log1, cfg, y, (a + 1 + j,))
        second = second + inner * comb(j + a, j)
    total = first * (-1) ** p - second * (-1) ** (a + p)
    return total + _reflected_ky(_one_two_one(a, b), m, y, cfg)


def _parametric_domain(params: dict) -> str | None:
    if not 0 < params["x"] < 1:
        return f"x must lie in (0, 1), got {params['x']}"
    if params["m"][0] < 1:
        return f"m needs m_1 >= 1, got {params['m']}"
    return None


register(
    Identity(
        id="EQ3.4",
        anchor="x = 0 relation between ky((k,{1}_{r-1}), (1, m_j^v)) and MZVs",
        params=(
            Param("k", low=1, high=4),
            Param("r", low=1, high=3),
            Param("m", "vector", low=0, high=3),
        ),
        lhs=_compositions_side,
        rhs=_ky_side,
        grid=grid(k=range(1, 4), r=range(1, 3), m=SMALL_MVECTORS),
        default_tolerance=TOL_SERIES,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="EC2",
        anchor="x = 0 relation between ky(({1}_a,2,{1}_b), (1, m_j^v)) and MZVs",
        params=(
            Param("a", low=1, high=3),
            Param("b", low=0, high=2),
            Param("m", "vector", low=0, high=3),
        ),
        lhs=_ky_one_two_one_side,
        rhs=_one_two_one_zeta_side,
        grid=grid(a=range(1, 3), b=range(2), m=SMALL_MVECTORS),
        default_tolerance=TOL_SERIES,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="EQ3.5",
        anchor="sum_j (-1)^{j+1} zeta(<-(m+1)_{j+1,p}) zeta*(2,m_j^v) = sum_j (m_j+1) zeta(bumped)",
        params=(Param("m", "vector", low=0, high=3),),
        lhs=_star_two,
        rhs=_star_two_closed,
        grid=grid(m=STAR_MVECTORS),
        default_tolerance=TOL_HOLDER,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="EQ3.5-CONST",
        anchor="sum_{a+b=p-1} zeta({m+1}_a,m+2,{m+1}_b) through Riemann zeta values",
        params=(Param("m", low=1, high=3), Param("p", low=1, high=4)),
        lhs=_constant_block,
        rhs=_constant_block_closed,
        grid=grid(m=range(1, 3), p=range(1, 4)),
        default_tolerance=TOL_HOLDER,
    )
)

register(
    Identity(
        id="EC3",
        anchor="zeta(2) zeta*(2,m_j^v) - zeta*(2,2,m_j^v) against MZVs",
        params=(Param("m", "vector", low=0, high=3),),
        lhs=_star_two_two_mixed,
        rhs=_star_two_two_mixed_closed,
        grid=grid(m=SMALL_MVECTORS),
        default_tolerance=TOL_HOLDER,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="ECD1",
        anchor="sum_j (-1)^{j+1} zeta(<-(m+1)_{j+1,p}) zeta*(2,2,m_j^v) against MZVs",
        params=(Param("m", "vector", low=0, high=3),),
        lhs=_star_two_two,
        rhs=_star_two_two_closed,
        grid=grid(m=SMALL_MVECTORS),
        default_tolerance=TOL_HOLDER,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="STAR-2-ONES",
        anchor="zeta*(2,{1}_m) = (m+1) zeta(m+2)",
        params=(Param("m", low=0, high=8),),
        lhs=_star_two_ones,
        rhs=_star_two_ones_closed,
        grid=grid(m=range(6)),
        default_tolerance=TOL_HOLDER,
    )
)

register(
    Identity(
        id="STAR-22-ONES",
        anchor="zeta*(2,2,{1}_m) = 2 zeta(3,m+1) + 2 zeta(m+4) - (m+1) zeta(m+2,2)",
        params=(Param("m", low=0, high=6),),
        lhs=_star_two_two_ones,
        rhs=_star_two_two_ones_closed,
        grid=grid(m=range(4)),
        default_tolerance=TOL_HOLDER,
    )
)

register(
    Identity(
        id="CITED-21-1",
        anchor="zeta*({2,{1}_{m-1}}_n, 1) = (m+1) zeta((m+1)n+1)",
        params=(Param("m", low=1, high=7), Param("n", low=1, high=8)),
        lhs=_two_ones_blocks,
        rhs=_two_ones_blocks_closed,
        grid=tuple(
            {"m": m, "n": n}
            for m in range(1, 4)
            for n in range(1, 9)
            if (m + 1) * n <= 8
        ),
        default_tolerance=TOL_HOLDER,
        status="cited",
    )
)

register(
    Identity(
        id="CITED-OZ",
        anchor="zeta*({2}_a,1,{2}_b,1) = 4 zeta*(2a+1,2b+1) - 2 zeta(2a+2b+2)",
        params=(Param("a", low=1, high=3), Param("b", low=1, high=3)),
        lhs=_twos_and_ones,
        rhs=_twos_and_ones_closed,
        grid=grid(a=range(1, 3), b=range(1, 3)),
        default_tolerance=TOL_HOLDER,
        status="cited",
    )
)

register(
    Identity(
        id="ZHAO-MIX",
        anchor="sum_j (-1)^{j+1} zeta*(3,{2}_{j-1},1) zeta({2}_{p-j}) against MZVs",
        params=(Param("p", low=1, high=4),),
        lhs=_three_twos_one,
        rhs=_three_twos_one_closed,
        grid=grid(p=range(1, 4)),
        default_tolerance=TOL_HOLDER,
    )
)

register(
    Identity(
        id="RC2",
        anchor="ky({1}_r, ({1}_m,2,{1}_m)) through Riemann zeta values",
        params=(Param("r", low=1, high=5), Param("m", low=1, high=3)),
        lhs=_ones_ky_one_two_one,
        rhs=_ones_ky_one_two_one_closed,
        grid=grid(r=range(1, 4), m=range(1, 3)),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="RC3",
        anchor="ky({1}_r, ({1}_m,2,{1}_{m-1},2,{1}_m)) through Riemann zeta values",
        params=(Param("r", low=1, high=5), Param("m", low=1, high=3)),
        lhs=_ones_ky_two_twos,
        rhs=_ones_ky_two_twos_closed,
        grid=grid(r=range(1, 4), m=range(1, 3)),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="EC5",
        anchor="ky(({1}_m,2,{1}_b), {1}_{m+1}) through Riemann zeta values",
        params=(Param("m", low=1, high=3), Param("b", low=0, high=3)),
        lhs=_one_two_one_ky_ones,
        rhs=_one_two_one_ky_ones_closed,
        grid=grid(m=range(1, 3), b=range(3)),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="CON-RC4",
        anchor="ky({1}_r, (1,{{1}_{m-1},2}_{p-1},{1}_m)) as a complete Bell sum",
        params=(
            Param("r", low=1, high=5),
            Param("m", low=1, high=3),
            Param("p", low=1, high=4),
        ),
        lhs=_conjecture_ky,
        rhs=_conjecture_bell,
        grid=grid(r=range(1, 4), m=range(1, 3), p=range(1, 4)),
        default_tolerance=TOL_SERIES,
        status="conjecture",
    )
)

register(
    Identity(
        id="KY-SPECIAL",
        anchor="ky(k, (1)) = zeta(k_1+1, k') and ky((1), l) = zeta*(l_1+1, l')",
        params=(Param("k", "vector", low=1, high=4), Param("l", "vector", low=1, high=4)),
        lhs=_ky_series,
        rhs=_ky_special,
        grid=tuple(
            {"k": k, "l": l}
            for k, l in (
                ((2,), (1,)),
                ((2, 1), (1,)),
                ((3, 1), (1,)),
                ((1,), (2,)),
                ((1,), (1, 1)),
                ((1,), (2, 1)),
                ((1,), (2, 1, 1)),
            )
        ),
        default_tolerance=TOL_SERIES,
        constraint=_ky_special_shape,
    )
)

register(
    Identity(
        id="COR3.2-X",
        anchor="parametric ky((k,{1}_{r-1}), (1, m_p^v); x) through Li at 1-x",
        params=(
            Param("k", low=1, high=4),
            Param("r", low=1, high=3),
            Param("m", "vector", low=0, high=3),
            Param("x", "point"),
        ),
        lhs=_param_k_ones,
        rhs=_param_k_ones_closed,
        grid=tuple(
            {"k": k, "r": r, "m": m, "x": Fraction(1, 2)}
            for k, r, m in (
                (1, 1, (1,)),
                (2, 1, (1,)),
                (1, 2, (2,)),
                (2, 2, (1, 1)),
                (3, 1, (1, 0)),
            )
        ),
        default_tolerance=TOL_INTERIOR,
        constraint=_parametric_domain,
    )
)

register(
    Identity(
        id="EC1-X",
        anchor="parametric ky(({1}_a,2,{1}_b), (1, m_p^v); x) through Li at 1-x",
        params=(
            Param("a", low=1, high=3),
            Param("b", low=0, high=2),
            Param("m", "vector", low=0, high=3),
            Param("x", "point"),
        ),
        lhs=_param_one_two_one,
        rhs=_param_one_two_one_closed,
        grid=tuple(
            {"a": a, "b": b, "m": m, "x": Fraction(1, 2)}
            for a, b, m in ((1, 0, (1,)), (2, 0, (1,)), (1, 1, (1, 1)))
        ),
        default_tolerance=TOL_INTERIOR,
        constraint=_parametric_domain,
    )
)

"""
Apery-type star values zeta*_B(k) = sum_n zeta*_n(k') C(2n,n) / (n^k_1 4^n).

The alternating side of each relation runs over every sign vector
(s_1, ..., s_q) with q = p + r and feeds Li the arguments
(s_q, s_q s_{q-1}, ..., s_2 s_1), one per slot, so each term is an
alternating MZV.
"""

from fractions import Fraction
from itertools import product

from mpmath import mp

from mzvlab.catalog.base import Identity, Param, grid, register
from mzvlab.catalog.shared import (
    binomial_weight,
    dual_mj,
    mvector_ends,
    rev_plus,
)
from mzvlab.constants import TOL_SERIES
from mzvlab.indices import Index, compositions, ones
from mzvlab.precision import PrecisionConfig, ValueWithError
from mzvlab.series import (
    amzv,
    gf_binomial,
    gf_binomial_h,
    gf_binomial_series,
    mpl,
    mpl_multi,
    mzbsv,
    mzbsv_hweighted,
    mzv,
)

GF_TERMS = 10**4
GF_TOLERANCE = "1e-10"
THEOREM_GRID = (
    {"m": (1,), "r": 0},
    {"m": (1,), "r": 1},
    {"m": (1, 1), "r": 0},
    {"m": (1, 1), "r": 1},
)


def sign_arguments(signs: tuple[int, ...]) -> tuple[int, ...]:
    """(s_q, s_q s_{q-1}, ..., s_2 s_1) for signs = (s_1, ..., s_q)"""
    q = len(signs)
    return (signs[-1], *(signs[i] * signs[i - 1] for i in range(q - 1, 0, -1)))


def _sign_sum(
    index: Index, depth: int, cfg: PrecisionConfig, weighted=False, tail=False
) -> ValueWithError:
    """
    sum over signs in {+-1}^depth of Li_index at the sign arguments, times s_1
    when weighted, with -s_1 appended as the last argument when tail
    """
    total = ValueWithError.exact(0)
    for signs in product((1, -1), repeat=depth):
        args = sign_arguments(signs)
        if tail:
            args = (*args, -signs[0])
        value = mpl_multi(index, args, cfg)
        total = total + (value * signs[0] if weighted else value)
    return total


def _log2(cfg: PrecisionConfig):
    with cfg.workdps():
        return +mp.ln2


def _leading_zeta_terms(
    m: tuple[int, ...], r: int, cfg: PrecisionConfig, head: tuple[int, ...]
) -> ValueWithError:
    """sum_{j=1}^r (-1)^{r-j} zeta(<-(m+1)_{1,p}, {1}_{r-j}) zeta*_B(j+head...)"""
    full = rev_plus(m, 1, len(m))
    total = ValueWithError.exact(0)
    for j in range(1, r + 1):
        b = mzbsv((j + head[0], *head[1:]), cfg)
        total = total + mzv(full + ones(r - j), cfg) * b * (-1) ** (r - j)
    return total


def _alternating_left(m, cfg, value) -> ValueWithError:
    """sum_j (-1)^{j-1} zeta(<-(m+1)_{j+1,p}) value(m_j^v)"""
    p = len(m)
    total = ValueWithError.exact(0)
    for j in range(1, p + 1):
        term = mzv(rev_plus(m, j + 1, p), cfg) * value(dual_mj(m, j))
        total = total + term * (-1) ** (j - 1)
    return total


def _star_binomial_left(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r = params["r"]
    return _alternating_left(
        params["m"], cfg, lambda v: mzbsv((r + 2, *v), cfg)
    )


def star_binomial_right(
    m: tuple[int, ...], r: int, cfg: PrecisionConfig
) -> ValueWithError:
    """alternating-MZV side of the zeta*_B(r+2, m_j^v) relation"""
    p, full = len(m), rev_plus(m, 1, len(m))
    scale = 2 ** (sum(m) + 1)
    total = _leading_zeta_terms(m, r, cfg, (1,))
    logs = _sign_sum(full + ones(r), p + r, cfg) * _log2(cfg)
    sign = (-1) ** r * scale
    total = total + logs * sign
    return total + _sign_sum(full + ones(r + 1), p + r, cfg, tail=True) * sign


def _star_binomial_right(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return star_binomial_right(params["m"], params["r"], cfg)


def _harmonic_binomial_left(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    r = params["r"]
    return _alternating_left(
        params["m"], cfg, lambda v: mzbsv_hweighted(v, r, cfg)
    )


def _harmonic_binomial_right(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, r = params["m"], params["r"]
    p, full = len(m), rev_plus(m, 1, len(m))
    scale = (-1) ** r * 2 ** (sum(m) + 1)
    total = _leading_zeta_terms(m, r, cfg, (0, 1))
    shifted = ValueWithError.exact(0)
    for extra in compositions(1, p + r):
        js, iis = extra[:p], extra[p:]
        index = rev_plus(m, 1, p, js) + tuple(i + 1 for i in reversed(iis))
        shifted = shifted + _sign_sum(index, p + r, cfg, weighted=True) * (
            binomial_weight(m, js)
        )
    total = total + shifted * scale
    logs = _sign_sum(full + ones(r), p + r, cfg, weighted=True) * _log2(cfg)
    total = total - logs * scale
    tails = _sign_sum(full + ones(r + 1), p + r, cfg, weighted=True, tail=True)
    return total - tails * scale


def _zb221(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzbsv((2, 2, 1), cfg)


def _zb221_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    total = mzv((5,), cfg) * Fraction(75, 8) - mzv((4,), cfg) * (4 * _log2(cfg))
    return total - mzv((2,), cfg) * mzv((3,), cfg) * 3


def _zb221_alternating(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    """zeta(2) zeta*_B(2,1) minus the left side at m=(1,1), both from their Li sides"""
    single = star_binomial_right((1,), 0, cfg)
    return mzv((2,), cfg) * single - star_binomial_right((1, 1), 0, cfg)


def _harmonic_square(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzbsv_hweighted((1,), 1, cfg)


def _harmonic_square_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    log2 = _log2(cfg)
    total = mpl((4,), Fraction(1, 2), cfg) * 32 - mzv((4,), cfg) * 14
    total = total + mzv((3,), cfg) * (7 * log2) - mzv((2,), cfg) * (8 * log2**2)
    return total + 4 * log2**4 / 3


def _gf_partial(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return gf_binomial_series(params["t"], GF_TERMS, cfg)


def _gf_closed(params: dict, cfg: PrecisionConfig):
    return gf_binomial(params["t"], cfg)


def _gf_h_partial(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return gf_binomial_series(params["t"], GF_TERMS, cfg, harmonic=True)


def _gf_h_closed(params: dict, cfg: PrecisionConfig):
    return gf_binomial_h(params["t"], cfg)


def _open_unit(params: dict) -> str | None:
    if not 0 < params["t"] < 1:
        return f"t must lie in (0, 1), got {params['t']}"
    return None


def _binomial_value(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzbsv(params["k"], cfg)


def _alternating_fit(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k = Index(params["k"])
    if k == (1,):
        return amzv((-1,), cfg) * -2
    if k == (2,):
        return mzv((2,), cfg) - amzv((-1,), cfg) ** 2 * 2
    return star_binomial_right((1,), k.head - 2, cfg)


def _fitted(params: dict) -> str | None:
    if tuple(params["k"]) not in ((1,), (2,), (2, 1), (3, 1)):
        return f"no alternating-MZV fit for k={params['k']}"
    return None


register(
    Identity(
        id="THM4.3",
        anchor="sum_j (-1)^{j-1} zeta(<-(m+1)_{j+1,p}) zeta*_B(r+2, m_j^v) through alternating MZVs",
        params=(Param("m", "vector", low=0, high=2), Param("r", low=0, high=2)),
        lhs=_star_binomial_left,
        rhs=_star_binomial_right,
        grid=THEOREM_GRID,
        default_tolerance=TOL_SERIES,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="THM4.4",
        anchor="sum_j (-1)^{j-1} zeta(<-(m+1)_{j+1,p}) sum_n zeta*_n(m_j^v) H_n C(2n,n)/(n^{r+1} 4^n) through alternating MZVs",
        params=(Param("m", "vector", low=0, high=2), Param("r", low=0, high=2)),
        lhs=_harmonic_binomial_left,
        rhs=_harmonic_binomial_right,
        grid=THEOREM_GRID,
        default_tolerance=TOL_SERIES,
        constraint=mvector_ends,
    )
)

register(
    Identity(
        id="GOLD-ZB221",
        anchor="zeta*_B(2,2,1) = 75/8 zeta(5) - 4 zeta(4) log 2 - 3 zeta(2) zeta(3)",
        params=(),
        lhs=_zb221,
        rhs=_zb221_closed,
        grid=({},),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="ZB221-AMZV",
        anchor="zeta*_B(2,2,1) = zeta(2) zeta*_B(2,1) - (left side at m=(1,1), r=0), in alternating MZVs",
        params=(),
        lhs=_zb221,
        rhs=_zb221_alternating,
        grid=({},),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="GOLD-HN2",
        anchor="sum_n H_n^2 C(2n,n)/(n^2 4^n) = 32 Li_4(1/2) - 14 zeta(4) + 7 zeta(3) log 2 - 8 zeta(2) log^2 2 + 4/3 log^4 2",
        params=(),
        lhs=_harmonic_square,
        rhs=_harmonic_square_closed,
        grid=({},),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="GF-1",
        anchor="sum_n C(2n,n) t^n / (4^n n) = 2 log(2 / (1 + sqrt(1-t)))",
        params=(Param("t", "point"),),
        lhs=_gf_partial,
        rhs=_gf_closed,
        grid=grid(t=(Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))),
        default_tolerance=GF_TOLERANCE,
        constraint=_open_unit,
    )
)

register(
    Identity(
        id="GF-2",
        anchor="sum_n H_n C(2n,n) t^n / 4^n = 2/sqrt(1-t) log((1 + sqrt(1-t)) / (2 sqrt(1-t)))",
        params=(Param("t", "point"),),
        lhs=_gf_h_partial,
        rhs=_gf_h_closed,
        grid=grid(t=(Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))),
        default_tolerance=GF_TOLERANCE,
        constraint=_open_unit,
    )
)

register(
    Identity(
        id="CON-ZB",
        anchor="zeta*_B(k) is a rational combination of alternating MZVs",
        params=(Param("k", "vector", low=1, high=4),),
        lhs=_binomial_value,
        rhs=_alternating_fit,
        grid=grid(k=((1,), (2,), (2, 1), (3, 1))),
        default_tolerance=TOL_SERIES,
        status="conjecture",
        constraint=_fitted,
    )
)

"""
Identities among multiple polylogarithms of one variable.

Each entry compares Li at an interior point with a combination of MZVs, powers
of log x and log(1-x), and polylogarithms at the reflected point 1-x.
"""

from fractions import Fraction
from math import comb, factorial

from mpmath import mp, mpf

from mzvlab.catalog.base import Identity, Param, grid, register
from mzvlab.constants import TOL_INTERIOR, TOL_SERIES
from mzvlab.indices import Index, compositions, ones
from mzvlab.precision import PrecisionConfig, ValueWithError, as_mpf
from mzvlab.series import mpl, mzv

HALF = Fraction(1, 2)


def _interior(params: dict) -> str | None:
    if not 0 < params["x"] < 1:
        return f"x must lie in (0, 1), got {params['x']}"
    return None


def _logs(x: Fraction) -> tuple[mpf, mpf]:
    return mp.log(as_mpf(x)), mp.log(as_mpf(1 - x))


def _li_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mpl(ones(params["r"]), params["x"], cfg)


def _li_ones_closed(params: dict, cfg: PrecisionConfig) -> mpf:
    r = params["r"]
    _, log1 = _logs(params["x"])
    return (-1) ** r * log1**r / factorial(r)


def _li_k_ones(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    """Li_{k,{1}_{r-1}}(x)"""
    return mpl((params["k"], *ones(params["r"] - 1)), params["x"], cfg)


def _reflection(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, x = params["k"], params["r"], params["x"]
    y = 1 - x
    log0, log1 = _logs(x)
    total = ValueWithError.exact(0)
    for j in range(1, k):
        inner = mzv((r + 1, *ones(j - 1)), cfg)
        for i in range(r):
            term = mpl((r + 1 - i, *ones(j - 1)), y, cfg)
            inner = inner - term * ((-1) ** i * log1**i / factorial(i))
        total = total + inner * (log0 ** (k - 1 - j) / factorial(k - 1 - j))
    corner = (-1) ** r * log0 ** (k - 1) * log1**r
    return total + corner / (factorial(k - 1) * factorial(r))


def _product_form(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, x = params["k"], params["r"], params["x"]
    y = 1 - x
    total = ValueWithError.exact(0)
    for js in compositions(r + k, k, minpart=1):
        left = mpl(ones(js[-1] - 1), x, cfg)
        total = total + left * mpl(js[:-1], y, cfg)
    total = total * (-1) ** (k - 1)
    for j in range(k - 1):
        zeta = mzv((k - j, *ones(r - 1)), cfg)
        total = total + zeta * mpl(ones(j), y, cfg) * (-1) ** j
    return total


def _reflected_sum(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, x = params["k"], params["r"], params["x"]
    total = ValueWithError.exact(0)
    for js in compositions(r + k, k - 1, minpart=1):
        total = total + mpl(js, 1 - x, cfg)
    return total * (-1) ** k


def _reflected_sum_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, r, x = params["k"], params["r"], params["x"]
    log0, _ = _logs(x)
    total = ValueWithError.exact(0)
    for j in range(1, k):
        li = mpl((r + 2, *ones(j - 1)), 1 - x, cfg)
        total = total + li * (log0 ** (k - 1 - j) / factorial(k - 1 - j))
    return total


def _one_two_one(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    """Li_{{1}_a,2,{1}_b}(1-x)"""
    a, b = params["a"], params["b"]
    return mpl((*ones(a), 2, *ones(b)), 1 - params["x"], cfg)


def _one_two_one_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    a, b, x = params["a"], params["b"], params["x"]
    y = 1 - x
    total = ValueWithError.exact(0)
    for j in range(a + 1):
        zeta = mzv((j + b + 2,), cfg) * ((-1) ** j * comb(j + b + 1, j))
        total = total + zeta * mpl(ones(a - j), y, cfg)
    tail = ValueWithError.exact(0)
    for j in range(b + 2):
        term = mpl(ones(b + 1 - j), y, cfg) * mpl((a + 1 + j,), x, cfg)
        tail = tail + term * comb(j + a, j)
    return total - tail * (-1) ** a


def _li_derivative(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, x = Index(params["k"]), params["x"]
    fine = cfg.with_(digits=2 * cfg.digits)
    with fine.workdps():
        # step must survive the precision mpl sets for itself
        step = mpf(10) ** -cfg.digits
        slope = mp.diff(lambda t: mpl(k, t, fine).value, as_mpf(x), h=step)
    return ValueWithError(+slope, mpf(10) ** (-cfg.digits // 2), "heuristic")


def _li_derivative_closed(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    k, x = Index(params["k"]), params["x"]
    if k.head > 1:
        return mpl((k.head - 1, *k.tail), x, cfg) / as_mpf(x)
    return mpl(k.tail, x, cfg) / as_mpf(1 - x)


register(
    Identity(
        id="LI-ONES",
        anchor="Li_{{1}_r}(x) = (-1)^r log^r(1-x) / r!",
        params=(Param("r", low=1, high=8), Param("x", "point")),
        lhs=_li_ones,
        rhs=_li_ones_closed,
        grid=grid(r=range(1, 6), x=(Fraction(1, 4), HALF)),
        default_tolerance=TOL_SERIES,
        constraint=_interior,
    )
)

register(
    Identity(
        id="EQ2.5",
        anchor="Li_{k,{1}_{r-1}}(x) through zeta values and Li at 1-x",
        params=(Param("k", low=1, high=6), Param("r", low=1, high=5), Param("x", "point")),
        lhs=_li_k_ones,
        rhs=_reflection,
        grid=grid(k=range(1, 5), r=range(1, 4), x=(HALF,)),
        default_tolerance=TOL_INTERIOR,
        constraint=_interior,
    )
)

register(
    Identity(
        id="EQ2.9",
        anchor="Li_{k,{1}_{r-1}}(x) as products Li_{{1}_j}(x) Li_j(1-x)",
        params=(Param("k", low=1, high=6), Param("r", low=1, high=5), Param("x", "point")),
        lhs=_li_k_ones,
        rhs=_product_form,
        grid=grid(k=range(1, 5), r=range(1, 4), x=(HALF,)),
        default_tolerance=TOL_INTERIOR,
        constraint=_interior,
    )
)

register(
    Identity(
        id="EQ2.10",
        anchor="sum of Li_j(1-x) over compositions of r+k into k-1 parts",
        params=(Param("k", low=1, high=6), Param("r", low=0, high=5), Param("x", "point")),
        lhs=_reflected_sum,
        rhs=_reflected_sum_closed,
        grid=grid(k=range(2, 5), r=range(0, 3), x=(HALF,)),
        default_tolerance=TOL_INTERIOR,
        constraint=_interior,
    )
)

register(
    Identity(
        id="EB1",
        anchor="Li_{{1}_a,2,{1}_b}(1-x) through zeta values and Li at x",
        params=(Param("a", low=0, high=4), Param("b", low=0, high=4), Param("x", "point")),
        lhs=_one_two_one,
        rhs=_one_two_one_closed,
        grid=grid(a=range(3), b=range(3), x=(HALF,)),
        default_tolerance=TOL_INTERIOR,
        constraint=_interior,
    )
)

register(
    Identity(
        id="LI-DERIV",
        anchor="d/dx Li_k(x) lowers k_1 or drops it",
        params=(Param("k", "vector", low=1, high=6), Param("x", "point")),
        lhs=_li_derivative,
        rhs=_li_derivative_closed,
        grid=grid(
            k=((2,), (1, 1), (3, 1), (1, 2), (2, 1, 1)),
            x=(Fraction(1, 4), Fraction(1, 3)),
        ),
        default_tolerance=TOL_INTERIOR,
        constraint=_interior,
    )
)

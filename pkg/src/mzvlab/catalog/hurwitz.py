"""multiple Hurwitz zeta values with constant blocks {m+1}_p"""

from fractions import Fraction
from math import factorial

from mzvlab.catalog.base import Identity, Param, grid, register
from mzvlab.constants import TOL_SERIES
from mzvlab.maths.bell import bell_complete
from mzvlab.precision import PrecisionConfig, ValueWithError
from mzvlab.series import (
    bell_zeta_sum,
    composition_mzv_sum,
    hurwitz_mzv,
    hurwitz_power_derivative,
)

SHIFTS = (Fraction(0), Fraction(1, 2))


def _block(m: int, p: int) -> tuple[int, ...]:
    return (m + 1,) * p


def _compositions(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, p, k = params["m"], params["p"], params["k"]
    return composition_mzv_sum((m,) * p, k, cfg)


def _taylor(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return hurwitz_power_derivative(params["m"], params["p"], params["k"], cfg)


def _bell_explicit(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return bell_zeta_sum(params["m"], params["p"], params["k"], 0, cfg)


def _hurwitz(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, p, a = params["m"], params["p"], params["a"]
    return hurwitz_mzv(_block(m, p), a, cfg)


def _newton_recurrence(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    """(-1)^{p-1}/p sum_i (-1)^i zeta_HZ((p-i)(m+1); a+1) zeta_HZ({m+1}_i; a+1)"""
    m, p, a = params["m"], params["p"], params["a"]
    total = ValueWithError.exact(0)
    for i in range(p):
        power = hurwitz_mzv(((p - i) * (m + 1),), a, cfg)
        total = total + power * hurwitz_mzv(_block(m, i), a, cfg) * (-1) ** i
    return total * Fraction((-1) ** (p - 1), p)


def _power_sums(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    m, p, a = params["m"], params["p"], params["a"]
    xs = [
        hurwitz_mzv((j * (m + 1),), a, cfg) * ((-1) ** (j - 1) * factorial(j - 1))
        for j in range(1, p + 1)
    ]
    return bell_complete(xs, one=ValueWithError.exact(1)) / factorial(p)


def _positive_m(params: dict) -> str | None:
    if params["m"] < 1:
        return f"m must be positive, got {params['m']}"
    return None


register(
    Identity(
        id="E3-E5",
        anchor="sum_{|i|=k} prod C(m+i_j,i_j) zeta({m+i_j+1}) = (-1)^k/k! d^k zeta_HZ({m+1}_p; a+1) at a=0",
        params=(
            Param("m", low=1, high=4),
            Param("p", low=1, high=5),
            Param("k", low=0, high=5),
        ),
        lhs=_compositions,
        rhs=_taylor,
        grid=grid(m=range(1, 3), p=range(1, 4), k=range(4)),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="E5-EXPLICIT",
        anchor="Taylor coefficient of zeta_HZ({m+1}_p; a+1) as an explicit c-partition sum",
        params=(
            Param("m", low=1, high=4),
            Param("p", low=1, high=5),
            Param("k", low=0, high=5),
        ),
        lhs=_bell_explicit,
        rhs=_taylor,
        grid=grid(m=range(1, 3), p=range(1, 4), k=range(4)),
        default_tolerance=TOL_SERIES,
    )
)

register(
    Identity(
        id="E6-REC",
        anchor="zeta_HZ({m+1}_p; a+1) through Newton's recurrence on power sums",
        params=(
            Param("m", low=1, high=3),
            Param("p", low=1, high=4),
            Param("a", "point"),
        ),
        lhs=_hurwitz,
        rhs=_newton_recurrence,
        grid=grid(m=range(1, 3), p=range(1, 4), a=SHIFTS),
        default_tolerance=TOL_SERIES,
        constraint=_positive_m,
    )
)

register(
    Identity(
        id="E9-BELL",
        anchor="zeta_HZ({m+1}_p; a+1) = Y_p(x_1..x_p)/p!, x_j = (-1)^{j-1}(j-1)! zeta_HZ(j(m+1); a+1)",
        params=(
            Param("m", low=1, high=3),
            Param("p", low=1, high=4),
            Param("a", "point"),
        ),
        lhs=_hurwitz,
        rhs=_power_sums,
        grid=grid(m=range(1, 3), p=range(1, 4), a=(Fraction(1, 2),)),
        default_tolerance=TOL_SERIES,
        constraint=_positive_m,
    )
)

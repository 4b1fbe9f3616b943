"""relations that hold for every index: duality, stuffle and star-sum derivatives"""

from fractions import Fraction

from mzvlab.catalog.base import Identity, Param, grid, register
from mzvlab.constants import TOL_STRUCTURAL
from mzvlab.indices import Index, admissible, admissible_indices, stuffle
from mzvlab.precision import PrecisionConfig, ValueWithError
from mzvlab.series import mhss, mzv, pmhss_poly, zeta_sum
from mzvlab.words import dual_index

STUFFLE_PAIRS = (
    ((2,), (2,)),
    ((2,), (3,)),
    ((3,), (2,)),
    ((2,), (2, 1)),
    ((2, 1), (2,)),
)


def _admissible_pair(params: dict) -> str | None:
    for name in params:
        if not admissible(params[name]):
            return f"{name}={params[name]} is not admissible"
    return None


def _zeta(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzv(params["k"], cfg)


def _dual_zeta(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzv(dual_index(params["k"]), cfg)


def _product(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return mzv(params["a"], cfg) * mzv(params["b"], cfg)


def _stuffled(params: dict, cfg: PrecisionConfig) -> ValueWithError:
    return zeta_sum(stuffle(params["a"], params["b"]), cfg)


def evaluate_poly(coeffs: list[Fraction], x: Fraction) -> Fraction:
    """Horner evaluation of sum c_t x^t"""
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def derivative(coeffs: list[Fraction]) -> list[Fraction]:
    return [t * c for t, c in enumerate(coeffs)][1:]


def _scaled_derivative(params: dict, cfg: PrecisionConfig) -> Fraction:
    """x P'(x) when m_p > 1, (1-x) P'(x) when m_p = 1"""
    n, m, x = params["n"], Index(params["m"]), params["x"]
    slope = evaluate_poly(derivative(pmhss_poly(n, m)), x)
    return slope * (x if m[-1] > 1 else 1 - x)


def _lowered(params: dict, cfg: PrecisionConfig) -> Fraction:
    n, m, x = params["n"], Index(params["m"]), params["x"]
    if m[-1] > 1:
        return evaluate_poly(pmhss_poly(n, (*m[:-1], m[-1] - 1)), x)
    return mhss(n, m[:-1]) - evaluate_poly(pmhss_poly(n, m[:-1]), x)


def _interior(params: dict) -> str | None:
    if not 0 < params["x"] < 1:
        return f"x must lie in (0, 1), got {params['x']}"
    return None


register(
    Identity(
        id="DUALITY",
        anchor="zeta(k) = zeta(k^dagger) under the t -> 1-t symmetry of the iterated integral",
        params=(Param("k", "vector", low=1, high=7),),
        lhs=_zeta,
        rhs=_dual_zeta,
        grid=grid(k=tuple(tuple(k) for k in admissible_indices(7))),
        default_tolerance=TOL_STRUCTURAL,
        constraint=_admissible_pair,
    )
)

register(
    Identity(
        id="STUFFLE",
        anchor="zeta(a) zeta(b) = zeta(a * b) for the quasi-shuffle product",
        params=(
            Param("a", "vector", low=1, high=5),
            Param("b", "vector", low=1, high=5),
        ),
        lhs=_product,
        rhs=_stuffled,
        grid=tuple({"a": a, "b": b} for a, b in STUFFLE_PAIRS),
        default_tolerance=TOL_STRUCTURAL,
        constraint=_admissible_pair,
    )
)

register(
    Identity(
        id="PMHSS-DERIV",
        anchor="d/dx zeta*_n(m; x) lowers m_p, or drops it with a 1/(1-x) factor when m_p = 1",
        params=(
            Param("n", low=1, high=200),
            Param("m", "vector", low=1, high=6),
            Param("x", "point"),
        ),
        lhs=_scaled_derivative,
        rhs=_lowered,
        grid=grid(
            n=(1, 5, 12),
            m=((1,), (2,), (1, 1), (2, 1), (1, 2), (3, 1, 2)),
            x=(Fraction(1, 3),),
        ),
        default_tolerance=TOL_STRUCTURAL,
        constraint=_interior,
    )
)

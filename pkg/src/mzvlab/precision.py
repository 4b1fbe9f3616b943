"""
Working-precision contract shared by every numeric module.

Reals are `mpmath.mpf` values evaluated under `PrecisionConfig.workdps()`, which
adds a few guard digits on top of the requested precision. Truncated series
return a `ValueWithError` that carries the value, a nonnegative error bound and
whether that bound was proved (rigorous) or estimated (heuristic).
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from logging import getLogger
from numbers import Rational
from typing import Any

from mpmath import mp, mpf

from mzvlab.constants import (
    BACKENDS,
    BOUND_KINDS,
    DEFAULT_DIGITS,
    DEFAULT_MAX_TERMS,
    GUARD_DIGITS,
    MIN_DIGITS,
    MIN_MAX_TERMS,
)
from mzvlab.core import DomainError, chkenv

logger = getLogger(__name__)


def as_mpf(x: Any) -> mpf:
    """converts int, Fraction, str or mpf to mpf at the current precision"""
    if isinstance(x, Fraction) or (
        isinstance(x, Rational) and not isinstance(x, int)
    ):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def parse_point(text: str | int | Fraction) -> Fraction:
    """parses '1/2', '0.25' or '-1' into an exact rational"""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"not a rational point: {text!r}") from e


def render(x: mpf, digits: int) -> str:
    """deterministic decimal rendering with `digits` significant digits"""
    if not isinstance(x, mpf):
        x = as_mpf(x)
    return mp.nstr(x, digits, strip_zeros=False)


@dataclass(frozen=True, slots=True)
class PrecisionConfig:
    """evaluation settings, read-only once built"""

    digits: int = DEFAULT_DIGITS
    max_terms: int = DEFAULT_MAX_TERMS
    backend: str = "auto"
    tolerance: str | None = None
    guard: int = GUARD_DIGITS

    def __post_init__(self) -> None:
        if self.digits < MIN_DIGITS:
            raise DomainError(f"digits must be >= {MIN_DIGITS}, got {self.digits}")
        if self.max_terms < MIN_MAX_TERMS:
            raise DomainError(
                f"max_terms must be >= {MIN_MAX_TERMS}, got {self.max_terms}"
            )
        if self.backend not in BACKENDS:
            raise DomainError(f"backend must be one of {BACKENDS}, got {self.backend}")
        if self.tolerance is not None and mpf(self.tolerance) <= 0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")

    @classmethod
    def from_env(cls, **overrides) -> "PrecisionConfig":
        """reads MZVLAB_DIGITS, MZVLAB_MAX_TERMS and MZVLAB_BACKEND"""
        values = {
            "digits": chkenv("MZVLAB_DIGITS", need=False, astype=int),
            "max_terms": chkenv("MZVLAB_MAX_TERMS", need=False, astype=int),
            "backend": chkenv("MZVLAB_BACKEND", need=False),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**{k: v for k, v in values.items() if v is not None})

    @property
    def dps(self) -> int:
        return self.digits + self.guard

    @property
    def eps(self) -> mpf:
        return mpf(10) ** (-self.digits)

    def workdps(self, extra: int = 0):
        """context manager running mpmath at digits + guard + extra"""
        return mp.workdps(self.dps + extra)

    def with_(self, **changes) -> "PrecisionConfig":
        return replace(self, **changes)

    def key(self) -> tuple[int, int, str]:
        return (self.digits, self.max_terms, self.backend)


@dataclass(frozen=True, slots=True)
class ValueWithError:
    """real value paired with a truncation-error bound"""

    value: mpf
    bound: mpf = field(default_factory=lambda: mpf(0))
    bound_kind: str = "rigorous"
    terms: int = 0

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise DomainError(f"error bound must be nonnegative, got {self.bound}")
        if self.bound_kind not in BOUND_KINDS:
            raise DomainError(f"unknown bound kind {self.bound_kind}")

    @classmethod
    def exact(cls, value: Any) -> "ValueWithError":
        return cls(as_mpf(value))

    @staticmethod
    def _coerce(other: Any) -> "ValueWithError":
        if isinstance(other, ValueWithError):
            return other
        return ValueWithError.exact(other)

    def _join(self, other: "ValueWithError", value: mpf, bound: mpf):
        kind = (
            "rigorous"
            if self.bound_kind == other.bound_kind == "rigorous"
            else "heuristic"
        )
        return ValueWithError(value, bound, kind, self.terms + other.terms)

    def __add__(self, other: Any) -> "ValueWithError":
        other = self._coerce(other)
        return self._join(other, self.value + other.value, self.bound + other.bound)

    __radd__ = __add__

    def __neg__(self) -> "ValueWithError":
        return ValueWithError(-self.value, self.bound, self.bound_kind, self.terms)

    def __sub__(self, other: Any) -> "ValueWithError":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "ValueWithError":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "ValueWithError":
        other = self._coerce(other)
        bound = (
            abs(self.value) * other.bound
            + abs(other.value) * self.bound
            + self.bound * other.bound
        )
        return self._join(other, self.value * other.value, bound)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "ValueWithError":
        if isinstance(other, ValueWithError):
            if other.bound >= abs(other.value):
                raise DomainError("division by a value indistinguishable from zero")
            value = self.value / other.value
            rel = self.bound / abs(other.value) + abs(value) * other.bound / (
                abs(other.value) - other.bound
            )
            return self._join(other, value, rel)
        divisor = as_mpf(other)
        return ValueWithError(
            self.value / divisor, self.bound / abs(divisor), self.bound_kind, self.terms
        )

    def __pow__(self, exponent: int) -> "ValueWithError":
        result = ValueWithError.exact(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __float__(self) -> float:
        return float(self.value)

    def render(self, digits: int) -> str:
        return f"{render(self.value, digits)} +/- {mp.nstr(self.bound, 3)}"


def fsum(values) -> ValueWithError:
    """sums ValueWithError or plain numbers"""
    total = ValueWithError.exact(0)
    for value in values:
        total = total + value
    return total


def fundamental_constants(cfg: PrecisionConfig) -> dict[str, mpf]:
    """returns pi and log 2 at the configured precision"""
    with cfg.workdps():
        return {"pi": +mp.pi, "log2": +mp.ln2}


def approx_equal(a: Any, b: Any, tol: Any) -> bool:
    """returns True iff |a - b| <= tol"""
    tol = as_mpf(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    return abs(as_mpf(a) - as_mpf(b)) <= tol

"""
Direct summation of every nested series mzvlab knows about.

Finite sums (multiple harmonic sums, star sums and the parametric star sum) are
computed by `HarmonicState`, which keeps one accumulator per index suffix so
that advancing n costs O(depth). Infinite sums feed those states into the
summation strategies of `mzvlab.maths.accel`:

- MZVs go through the word engine unless the direct backend is requested
- alternating values use the Euler transform at depth one and the ladder
  extrapolation otherwise
- Kaneko-Yamamoto values reduce exactly to MZVs, and keep their defining
  series for the direct backend
- central-binomial star values and Hurwitz sums use the ladder, with a
  rigorous tail on the direct path and Euler-Maclaurin at depth one
"""

from collections.abc import Generator, Sequence
from fractions import Fraction
from itertools import count
from logging import getLogger
from math import ceil, comb, factorial, log
from typing import Any

from mpmath import mp, mpf

from mzvlab.core import DivergenceError, DomainError
from mzvlab.indices import (
    FormalIndexSum,
    Index,
    SignedIndex,
    admissible,
    c_partitions,
    compositions,
    rev_slice_plus,
    star_expand,
    star_expand_signed,
    star_stuffle,
    stuffle,
)
from mzvlab.maths.accel import (
    TailShape,
    accelerated_sum,
    binomial_tail_bound,
    euler_transform,
    plain_sum,
    zeta_tail_bound,
)
from mzvlab.maths.bell import TruncatedSeries, bell_complete
from mzvlab.precision import PrecisionConfig, ValueWithError, as_mpf, parse_point
from mzvlab.words import li_half, mzv_holder

logger = getLogger(__name__)

KINDS = ("strict", "star", "star_param")
EXACT_PMHSS_LIMIT = 50


class HarmonicState:
    """
    suffix accumulators for zeta_n(k), zeta*_n(k) and zeta*_n(k; x)

    acc[j] holds the sum over the suffix k[j:], acc[depth] the empty sum (1, or
    x^n for the parametric kind). Slot j carries the weight z_j^t / (t+a)^k_j
    where z_j is the sign of a signed index (or a per-slot variable) and a is
    an optional shift for Hurwitz sums.
    """

    def __init__(
        self,
        parts: Sequence[int],
        kind: str = "strict",
        zs: Sequence[Any] = None,
        x: Any = None,
        shift: Any = 0,
        exact: bool = False,
    ) -> None:
        if kind not in KINDS:
            raise DomainError(f"kind must be one of {KINDS}, got {kind}")
        if kind == "star_param" and x is None:
            raise DomainError("star_param needs a point x")
        if isinstance(parts, SignedIndex):
            zs = parts.signs if zs is None else zs
            parts = parts.magnitudes
        self.parts = Index(parts)
        self.zs = tuple(zs) if zs is not None else (1,) * len(self.parts)
        if len(self.zs) != len(self.parts):
            raise DomainError("one variable per slot is required")
        self.kind = kind
        self.exact = exact
        self.n = 0
        if exact:
            self.x = None if x is None else Fraction(x)
            self.shift = Fraction(shift)
            self.zs = tuple(Fraction(z) for z in self.zs)
            one = Fraction(1)
        else:
            self.x = None if x is None else as_mpf(x)
            self.shift = as_mpf(shift)
            self.zs = tuple(as_mpf(z) for z in self.zs)
            one = mpf(1)
        self._zpow = [one] * len(self.parts)
        self.acc = [0 * one] * len(self.parts) + [one]

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def value(self) -> Any:
        return self.acc[0]

    def suffix(self, j: int) -> Any:
        return self.acc[j]

    def _weights(self, t: int) -> list:
        base = t + self.shift
        weights = []
        for j, part in enumerate(self.parts):
            self._zpow[j] = self._zpow[j] * self.zs[j]
            weights.append(self._zpow[j] / base**part)
        return weights

    def step(self) -> Any:
        """advances n by one and returns the new value"""
        self.n += 1
        t = self.n
        weights = self._weights(t)
        if self.kind == "strict":
            for j in range(self.depth):
                self.acc[j] = self.acc[j] + weights[j] * self.acc[j + 1]
            return self.acc[0]
        if self.kind == "star_param":
            self.acc[-1] = self.acc[-1] * self.x
        for j in reversed(range(self.depth)):
            self.acc[j] = self.acc[j] + weights[j] * self.acc[j + 1]
        return self.acc[0]


def harmonic_stream(
    k: Sequence[int],
    kind: str = "strict",
    x: Any = None,
    shift: Any = 0,
    exact: bool = False,
) -> Generator[Any]:
    """yields the value at n = 1, 2, 3, ..."""
    state = HarmonicState(k, kind=kind, x=x, shift=shift, exact=exact)
    while True:
        yield state.step()


def _finite(n: int, k: Sequence[int], kind: str, x: Any = None, exact=True) -> Any:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    state = HarmonicState(k, kind=kind, x=x, exact=exact)
    for _ in range(n):
        state.step()
    return state.value


def mhs(n: int, k: Sequence[int]) -> Fraction:
    """zeta_n(k), n >= n_1 > n_2 > ... > n_r >= 1"""
    return _finite(n, k, "strict")


def mhss(n: int, k: Sequence[int]) -> Fraction:
    """zeta*_n(k), n >= n_1 >= n_2 >= ... >= n_r >= 1"""
    return _finite(n, k, "star")


def pmhss(n: int, k: Sequence[int], x: Any, cfg: PrecisionConfig = None) -> Any:
    """zeta*_n(k; x) with x^{n_r} on the innermost slot, x^n when k is empty"""
    if isinstance(x, str):
        x = parse_point(x)
    exact = isinstance(x, (int, Fraction)) and n <= EXACT_PMHSS_LIMIT
    if abs(x) > 1:
        raise DomainError(f"pmhss needs |x| <= 1, got {x}")
    if exact:
        return _finite(n, k, "star_param", Fraction(x))
    if cfg is None:
        return _finite(n, k, "star_param", x, exact=False)
    with cfg.workdps():
        return _finite(n, k, "star_param", x, exact=False)


def pmhss_poly(n: int, m: Sequence[int]) -> list[Fraction]:
    """coefficients c_0..c_n of zeta*_n(m; x) as a polynomial in x"""
    m = Index(m)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    if not m:
        coeffs[n] = Fraction(1)
        return coeffs
    # layer[t] = sum over n >= n_1 >= ... >= n_j = t of the first j weights
    layer = [Fraction(0)] + [Fraction(1, t ** m[0]) for t in range(1, n + 1)]
    for part in m[1:]:
        nxt, running = [Fraction(0)] * (n + 1), Fraction(0)
        for t in range(n, 0, -1):
            running += layer[t]
            nxt[t] = running / t**part
        layer = nxt
    coeffs[1:] = layer[1:]
    return coeffs


def mzv_direct(k: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """partial sum to max_terms with the integral-comparison tail"""
    k = Index(k)
    if not k:
        raise DomainError("mzv_direct needs a nonempty index")
    if not admissible(k):
        raise DivergenceError("non-admissible", f"zeta({k}) diverges")
    cutoff = cfg.max_terms
    with cfg.workdps():
        state = HarmonicState(k.tail)
        total = mpf(0)
        for n in range(1, cutoff + 1):
            total += state.value / mpf(n) ** k.head
            state.step()
        bound = zeta_tail_bound(k.head, k.depth, cutoff)
    logger.debug("direct zeta(%s) to %d terms, tail %s", k, cutoff, mp.nstr(bound, 3))
    return ValueWithError(+total, bound, "rigorous", cutoff)


def mzv(k: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """zeta(k) on the configured backend"""
    k = Index(k)
    if not k:
        return ValueWithError.exact(1)
    if not admissible(k):
        raise DivergenceError("non-admissible", f"zeta({k}) diverges")
    if cfg.backend == "direct":
        return mzv_direct(k, cfg)
    return mzv_holder(k, cfg)


def zeta_star(k: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """zeta*(k) as the sum of zeta over the star expansion"""
    k = Index(k)
    if not k:
        return ValueWithError.exact(1)
    if not admissible(k):
        raise DivergenceError("non-admissible", f"zeta*({k}) diverges")
    return star_expand(k).apply(lambda i: mzv(i, cfg))


def zeta_sum(terms: FormalIndexSum, cfg: PrecisionConfig) -> ValueWithError:
    """evaluates a formal combination of unsigned indices"""
    return terms.apply(lambda i: mzv(i, cfg))


def _ones(parts: Sequence[int]) -> int:
    return sum(1 for x in parts if abs(x) == 1)


def _nested_terms(
    head: int,
    inner: HarmonicState,
    outer_z: Any = 1,
    shift: Any = 0,
) -> Generator[mpf]:
    """yields z^n (n+a)^-head zeta_{n-1}(inner) for n = 1, 2, ..."""
    z, power = as_mpf(outer_z), mpf(1)
    shift = as_mpf(shift)
    for n in count(1):
        power *= z
        yield inner.value * power / (n + shift) ** head
        inner.step()


def _sum_nested(terms, shape: TailShape, cfg: PrecisionConfig) -> ValueWithError:
    if cfg.backend == "direct":
        return plain_sum(terms, shape, cfg)
    return accelerated_sum(terms, shape, cfg)


def amzv(s: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """alternating MZV, negative parts are barred slots"""
    s = SignedIndex(s)
    if not s:
        return ValueWithError.exact(1)
    if not s.convergent:
        raise DivergenceError("signed-convergence", f"zeta({s}) diverges")
    if s.unsigned:
        return mzv(s.magnitudes, cfg)
    head, sign = abs(s[0]), s.signs[0]
    inner = SignedIndex(s[1:])
    if sign < 0 and inner.unsigned and cfg.backend != "direct":
        # a barred inner slot leaves a non-alternating remainder
        with cfg.workdps():
            terms = _nested_terms(head, HarmonicState(inner), outer_z=-1)
            return euler_transform(terms, cfg)
    a0 = head if sign < 0 else head - 1
    shape = TailShape(a0, _ones(inner))
    with cfg.workdps():
        terms = _nested_terms(head, HarmonicState(inner), outer_z=sign)
        return _sum_nested(terms, shape, cfg)


def amzsv(s: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """alternating star value through the signed star expansion"""
    s = SignedIndex(s)
    if not s:
        return ValueWithError.exact(1)
    if not s.convergent:
        raise DivergenceError("signed-convergence", f"zeta*({s}) diverges")
    return star_expand_signed(s).apply(lambda i: amzv(i, cfg))


def signs_to_signed_index(m: Sequence[int], xs: Sequence[Any]) -> SignedIndex:
    """maps Li_m(x_1..x_p) with every x_j = +-1 onto an alternating index"""
    m = Index(m)
    if len(m) != len(xs):
        raise DomainError("one argument per slot is required")
    signs = []
    for x in xs:
        if x not in (1, -1):
            raise DomainError(f"argument {x} is not a sign")
        signs.append(int(x))
    return SignedIndex.from_signs(m, signs)


def _geometric_cutoff(x: mpf, depth: int, cfg: PrecisionConfig) -> tuple[int, mpf]:
    """smallest N with a geometric tail below 10^-dps, capped at max_terms"""
    ax = abs(x)
    target = mpf(10) ** -(cfg.dps + 2)
    cutoff = ceil(cfg.dps * log(10) / -log(float(ax))) + 10
    while True:
        bound = (
            2 * ax ** (cutoff + 1) * (1 + mp.log(cutoff + 1)) ** (depth - 1) / (1 - ax)
        )
        if bound < target or cutoff >= cfg.max_terms:
            return min(cutoff, cfg.max_terms), bound
        cutoff = ceil(cutoff * 1.25) + 1


def mpl(k: Sequence[int], x: Any, cfg: PrecisionConfig) -> ValueWithError:
    """Li_k(x) = sum_{n_1 > ... > n_r} x^{n_1} / (n_1^k_1 ... n_r^k_r)"""
    k = Index(k)
    if not k:
        return ValueWithError.exact(1)
    if isinstance(x, (str, int)):
        x = parse_point(x)
    if abs(x) > 1:
        raise DomainError(f"mpl needs |x| <= 1, got {x}")
    if x == 1:
        if k.head == 1:
            raise DivergenceError("k1=1,x=1", f"Li_{k}(1) diverges")
        return mzv(k, cfg)
    if x == -1:
        return amzv(SignedIndex((-k.head, *k.tail)), cfg)
    if x == 0:
        return ValueWithError.exact(0)
    half = isinstance(x, Fraction) and x == Fraction(1, 2)
    if half and cfg.backend != "direct":
        value = li_half(k, cfg)
        return ValueWithError(value, mpf(10) ** (3 - cfg.digits), "rigorous")
    with cfg.workdps():
        point = as_mpf(x)
        cutoff, bound = _geometric_cutoff(point, k.depth, cfg)
        state = HarmonicState(k.tail)
        total, power = mpf(0), mpf(1)
        for n in range(1, cutoff + 1):
            power *= point
            total += state.value * power / mpf(n) ** k.head
            state.step()
    kind = "rigorous" if bound < mpf(10) ** -cfg.dps else "heuristic"
    return ValueWithError(+total, bound, kind, cutoff)


def mpl_multi(
    m: Sequence[int], xs: Sequence[Any], cfg: PrecisionConfig
) -> ValueWithError:
    """Li_m(x_1..x_p) = sum_{n_1 > ... > n_p} prod x_j^{n_j} / n_j^m_j"""
    m = Index(m)
    xs = [parse_point(x) for x in xs]
    if len(m) != len(xs):
        raise DomainError("one argument per slot is required")
    if not m:
        return ValueWithError.exact(1)
    if all(x in (1, -1) for x in xs):
        return amzv(signs_to_signed_index(m, xs), cfg)
    if any(abs(x) > Fraction(1, 2) for x in xs):
        raise DomainError("direct multi-variable sums need every |x_j| <= 1/2")
    with cfg.workdps():
        first = as_mpf(xs[0])
        if first == 0:
            return ValueWithError.exact(0)
        cutoff, bound = _geometric_cutoff(first, len(m), cfg)
        state = HarmonicState(m.tail, zs=xs[1:])
        total, power = mpf(0), mpf(1)
        for n in range(1, cutoff + 1):
            power *= first
            total += state.value * power / mpf(n) ** m.head
            state.step()
    return ValueWithError(+total, bound, "heuristic", cutoff)


def kyzv_reduction(k: Sequence[int], l: Sequence[int]) -> FormalIndexSum:
    """zeta(k circled l*) as a combination of MZV indices"""
    k, l = Index(k), Index(l)
    if not k or not l:
        raise DomainError("Kaneko-Yamamoto values need nonempty k and l")
    out = FormalIndexSum()
    for u, cu in star_expand(l).items():
        inner = stuffle(k.tail, u.tail).prepend(k.head + u.head)
        out = out + inner.scale(cu)
    return out


def kyzv_series(
    k: Sequence[int], l: Sequence[int], cfg: PrecisionConfig, x: Any = None
) -> ValueWithError:
    """sum_n zeta_{n-1}(k') zeta*_n(l'[; x]) / n^{k_1 + l_1} summed term by term"""
    k, l = Index(k), Index(l)
    if not k or not l:
        raise DomainError("Kaneko-Yamamoto values need nonempty k and l")
    weight = k.head + l.head
    if weight < 2:
        raise DivergenceError("ky-series", "k_1 + l_1 must be at least 2")
    if x is None:
        logs = _ones(k.tail) + _ones(l.tail)
    else:
        logs = _ones(k.tail) + _ones(l.tail[:-1])
    shape = TailShape(weight - 1, logs)

    def terms() -> Generator[mpf]:
        left = HarmonicState(k.tail)
        if x is None:
            right = HarmonicState(l.tail, kind="star")
        else:
            right = HarmonicState(l.tail, kind="star_param", x=x)
        for n in count(1):
            star = right.step()
            yield left.value * star / mpf(n) ** weight
            left.step()

    with cfg.workdps():
        return accelerated_sum(terms(), shape, cfg)


def kyzv(k: Sequence[int], l: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """zeta(k circled l*) by exact reduction, or its series on the direct backend"""
    if cfg.backend == "direct":
        return kyzv_series(k, l, cfg)
    return zeta_sum(kyzv_reduction(k, l), cfg)


def kyzv_param(
    k: Sequence[int], l: Sequence[int], x: Any, cfg: PrecisionConfig
) -> ValueWithError:
    """single-parametric value sum_n zeta_{n-1}(k') zeta*_n(l'; x) / n^{k_1+l_1}"""
    if isinstance(x, str):
        x = parse_point(x)
    if not 0 <= x <= 1:
        raise DomainError(f"parametric K-Y values need 0 <= x <= 1, got {x}")
    if x == 1:
        return kyzv(k, l, cfg)
    return kyzv_series(k, l, cfg, x=x)


def _central_binomial_terms(head: int, inner: HarmonicState) -> Generator[mpf]:
    """yields C(2n,n) 4^-n n^-head zeta*_n(inner)"""
    ratio = mpf(1)
    for n in count(1):
        ratio = ratio * (2 * n - 1) / (2 * n)
        yield ratio * inner.step() / mpf(n) ** head


def mzbsv(k: Sequence[int], cfg: PrecisionConfig) -> ValueWithError:
    """zeta*_B(k) = sum_n zeta*_n(k_2..) C(2n,n) / (n^k_1 4^n)"""
    k = Index(k)
    if not k:
        raise DomainError("zeta*_B needs a nonempty index")
    with cfg.workdps():
        terms = _central_binomial_terms(k.head, HarmonicState(k.tail, kind="star"))
        if cfg.backend != "direct":
            shape = TailShape(Fraction(2 * k.head - 1, 2), _ones(k.tail))
            return accelerated_sum(terms, shape, cfg)
        cutoff = cfg.max_terms
        total = mpf(0)
        for n, term in enumerate(terms, start=1):
            total += term
            if n >= cutoff:
                break
        bound = binomial_tail_bound(k.head, k.depth - 1, cutoff)
    return ValueWithError(+total, bound, "rigorous", cutoff)


def mzbsv_hweighted(
    m: Sequence[int], r: int, cfg: PrecisionConfig
) -> ValueWithError:
    """sum_n zeta*_n(m) H_n C(2n,n) / (n^{r+1} 4^n)"""
    m = Index(m)
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    product = star_stuffle((1,), m)
    return product.apply(lambda v: mzbsv((r + 1, *v), cfg))


def _euler_maclaurin(s: int, a: Any, cfg: PrecisionConfig) -> ValueWithError:
    """sum_{n>=1} (n+a)^-s with a Bernoulli-corrected tail"""
    cutoff = cfg.digits + 10
    order = cfg.digits // 2 + 2
    with cfg.workdps():
        a = as_mpf(a)
        total = mp.fsum((n + a) ** -s for n in range(1, cutoff))
        base = cutoff + a
        total += base ** (1 - s) / (s - 1) + base**-s / 2
        correction = []
        for j in range(1, order + 2):
            correction.append(
                mp.bernoulli(2 * j)
                / mp.factorial(2 * j)
                * mp.rf(s, 2 * j - 1)
                * base ** (1 - s - 2 * j)
            )
        total += mp.fsum(correction[:-1])
        bound = abs(correction[-1])
    return ValueWithError(+total, +bound, "rigorous", cutoff)


def hurwitz_mzv(m: Sequence[int], a: Any, cfg: PrecisionConfig) -> ValueWithError:
    """zeta_HZ(m; a+1) = sum_{n_1 > ... > n_p > 0} prod (n_j + a)^-m_j"""
    m = Index(m)
    if isinstance(a, str):
        a = parse_point(a)
    if a <= -1:
        raise DomainError(f"shift a must exceed -1, got {a}")
    if not m:
        return ValueWithError.exact(1)
    if not admissible(m):
        raise DivergenceError("non-admissible", f"zeta_HZ({m}) diverges")
    if a == 0:
        return mzv(m, cfg)
    if m.depth == 1 and cfg.backend != "direct":
        return _euler_maclaurin(m.head, a, cfg)
    shape = TailShape(m.head - 1, _ones(m.tail))
    with cfg.workdps():
        inner = HarmonicState(m.tail, shift=a)
        terms = _nested_terms(m.head, inner, shift=a)
        return _sum_nested(terms, shape, cfg)


def hurwitz_taylor(s: int, order: int, cfg: PrecisionConfig) -> TruncatedSeries:
    """zeta_HZ(s; a+1) = sum_i (-1)^i C(s+i-1, i) zeta(s+i) a^i up to a^order"""
    if s < 2:
        raise DivergenceError("non-admissible", f"zeta_HZ({s}) diverges")
    coeffs = []
    for i in range(order + 1):
        coeffs.append((-1) ** i * comb(s + i - 1, i) * mzv((s + i,), cfg))
    return TruncatedSeries(tuple(coeffs))


def hurwitz_power_derivative(
    m: int, p: int, k: int, cfg: PrecisionConfig
) -> ValueWithError:
    """(-1)^k/k! d^k/da^k zeta_HZ({m+1}_p; a+1) at a = 0 via complete Bell polynomials"""
    if m < 1 or p < 0 or k < 0:
        raise DomainError(f"need m >= 1, p >= 0, k >= 0, got {(m, p, k)}")
    one = TruncatedSeries.constant(ValueWithError.exact(1), k)
    xs = []
    for j in range(1, p + 1):
        scale = (-1) ** (j - 1) * factorial(j - 1)
        xs.append(hurwitz_taylor(j * (m + 1), k, cfg) * scale)
    series = bell_complete(xs, one=one)
    return series[k] * (-1) ** k / factorial(p)


def bell_zeta_sum(
    m: int, p: int, total: int, minpart: int, cfg: PrecisionConfig
) -> ValueWithError:
    """
    sum over c_1 + 2c_2 + ... + pc_p = p of prod (-1)^{(j-1)c_j}/(c_j! j^c_j)
    times sum over compositions of total into |c| parts >= minpart of
    prod C(im+i-1+k, k) zeta(im+i+k), block i repeated c_i times
    """
    out = ValueWithError.exact(0)
    for cs in c_partitions(p):
        weight = Fraction(1)
        blocks = []
        for j, c in enumerate(cs, start=1):
            weight *= Fraction((-1) ** ((j - 1) * c), factorial(c) * j**c)
            blocks.extend([j] * c)
        inner = ValueWithError.exact(0)
        for ks in compositions(total, len(blocks), minpart):
            term = ValueWithError.exact(1)
            for i, kk in zip(blocks, ks, strict=True):
                base = i * m + i
                term = term * comb(base - 1 + kk, kk) * mzv((base + kk,), cfg)
            inner = inner + term
        out = out + inner * weight.numerator / weight.denominator
    return out


def composition_mzv_sum(
    m: Sequence[int], k: int, cfg: PrecisionConfig
) -> ValueWithError:
    """sum over i_1 + ... + i_p = k of prod C(m_j+i_j, i_j) zeta(<-(m+i+1)_{1,p})"""
    m = tuple(int(x) for x in m)
    if not m or m[0] < 1 or m[-1] < 1 or any(x < 0 for x in m):
        raise DomainError(f"need m_1 >= 1, m_p >= 1 and m_j >= 0, got {m}")
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    p = len(m)
    total = ValueWithError.exact(0)
    for i in compositions(k, p):
        coef = 1
        for mj, ij in zip(m, i, strict=True):
            coef *= comb(mj + ij, ij)
        index = rev_slice_plus(m, 1, p, [x + 1 for x in i])
        total = total + mzv(index, cfg) * coef
    return total


def _check_t(t: Any, closed: bool) -> Fraction:
    t = parse_point(t) if isinstance(t, str) else t
    if t < 0 or t > 1 or (t == 1 and not closed):
        raise DomainError(f"t out of range: {t}")
    return t


def gf_binomial(t: Any, cfg: PrecisionConfig) -> mpf:
    """sum_n C(2n,n) t^n / (4^n n) = 2 log(2 / (1 + sqrt(1-t)))"""
    t = _check_t(t, closed=True)
    with cfg.workdps():
        return +(2 * mp.log(2 / (1 + mp.sqrt(1 - as_mpf(t)))))


def gf_binomial_h(t: Any, cfg: PrecisionConfig) -> mpf:
    """sum_n H_n C(2n,n) t^n / 4^n = 2/sqrt(1-t) log((1 + sqrt(1-t)) / (2 sqrt(1-t)))"""
    t = _check_t(t, closed=False)
    with cfg.workdps():
        root = mp.sqrt(1 - as_mpf(t))
        return +(2 / root * mp.log((1 + root) / (2 * root)))


def gf_binomial_series(
    t: Any, terms: int, cfg: PrecisionConfig, harmonic: bool = False
) -> ValueWithError:
    """partial sum of either generating function with a geometric tail bound"""
    t = _check_t(t, closed=False)
    with cfg.workdps():
        point = as_mpf(t)
        ratio, power, h, total = mpf(1), mpf(1), mpf(0), mpf(0)
        for n in range(1, terms + 1):
            ratio = ratio * (2 * n - 1) / (2 * n)
            power *= point
            if harmonic:
                h += mpf(1) / n
                total += h * ratio * power
            else:
                total += ratio * power / n
        # C(2n,n) 4^-n <= (pi n)^-1/2 and H_n <= 1 + log n keep either
        # coefficient below 2 / sqrt(pi e) < 1
        tail = point ** (terms + 1) / (1 - point)
    return ValueWithError(+total, +tail, "rigorous", terms)

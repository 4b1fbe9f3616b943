"""
Exact combinatorics of multiple zeta indices.

An index is a finite sequence of positive integers, a signed index additionally
allows negative entries for barred (alternating) slots, and a formal index sum
is a rational linear combination of either. The operations here are the ones
needed to turn star values, Kaneko-Yamamoto values and quasi-shuffle products
into plain nested sums:

- `admissible`, `hoffman_dual`
- `star_expand`, `star_expand_signed`
- `stuffle`, `star_stuffle`, `circled_product`
- `index_transform_mj`, `rev_slice_plus`
- `compositions`, `c_partitions`, `admissible_indices`
"""

from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import product
from logging import getLogger
from math import comb
from typing import Union

from mzvlab.core import DomainError

logger = getLogger(__name__)


class Index(tuple):
    """immutable sequence of positive integers"""

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()) -> "Index":
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise DomainError(f"index parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_str(cls, text: str) -> "Index":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def head(self) -> int:
        return self[0]

    @property
    def tail(self) -> "Index":
        return type(self)(self[1:])

    @property
    def admissible(self) -> bool:
        return admissible(self)

    def __add__(self, other: Sequence[int]) -> "Index":
        return type(self)(tuple(self) + tuple(other))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)})"


class SignedIndex(tuple):
    """immutable sequence of nonzero integers, negative entries are barred"""

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()) -> "SignedIndex":
        parts = tuple(int(x) for x in parts)
        if any(x == 0 for x in parts):
            raise DomainError(f"signed index parts must be nonzero: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_str(cls, text: str) -> "SignedIndex":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    @classmethod
    def from_signs(cls, parts: Sequence[int], signs: Sequence[int]) -> "SignedIndex":
        if len(parts) != len(signs):
            raise DomainError("parts and signs must have equal length")
        return cls(k if s > 0 else -k for k, s in zip(parts, signs, strict=True))

    @property
    def magnitudes(self) -> Index:
        return Index(abs(x) for x in self)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if x > 0 else -1 for x in self)

    @property
    def weight(self) -> int:
        return sum(abs(x) for x in self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def unsigned(self) -> bool:
        return all(x > 0 for x in self)

    @property
    def convergent(self) -> bool:
        """|k_1|+...+|k_j| > j for all j, with a leading -1 exempt at j=1"""
        total = 0
        for j, part in enumerate(self, start=1):
            total += abs(part)
            if total <= j and not (j == 1 and part == -1):
                return False
        return True

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)})"


AnyIndex = Union[Index, SignedIndex]


class FormalIndexSum(Mapping):
    """exact rational linear combination of indices"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Sequence = ()) -> None:
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coef in items:
            acc[key] = acc.get(key, 0) + Fraction(coef)
        self._terms = {k: v for k, v in acc.items() if v != 0}

    def __getitem__(self, key: AnyIndex) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator[AnyIndex]:
        return iter(sorted(self._terms, key=lambda k: (len(k), tuple(k))))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalIndexSum):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == FormalIndexSum(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FormalIndexSum") -> "FormalIndexSum":
        return FormalIndexSum(list(self.items()) + list(other.items()))

    def __neg__(self) -> "FormalIndexSum":
        return self.scale(-1)

    def __sub__(self, other: "FormalIndexSum") -> "FormalIndexSum":
        return self + (-other)

    def scale(self, factor: int | Fraction) -> "FormalIndexSum":
        return FormalIndexSum({k: v * factor for k, v in self._terms.items()})

    def prepend(self, part: int) -> "FormalIndexSum":
        """returns the sum with `part` placed in front of every term"""
        return FormalIndexSum(
            {type(k)((part, *k)): v for k, v in self._terms.items()}
        )

    def apply(self, func: Callable[[AnyIndex], object]) -> object:
        """evaluates sum(c * func(k)) in canonical term order"""
        total = 0
        for key in self:
            coef = self._terms[key]
            value = func(key)
            if coef.denominator == 1:
                total = total + value * coef.numerator
            else:
                total = total + value * coef.numerator / coef.denominator
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for key in self:
            coef = self._terms[key]
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            scalar = "" if mag == 1 else f"{mag}*"
            chunks.append(f"{sign} {scalar}({key})")
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self) -> str:
        return f"FormalIndexSum({str(self)})"


def admissible(k: Sequence[int]) -> bool:
    """returns True if k is empty or starts with a part above 1"""
    return len(k) == 0 or k[0] > 1


def hoffman_dual(k: Sequence[int]) -> Index:
    """returns the index whose partial-sum cut set complements that of k"""
    k = Index(k)
    if not k:
        raise DomainError("hoffman dual of the empty index is undefined")
    total = k.weight
    cuts, running = set(), 0
    for part in k[:-1]:
        running += part
        cuts.add(running)
    kept = [0] + [c for c in range(1, total) if c not in cuts] + [total]
    return Index(b - a for a, b in zip(kept, kept[1:], strict=False))


def _merge_patterns(depth: int) -> Iterator[tuple[bool, ...]]:
    """yields every ',' (False) or '+' (True) choice for depth-1 separators"""
    yield from product((False, True), repeat=max(depth - 1, 0))


def star_expand(k: Sequence[int]) -> FormalIndexSum:
    """returns the 2^(depth-1) term expansion turning star sums into strict sums"""
    k = Index(k)
    if not k:
        raise DomainError("star expansion needs a nonempty index")
    terms = {}
    for pattern in _merge_patterns(len(k)):
        parts = [k[0]]
        for merge, part in zip(pattern, k[1:], strict=True):
            if merge:
                parts[-1] += part
            else:
                parts.append(part)
        terms[Index(parts)] = 1
    return FormalIndexSum(terms)


def star_expand_signed(s: Sequence[int]) -> FormalIndexSum:
    """star expansion where merged slots add magnitudes and multiply signs"""
    s = SignedIndex(s)
    if not s:
        raise DomainError("star expansion needs a nonempty index")
    terms: dict = {}
    for pattern in _merge_patterns(len(s)):
        mags, signs = [abs(s[0])], [1 if s[0] > 0 else -1]
        for merge, part in zip(pattern, s[1:], strict=True):
            sign = 1 if part > 0 else -1
            if merge:
                mags[-1] += abs(part)
                signs[-1] *= sign
            else:
                mags.append(abs(part))
                signs.append(sign)
        key = SignedIndex.from_signs(mags, signs)
        terms[key] = terms.get(key, 0) + 1
    return FormalIndexSum(terms)


@lru_cache(maxsize=4096)
def _stuffle(a: tuple[int, ...], b: tuple[int, ...], sign: int) -> tuple:
    """quasi-shuffle on raw tuples, sign=-1 gives the star variant"""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[tuple[int, ...], int] = {}
    for key, coef in _stuffle(a[1:], b, sign):
        acc[(a[0], *key)] = acc.get((a[0], *key), 0) + coef
    for key, coef in _stuffle(a, b[1:], sign):
        acc[(b[0], *key)] = acc.get((b[0], *key), 0) + coef
    for key, coef in _stuffle(a[1:], b[1:], sign):
        merged = (a[0] + b[0], *key)
        acc[merged] = acc.get(merged, 0) + sign * coef
    return tuple((k, v) for k, v in acc.items() if v)


def stuffle(a: Sequence[int], b: Sequence[int]) -> FormalIndexSum:
    """returns the harmonic (quasi-shuffle) product a * b"""
    a, b = Index(a), Index(b)
    return FormalIndexSum({Index(k): v for k, v in _stuffle(a, b, 1)})


def star_stuffle(a: Sequence[int], b: Sequence[int]) -> FormalIndexSum:
    """returns the product matching zeta*_n(a) zeta*_n(b) = zeta*_n(a star b)"""
    a, b = Index(a), Index(b)
    return FormalIndexSum({Index(k): v for k, v in _stuffle(a, b, -1)})


def circled_product(a: Sequence[int], b: Sequence[int]) -> FormalIndexSum:
    """returns (a_1 + b_1, tail(a) * tail(b))"""
    a, b = Index(a), Index(b)
    if not a or not b:
        raise DomainError("circled product needs nonempty indices")
    return stuffle(a.tail, b.tail).prepend(a.head + b.head)


def _check_mvector(m: Sequence[int]) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if not m:
        raise DomainError("m-vector must be nonempty")
    if m[0] < 1 or any(x < 0 for x in m[1:]):
        raise DomainError(f"m-vector needs m_1 >= 1 and m_i >= 0: {m}")
    return m


def index_transform_mj(m: Sequence[int], j: int) -> Index:
    """returns (m_1, m_2+1, ..., m_j+1)"""
    m = _check_mvector(m)
    if not 1 <= j <= len(m):
        raise DomainError(f"j={j} outside 1..{len(m)}")
    return Index((m[0], *(x + 1 for x in m[1:j])))


def rev_slice_plus(
    m: Sequence[int], i: int, j: int, delta: Sequence[int] = None
) -> Index:
    """returns (m_j+d_j, ..., m_i+d_i) with 1-based i, j; empty when i > j"""
    if i > j:
        return Index()
    m = tuple(m)
    if i < 1 or j > len(m):
        raise DomainError(f"slice {i}..{j} outside 1..{len(m)}")
    delta = (0,) * (j - i + 1) if delta is None else tuple(delta)
    if len(delta) != j - i + 1:
        raise DomainError(f"delta has length {len(delta)}, expected {j - i + 1}")
    return Index(m[p - 1] + delta[p - i] for p in range(j, i - 1, -1))


def compositions(total: int, parts: int, minpart: int = 0) -> Iterator[tuple]:
    """yields tuples of `parts` integers >= minpart summing to total"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= minpart:
            yield (total,)
        return
    for first in range(total - minpart * (parts - 1), minpart - 1, -1):
        for rest in compositions(total - first, parts - 1, minpart):
            yield (first, *rest)


def count_compositions(total: int, parts: int) -> int:
    """returns C(total+parts-1, parts-1)"""
    return comb(total + parts - 1, parts - 1) if parts else int(total == 0)


def c_partitions(p: int) -> Iterator[tuple[int, ...]]:
    """yields (c_1..c_p) >= 0 with c_1 + 2 c_2 + ... + p c_p = p"""

    def fill(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j == 1:
            yield (remaining,)
            return
        for c in range(remaining // j, -1, -1):
            for rest in fill(j - 1, remaining - j * c):
                yield (*rest, c)

    if p == 0:
        yield ()
        return
    yield from fill(p, p)


def ones(r: int) -> Index:
    """returns {1}_r"""
    return Index((1,) * r)


def repeat(block: Sequence[int], times: int) -> Index:
    """returns {block}_times"""
    return Index(tuple(block) * times)


def indices_of_weight(weight: int) -> Iterator[Index]:
    """yields every index of the given weight"""
    for depth in range(1, weight + 1):
        for parts in compositions(weight - depth, depth):
            yield Index(x + 1 for x in parts)


def admissible_indices(max_weight: int, min_weight: int = 2) -> list[Index]:
    """returns admissible indices with min_weight <= weight <= max_weight"""
    return [
        k
        for w in range(min_weight, max_weight + 1)
        for k in indices_of_weight(w)
        if k.admissible
    ]

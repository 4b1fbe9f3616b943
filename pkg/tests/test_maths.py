from fractions import Fraction
from itertools import count

from mpmath import mp, mpf
from pytest import mark, raises

from mzvlab.core import DomainError
from mzvlab.maths import get_list_mids
from mzvlab.maths.accel import (
    TailShape,
    accelerated_sum,
    binomial_tail_bound,
    euler_transform,
    ladder_nodes,
    plain_sum,
    zeta_tail_bound,
)
from mzvlab.maths.bell import (
    TruncatedSeries,
    bell_complete,
    bell_complete_explicit,
    partition_coefficient,
)
from mzvlab.precision import PrecisionConfig


def test_get_list_mids():
    assert get_list_mids([1, 3, 5]) == [2, 4]
    assert get_list_mids([1]) == []


TAIL_SHAPE_PARAMS = (
    (1, 0, 12, 13),
    (1, 1, 6, 13),
    (Fraction(1, 2), 3, 3, 13),
)


@mark.parametrize("a0,logs,rows,columns", TAIL_SHAPE_PARAMS)
def test_tail_shape(a0, logs, rows, columns):
    shape = TailShape(a0, logs)
    assert shape.rows == rows
    assert shape.columns == columns


@mark.parametrize("a0,logs", ((0, 0), (-1, 0), (1, -1)))
def test_tail_shape_rejects(a0, logs):
    with raises(DomainError):
        TailShape(a0, logs)


def test_ladder_nodes():
    nodes = ladder_nodes(8192, 13)
    assert len(nodes) == len(set(nodes)) == 13
    assert nodes == sorted(nodes)
    assert nodes[-1] == 8192
    assert all(node % 2 == 0 for node in nodes)


def test_ladder_nodes_too_short():
    with raises(DomainError):
        ladder_nodes(10, 13)


def test_accelerated_sum_basel(cfg: PrecisionConfig):
    terms = (mpf(1) / n**2 for n in count(1))
    value = accelerated_sum(terms, TailShape(1), cfg)
    assert value.bound_kind == "heuristic"
    assert abs(value.value - mp.pi**2 / 6) < mpf("1e-15")


def test_accelerated_sum_with_logs(cfg: PrecisionConfig):
    # sum H_n / n^2 = 2 zeta(3), tail ~ log M / M
    def terms():
        h = mpf(0)
        for n in count(1):
            h += mpf(1) / n
            yield h / mpf(n) ** 2

    value = accelerated_sum(terms(), TailShape(1, 1), cfg)
    assert abs(value.value - 2 * mp.zeta(3)) < mpf("1e-8")


def test_accelerated_sum_short_stream(cfg: PrecisionConfig):
    with raises(DomainError):
        accelerated_sum(iter([mpf(1), mpf(2)]), TailShape(1), cfg)


def test_plain_sum_estimate_covers_error():
    cfg = PrecisionConfig(digits=15, max_terms=1000)
    value = plain_sum((mpf(1) / n**2 for n in count(1)), TailShape(1), cfg)
    assert value.terms == 1000
    assert abs(value.value - mp.pi**2 / 6) <= value.bound


def test_euler_transform_log2(cfg: PrecisionConfig):
    value = euler_transform((mpf(-1) ** (n + 1) / n for n in count(1)), cfg)
    assert abs(value.value - mp.ln2) < mpf("1e-25")
    assert value.bound < mpf("1e-20")


@mark.parametrize("cutoff", (10, 100, 1000))
def test_zeta_tail_bound_depth_one(cutoff):
    # sum_{n>N} 1/n^2 < 1/N and the bound is exactly 1/N here
    tail = mp.zeta(2) - mp.fsum(mpf(1) / n**2 for n in range(1, cutoff + 1))
    bound = zeta_tail_bound(2, 1, cutoff)
    assert tail <= bound
    assert abs(bound - mpf(1) / cutoff) < mpf("1e-30")


def test_zeta_tail_bound_rejects():
    with raises(DomainError):
        zeta_tail_bound(1, 2, 100)


def test_binomial_tail_bound_decreases():
    assert binomial_tail_bound(2, 0, 100) > binomial_tail_bound(2, 0, 1000) > 0


BELL_PARAMS = (
    ([1], 1),
    ([2, 3], 2**2 + 3),
    ([1, 1, 1], 5),
    ([1, 1, 1, 1], 15),
    ([1, 2, 3], 1 + 3 * 2 + 3),
)


@mark.parametrize("xs,expected", BELL_PARAMS)
def test_bell_complete(xs, expected):
    assert bell_complete(xs) == expected
    assert bell_complete_explicit(xs) == expected


def test_bell_complete_empty():
    assert bell_complete([]) == 1
    assert bell_complete_explicit([]) == 1


PARTITION_COEFFICIENT_PARAMS = (
    ((3, 0, 0), 1),
    ((1, 1, 0), 3),
    ((0, 0, 1), 1),
    ((2, 1, 0, 0), 6),
)


@mark.parametrize("cs,expected", PARTITION_COEFFICIENT_PARAMS)
def test_partition_coefficient(cs, expected):
    assert partition_coefficient(cs) == expected


def test_truncated_series_ring():
    a = TruncatedSeries((1, 1, 0))
    square = a * a
    assert square.coeffs == (1, 2, 1)
    assert (a * a * a).coeffs == (1, 3, 3)
    assert (a + 2).coeffs == (3, 1, 0)
    assert (a - a).coeffs == (0, 0, 0)
    assert (3 * a)[1] == 3
    assert TruncatedSeries.constant(Fraction(1, 2), 2).coeffs == (Fraction(1, 2), 0, 0)


def test_truncated_series_order_mismatch():
    with raises(DomainError):
        TruncatedSeries((1, 1)) + TruncatedSeries((1, 1, 1))


def test_bell_over_series():
    one = TruncatedSeries.constant(1, 1)
    xs = [TruncatedSeries((1, 1)), TruncatedSeries((1, 0))]
    # Y_2 = x_1^2 + x_2 = (1 + t)^2 + 1 -> 2 + 2t
    assert bell_complete(xs, one=one).coeffs == (2, 2)
    assert bell_complete_explicit(xs, one=one).coeffs == (2, 2)

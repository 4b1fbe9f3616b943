from fractions import Fraction
from random import Random

from mpmath import mp, mpf
from pytest import mark, raises

from mzvlab.core import DivergenceError, DomainError
from mzvlab.indices import SignedIndex, admissible_indices, stuffle
from mzvlab.precision import PrecisionConfig, ValueWithError
from mzvlab.series import (
    HarmonicState,
    amzsv,
    amzv,
    bell_zeta_sum,
    composition_mzv_sum,
    gf_binomial,
    gf_binomial_h,
    gf_binomial_series,
    harmonic_stream,
    hurwitz_mzv,
    hurwitz_power_derivative,
    hurwitz_taylor,
    kyzv,
    kyzv_param,
    kyzv_reduction,
    kyzv_series,
    mhs,
    mhss,
    mpl,
    mpl_multi,
    mzbsv,
    mzbsv_hweighted,
    mzv,
    mzv_direct,
    pmhss,
    pmhss_poly,
    signs_to_signed_index,
    zeta_star,
    zeta_sum,
)

FINITE_PARAMS = (
    (mhs, 3, (1,), Fraction(11, 6)),
    (mhs, 3, (1, 1), Fraction(1)),
    (mhs, 1, (1, 1), Fraction(0)),
    (mhs, 4, (), Fraction(1)),
    (mhss, 2, (1, 1), Fraction(7, 4)),
    (mhss, 2, (2,), Fraction(5, 4)),
    (mhss, 0, (2,), Fraction(0)),
    (mhss, 5, (), Fraction(1)),
)


@mark.parametrize("func,n,k,expected", FINITE_PARAMS)
def test_finite_sums(func, n, k, expected):
    assert func(n, k) == expected


def test_finite_sums_reject_negative_n():
    with raises(DomainError):
        mhs(-1, (2,))


def test_harmonic_state_signed_slots():
    state = HarmonicState(SignedIndex((-1,)), exact=True)
    values = [state.step() for _ in range(4)]
    assert values == [-1, Fraction(-1, 2), Fraction(-5, 6), Fraction(-7, 12)]


def test_harmonic_state_rejects_kind():
    with raises(DomainError):
        HarmonicState((2,), kind="weak")
    with raises(DomainError):
        HarmonicState((2,), kind="star_param")


def test_harmonic_stream():
    stream = harmonic_stream((1,), exact=True)
    assert [next(stream) for _ in range(3)] == [1, Fraction(3, 2), Fraction(11, 6)]


def test_pmhss_poly():
    assert pmhss_poly(2, (1,)) == [0, 1, Fraction(1, 2)]
    assert pmhss_poly(3, ()) == [0, 0, 0, 1]


@mark.parametrize("n", (1, 4, 9))
@mark.parametrize("m", ((1,), (2, 1), (1, 3)))
def test_pmhss_matches_poly(n, m):
    x = Fraction(2, 5)
    coeffs = pmhss_poly(n, m)
    assert pmhss(n, m, x) == sum(c * x**t for t, c in enumerate(coeffs))


@mark.parametrize("n,m", ((6, (2, 1)), (3, (1, 1, 2))))
def test_pmhss_at_one_is_star_sum(n, m):
    assert pmhss(n, m, 1) == mhss(n, m)


def test_pmhss_rejects_large_x():
    with raises(DomainError):
        pmhss(3, (1,), 2)


def test_mzv_known_values(cfg: PrecisionConfig, tight: mpf, consts: dict):
    pi = consts["pi"]
    assert abs(mzv((2,), cfg).value - pi**2 / 6) < tight
    assert abs(mzv((2, 1), cfg).value - consts["zeta3"]) < tight
    assert abs(mzv((3, 1), cfg).value - pi**4 / 360) < tight
    assert abs(mzv((2, 2), cfg).value - pi**4 / 120) < tight
    assert abs(mzv((4,), cfg).value - pi**4 / 90) < tight


def test_mzv_empty_is_one(cfg: PrecisionConfig):
    assert mzv((), cfg).value == 1


def test_mzv_rejects_non_admissible(cfg: PrecisionConfig):
    with raises(DivergenceError) as e:
        mzv((1, 2), cfg)
    assert e.value.condition == "non-admissible"


def test_mzv_bound_is_rigorous(cfg: PrecisionConfig):
    value = mzv((3, 1, 2), cfg)
    assert value.bound_kind == "rigorous"
    assert value.bound < mpf("1e-25")


def test_mzv_direct_agrees(direct_cfg: PrecisionConfig, cfg: PrecisionConfig):
    direct = mzv_direct((3, 1), direct_cfg)
    assert direct.bound_kind == "rigorous"
    assert abs(direct.value - mzv((3, 1), cfg).value) <= direct.bound


@mark.slow
def test_mzv_products_follow_stuffle(cfg: PrecisionConfig):
    pool = admissible_indices(5)
    rng = Random(20240601)
    for _ in range(50):
        a, b = rng.choice(pool), rng.choice(pool)
        product = mzv(a, cfg).value * mzv(b, cfg).value
        expanded = zeta_sum(stuffle(a, b), cfg).value
        assert abs(product - expanded) < mpf("1e-25"), (a, b)


def test_zeta_star(cfg: PrecisionConfig, tight: mpf, consts: dict):
    assert abs(zeta_star((2, 1), cfg).value - 2 * consts["zeta3"]) < tight
    assert abs(zeta_star((2, 2), cfg).value - 7 * consts["pi"] ** 4 / 360) < tight
    assert zeta_star((), cfg).value == 1
    with raises(DivergenceError):
        zeta_star((1, 1), cfg)


def test_amzv_depth_one(cfg: PrecisionConfig, consts: dict):
    assert abs(amzv((-1,), cfg).value + consts["log2"]) < mpf("1e-25")
    assert abs(amzv((-2,), cfg).value + consts["pi"] ** 2 / 12) < mpf("1e-25")


def test_amzv_unsigned_is_mzv(cfg: PrecisionConfig):
    assert amzv((3, 1), cfg).value == mzv((3, 1), cfg).value


def test_amzv_nested(cfg: PrecisionConfig, consts: dict):
    # sum (-1)^n H_{n-1} / n^2 = zeta(3)/8
    expected = consts["zeta3"] / 8
    value = amzv((-2, 1), cfg)
    assert value.bound_kind == "heuristic"
    assert abs(value.value - expected) < mpf("1e-20")


def test_amzv_nested_direct(direct_cfg: PrecisionConfig, cfg: PrecisionConfig):
    direct = amzv((-2, 1), direct_cfg)
    assert direct.terms == direct_cfg.max_terms
    assert abs(direct.value - amzv((-2, 1), cfg).value) < mpf("1e-6")


def test_amzv_rejects_divergent(cfg: PrecisionConfig):
    with raises(DivergenceError) as e:
        amzv((1, -1), cfg)
    assert e.value.condition == "signed-convergence"
    with raises(DivergenceError):
        amzv((-1, 1), cfg)
    with raises(DivergenceError):
        amzsv((-1, -1), cfg)


def test_amzsv_depth_one(cfg: PrecisionConfig):
    assert amzsv((-2,), cfg).value == amzv((-2,), cfg).value


def test_signs_to_signed_index():
    assert signs_to_signed_index((2, 1), (1, -1)) == (2, -1)
    with raises(DomainError):
        signs_to_signed_index((2, 1), (1, Fraction(1, 2)))


MPL_PARAMS = (
    ((1,), "1/2", lambda c: c["log2"]),
    ((2,), "1/2", lambda c: c["pi"] ** 2 / 12 - c["log2"] ** 2 / 2),
    ((2,), 1, lambda c: c["pi"] ** 2 / 6),
    ((2,), -1, lambda c: -c["pi"] ** 2 / 12),
)


@mark.parametrize("k,x,expected", MPL_PARAMS)
def test_mpl(k, x, expected, cfg: PrecisionConfig, consts: dict):
    assert abs(mpl(k, x, cfg).value - expected(consts)) < mpf("1e-25")


def test_mpl_geometric_point(cfg: PrecisionConfig):
    # Li_1(x) = -log(1-x)
    with cfg.workdps():
        expected = -mp.log(1 - mpf(1) / 3)
    assert abs(mpl((1,), "1/3", cfg).value - expected) < mpf("1e-25")


def test_mpl_direct_half(direct_cfg: PrecisionConfig, cfg: PrecisionConfig):
    direct = mpl((2, 1), "1/2", direct_cfg)
    assert abs(direct.value - mpl((2, 1), "1/2", cfg).value) < mpf("1e-14")


def test_mpl_edges(cfg: PrecisionConfig):
    assert mpl((), "1/2", cfg).value == 1
    assert mpl((2,), 0, cfg).value == 0
    with raises(DivergenceError) as e:
        mpl((1, 2), 1, cfg)
    assert e.value.condition == "k1=1,x=1"
    with raises(DomainError):
        mpl((2,), 2, cfg)


def test_mpl_multi(cfg: PrecisionConfig):
    assert mpl_multi((2, 1), (1, 1), cfg).value == mzv((2, 1), cfg).value
    single = mpl_multi((2,), ("1/2",), cfg)
    assert abs(single.value - mpl((2,), "1/2", cfg).value) < mpf("1e-25")
    with raises(DomainError):
        mpl_multi((2, 1), ("3/4", "1/2"), cfg)


def test_kyzv_reduction():
    assert kyzv_reduction((1,), (1,)) == {(2,): 1}
    assert kyzv_reduction((1, 1), (1,)) == {(2, 1): 1}
    assert kyzv_reduction((2,), (1, 1)) == {(3, 1): 1, (4,): 1}


def test_kyzv_reduction_rejects_empty():
    with raises(DomainError):
        kyzv_reduction((), (1,))


def test_kyzv(cfg: PrecisionConfig, tight: mpf, consts: dict):
    assert abs(kyzv((1, 1), (1,), cfg).value - consts["zeta3"]) < tight
    assert abs(kyzv((2,), (1,), cfg).value - consts["zeta3"]) < tight


KY_SERIES_PARAMS = (
    ((2,), (1, 1)),
    ((2, 1), (1, 1)),
    ((1, 2), (1, 1)),
    ((3,), (1, 1, 1)),
)


@mark.parametrize("k,l", KY_SERIES_PARAMS)
def test_kyzv_direct_matches_reduction(
    k, l, direct_cfg: PrecisionConfig, cfg: PrecisionConfig
):
    direct = kyzv(k, l, direct_cfg)
    assert direct.bound_kind == "heuristic"
    exact = zeta_sum(kyzv_reduction(k, l), cfg)
    assert abs(direct.value - exact.value) < mpf("1e-6")


@mark.slow
def test_kyzv_series_agrees(cfg: PrecisionConfig):
    series = kyzv_series((2, 1), (1, 2), cfg)
    assert abs(series.value - kyzv((2, 1), (1, 2), cfg).value) < mpf("1e-8")


def test_kyzv_param_at_one(cfg: PrecisionConfig):
    assert kyzv_param((2,), (1,), 1, cfg).value == kyzv((2,), (1,), cfg).value
    with raises(DomainError):
        kyzv_param((2,), (1,), "3/2", cfg)


def test_kyzv_param_depth_one_is_polylog(cfg: PrecisionConfig):
    # l = (1) leaves zeta*_n(; x) = x^n, so the value is Li_2(x)
    value = kyzv_param((1,), (1,), "1/2", cfg)
    assert abs(value.value - mpl((2,), "1/2", cfg).value) < mpf("1e-8")


def test_mzbsv_depth_one(cfg: PrecisionConfig, consts: dict):
    assert abs(mzbsv((1,), cfg).value - 2 * consts["log2"]) < mpf("1e-10")


def test_mzbsv_hweighted_matches_generating_function(cfg: PrecisionConfig):
    # with m empty the weight H_n = zeta*_n(1) leaves zeta*_B(1,1)
    value = mzbsv_hweighted((), 0, cfg)
    assert abs(value.value - mzbsv((1, 1), cfg).value) < mpf("1e-10")
    with raises(DomainError):
        mzbsv_hweighted((1,), -1, cfg)


def test_hurwitz_mzv(cfg: PrecisionConfig, consts: dict):
    expected = consts["pi"] ** 2 / 2 - 4
    assert abs(hurwitz_mzv((2,), "1/2", cfg).value - expected) < mpf("1e-25")
    assert hurwitz_mzv((2, 1), 0, cfg).value == mzv((2, 1), cfg).value
    with raises(DomainError):
        hurwitz_mzv((2,), -1, cfg)


def test_hurwitz_taylor(cfg: PrecisionConfig):
    series = hurwitz_taylor(2, 2, cfg)
    assert series.order == 2
    with cfg.workdps():
        expected = (mp.zeta(2), -2 * mp.zeta(3), 3 * mp.zeta(4))
    for coeff, value in zip(series.coeffs, expected):
        assert abs(coeff.value - value) < mpf("1e-25")
    with raises(DivergenceError):
        hurwitz_taylor(1, 2, cfg)


def test_hurwitz_power_derivative_at_zero_order(cfg: PrecisionConfig, consts: dict):
    # k = 0, p = 1 gives zeta(m+1)
    value = hurwitz_power_derivative(2, 1, 0, cfg)
    assert abs(value.value - consts["zeta3"]) < mpf("1e-25")


def test_hurwitz_power_derivative_first_order(cfg: PrecisionConfig, consts: dict):
    # -d/da zeta_HZ(s; a+1) at a = 0 is s zeta(s+1)
    value = hurwitz_power_derivative(1, 1, 1, cfg)
    with cfg.workdps():
        expected = 2 * mp.zeta(3)
    assert abs(value.value - expected) < mpf("1e-25")


def test_bell_zeta_sum_depth_one(cfg: PrecisionConfig, consts: dict):
    # p = 1, total 0: zeta(m+1)
    value = bell_zeta_sum(2, 1, 0, 0, cfg)
    assert abs(value.value - consts["zeta3"]) < mpf("1e-25")


def test_composition_mzv_sum(cfg: PrecisionConfig):
    assert composition_mzv_sum((1,), 0, cfg).value == mzv((2,), cfg).value
    # k = 1, m = (1): C(2,1) zeta(3)
    value = composition_mzv_sum((1,), 1, cfg)
    assert abs(value.value - 2 * mzv((3,), cfg).value) < mpf("1e-25")
    with raises(DomainError):
        composition_mzv_sum((0, 1), 0, cfg)


GF_PARAMS = ("1/4", "1/2", "3/4")


@mark.parametrize("t", GF_PARAMS)
def test_gf_binomial_series(t, cfg: PrecisionConfig):
    partial = gf_binomial_series(t, 400, cfg)
    assert abs(partial.value - gf_binomial(t, cfg)) <= partial.bound + mpf("1e-25")
    harmonic = gf_binomial_series(t, 400, cfg, harmonic=True)
    assert abs(harmonic.value - gf_binomial_h(t, cfg)) <= harmonic.bound + mpf("1e-25")


@mark.parametrize("terms", (1, 5, 30))
@mark.parametrize("t", ("9/10", "99/100"))
def test_gf_binomial_series_short_near_one(t, terms, cfg: PrecisionConfig):
    partial = gf_binomial_series(t, terms, cfg, harmonic=True)
    error = abs(partial.value - gf_binomial_h(t, cfg))
    assert 0 < error <= partial.bound
    partial = gf_binomial_series(t, terms, cfg)
    assert 0 < abs(partial.value - gf_binomial(t, cfg)) <= partial.bound


def test_gf_binomial_edges(cfg: PrecisionConfig, consts: dict):
    assert gf_binomial(0, cfg) == 0
    assert abs(gf_binomial(1, cfg) - 2 * consts["log2"]) < mpf("1e-25")
    with raises(DomainError):
        gf_binomial_h(1, cfg)
    with raises(DomainError):
        gf_binomial("-1/2", cfg)


def test_value_types(cfg: PrecisionConfig):
    assert isinstance(mzv((2,), cfg), ValueWithError)
    assert isinstance(amzv((-1, 2), cfg), ValueWithError)

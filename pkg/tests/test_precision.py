from fractions import Fraction
from os import environ

from mpmath import mp, mpf
from pytest import mark, raises

from mzvlab.core import DomainError
from mzvlab.precision import (
    PrecisionConfig,
    ValueWithError,
    approx_equal,
    as_mpf,
    fsum,
    fundamental_constants,
    parse_point,
    render,
)

POINT_PARAMS = (
    ("1/2", Fraction(1, 2)),
    (" 0.25 ", Fraction(1, 4)),
    ("-1", Fraction(-1)),
    (3, Fraction(3)),
    (Fraction(2, 3), Fraction(2, 3)),
)


@mark.parametrize("text,expected", POINT_PARAMS)
def test_parse_point(text, expected):
    assert parse_point(text) == expected


@mark.parametrize("text", ("half", "1/0", ""))
def test_parse_point_rejects(text):
    with raises(DomainError):
        parse_point(text)


def test_as_mpf_fraction_is_exact_at_precision():
    with mp.workdps(40):
        assert as_mpf(Fraction(1, 3)) == mpf(1) / 3


def test_render_keeps_digits():
    with mp.workdps(40):
        third = mpf(1) / 3
    assert render(third, 30) == "0." + "3" * 30
    assert render(Fraction(1, 4), 5) == "0.25000"


def test_config_defaults():
    cfg = PrecisionConfig()
    assert cfg.dps == cfg.digits + cfg.guard
    assert cfg.eps == mpf(10) ** -cfg.digits
    assert cfg.key() == (cfg.digits, cfg.max_terms, "auto")


CONFIG_ERROR_PARAMS = (
    {"digits": 5},
    {"max_terms": 10},
    {"backend": "gpu"},
    {"tolerance": "0"},
    {"tolerance": "-1e-5"},
)


@mark.parametrize("kwargs", CONFIG_ERROR_PARAMS)
def test_config_rejects(kwargs):
    with raises(DomainError):
        PrecisionConfig(**kwargs)


def test_config_is_frozen(cfg: PrecisionConfig):
    with raises(AttributeError):
        cfg.digits = 50


def test_config_with_(cfg: PrecisionConfig):
    changed = cfg.with_(backend="direct")
    assert changed.backend == "direct"
    assert cfg.backend == "auto"


def test_config_workdps(cfg: PrecisionConfig):
    before = mp.dps
    with cfg.workdps(3):
        assert mp.dps == cfg.dps + 3
    assert mp.dps == before


def test_config_from_env():
    environ["MZVLAB_DIGITS"] = "25"
    environ["MZVLAB_BACKEND"] = "holder"
    try:
        cfg = PrecisionConfig.from_env(backend=None, max_terms=5000)
        assert cfg.digits == 25
        assert cfg.backend == "holder"
        assert cfg.max_terms == 5000
        assert PrecisionConfig.from_env(digits=12).digits == 12
    finally:
        del environ["MZVLAB_DIGITS"]
        del environ["MZVLAB_BACKEND"]


def test_value_with_error_arithmetic():
    a = ValueWithError(mpf(2), mpf("0.01"))
    b = ValueWithError(mpf(3), mpf("0.02"), "heuristic", 10)
    total = a + b
    assert total.value == 5
    assert total.bound == mpf("0.01") + mpf("0.02")
    assert total.bound_kind == "heuristic"
    assert total.terms == 10
    product = a * b
    assert product.value == 6
    assert product.bound >= 2 * mpf("0.02") + 3 * mpf("0.01")
    assert (a - a).value == 0
    assert (1 - a).value == -1
    assert (Fraction(1, 2) * a).value == 1


def test_value_with_error_division():
    a = ValueWithError(mpf(6), mpf("0.06"))
    half = a / 2
    assert half.value == 3
    assert half.bound == mpf("0.03")
    ratio = a / ValueWithError.exact(3)
    assert ratio.value == 2
    with raises(DomainError):
        a / ValueWithError(mpf("0.001"), mpf("0.01"))


def test_value_with_error_power():
    a = ValueWithError.exact(3)
    assert (a**2).value == 9
    assert (a**0).value == 1


def test_value_with_error_rejects_negative_bound():
    with raises(DomainError):
        ValueWithError(mpf(1), mpf(-1))
    with raises(DomainError):
        ValueWithError(mpf(1), mpf(0), "guessed")


def test_fsum():
    total = fsum([ValueWithError.exact(1), 2, Fraction(1, 2)])
    assert total.value == mpf("3.5")
    assert fsum([]).value == 0


def test_fundamental_constants(cfg: PrecisionConfig):
    values = fundamental_constants(cfg)
    assert render(values["pi"], 20) == "3.1415926535897932385"
    assert render(values["log2"], 20) == "0.69314718055994530942"


def test_approx_equal():
    assert approx_equal(1, Fraction(10001, 10000), "1e-3")
    assert not approx_equal(1, 2, "0.5")
    with raises(DomainError):
        approx_equal(1, 1, 0)

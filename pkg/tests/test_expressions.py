from fractions import Fraction

from mpmath import mp, mpf
from pytest import mark, raises

from mzvlab.core import DivergenceError, DomainError, ParseError
from mzvlab.expressions import Expression, evaluate, parse_expression, tokenize
from mzvlab.indices import FormalIndexSum, Index
from mzvlab.precision import PrecisionConfig, ValueWithError


def test_tokenize():
    kinds = [token.kind for token in tokenize("li(2,1; 1/2)")]
    assert kinds == [
        "name",
        "punct",
        "number",
        "punct",
        "number",
        "punct",
        "number",
        "punct",
        "end",
    ]


def test_tokenize_offsets():
    tokens = tokenize("zeta( 2 )")
    assert [token.offset for token in tokens] == [0, 4, 6, 8, 9]


def test_tokenize_bad_character():
    with raises(ParseError) as e:
        tokenize("zeta(2)!")
    assert e.value.offset == 7


PARSE_PARAMS = (
    ("zeta(2,1)", Expression("zeta", (2, 1))),
    ("ZetaStar(2, 1, 1)", Expression("zetastar", (2, 1, 1))),
    ("azeta(-2,3)", Expression("azeta", (-2, 3))),
    ("li(2,1; 1/2)", Expression("li", (2, 1), point=Fraction(1, 2))),
    ("ky(2,1 | 1,2)", Expression("ky", (2, 1), other=(1, 2))),
    ("hz(3,2; a=0.25)", Expression("hz", (3, 2), point=Fraction(1, 4))),
    ("stuffle(2 | 1)", Expression("stuffle", (2,), other=(1,))),
)


@mark.parametrize("text,expected", PARSE_PARAMS)
def test_parse_expression(text, expected):
    assert parse_expression(text) == expected


CANONICAL_PARAMS = (
    ("zeta( 2 , 1 )", "zeta(2,1)"),
    ("li(2,1;0.5)", "li(2,1; 1/2)"),
    ("ky(2,1|1,2)", "ky(2,1 | 1,2)"),
    ("hz(3,2;a=1/4)", "hz(3,2; a=1/4)"),
    ("azetastar(-1,2)", "azetastar(-1,2)"),
)


@mark.parametrize("text,canonical", CANONICAL_PARAMS)
def test_canonical_form(text, canonical):
    expr = parse_expression(text)
    assert str(expr) == canonical
    assert parse_expression(str(expr)) == expr


PARSE_ERROR_PARAMS = (
    ("zeta(2,,1)", 7),
    ("zeta(2,1", 8),
    ("zeta(0)", 5),
    ("zeta(-2)", 5),
    ("zeta(1.5)", 5),
    ("bogus(2)", 0),
    ("li(2)", 4),
    ("hz(2; b=1)", 6),
    ("zeta(2) zeta(3)", 8),
)


@mark.parametrize("text,offset", PARSE_ERROR_PARAMS)
def test_parse_errors(text, offset):
    with raises(ParseError) as e:
        parse_expression(text)
    assert e.value.offset == offset
    assert e.value.text == text


def test_symbolic_kinds():
    assert parse_expression("dual(3)").symbolic
    assert not parse_expression("zeta(3)").symbolic


def test_evaluate_zeta(cfg: PrecisionConfig):
    value = evaluate("zeta(2)", cfg)
    assert isinstance(value, ValueWithError)
    assert abs(value.value - mp.pi**2 / 6) < mpf("1e-25")


def test_evaluate_azeta(cfg: PrecisionConfig):
    value = evaluate("azeta(-2)", cfg)
    assert abs(value.value + mp.pi**2 / 12) < mpf("1e-25")


def test_evaluate_li_half(cfg: PrecisionConfig):
    value = evaluate("li(1; 1/2)", cfg)
    assert abs(value.value - mp.ln2) < mpf("1e-25")


def test_evaluate_hz(cfg: PrecisionConfig):
    value = evaluate("hz(2; a=1/2)", cfg)
    assert abs(value.value - (mp.pi**2 / 2 - 4)) < mpf("1e-25")


def test_evaluate_ky(cfg: PrecisionConfig):
    value = evaluate("ky(2 | 1)", cfg)
    assert abs(value.value - mp.zeta(3)) < mpf("1e-25")


def test_evaluate_symbolic(cfg: PrecisionConfig):
    assert evaluate("dual(3)", cfg) == Index((1, 1, 1))
    assert evaluate("dual(1,1,2,1)", cfg) == Index((3, 2))
    assert evaluate("dual(3,1,2)", cfg) == Index((1, 1, 3, 1))
    assert evaluate("stuffle(2 | 3)", cfg) == {(2, 3): 1, (3, 2): 1, (5,): 1}
    expanded = evaluate("starexpand(2,1,1)", cfg)
    assert isinstance(expanded, FormalIndexSum)
    assert len(expanded) == 4


def test_evaluate_divergent(cfg: PrecisionConfig):
    with raises(DivergenceError):
        evaluate("zeta(1,2)", cfg)
    with raises(DivergenceError):
        evaluate("li(1,2; 1)", cfg)


def test_evaluate_domain(cfg: PrecisionConfig):
    with raises(DomainError):
        evaluate("li(2; 3/2)", cfg)

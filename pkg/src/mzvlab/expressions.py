"""
Value expressions accepted by `mzvlab eval`.

    zeta(2,1)          zetastar(2,1,1)     azeta(-2,3)      azetastar(-1,2)
    li(2,1; 1/2)       ky(2,1 | 1,2)       zbstar(2,2,1)    hz(3,2; a=1/4)
    dual(1,1,2,1)      stuffle(2,1 | 1)    starexpand(2,1,1)

Negative parts are barred (alternating) slots and are only allowed in the
azeta kinds. `str(expr)` is the canonical form used as the cache key, and
parsing it gives back an equal expression.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from mzvlab.core import ParseError
from mzvlab.indices import (
    FormalIndexSum,
    Index,
    SignedIndex,
    hoffman_dual,
    star_expand,
    stuffle,
)
from mzvlab.precision import PrecisionConfig, ValueWithError, parse_point
from mzvlab.series import (
    amzsv,
    amzv,
    hurwitz_mzv,
    kyzv,
    mpl,
    mzbsv,
    mzv,
    zeta_star,
)
INDEX_KINDS = ("zeta", "zetastar", "zbstar", "dual", "starexpand")
SIGNED_KINDS = ("azeta", "azetastar")
PAIR_KINDS = ("ky", "stuffle")
POINT_KINDS = ("li", "hz")
KINDS = INDEX_KINDS + SIGNED_KINDS + PAIR_KINDS + POINT_KINDS
SYMBOLIC_KINDS = ("dual", "stuffle", "starexpand")

TOKEN_RE = re.compile(
    r"(?P<name>[A-Za-z]+)|(?P<number>-?\d+(?:/\d+|\.\d+)?)|(?P<punct>[(),;|=])"
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    """splits text into name, number and punctuation tokens, ending with 'end'"""
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True, slots=True)
class Expression:
    """one parsed value request"""

    kind: str
    index: tuple[int, ...]
    other: tuple[int, ...] = None
    point: Fraction = None

    @property
    def symbolic(self) -> bool:
        return self.kind in SYMBOLIC_KINDS

    def __str__(self) -> str:
        def parts(xs: tuple[int, ...]) -> str:
            return ",".join(str(x) for x in xs)

        body = parts(self.index)
        if self.kind in PAIR_KINDS:
            body = f"{body} | {parts(self.other)}"
        elif self.kind == "li":
            body = f"{body}; {self.point}"
        elif self.kind == "hz":
            body = f"{body}; a={self.point}"
        return f"{self.kind}({body})"


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, expected: str) -> ParseError:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return ParseError(f"expected {expected}, found {found}", token.offset, self.text)

    def expect(self, kind: str, text: str = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            raise self.error(repr(text) if text else kind)
        self.pos += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "punct" and self.current.text == text:
            self.pos += 1
            return True
        return False

    def integer(self, signed: bool) -> int:
        token = self.expect("number")
        if not re.fullmatch(r"-?\d+", token.text):
            raise ParseError(
                f"index parts are integers, got {token.text!r}", token.offset, self.text
            )
        value = int(token.text)
        if value == 0 or (value < 0 and not signed):
            raise ParseError(f"invalid index part {value}", token.offset, self.text)
        return value

    def parts(self, signed: bool = False) -> tuple[int, ...]:
        values = [self.integer(signed)]
        while self.accept(","):
            values.append(self.integer(signed))
        return tuple(values)

    def point(self) -> Fraction:
        return parse_point(self.expect("number").text)

    def parse(self) -> Expression:
        name = self.expect("name")
        kind = name.text.lower()
        if kind not in KINDS:
            raise ParseError(f"unknown expression kind {name.text!r}", name.offset, self.text)
        self.expect("punct", "(")
        index = self.parts(signed=kind in SIGNED_KINDS)
        other = point = None
        if kind in PAIR_KINDS:
            self.expect("punct", "|")
            other = self.parts()
        elif kind == "li":
            self.expect("punct", ";")
            point = self.point()
        elif kind == "hz":
            self.expect("punct", ";")
            self.expect("name", "a")
            self.expect("punct", "=")
            point = self.point()
        self.expect("punct", ")")
        self.expect("end")
        return Expression(kind, index, other, point)


def parse_expression(text: str) -> Expression:
    """parses one expression; semantic problems surface at evaluation"""
    return _Parser(text).parse()


def evaluate(
    expr: Expression | str, cfg: PrecisionConfig
) -> ValueWithError | Index | FormalIndexSum:
    """numeric kinds give a ValueWithError, symbolic kinds an index or a formal sum"""
    if isinstance(expr, str):
        expr = parse_expression(expr)
    kind, index = expr.kind, expr.index
    handlers: dict[str, Any] = {
        "zeta": lambda: mzv(index, cfg),
        "zetastar": lambda: zeta_star(index, cfg),
        "azeta": lambda: amzv(SignedIndex(index), cfg),
        "azetastar": lambda: amzsv(SignedIndex(index), cfg),
        "li": lambda: mpl(index, expr.point, cfg),
        "ky": lambda: kyzv(index, expr.other, cfg),
        "zbstar": lambda: mzbsv(index, cfg),
        "hz": lambda: hurwitz_mzv(index, expr.point, cfg),
        "dual": lambda: hoffman_dual(index),
        "stuffle": lambda: stuffle(index, expr.other),
        "starexpand": lambda: star_expand(index),
    }
    return handlers[kind]()

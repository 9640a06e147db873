"""Recursive-descent parser for degree-2 polynomials in x, y, z.

Grammar::

    equation := expr ('=' expr)?
    expr     := sign* term (('+' | '-') sign* term)*
    term     := factor (('*' factor) | ('/' NUMBER) | factor)*
    factor   := NUMBER | VAR ('^' INT)?

Implicit multiplication needs a token boundary: ``2x`` and ``x y`` are
fine, ``2xy`` is rejected as an ambiguous token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..core import Quadric
from ..errors import DegreeError, PolynomialSyntaxError, UnknownVariable

VARS = ("x", "y", "z")
_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<word>[A-Za-z_]+)
  | (?P<op>[-+*/^=])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str       # "num", "var", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[i]!r}", i,
                                        ("number", "variable", "operator"))
        kind = m.lastgroup
        tok = m.group()
        if kind == "word":
            if tok in VARS:
                kind = "var"
            elif all(ch in VARS for ch in tok):
                raise PolynomialSyntaxError(f"ambiguous token {tok!r}; write products "
                                            "as x*y or x y", i, ("'*'", "space"))
            else:
                raise UnknownVariable(f"unknown variable {tok!r}", i, tuple(VARS))
        if kind != "ws":
            out.append(Token(kind, tok, i))
        i = m.end()
    out.append(Token("end", "", len(text)))
    return out


Monomial = tuple  # exponents (ex, ey, ez)


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, expected):
        raise PolynomialSyntaxError(msg, self.tok.pos, expected)

    def equation(self) -> dict:
        lhs = self.expr()
        if self.tok.kind == "op" and self.tok.text == "=":
            self.take()
            rhs = self.expr()
            for mono, c in rhs.items():
                lhs[mono] = lhs.get(mono, 0.0) - c
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}", ("'+'", "'-'", "'='", "end"))
        return lhs

    def signs(self) -> float:
        s = 1.0
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self.take().text == "-":
                s = -s
        return s

    def expr(self) -> dict:
        poly: dict = {}
        sign = self.signs()
        while True:
            mono, c = self.term()
            poly[mono] = poly.get(mono, 0.0) + sign * c
            if self.tok.kind == "op" and self.tok.text in "+-":
                sign = self.signs()
                continue
            return poly

    def term(self):
        start = self.tok.pos
        exps = [0, 0, 0]
        coef = self.factor(exps, start)
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.take()
                coef *= self.factor(exps, start)
            elif t.kind == "op" and t.text == "/":
                self.take()
                if self.tok.kind != "num":
                    self.fail("only numbers may divide", ("number",))
                d = float(self.take().text)
                if d == 0.0:
                    raise PolynomialSyntaxError("division by zero", t.pos, ("nonzero number",))
                coef /= d
            elif t.kind == "var":
                coef *= self.factor(exps, start)
            elif t.kind == "num":
                self.fail("missing operator between numbers", ("'*'", "'+'", "'-'"))
            else:
                return tuple(exps), coef

    def factor(self, exps, start) -> float:
        """Consume one factor, adding variable exponents to exps; return its coefficient."""
        t = self.tok
        if t.kind == "num":
            self.take()
            return float(t.text)
        if t.kind == "var":
            self.take()
            k = 1
            if self.tok.kind == "op" and self.tok.text == "^":
                self.take()
                if self.tok.kind != "num" or not self.tok.text.isdigit():
                    self.fail("exponent must be a non-negative integer", ("digit",))
                k = int(self.take().text)
            exps[VARS.index(t.text)] += k
            if sum(exps) > 2:
                raise DegreeError(f"term has degree {sum(exps)} > 2", start, ())
            return 1.0
        self.fail(f"expected a term, found {t.text or 'end of input'!r}",
                  ("number", "variable"))


def parse_polynomial(text: str) -> dict:
    """Monomial exponent tuple -> coefficient, with any right-hand side moved left."""
    if not text.strip():
        raise PolynomialSyntaxError("empty expression", 0, ("number", "variable"))
    return _Parser(text).equation()


def poly_to_quadric(poly: dict) -> Quadric:
    def g(*e):
        return float(poly.get(tuple(e), 0.0))
    return Quadric(a=g(2, 0, 0), a1=g(0, 2, 0), a2=g(0, 0, 2),
                   b=g(0, 1, 1) / 2, b1=g(1, 0, 1) / 2, b2=g(1, 1, 0) / 2,
                   c=g(1, 0, 0) / 2, c1=g(0, 1, 0) / 2, c2=g(0, 0, 1) / 2,
                   k=-g(0, 0, 0))


def parse_quadric(text: str) -> Quadric:
    return poly_to_quadric(parse_polynomial(text))


def format_quadric(q: Quadric) -> str:
    """Canonical text; float reprs make parse_quadric(format_quadric(q)) == q exactly."""
    terms = [(q.a, "x^2"), (q.a1, "y^2"), (q.a2, "z^2"),
             (2 * q.b2, "x*y"), (2 * q.b1, "x*z"), (2 * q.b, "y*z"),
             (2 * q.c, "x"), (2 * q.c1, "y"), (2 * q.c2, "z"), (-q.k, "")]
    parts = []
    for c, mono in terms:
        if c == 0.0:
            continue
        body = repr(abs(float(c))) + ("*" + mono if mono else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts or ["0.0"]) + " = 0"

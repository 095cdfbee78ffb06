"""Text grammar for polynomials.

::

    expr   := term (('+'|'-') term)*
    term   := ('+'|'-')* factor ('*' factor)*
    factor := atom ['^' int]
    atom   := int ['/' int] | name | '(' expr ')'

Whitespace is ignored. Names are identifiers such as ``x``, ``x0``, ``y``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from a3check.errors import ParseError
from a3check.exactcore.poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern matches any char
            raise ParseError(f"unexpected input at {pos}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        elif op in "+-*/^()":
            tokens.append(("op", op))
        else:
            raise ParseError(f"unexpected character {op!r} in {text!r}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ParseError(f"expected {want}, found {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        sign = 1
        while self.peek() in (("op", "+"), ("op", "-")):
            if self.take()[1] == "-":
                sign = -sign
        acc = self.factor() * sign
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            base = base ** int(self.take("num")[1])
        return base

    def atom(self) -> Poly:
        kind, value = self.peek()
        if kind == "num":
            self.take()
            c = Fraction(int(value))
            if self.peek() == ("op", "/"):
                self.take()
                den = int(self.take("num")[1])
                if den == 0:
                    raise ParseError("zero denominator")
                c /= den
            return Poly.constant(self.variables, c)
        if kind == "name":
            self.take()
            if value not in self.variables:
                raise ParseError(f"unknown variable {value!r}; allowed: {', '.join(self.variables)}")
            return Poly.variable(self.variables, value)
        if (kind, value) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected token {value!r}")


def parse_poly(text: str, variables: Sequence[str] | None = None) -> Poly:
    """Parse ``text`` into a :class:`Poly`.

    With ``variables=None`` the variables are the names appearing in the text,
    in sorted order; otherwise any other name is a :class:`ParseError`.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    if variables is None:
        variables = sorted({v for k, v in tokens if k == "name"})
    parser = _Parser(tokens, tuple(variables))
    result = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input starting at {parser.peek()[1]!r}")
    return result

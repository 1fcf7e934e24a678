"""
Tiny recursive-descent parser for the arithmetic expressions used everywhere
in the text syntax: scalar literals (``-3/2*t^-1*z``), noncommutative
polynomials (``x2*x1 - t*x1*x2``) and Hopf-algebra elements (``z*g + x``).

``*`` is the (noncommutative) product; juxtaposition is rejected.  Names are
resolved through a callback, so the same grammar serves every value type.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import Field, Scalar, ScalarSyntaxError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


class ExprSyntaxError(ScalarSyntaxError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(message)
        self.message = message
        self.pos = pos


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, field: Field, resolve):
        self.toks = tokenize(text)
        self.i = 0
        self.field = field
        self.resolve = resolve

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ExprSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ExprSyntaxError("empty expression", 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            if kind in ("name", "int") or val == "(":
                raise ExprSyntaxError("juxtaposition is not allowed; use '*'", pos)
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        kind, val, pos = self.peek()
        neg = False
        if val in "+-" and kind == "op":
            self.take()
            neg = val == "-"
        value = self.term()
        if neg:
            value = -value
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.power()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.power()
            elif kind == "op" and val == "/":
                self.take()
                rhs = self.power()
                if not isinstance(rhs, Scalar):
                    raise ExprSyntaxError("can only divide by a scalar", pos)
                if rhs.is_zero():
                    raise ExprSyntaxError("division by zero", pos)
                value = value * rhs.inverse()
            else:
                return value

    def power(self):
        kind, val, pos = self.peek()
        value = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            k_kind, k_val, k_pos = self.take()
            if k_kind != "int":
                raise ExprSyntaxError("exponent must be an integer", k_pos)
            k = sign * int(k_val)
            if isinstance(value, Scalar):
                if k < 0 and value.is_zero():
                    raise ExprSyntaxError("negative power of zero", pos)
                return value**k
            if k < 0:
                raise ExprSyntaxError("negative powers only for scalars", k_pos)
            result = None
            for _ in range(k):
                result = value if result is None else result * value
            if result is None:
                result = self.resolve("1", pos) if k == 0 else value
            return result
        return value

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.field.from_fraction(Fraction(int(val)))
        if kind == "name":
            return self.resolve(val, pos)
        if val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def scalar_symbol(field: Field, name: str, pos: int = 0) -> Scalar:
    """Resolve the scalar symbols ``t`` and ``z`` in ``field``."""
    if name == "t":
        if not field.contains_symbol("t"):
            raise ExprSyntaxError("t requires rational-function field", pos)
        return field.t
    if name == "z":
        if not field.contains_symbol("z"):
            raise ExprSyntaxError("z requires cyclotomic field", pos)
        return field.z
    raise ExprSyntaxError(f"unknown symbol {name!r}", pos)


def parse_expression(text: str, field: Field, resolve=None):
    """Parse ``text``; names other than t/z go to ``resolve(name, pos)``."""

    def _resolve(name, pos):
        if name in ("t", "z"):
            return scalar_symbol(field, name, pos)
        if name == "1":
            return field.one
        if resolve is None:
            raise ExprSyntaxError(f"unknown symbol {name!r}", pos)
        return resolve(name, pos)

    return _Parser(text, field, _resolve).parse()


def parse_scalar(text: str, field: Field) -> Scalar:
    value = parse_expression(text, field)
    if not isinstance(value, Scalar):
        raise ExprSyntaxError("not a scalar", 0)
    return value

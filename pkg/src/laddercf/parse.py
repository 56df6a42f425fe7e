"""Parser for the operator expression grammar (shared with the CLI).

Grammar::

    expr   := term (('+' | '-') term)*
    term   := signed (('*' | '/') signed)*
    signed := '-' signed | '+' signed | power
    power  := atom ('^' signed_atom)*          # left-associative
    atom   := 'D' | 'x' | INTEGER | '(' expr ')'

`D` and `x` are noncommuting atoms: `D` is the derivative operator, `x` the
identity rational function.  `*` is operator composition when both operands
are operators and scalar multiplication otherwise; `/` divides by a scalar
(dividing by an operator is rejected); `^` takes integer exponents and means
repeated composition on operators.  Composition with a multiplication
operator is expressed by lifting the scalar with `D^0`, the identity
operator: `D*(x*D^0)` is the product rule composition x*D + 1, while `D*x`
is plain coefficient scaling.

`parse_expression` evaluates straight to a `RatFun` or a `DiffOp`.  The
pretty-printers in `rational` and `operators` emit this same grammar, and
parsing their output reproduces the original value exactly.
"""

from __future__ import annotations

import re

from .operators import DiffOp
from .rational import RatFun

Value = RatFun | DiffOp


class ExprError(ValueError):
    """Parse or semantic error, carrying the source position (0-based)."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[Dx])|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ExprError(f"unexpected character {text[bad_at]!r}", bad_at)
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, symbol: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != symbol:
            raise ExprError(f"expected {symbol!r}", pos)
        self.advance()

    # -- grammar -------------------------------------------------------------

    def parse(self) -> Value:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r}", pos)
        return value

    def expr(self) -> Value:
        value = self.term()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                value = _add(value, rhs) if val == "+" else _sub(value, rhs)
            else:
                return value

    def term(self) -> Value:
        value = self.signed()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.advance()
                rhs = self.signed()
                value = _mul(value, rhs) if val == "*" else _div(value, rhs, pos)
            else:
                return value

    def signed(self) -> Value:
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            inner = self.signed()
            return inner if val == "+" else _neg(inner)
        return self.power()

    def power(self) -> Value:
        value = self.atom()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "^":
                self.advance()
                exponent = self.signed_atom()
                value = _pow(value, exponent, pos)
            else:
                return value

    def signed_atom(self) -> Value:
        # exponent position: sign prefixes plus a single atom, so that chains
        # like 2^3^2 stay left-associative
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            inner = self.signed_atom()
            return inner if val == "+" else _neg(inner)
        return self.atom()

    def atom(self) -> Value:
        kind, val, pos = self.advance()
        if kind == "int":
            return RatFun.const(int(val))
        if kind == "name":
            return DiffOp.D() if val == "D" else RatFun.x()
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprError("expected 'D', 'x', an integer, or '('",
                        pos if kind != "end" else len(self.text))


# -- semantics ------------------------------------------------------------------

def _neg(v: Value) -> Value:
    return -v


def _add(a: Value, b: Value) -> Value:
    if isinstance(a, DiffOp) or isinstance(b, DiffOp):
        return _lift(a) + _lift(b)
    return a + b


def _sub(a: Value, b: Value) -> Value:
    if isinstance(a, DiffOp) or isinstance(b, DiffOp):
        return _lift(a) - _lift(b)
    return a - b


def _lift(v: Value) -> DiffOp:
    return v if isinstance(v, DiffOp) else DiffOp.mul_by(v)


def _mul(a: Value, b: Value) -> Value:
    if isinstance(a, DiffOp) and isinstance(b, DiffOp):
        return a @ b
    if isinstance(a, DiffOp):
        return a * b
    if isinstance(b, DiffOp):
        return b * a
    return a * b


def _div(a: Value, b: Value, pos: int) -> Value:
    if isinstance(b, DiffOp):
        raise ExprError("cannot divide by an operator", pos)
    if b.is_zero:
        raise ExprError("division by zero", pos)
    if isinstance(a, DiffOp):
        return a * (RatFun.const(1) / b)
    return a / b


def _pow(base: Value, exponent: Value, pos: int) -> Value:
    if isinstance(exponent, DiffOp) or not exponent.is_constant:
        raise ExprError("exponent must be an integer constant", pos)
    e = exponent.as_constant()
    if e.denominator != 1:
        raise ExprError("exponent must be an integer constant", pos)
    n = int(e)
    if isinstance(base, DiffOp):
        if n < 0:
            raise ExprError("operators cannot be raised to negative powers", pos)
        return base.power(n)
    if n < 0 and base.is_zero:
        raise ExprError("zero cannot be raised to a negative power", pos)
    return base ** n


def parse_expression(text: str) -> Value:
    """Parse `text` into a RatFun or DiffOp; raises ExprError with a position."""
    return _Parser(text).parse()


def parse_operator(text: str) -> DiffOp:
    """Parse and require an operator (an order-0 result is lifted)."""
    return _lift(parse_expression(text))


def parse_ratfun(text: str) -> RatFun:
    """Parse and require a scalar rational function."""
    value = parse_expression(text)
    if isinstance(value, DiffOp):
        raise ExprError("expected a scalar expression, got an operator", 0)
    return value

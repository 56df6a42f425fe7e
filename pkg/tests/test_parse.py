"""Operator grammar: parsing, semantics, and printer round-trips."""

import random
from fractions import Fraction as F

import pytest

from laddercf import (DiffOp, ExprError, Poly, RatFun, bessel_operator,
                      parse_expression, parse_operator, parse_ratfun)
from _util import rand_diffop, rand_ratfun


def test_atoms_and_literals():
    assert parse_expression("x") == RatFun.x()
    assert parse_expression("D") == DiffOp.D()
    assert parse_expression("42") == RatFun.const(42)
    assert parse_expression("3/2") == RatFun.const(F(3, 2))
    assert parse_expression("-x") == RatFun(Poly((0, -1)))


def test_precedence():
    assert parse_expression("1 + 2*3") == RatFun.const(7)
    assert parse_expression("(1 + 2)*3") == RatFun.const(9)
    assert parse_expression("2*x^2") == RatFun(Poly((0, 0, 2)))
    assert parse_expression("1 - 2 - 3") == RatFun.const(-4)
    assert parse_expression("12/2/3") == RatFun.const(2)


def test_power_left_associative():
    assert parse_expression("2^3^2") == RatFun.const(64)
    assert parse_expression("x^-1") == RatFun(Poly.const(1), Poly.x())
    assert parse_expression("x^(-2)") == RatFun(Poly.const(1), Poly((0, 0, 1)))


def test_bessel_expression():
    assert parse_expression("D^2 + (1/x)*D - 1/x^2") == bessel_operator(1)
    assert parse_expression("D^2 + 1/x*D - 9/4/x^2") == bessel_operator(F(3, 2))


def test_scalar_versus_composition():
    x_d = DiffOp((RatFun.x(), 0))
    assert parse_expression("x*D") == x_d
    # a scalar operand always means scaling, whichever side it is on
    assert parse_expression("D*x") == x_d
    # composition with a multiplication operator goes through D^0
    assert parse_expression("D*(x*D^0)") == DiffOp((RatFun.x(), 1))
    assert parse_expression("D^0") == DiffOp.identity()


def test_operator_sums_and_powers():
    d = DiffOp.D()
    assert parse_expression("D*D") == DiffOp.D(2)
    assert parse_expression("D^2 + 1") == DiffOp.D(2) + DiffOp.identity()
    assert parse_expression("(D + x)^2") == (d + DiffOp.mul_by(RatFun.x())).power(2)
    assert parse_expression("2*D - D") == d


def test_division_rules():
    assert parse_expression("D/2") == DiffOp((F(1, 2),) + (0,))
    with pytest.raises(ExprError, match="divide by an operator"):
        parse_expression("1/D")
    with pytest.raises(ExprError, match="division by zero"):
        parse_expression("x/0")
    with pytest.raises(ExprError, match="integer constant"):
        parse_expression("x^D")
    with pytest.raises(ExprError, match="integer constant"):
        parse_expression("x^(1/2)")
    with pytest.raises(ExprError, match="negative powers"):
        parse_expression("D^-1")


def test_parse_error_positions():
    with pytest.raises(ExprError) as exc:
        parse_expression("D^2 + @")
    assert exc.value.pos == 6
    with pytest.raises(ExprError):
        parse_expression("(x + 1")
    with pytest.raises(ExprError):
        parse_expression("x + ")
    with pytest.raises(ExprError):
        parse_expression("")


def test_parse_helpers():
    assert parse_operator("x") == DiffOp.mul_by(RatFun.x())
    with pytest.raises(ExprError, match="scalar"):
        parse_ratfun("D")


def test_ratfun_printer_roundtrip():
    rng = random.Random(301)
    for _ in range(60):
        f = rand_ratfun(rng, max_deg=4)
        assert parse_expression(str(f)) == f


def test_diffop_printer_roundtrip():
    rng = random.Random(302)
    for _ in range(50):
        op = rand_diffop(rng, max_order=3, max_deg=3)
        assert parse_expression(str(op)) == op
    assert parse_expression(str(DiffOp.zero())) == RatFun()
    assert parse_expression(str(bessel_operator(F(7, 2)))) == bessel_operator(F(7, 2))

"""Exact rational-function arithmetic: canonical forms, calculus, evaluation."""

import random
from fractions import Fraction as F

import pytest

from laddercf import Poly, PoleError, RatFun, frac_from_str, frac_str, poly_gcd
from _util import rand_poly, rand_ratfun

X = Poly.x()


def test_normalize_cancels_common_factor():
    # (x^2 - 1)/(x - 1) -> x + 1
    f = RatFun(X * X - 1, X - Poly.const(1))
    assert f == RatFun(Poly((1, 1)))
    assert f.den == Poly.const(1)


def test_normalize_zero_numerator():
    f = RatFun(Poly(), X ** 3 + 2)
    assert f.is_zero
    assert f.num == Poly() and f.den == Poly.const(1)


def test_normalize_monic_denominator():
    # (2x)/4 -> (x/2)/1
    f = RatFun(Poly((0, 2)), Poly.const(4))
    assert f.num == Poly((0, F(1, 2))) and f.den == Poly.const(1)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        RatFun(X, Poly())


def test_field_arithmetic_examples():
    x = RatFun.x()
    inv_x = RatFun(Poly.const(1), X)
    assert inv_x + x == RatFun(X * X + 1, X)                       # (x^2+1)/x
    assert RatFun(X * X, Poly((1, -1))) * RatFun(Poly((1, -1)), X) == x
    assert RatFun.const(1) / RatFun(X * X) == RatFun(Poly.const(1), X * X)


def test_division_by_zero_ratfun():
    with pytest.raises(ZeroDivisionError, match="zero rational function"):
        RatFun.const(1) / RatFun()


def test_derivative_x_basics():
    assert RatFun(X * X).deriv_x() == RatFun(Poly((0, 2)))
    assert RatFun(Poly.const(1), X).deriv_x() == RatFun(Poly.const(-1), X * X)


def test_derivative_x_against_finite_differences():
    # oracle: central differences at 5 points clear of the pole at x = 1
    f = RatFun(X * X, Poly((1, -1)))
    expected = RatFun(Poly((0, 2, -1)), Poly((1, -1)) ** 2)        # (2x - x^2)/(1-x)^2
    assert f.deriv_x() == expected
    h = 1e-6
    for x0 in (-0.5, 0.25, 0.5, 2.0, 3.0):
        fd = (f.eval_float(x0 + h) - f.eval_float(x0 - h)) / (2 * h)
        assert abs(fd - expected.eval_float(x0)) < 1e-5 * max(1.0, abs(fd))


def test_derivative_t():
    # f_t = -x f_x
    assert RatFun(Poly((F(1, 2), -1))).deriv_t() == RatFun.x()
    assert RatFun.const(7).deriv_t() == RatFun()
    assert RatFun(X * X).deriv_t() == RatFun(Poly((0, 0, -2)))     # mu_t = -2 mu


def test_eval_exact():
    assert RatFun(Poly((1, 1))).eval_at(2) == 3
    assert (RatFun.const(F(3, 2)) + RatFun(X * X, Poly((1, -1)))).eval_at(F(1, 2)) == 2


def test_eval_pole():
    with pytest.raises(PoleError) as exc:
        RatFun(Poly.const(1), X).eval_at(0)
    assert exc.value.location == 0


def test_normalization_roundtrip_random():
    rng = random.Random(101)
    for _ in range(100):
        f = rand_ratfun(rng)
        r = rand_poly(rng, nonzero=True)
        assert RatFun(f.num * r, f.den * r) == f


def test_commutativity_and_associativity_random():
    rng = random.Random(102)
    for _ in range(100):
        a, b, c = (rand_ratfun(rng, max_deg=6) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)


def test_product_rule_random():
    rng = random.Random(103)
    for _ in range(40):
        a, b = rand_ratfun(rng), rand_ratfun(rng)
        assert (a * b).deriv_x() == a * b.deriv_x() + b * a.deriv_x()


def test_eval_commutes_with_arithmetic():
    rng = random.Random(104)
    for _ in range(40):
        a, b = rand_ratfun(rng), rand_ratfun(rng)
        p = F(rng.randint(2, 9), rng.randint(1, 3))
        if a.has_pole_at(p) or b.has_pole_at(p) or (a + b).has_pole_at(p):
            continue
        assert (a + b).eval_at(p) == a.eval_at(p) + b.eval_at(p)
        if not (a * b).has_pole_at(p):
            assert (a * b).eval_at(p) == a.eval_at(p) * b.eval_at(p)


def test_poly_gcd_monic():
    a = (X - 1) * (X - 2) * Poly.const(3)
    b = (X - 1) * (X + 5) * Poly.const(F(1, 7))
    assert poly_gcd(a, b) == X - 1


def test_frac_str_roundtrip():
    for q in (F(0), F(3), F(-3, 2), F(7, 12)):
        assert frac_from_str(frac_str(q)) == q
    assert frac_str(F(3)) == "3"
    assert frac_str(F(-3, 2)) == "-3/2"


def test_json_roundtrip():
    rng = random.Random(105)
    for _ in range(25):
        p = rand_poly(rng)
        assert Poly.from_json_obj(p.to_json_obj()) == p
        f = rand_ratfun(rng)
        assert RatFun.from_json_obj(f.to_json_obj()) == f
    assert Poly().to_json_obj() == []
    assert RatFun().to_json_obj() == {"num": [], "den": ["1"]}


def test_immutability():
    f = RatFun.x()
    with pytest.raises(AttributeError):
        f.num = Poly()
    p = Poly.x()
    with pytest.raises(AttributeError):
        p.coeffs = ()

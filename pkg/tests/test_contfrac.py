"""Continued-fraction structure: collapse, float evaluation, pole reporting."""

from fractions import Fraction as F

import pytest

from laddercf import CFPoleError, ContinuedFraction, Poly, RatFun
from laddercf.riccati import bessel_cf, ladder


def test_terminal_must_match_innermost_denominator():
    x2 = RatFun(Poly((0, 0, 1)))
    with pytest.raises(ValueError, match="terminal"):
        ContinuedFraction(head=RatFun.const(1), terms=((x2, RatFun.const(3)),),
                          terminal=RatFun.const(4))


def test_collapse_simple():
    # 1 + 2/(3 + 4/5) = 1 + 10/19
    cf = ContinuedFraction(
        head=RatFun.const(1),
        terms=((RatFun.const(2), RatFun.const(3)), (RatFun.const(4), RatFun.const(5))),
        terminal=RatFun.const(5))
    assert cf.collapse() == RatFun.const(F(29, 19))
    assert abs(cf.eval_float(0.7) - 29 / 19) < 1e-14


def test_degenerate_depth_one():
    cf = ContinuedFraction(head=RatFun.const(F(1, 2)), terms=(),
                           terminal=RatFun(Poly((0, -1))))
    assert cf.collapse() == RatFun(Poly((F(1, 2), -1)))
    assert cf.eval_float(2.0) == -1.5
    assert cf.depth == 1


def test_float_matches_exact_collapse():
    for depth in (2, 5, 9):
        cf = bessel_cf(depth, "plus")
        exact = cf.collapse()
        for x0 in (0.25, 0.5, 1.0, 2.0, 3.75):
            ref = float(exact.eval_at(F(x0)))
            assert abs(cf.eval_float(x0) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_pole_reports_level():
    cf = bessel_cf(2, "minus")          # 3/2 + x^2/(1 - x)
    with pytest.raises(CFPoleError) as exc:
        cf.eval_float(1.0)
    assert exc.value.level == 1

    cf3 = bessel_cf(3, "minus")         # innermost level is the second bar
    with pytest.raises(CFPoleError) as exc:
        cf3.eval_float(1.0)
    assert exc.value.level == 2


def test_value_at_zero_is_head():
    for depth in (1, 2, 3, 7):
        for branch in ("minus", "plus"):
            cf = bessel_cf(depth, branch)
            beta = F(2 * depth - 1, 2)
            assert cf.collapse().eval_at(0) == beta
            assert abs(cf.eval_float(0.0) - float(beta)) < 1e-15


def test_json_shape():
    cf = bessel_cf(3, "minus")
    obj = cf.to_json_obj()
    assert set(obj) == {"head", "terms", "terminal"}
    assert len(obj["terms"]) == 2
    assert obj["terms"][0]["num"] == {"num": ["0", "0", "1"], "den": ["1"]}


def test_str_nested():
    assert str(bessel_cf(3, "minus")) == "5/2 + x^2/(3 + x^2/(-x + 1))"
    assert str(bessel_cf(1, "plus")) == "1/2 + x"
    assert str(ladder(1, "minus")[0].f) == "-x + 1/2"

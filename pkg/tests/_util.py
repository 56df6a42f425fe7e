"""Shared random-value generators for the test suite (seeded by each test)."""

from __future__ import annotations

import random
from fractions import Fraction

from laddercf import DiffOp, EulerOp, Poly, RatFun


def rand_fraction(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_poly(rng: random.Random, max_deg: int = 3, nonzero: bool = False) -> Poly:
    while True:
        deg = rng.randint(0, max_deg)
        p = Poly([rand_fraction(rng, -4, 4, 3) for _ in range(deg + 1)])
        if not (nonzero and p.is_zero):
            return p


def rand_ratfun(rng: random.Random, max_deg: int = 3) -> RatFun:
    return RatFun(rand_poly(rng, max_deg), rand_poly(rng, max_deg, nonzero=True))


def rand_diffop(rng: random.Random, max_order: int = 2, max_deg: int = 3) -> DiffOp:
    order = rng.randint(0, max_order)
    coeffs = [rand_ratfun(rng, max_deg) for _ in range(order + 1)]
    if coeffs[0].is_zero:
        coeffs[0] = RatFun.const(1)
    return DiffOp(coeffs)


def rand_euler(rng: random.Random, max_abs_m: int = 3, max_deg: int = 4) -> EulerOp:
    m = rng.randint(-max_abs_m, max_abs_m)
    deg = rng.randint(0, max_deg)
    coeffs = [rand_fraction(rng, -4, 4, 3) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return EulerOp(m, Poly(coeffs))

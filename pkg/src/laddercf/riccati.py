"""Riccati equations for second-order operators and the exact solution ladder.

For A = a0 D^2 + a1 D + a2 and an eigenvalue lam, the logarithmic derivative
f = psi'/psi of a solution of A psi = lam psi satisfies

    a0 (f' + f^2) + a1 f + a2 = lam.

In the t-variable (x = exp(-t)) the Bessel case becomes

    f_t + f^2 = beta^2 + lam * x^2,      f = (log psi)_t = -x psi'/psi,

and `step_up` maps a solution at order beta to one at beta + 1 through

    fhat = betahat + mu / (f + beta),    mu = lam * x^2,  betahat = beta + 1.

Iterating from the fixed-point seeds f = 1/2 -+ sqrt(lam) x at beta = -1/2
yields the ladder of exact rational solutions f_j at beta_j = j - 1/2 and,
unrolled, a finite continued fraction for each f_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .contfrac import ContinuedFraction
from .operators import DiffOp
from .rational import Poly, RatFun, Scalar

Branch = Literal["minus", "plus"]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RiccatiForm:
    """Coefficient data (a0, a1, a2, lam) of the associated Riccati equation."""

    a0: RatFun
    a1: RatFun
    a2: RatFun
    lam: Fraction

    @classmethod
    def from_operator(cls, a: DiffOp, lam: Scalar) -> "RiccatiForm":
        if a.order != 2:
            raise ValueError("Riccati association needs an operator of order 2")
        a0, a1, a2 = a.coeffs
        return cls(a0=a0, a1=a1, a2=a2, lam=Fraction(lam))

    def residual(self, f: RatFun) -> RatFun:
        """a0 (f' + f^2) + a1 f + a2 - lam; zero exactly when f solves the equation."""
        return (self.a0 * (f.deriv_x() + f * f) + self.a1 * f + self.a2
                - RatFun.const(self.lam))


def residual_t(f: RatFun, beta: Scalar, lam: Scalar = 1) -> RatFun:
    """Residual of f_t + f^2 = beta^2 + lam x^2, i.e. -x f' + f^2 - beta^2 - lam x^2."""
    beta = Fraction(beta)
    lam = Fraction(lam)
    return f.deriv_t() + f * f - RatFun.const(beta * beta) - RatFun(Poly((0, 0, lam)))


def mu_of(lam: Scalar = 1) -> RatFun:
    """The inhomogeneity mu = lam * x^2, which satisfies mu_t = -2 mu."""
    return RatFun(Poly((0, 0, Fraction(lam))))


def step_up(f: RatFun, beta: Scalar, lam: Scalar = 1) -> tuple[RatFun, Fraction]:
    """One ladder step: (f, beta) -> (betahat + mu/(f + beta), beta + 1).

    Maps exact solutions at order beta to exact solutions at beta + 1.
    """
    beta = Fraction(beta)
    fb = f + RatFun.const(beta)
    if fb.is_zero:
        raise ValueError("degenerate step: f + beta vanishes identically")
    betahat = beta + 1
    return RatFun.const(betahat) + mu_of(lam) / fb, betahat


def step_down(fhat: RatFun, betahat: Scalar, lam: Scalar = 1) -> tuple[RatFun, Fraction]:
    """Inverse ladder step, solving (f + beta)(fhat - betahat) = mu for f."""
    betahat = Fraction(betahat)
    fb = fhat - RatFun.const(betahat)
    if fb.is_zero:
        raise ValueError("degenerate step: fhat - betahat vanishes identically")
    beta = betahat - 1
    return mu_of(lam) / fb - RatFun.const(beta), beta


def _sqrt_fraction(lam: Fraction) -> Fraction:
    num = math.isqrt(lam.numerator)
    den = math.isqrt(lam.denominator)
    if num * num != lam.numerator or den * den != lam.denominator:
        raise ValueError(f"lambda = {lam} has no rational square root; "
                         "exact fixed points need a perfect square")
    return Fraction(num, den)


def fixed_points(lam: Scalar = 1) -> list[tuple[RatFun, Fraction]]:
    """Solutions fixed by the ladder step: f = 1/2 +- sqrt(lam) x at beta = -1/2.

    The order constraint (beta + 1)^2 = beta^2 forces beta = -1/2; lam must be
    a positive perfect-square rational for the result to stay exact.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    s = _sqrt_fraction(lam)
    beta = -_HALF
    return [(RatFun(Poly((_HALF, s))), beta), (RatFun(Poly((_HALF, -s))), beta)]


@dataclass(frozen=True)
class LadderState:
    """One rung: index j, order beta_j = j - 1/2, solution f_j, branch label."""

    j: int
    beta: Fraction
    f: RatFun
    branch: Branch

    def to_json_obj(self) -> dict:
        return {"j": self.j, "beta": str(self.beta), "branch": self.branch,
                "f": self.f.to_json_obj()}


def seed(branch: Branch = "minus", lam: Scalar = 1) -> RatFun:
    """The branch seed f_1 = 1/2 -+ sqrt(lam) x (beta_1 = 1/2)."""
    s = _sqrt_fraction(Fraction(lam))
    return RatFun(Poly((_HALF, -s if branch == "minus" else s)))


def ladder(depth: int, branch: Branch = "minus", lam: Scalar = 1) -> list[LadderState]:
    """Generate the first `depth` rungs of exact rational Riccati solutions.

    f_1 is the branch seed; each further rung is `step_up` of the previous one.
    Every emitted state satisfies residual_t(f_j, j - 1/2, lam) == 0 exactly.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if branch not in ("minus", "plus"):
        raise ValueError(f"unknown branch {branch!r}")
    lam = Fraction(lam)
    f = seed(branch, lam)
    beta = _HALF
    states = [LadderState(j=1, beta=beta, f=f, branch=branch)]
    for j in range(2, depth + 1):
        f, beta = step_up(f, beta, lam)
        states.append(LadderState(j=j, beta=beta, f=f, branch=branch))
    return states


def bessel_cf(depth: int, branch: Branch = "minus", lam: Scalar = 1) -> ContinuedFraction:
    """Unroll the ladder recurrence into a finite continued fraction.

    For depth J >= 2:

        f_J = beta_J + mu/(2 beta_{J-1} + mu/(... + mu/(f_1 + beta_1)))

    with mu = lam x^2, so the partial numerators are all mu, the intermediate
    partial denominators are the constants 2 beta_j = 2j - 1, and the terminal
    level is f_1 + beta_1.  Collapsing reproduces ladder(depth)[-1].f exactly.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    lam = Fraction(lam)
    f1 = seed(branch, lam)
    beta_depth = Fraction(2 * depth - 1, 2)
    head = RatFun.const(beta_depth)
    if depth == 1:
        return ContinuedFraction(head=head, terms=(),
                                 terminal=f1 - RatFun.const(_HALF))
    mu = mu_of(lam)
    terminal = f1 + RatFun.const(_HALF)
    terms = tuple((mu, RatFun.const(Fraction(2 * j - 1))) for j in range(depth - 1, 1, -1))
    terms = terms + ((mu, terminal),)
    return ContinuedFraction(head=head, terms=terms, terminal=terminal)

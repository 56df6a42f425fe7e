"""Exact verification suites behind the `verify` command.

Each suite runs a set of identity checks by exact rational arithmetic and
reports one case per checked law.  A case is "pass" or "fail"; the status
"flagged" is reserved for documented divergences between well-known printed
closed forms and what the governing equations actually force — those cases
confirm the divergence and show the oracle-backed correction, and they never
fail a run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import chebyshev as cheb
from .operators import (DiffOp, EulerOp, bessel_operator, darboux,
                        euler_from_diffop, factored_potential, right_divide,
                        to_schrodinger)
from .rational import Poly, RatFun
from .riccati import (bessel_cf, fixed_points, ladder, residual_t, step_down,
                      step_up)

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"

SUITES = ("riccati", "chebyshev", "darboux", "euler")


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    status: str
    detail: str


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    def add(self, case_id: str, ok: bool, detail: str):
        self.cases.append(CaseResult(case_id, PASS if ok else FAIL, detail))

    def add_flagged(self, case_id: str, confirmed: bool, detail: str):
        # a divergence case fails if the expected divergence is NOT observed
        self.cases.append(CaseResult(case_id, FLAGGED if confirmed else FAIL, detail))

    def finish(self) -> "VerificationReport":
        self.cases.sort(key=lambda c: c.case_id)
        return self

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.cases) else PASS

    @property
    def counts(self) -> tuple[int, int, int]:
        """(passed, failed, flagged)."""
        statuses = [c.status for c in self.cases]
        return statuses.count(PASS), statuses.count(FAIL), statuses.count(FLAGGED)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "overall": self.overall,
            "cases": [{"id": c.case_id, "status": c.status, "detail": c.detail}
                      for c in self.cases],
        }


def _random_ratfun(rng: random.Random, max_deg: int = 3) -> RatFun:
    def rand_poly(min_deg=0):
        deg = rng.randint(min_deg, max_deg)
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg + 1)]
        return Poly(coeffs)

    num = rand_poly()
    den = Poly()
    while den.is_zero:
        den = rand_poly()
    return RatFun(num, den)


def _random_diffop(rng: random.Random, max_order: int = 2, max_deg: int = 3) -> DiffOp:
    order = rng.randint(0, max_order)
    coeffs = [_random_ratfun(rng, max_deg) for _ in range(order + 1)]
    if coeffs[0].is_zero:
        coeffs[0] = RatFun.const(1)
    return DiffOp(coeffs)


# ---------------------------------------------------------------------------
# riccati suite
# ---------------------------------------------------------------------------

def run_riccati(max_n: int = 25) -> VerificationReport:
    rep = VerificationReport("riccati")
    rungs = {b: ladder(max_n, b) for b in ("minus", "plus")}

    for branch, states in rungs.items():
        bad = [s.j for s in states if not residual_t(s.f, s.beta).is_zero]
        rep.add(f"riccati/ladder-{branch}-exact", not bad,
                f"residual_t(f_j, j - 1/2, 1) == 0 for j = 1..{max_n}"
                + (f"; FAILED at j = {bad}" if bad else ""))

    beta_ok = all(s.beta == Fraction(2 * s.j - 1, 2)
                  for states in rungs.values() for s in states)
    rep.add("riccati/beta-law", beta_ok, f"beta_j = j - 1/2 for j = 1..{max_n}, both branches")

    f2 = rungs["minus"][1].f if max_n >= 2 else ladder(2, "minus")[1].f
    f2_display = RatFun.const(Fraction(3, 2)) + RatFun(Poly((0, 0, 1))) / RatFun(Poly((1, -1)))
    rep.add("riccati/f2-display", f2 == f2_display,
            f"minus-branch f_2 == 3/2 + x^2/(1 - x); got {f2}")

    fixed_ok = True
    details = []
    for f, beta in fixed_points(1):
        fhat, betahat = step_up(f, beta)
        fixed_ok &= fhat == f and betahat == Fraction(1, 2)
        fixed_ok &= residual_t(f, beta).is_zero
        details.append(str(f))
    rep.add("riccati/fixed-points", fixed_ok,
            "step_up leaves f = 1/2 +- x unchanged at beta = -1/2 -> 1/2 "
            f"(seeds: {', '.join(details)})")

    rng = random.Random(20240901)
    rt_ok = True
    for _ in range(20):
        f = _random_ratfun(rng, max_deg=4)
        beta = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if (f + RatFun.const(beta)).is_zero:
            continue
        fhat, betahat = step_up(f, beta)
        back_f, back_beta = step_down(fhat, betahat)
        rt_ok &= back_f == f and back_beta == beta
    rep.add("riccati/step-roundtrip", rt_ok,
            "step_down(step_up(f, beta)) == (f, beta) exactly on 20 random rational f")

    cf_ok = True
    for depth in range(1, min(max_n, 15) + 1):
        for branch in ("minus", "plus"):
            if bessel_cf(depth, branch).collapse() != ladder(depth, branch)[-1].f:
                cf_ok = False
    rep.add("riccati/cf-collapse", cf_ok,
            f"continued-fraction collapse equals ladder output for depth <= {min(max_n, 15)}")

    mu_ok = all((RatFun(Poly((0, 0, lam))).deriv_t()
                 == RatFun(Poly((0, 0, -2 * lam)))) for lam in (1, 4, Fraction(9, 4)))
    rep.add("riccati/mu-law", mu_ok, "mu = lam x^2 satisfies mu_t = -2 mu exactly")

    # printed closed forms for f_3 and f_4 that circulate in display form drop
    # a factor; the residual oracle rejects them and confirms the recurrence
    printed_f3 = RatFun.const(Fraction(5, 2)) + RatFun(Poly((0, 0, 1))) / RatFun(Poly((3, -3, 1)))
    printed_f4 = RatFun.const(Fraction(7, 2)) + RatFun(Poly((0, 0, 1))) / RatFun(Poly((15, -15, 6)))
    derived_f3 = ladder(3, "minus")[-1].f
    derived_f4 = ladder(4, "minus")[-1].f
    confirmed = (not residual_t(printed_f3, Fraction(5, 2)).is_zero
                 and not residual_t(printed_f4, Fraction(7, 2)).is_zero
                 and residual_t(derived_f3, Fraction(5, 2)).is_zero
                 and residual_t(derived_f4, Fraction(7, 2)).is_zero)
    rep.add_flagged(
        "riccati/printed-f3-f4-displays", confirmed,
        "printed displays 5/2 + x^2/(x^2 - 3*x + 3) and 7/2 + x^2/(6*x^2 - 15*x + 15) "
        "fail the residual oracle; the exact recurrence gives "
        f"f_3 = 5/2 + (x^2 - x^3)/(x^2 - 3*x + 3) = {derived_f3} and f_4 = {derived_f4}")
    return rep.finish()


# ---------------------------------------------------------------------------
# chebyshev suite
# ---------------------------------------------------------------------------

def run_chebyshev(max_n: int = 50) -> VerificationReport:
    import math

    rep = VerificationReport("chebyshev")

    # the trig oracle always sweeps n <= 20, independent of max_n
    polys = [cheb.chebyshev_T(n) for n in range(max(max_n + 2, 21))]
    rec_ok = all((polys[n + 1] + polys[n - 1] - Poly((0, 2)) * polys[n]).is_zero
                 for n in range(1, max_n + 1))
    rep.add("chebyshev/recurrence", rec_ok,
            f"T_(n+1) + T_(n-1) - 2x T_n == 0 for n <= {max_n}")

    deg_ok = all(polys[n].degree == n for n in range(max_n + 1))
    lead_ok = all(polys[n].leading == Fraction(2) ** (n - 1) for n in range(1, max_n + 1))
    rep.add("chebyshev/degree-and-leading", deg_ok and lead_ok,
            f"deg T_n = n and lead T_n = 2^(n-1) for n <= {max_n}")

    ode_ok = all(cheb.ode_residual(n).is_zero for n in range(max_n + 1))
    rep.add("chebyshev/ode-residual", ode_ok,
            f"(1 - x^2) T_n'' - x T_n' + n^2 T_n == 0 for n <= {max_n}")

    pairs = list(cheb.ChebyshevPair.sequence(max_n + 1, "minus"))
    x = RatFun.x()
    one = RatFun.const(1)
    pair_ok = all(((pairs[n - 1].f - x) * (pairs[n].f + x) + one).is_zero
                  for n in range(1, max_n + 1))
    rep.add("chebyshev/pair-identity-minus", pair_ok,
            f"(f_n - x)(f_(n+1) + x) == -1 exactly under the minus convention, n <= {max_n}")

    trig_ok = True
    worst = 0.0
    for n in range(21):
        for k in range(1, 16):
            theta = k / 10.0
            # exact evaluation at the binary value of cos(theta), rounded once,
            # so the check measures the polynomial rather than float cancellation
            value = float(polys[n](Fraction(math.cos(theta))))
            err = abs(value - math.cos(n * theta))
            worst = max(worst, err)
            trig_ok &= err <= 1e-10
    rep.add("chebyshev/trig-oracle", trig_ok,
            f"|T_n(cos theta) - cos(n theta)| <= 1e-10 for n <= 20 (max {worst:.3e})")

    cf_ok = all(cheb.chebyshev_cf(n).collapse() == cheb.chebyshev_f(n, "minus")
                for n in range(1, min(max_n, 20) + 1))
    rep.add("chebyshev/cf-collapse", cf_ok,
            f"continued-fraction collapse equals f_n for n <= {min(max_n, 20)}")

    # the plus convention reproduces the circulated f_1 = x + 1/x but breaks
    # the product identity; witness at x = 1/2
    f1_plus = cheb.chebyshev_f(1, "plus")
    f1_expected = RatFun.x() + RatFun(Poly.const(1), Poly.x())
    res_plus = cheb.pair_residual(1, "plus")
    witness = res_plus.eval_at(Fraction(1, 2))
    confirmed = (f1_plus == f1_expected and not res_plus.is_zero and witness == 1)
    rep.add_flagged(
        "chebyshev/plus-convention", confirmed,
        "f_n = T_(n-1)/T_n + x reproduces f_1 = x + 1/x but fails "
        f"(f_1 - x)(f_2 + x) = -1: residual {res_plus} evaluates to {witness} at x = 1/2; "
        "the minus convention f_n = T_(n-1)/T_n - x satisfies the identity for all tested n")
    return rep.finish()


# ---------------------------------------------------------------------------
# darboux suite
# ---------------------------------------------------------------------------

def run_darboux(max_n: int = 25) -> VerificationReport:
    rep = VerificationReport("darboux")
    x = RatFun.x()
    d = DiffOp.D()

    betas = [Fraction(k, 2) for k in range(0, 21)]
    shift_ok = True
    intertwine_ok = True
    for beta in betas:
        a = bessel_operator(beta)
        g = RatFun.const(beta) / x
        ahat = darboux(a, g)
        shift_ok &= ahat == bessel_operator(beta + 1)
        dg = d - DiffOp.mul_by(g)
        intertwine_ok &= (ahat @ dg) == (dg @ a)
    rep.add("darboux/bessel-shift", shift_ok,
            "darboux(bessel(beta), beta/x) == bessel(beta + 1) for beta = 0, 1/2, ..., 10")
    rep.add("darboux/intertwining", intertwine_ok,
            "ahat @ (D - g) == (D - g) @ a exactly for every shifted operator")

    kernel_ok = True
    rng = random.Random(77)
    for s in (-2, -1, 0, 1, 2, 3):
        g = RatFun.const(Fraction(s)) / x      # log-derivative of x^s
        for u in (RatFun(), x, RatFun(Poly.const(1), Poly.x())):
            a = (d + DiffOp.mul_by(u)) @ (d - DiffOp.mul_by(g))
            _, r = right_divide(a, g)
            kernel_ok &= r.is_zero
            _, r_perturbed = right_divide(a + DiffOp.identity(), g)
            kernel_ok &= r_perturbed == RatFun.const(1)
    rep.add("darboux/kernel-criterion", kernel_ok,
            "remainder == 0 iff x^s lies in the kernel (perturbed operators leave "
            "exactly the perturbation behind)")

    recompose_ok = True
    for _ in range(max(10, max_n)):
        a = _random_diffop(rng, max_order=3)
        if a.order < 1:
            a = a + DiffOp.D()
        g = _random_ratfun(rng)
        q, r = right_divide(a, g)
        recompose_ok &= (q @ (d - DiffOp.mul_by(g))) + DiffOp.mul_by(r) == a
        recompose_ok &= q.order == a.order - 1
    rep.add("darboux/right-divide-recompose", recompose_ok,
            f"Q @ (D - g) + R == A exactly on {max(10, max_n)} random operators")

    assoc_ok = True
    for _ in range(50):
        a, b, c = (_random_diffop(rng, 2) for _ in range(3))
        assoc_ok &= (a @ b) @ c == a @ (b @ c)
    rep.add("darboux/compose-associativity", assoc_ok,
            "(A @ B) @ C == A @ (B @ C) on 50 random operator triples")

    schr_ok = True
    for beta in (Fraction(0), Fraction(1, 2), Fraction(3), Fraction(7, 2)):
        sf = to_schrodinger(bessel_operator(beta))
        expected_q = RatFun(Poly.const(Fraction(1, 4) - beta * beta), Poly((0, 0, 1)))
        schr_ok &= sf.q == expected_q
        schr_ok &= sf.gauge_logderiv == RatFun(Poly.const(Fraction(-1, 2)), Poly.x())
    for _ in range(10):
        a = _random_diffop(rng, 2)
        while a.order != 2:
            a = _random_diffop(rng, 2)
        sf = to_schrodinger(a)
        w = DiffOp.D() + DiffOp.mul_by(sf.gauge_logderiv)
        a0, a1, a2 = a.coeffs
        conjugated = (w @ w) + (w * (a1 / a0)) + DiffOp.mul_by(a2 / a0)
        schr_ok &= conjugated == DiffOp((1, 0, sf.q))
    rep.add("darboux/schrodinger-normalization", schr_ok,
            "substituting D -> D + w into the monic operator yields D^2 + q "
            "(bessel cases match (1/4 - beta^2)/x^2 with w = -1/(2x))")

    fq_ok = (factored_potential(RatFun()) == RatFun()
             and factored_potential(x) == RatFun(Poly((1, 0, -1)))
             and factored_potential(RatFun(Poly.const(1), Poly.x()))
             == RatFun(Poly.const(-2), Poly((0, 0, 1))))
    for _ in range(10):
        g = _random_ratfun(rng)
        fq_ok &= factored_potential(g) == g.deriv_x() - g * g
    rep.add("darboux/factored-potential", fq_ok,
            "(D - g) @ (D + g) == D^2 + (g' - g^2) by composition")
    return rep.finish()


# ---------------------------------------------------------------------------
# euler suite
# ---------------------------------------------------------------------------

def _random_euler(rng: random.Random) -> EulerOp:
    m = rng.randint(-3, 3)
    deg = rng.randint(0, 4)
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return EulerOp(m, Poly(coeffs))


def run_euler(max_n: int = 25) -> VerificationReport:
    rep = VerificationReport("euler")
    rng = random.Random(424242)

    functorial_ok = True
    for _ in range(100):
        a, b = _random_euler(rng), _random_euler(rng)
        functorial_ok &= (a @ b).to_diffop() == a.to_diffop() @ b.to_diffop()
    rep.add("euler/compose-functorial", functorial_ok,
            "diffop conversion is a homomorphism on 100 random pairs (|m| <= 3, deg k <= 4)")

    factor_ok = True
    for beta in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(5)):
        lhs = EulerOp(1, Poly((-beta - 1, 1))) @ EulerOp(1, Poly((beta, 1)))
        factor_ok &= lhs == EulerOp(2, Poly((-beta * beta, 0, 1)))
    rep.add("euler/bessel-factorization", factor_ok,
            "e^t(D - beta - 1) @ e^t(D + beta) == e^2t(D^2 - beta^2) for sampled beta")

    dx_ok = (euler_from_diffop(DiffOp.D()) == EulerOp(1, Poly((0, -1)))
             and euler_from_diffop(DiffOp.D(2)) == EulerOp(2, Poly((0, 1, 1)))
             and EulerOp(1, Poly((0, -1))).to_diffop() == DiffOp.D())
    rep.add("euler/derivative-dictionary", dx_ok,
            "D_x == -e^t D_t and D_x^2 == e^2t(D_t + D_t^2) under x = exp(-t)")

    bessel_ok = True
    for beta in (Fraction(0), Fraction(1, 2), Fraction(2), Fraction(9, 2)):
        e = euler_from_diffop(bessel_operator(beta))
        bessel_ok &= e == EulerOp(2, Poly((-beta * beta, 0, 1)))
        bessel_ok &= e.to_diffop() == bessel_operator(beta)
    rep.add("euler/bessel-operator-form", bessel_ok,
            "bessel(beta) <-> e^2t(D_t^2 - beta^2), both directions exact")

    apply_ok = True
    for _ in range(25):
        e = _random_euler(rng)
        s = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        coeff, expo = e.apply_exp(s)
        apply_ok &= coeff == e.k(s) and expo == e.m + s
    beta = Fraction(3, 2)
    coeff, expo = EulerOp(2, Poly((-beta * beta, 0, 1))).apply_exp(Fraction(2))
    apply_ok &= coeff == 4 - beta * beta and expo == 4
    rep.add("euler/apply-exp", apply_ok,
            "e^mt k(D_t) maps exp(s t) to k(s) exp((m + s) t)")

    rt_ok = True
    for _ in range(50):
        e = _random_euler(rng)
        rt_ok &= euler_from_diffop(e.to_diffop()) == e
    rep.add("euler/diffop-roundtrip", rt_ok,
            "euler_from_diffop inverts to_diffop on 50 random Euler operators")

    reject_ok = True
    x = Poly.x()
    try:
        euler_from_diffop(DiffOp((1, RatFun(1, x), 1)))
        reject_ok = False
    except ValueError:
        pass
    try:
        euler_from_diffop(DiffOp((1, RatFun(Poly((1, 1)), x), RatFun())))
        reject_ok = False
    except ValueError:
        pass
    rep.add("euler/non-euler-rejected", reject_ok,
            "mixed-monomial or inconsistent-exponent operators raise with the "
            "offending coefficient named")
    return rep.finish()


_RUNNERS = {
    "riccati": run_riccati,
    "chebyshev": run_chebyshev,
    "darboux": run_darboux,
    "euler": run_euler,
}

_DEFAULT_MAX_N = {"riccati": 25, "chebyshev": 50, "darboux": 25, "euler": 25}


def run_suite(suite: str, max_n: int | None = None) -> VerificationReport:
    """Run one named suite, or all of them concatenated under suite == "all"."""
    if suite == "all":
        combined = VerificationReport("all")
        for name in SUITES:
            combined.cases.extend(run_suite(name, max_n).cases)
        return combined.finish()
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}: choose from {', '.join(SUITES)} or all")
    n = max_n if max_n is not None else _DEFAULT_MAX_N[suite]
    if n < 1:
        raise ValueError("max_n must be >= 1")
    return _RUNNERS[suite](n)

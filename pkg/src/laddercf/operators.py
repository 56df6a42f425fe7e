"""Noncommutative algebra of linear differential operators and Euler operators.

A `DiffOp` is a linear differential operator in x,

    A = a_0(x) * D^n + a_1(x) * D^(n-1) + ... + a_n(x),    D = d/dx,

with rational-function coefficients.  An `EulerOp` is the pair (m, k)
standing for exp(m*t) * k(D_t), where k is a polynomial with rational
coefficients in the symbol D_t = d/dt.  The two pictures are connected by
the substitution x = exp(-t), under which D_x = -exp(t) * D_t, and the
conversion functions here realize that dictionary both ways.

Composition is written `A @ B` (apply B first); application to a rational
function is `A(psi)`.  `right_divide` splits A = Q @ (D - g) + R with scalar
remainder R, which is zero exactly when g is the logarithmic derivative of a
kernel element; `darboux` then swaps the factors to produce the transformed
operator (D - g) @ Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .rational import Poly, RatFun, Scalar

OpScalar = Union[int, Fraction, Poly, RatFun]


def _coerce(v) -> RatFun | None:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, (int, Fraction, Poly)):
        return RatFun(v)
    return None


class DiffOp:
    """Linear differential operator with RatFun coefficients.

    `coeffs[j]` multiplies D^(n-j); the leading coefficient is nonzero unless
    the operator is the zero operator (empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[OpScalar] = ()):
        cs = []
        for c in coeffs:
            r = _coerce(c)
            if r is None:
                raise TypeError("DiffOp coefficients must be RatFun or scalar")
            cs.append(r)
        while cs and cs[0].is_zero:
            cs.pop(0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls(())

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls((1,))

    @classmethod
    def D(cls, order: int = 1) -> "DiffOp":
        """The pure derivative D^order."""
        return cls((1,) + (0,) * order)

    @classmethod
    def mul_by(cls, f: OpScalar) -> "DiffOp":
        """Order-0 operator: multiplication by f."""
        return cls((f,))

    @classmethod
    def monomial(cls, c: OpScalar, k: int) -> "DiffOp":
        """Single term c * D^k."""
        return cls((c,) + (0,) * k)

    # -- structure --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def order(self) -> int:
        """Order of the operator; the zero operator reports -1."""
        return len(self.coeffs) - 1

    def coeff_of_power(self, k: int) -> RatFun:
        """Coefficient of D^k."""
        j = self.order - k
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return RatFun()

    @property
    def leading(self) -> RatFun:
        return self.coeffs[0] if self.coeffs else RatFun()

    @property
    def constant_term(self) -> RatFun:
        return self.coeffs[-1] if self.coeffs else RatFun()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly, RatFun)):
            other = DiffOp.mul_by(other)
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("DiffOp", self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- linear structure ----------------------------------------------------------

    def __add__(self, other) -> "DiffOp":
        other = _as_diffop(other)
        if other is None:
            return NotImplemented
        n = max(self.order, other.order)
        return DiffOp(self.coeff_of_power(n - j) + other.coeff_of_power(n - j)
                      for j in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp(-c for c in self.coeffs)

    def __sub__(self, other) -> "DiffOp":
        other = _as_diffop(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DiffOp":
        return (-self) + other

    def __mul__(self, other) -> "DiffOp":
        """Scalar multiplication: scales every coefficient."""
        s = _coerce(other)
        if s is None:
            return NotImplemented
        return DiffOp(c * s for c in self.coeffs)

    __rmul__ = __mul__

    # -- operator structure -----------------------------------------------------------

    def __call__(self, psi: OpScalar) -> RatFun:
        """Apply the operator: sum of a_j * psi^(n-j)."""
        psi = _coerce(psi)
        out = RatFun()
        n = self.order
        ds = [psi]  # ds[k] holds psi^(k)
        for _ in range(n):
            ds.append(ds[-1].deriv_x())
        for j, a in enumerate(self.coeffs):
            if not a.is_zero:
                out = out + a * ds[n - j]
        return out

    def __matmul__(self, other) -> "DiffOp":
        """Composition A @ B, meaning apply B first: (A @ B)(psi) = A(B(psi))."""
        other = _as_diffop(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return DiffOp.zero()
        n = self.order + other.order
        out = [RatFun() for _ in range(n + 1)]
        for jb in range(other.order + 1):
            b = other.coeffs[jb]
            if b.is_zero:
                continue
            m = other.order - jb          # this term is b * D^m
            # successive derivatives of b, reused across the terms of self
            b_derivs = [b]
            for _ in range(self.order):
                b_derivs.append(b_derivs[-1].deriv_x())
            for ja in range(self.order + 1):
                a = self.coeffs[ja]
                if a.is_zero:
                    continue
                k = self.order - ja       # a * D^k composed with b * D^m
                # D^k (b u) = sum_l C(k,l) b^(l) u^(k-l)
                binom = 1
                for l in range(k + 1):
                    power = k - l + m
                    out[n - power] = out[n - power] + a * (binom * b_derivs[l])
                    binom = binom * (k - l) // (l + 1)
        return DiffOp(out)

    def compose(self, other: "DiffOp") -> "DiffOp":
        return self @ other

    def power(self, n: int) -> "DiffOp":
        if n < 0:
            raise ValueError("negative operator power")
        out = DiffOp.identity()
        for _ in range(n):
            out = out @ self
        return out

    # -- rendering ---------------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        n = self.order
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            k = n - j
            neg = c.num.leading < 0
            mag = -c if neg else c
            if k == 0:
                term = _scalar_factor_str(mag)
            else:
                ds = "D" if k == 1 else f"D^{k}"
                term = ds if mag == RatFun.const(1) else f"{_scalar_factor_str(mag)}*{ds}"
            if not parts:
                parts.append("-" + term if neg else term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DiffOp({self})"

    def to_json_obj(self) -> list[dict]:
        return [c.to_json_obj() for c in self.coeffs]


def _scalar_factor_str(c: RatFun) -> str:
    # parenthesize multi-term numerators so the result re-parses as one factor
    s = str(c)
    if " " in s and not s.startswith("("):
        return f"({s})"
    return s


def _as_diffop(v) -> DiffOp | None:
    if isinstance(v, DiffOp):
        return v
    c = _coerce(v)
    if c is None:
        return None
    return DiffOp.mul_by(c)


def bessel_operator(beta: Scalar) -> DiffOp:
    """The operator D^2 + (1/x) D - beta^2/x^2."""
    beta = Fraction(beta)
    x = Poly.x()
    return DiffOp((1, RatFun(1, x), RatFun(Poly.const(-beta * beta), x * x)))


def right_divide(a: DiffOp, g: OpScalar) -> tuple[DiffOp, RatFun]:
    """Split a = Q @ (D - g) + R with R of order zero.

    Exact synthetic division: Q has order n-1 and recomposition returns `a`
    identically.
    """
    if a.order < 1:
        raise ValueError("right division needs an operator of order >= 1")
    g = _coerce(g)
    divisor = DiffOp.D() - DiffOp.mul_by(g)
    q = DiffOp.zero()
    rem = a
    while rem.order >= 1:
        term = DiffOp.monomial(rem.leading, rem.order - 1)
        q = q + term
        rem = rem - (term @ divisor)
    return q, rem.constant_term


def darboux(a: DiffOp, g: OpScalar) -> DiffOp:
    """Darboux transform: from a = Q @ (D - g) produce (D - g) @ Q.

    Requires the remainder of right division to vanish, i.e. g = phi'/phi for
    some phi in the kernel of `a`.  The result intertwines with `a`:
    result @ (D - g) == (D - g) @ a.
    """
    g = _coerce(g)
    q, r = right_divide(a, g)
    if not r.is_zero:
        raise ValueError("g is not a kernel logarithmic derivative "
                         f"(remainder {r})")
    return (DiffOp.D() - DiffOp.mul_by(g)) @ q


def inverse_substitution(q: DiffOp, psihat: OpScalar, lam: Scalar) -> RatFun:
    """Undo psihat = (D - g) psi for an eigenfunction: psi = Q(psihat) / lam.

    Valid when a = Q @ (D - g) and a(psi) = lam * psi with lam nonzero.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("inverse undefined at lambda = 0")
    return q(psihat) / RatFun.const(lam)


# ---------------------------------------------------------------------------
# Euler operators
# ---------------------------------------------------------------------------

class EulerOp:
    """Operator exp(m*t) * k(D_t) with integer m and polynomial k."""

    __slots__ = ("m", "k")

    def __init__(self, m: int, k: Poly | Iterable[Scalar]):
        if not isinstance(k, Poly):
            k = Poly(k)
        if k.is_zero:
            m = 0
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("EulerOp is immutable")

    @classmethod
    def zero(cls) -> "EulerOp":
        return cls(0, Poly())

    @classmethod
    def identity(cls) -> "EulerOp":
        return cls(0, Poly.const(1))

    @property
    def is_zero(self) -> bool:
        return self.k.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, EulerOp):
            return NotImplemented
        return self.m == other.m and self.k == other.k

    def __hash__(self):
        return hash(("EulerOp", self.m, self.k))

    def __matmul__(self, other: "EulerOp") -> "EulerOp":
        """Composition via the shift law: (m, k) @ (n, z) = (m+n, k(D+n) * z(D))."""
        if not isinstance(other, EulerOp):
            return NotImplemented
        return EulerOp(self.m + other.m, _poly_shift(self.k, other.m) * other.k)

    def apply_exp(self, s: Scalar) -> tuple[Fraction, Fraction]:
        """Act on exp(s*t): returns (k(s), m + s)."""
        s = Fraction(s)
        return self.k(s), self.m + s

    def to_diffop(self) -> DiffOp:
        """Rewrite in the x picture via exp(m*t) = x^(-m) and D_t = -x * D_x."""
        theta = DiffOp((RatFun.const(-1) * RatFun.x(), 0))  # -x * D
        acc = DiffOp.zero()
        for c in reversed(self.k.coeffs):
            acc = (acc @ theta) + DiffOp.mul_by(c)
        if self.k.is_zero:
            return DiffOp.zero()
        return RatFun.x_power(-self.m) * acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        kstr = _euler_poly_str(self.k)
        if self.m == 0:
            return kstr
        head = "e^t" if self.m == 1 else f"e^{self.m}t"
        return f"{head}*({kstr})"

    def __repr__(self) -> str:
        return f"EulerOp(m={self.m}, k={_euler_poly_str(self.k)})"


def _euler_poly_str(k: Poly) -> str:
    return str(k).replace("x", "Dt")


def _poly_shift(k: Poly, n: int) -> Poly:
    """k(D + n) by Horner in the shifted variable."""
    acc = Poly()
    shift = Poly((n, 1))
    for c in reversed(k.coeffs):
        acc = acc * shift + Poly.const(c)
    return acc


def euler_compose(a: EulerOp, b: EulerOp) -> EulerOp:
    return a @ b


def diffop_from_euler(a: EulerOp) -> DiffOp:
    return a.to_diffop()


def euler_from_diffop(a: DiffOp) -> EulerOp:
    """Recognize an Euler-type operator and return its (m, k) form.

    Every coefficient of D^i must be a Laurent monomial c * x^(i - m) with one
    consistent m; k is recovered by letting the operator act on powers x^s
    (which an Euler operator maps to k(-s) * x^(s-m)) and interpolating.  The
    reconstruction is verified by converting back, so a false positive cannot
    slip through.
    """
    if a.is_zero:
        return EulerOp.zero()
    n = a.order
    m = None
    for j, c in enumerate(a.coeffs):
        if c.is_zero:
            continue
        k_power = n - j
        mono = c.as_monomial()
        if mono is None:
            raise ValueError(f"not an Euler-type operator: coefficient of D^{k_power} is {c}")
        _, e = mono
        mj = k_power - e
        if m is None:
            m = mj
        elif m != mj:
            raise ValueError(f"not an Euler-type operator: coefficient of D^{k_power} "
                             f"is {c}, inconsistent with exponent pattern m = {m}")
    # sample the action on x^s for s = 0..n and interpolate k through (-s, k(-s))
    points: list[tuple[Fraction, Fraction]] = []
    for s in range(n + 1):
        image = a(RatFun.x_power(s))
        if image.is_zero:
            points.append((Fraction(-s), Fraction(0)))
            continue
        mono = image.as_monomial()
        if mono is None or mono[1] != s - m:
            raise ValueError(f"not an Euler-type operator: image of x^{s} is {image}")
        points.append((Fraction(-s), mono[0]))
    k = _lagrange(points)
    candidate = EulerOp(int(m), k)
    if candidate.to_diffop() != a:
        raise ValueError("not an Euler-type operator: reconstruction mismatch")
    return candidate


def _lagrange(points: list[tuple[Fraction, Fraction]]) -> Poly:
    out = Poly()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * Poly((-xj, 1))
            denom *= xi - xj
        out = out + basis * (yi / denom)
    return out


# ---------------------------------------------------------------------------
# Schrodinger normalization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SchrodingerForm:
    """Normalized second-order data: potential q and gauge log-derivative w.

    The gauge psi = exp(phi) * psihat is carried only through w = phi', never
    through phi itself.
    """

    q: RatFun
    gauge_logderiv: RatFun

    def operator(self) -> DiffOp:
        return DiffOp((1, 0, self.q))


def to_schrodinger(a: DiffOp) -> SchrodingerForm:
    """Gauge a second-order operator to the form D^2 + q(x).

    With p = a1/a0 and r = a2/a0, the gauge log-derivative is w = -p/2 and
    q = r - p^2/4 - p'/2; substituting D -> D + w into the monic operator
    kills the first-order term.
    """
    if a.order != 2:
        raise ValueError("Schrodinger normalization needs an operator of order 2")
    a0, a1, a2 = a.coeffs
    p = a1 / a0
    r = a2 / a0
    w = RatFun.const(Fraction(-1, 2)) * p
    q = r - p * p * Fraction(1, 4) - p.deriv_x() * Fraction(1, 2)
    return SchrodingerForm(q=q, gauge_logderiv=w)


def factored_potential(g: OpScalar) -> RatFun:
    """The q with (D - g) @ (D + g) = D^2 + q, computed by composition."""
    g = _coerce(g)
    prod = (DiffOp.D() - DiffOp.mul_by(g)) @ (DiffOp.D() + DiffOp.mul_by(g))
    assert prod.coeff_of_power(1).is_zero and prod.coeff_of_power(2) == RatFun.const(1)
    return prod.constant_term

"""Exact univariate polynomials and rational functions over arbitrary-precision rationals.

Scalars are `fractions.Fraction` (already normalized: reduced, positive
denominator).  A `Poly` stores its coefficients ascending by degree with no
trailing zeros; the zero polynomial is the empty coefficient tuple.  A
`RatFun` keeps a gcd-reduced numerator/denominator pair with monic
denominator, so structural equality coincides with mathematical equality and
tests may compare values with plain `==`.

Two derivative flavors are provided: the ordinary d/dx, and the derivative
with respect to t under the change of variable x = exp(-t), which acts on
rational functions of x as f -> -x * df/dx.

All values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation at a point where the denominator vanishes."""

    def __init__(self, location):
        super().__init__(f"pole at x = {location}")
        self.location = location


def frac_str(q: Fraction) -> str:
    """Render a rational scalar as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def frac_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


class Poly:
    """Dense univariate polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "Poly":
        return cls((0,) * k + (Fraction(c),))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            c = rem[-1] / lead
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- calculus and evaluation --------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, x0: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval_float(self, x0: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x0 + float(c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        """Grammar-compatible rendering, descending degree: "x^2 - 3/2*x + 3"."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = frac_str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                term = xs if mag == 1 else f"{frac_str(mag)}*{xs}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"

    # -- serialization --------------------------------------------------------

    def to_json_obj(self) -> list[str]:
        return [frac_str(c) for c in self.coeffs]

    @classmethod
    def from_json_obj(cls, obj: list[str]) -> "Poly":
        return cls(frac_from_str(s) for s in obj)


def _as_poly(v) -> Poly | None:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return None


_POLY_ONE = Poly((1,))


def _to_int_coeffs(p: Poly) -> list[int]:
    # clear denominators and remove integer content; normalize leading sign
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in p.coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of integer coefficient lists (ascending); content is
    # discarded by the caller, so scale factors need not be tracked
    r = a[:]
    db = len(b) - 1
    lcb = b[-1]
    while len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [lcb * c for c in r]
        for i, bc in enumerate(b):
            r[k + i] -= lr * bc
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return r


def _int_primitive(c: list[int]) -> list[int]:
    g = 0
    for v in c:
        g = _int_gcd(g, abs(v))
    if g > 1:
        c = [v // g for v in c]
    if c and c[-1] < 0:
        c = [-v for v in c]
    return c


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (primitive pseudo-remainder sequence)."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return _POLY_ONE
    u, v = _to_int_coeffs(a), _to_int_coeffs(b)
    if len(u) < len(v):
        u, v = v, u
    while v:
        u, v = v, _int_primitive(_int_prem(u, v))
    return Poly(u).monic()


class RatFun:
    """Canonical rational function: gcd-reduced, monic denominator, zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is None or den is None:
            raise TypeError("RatFun expects Poly or scalar parts")
        if den.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero:
            num, den = Poly(), _POLY_ONE
        elif den.degree == 0:
            c = den.coeffs[0]
            if c != 1:
                num = num * (1 / c)
            den = _POLY_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lc = den.leading
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        # internal: parts already canonical
        out = cls.__new__(cls)
        object.__setattr__(out, "num", num)
        object.__setattr__(out, "den", den)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "RatFun":
        return cls(Poly.const(c))

    @classmethod
    def x(cls) -> "RatFun":
        return cls(Poly.x())

    @classmethod
    def x_power(cls, e: int) -> "RatFun":
        """Monomial x^e for any integer e (negative exponents allowed)."""
        if e >= 0:
            return cls(Poly.monomial(1, e))
        return cls(Poly.const(1), Poly.monomial(1, -e))

    # -- structure -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_constant(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.num[0]

    def as_monomial(self) -> tuple[Fraction, int] | None:
        """Return (c, e) when the value is c*x^e (e may be negative), else None."""
        if self.is_zero:
            return Fraction(0), 0
        num_terms = [k for k, c in enumerate(self.num.coeffs) if c != 0]
        den_terms = [k for k, c in enumerate(self.den.coeffs) if c != 0]
        if len(num_terms) != 1 or len(den_terms) != 1:
            return None
        return self.num.coeffs[-1] / self.den.coeffs[-1], num_terms[0] - den_terms[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- field arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun._raw(self.num + other.num, _POLY_ONE)
        g = poly_gcd(self.den, other.den)
        db = other.den // g
        num = self.num * db + other.num * (self.den // g)
        return RatFun(num, self.den * db)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        out = RatFun.__new__(RatFun)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFun()
        if other.is_constant:
            return RatFun._raw(self.num * other.num.coeffs[0], self.den)
        if self.is_constant:
            return RatFun._raw(other.num * self.num.coeffs[0], other.den)
        # cross-cancel first so the final gcd is trivial
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        if den.degree == 0:
            return RatFun(num, den)
        lc = den.leading
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        return RatFun._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        # reciprocal of a canonical value only needs its denominator made monic
        inv_lc = 1 / other.num.leading
        return self * RatFun._raw(other.den * inv_lc, other.num * inv_lc)

    def __rtruediv__(self, other) -> "RatFun":
        return _as_ratfun(other) / self

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero rational function to a negative power")
            return RatFun(self.den, self.num) ** (-n)
        return RatFun(self.num ** n, self.den ** n)

    # -- calculus and evaluation ----------------------------------------------

    def deriv_x(self) -> "RatFun":
        """Exact d/dx by the quotient rule."""
        return RatFun(self.num.derivative() * self.den - self.num * self.den.derivative(),
                      self.den * self.den)

    def deriv_t(self) -> "RatFun":
        """d/dt under x = exp(-t): returns -x * df/dx."""
        return RatFun(Poly((0, -1))) * self.deriv_x()

    def eval_at(self, x0: Scalar) -> Fraction:
        """Exact evaluation; raises PoleError where the denominator vanishes."""
        x0 = Fraction(x0)
        d = self.den(x0)
        if d == 0:
            raise PoleError(x0)
        return self.num(x0) / d

    def eval_float(self, x0: float) -> float:
        d = self.den.eval_float(x0)
        if d == 0.0:
            raise PoleError(x0)
        return self.num.eval_float(x0) / d

    def has_pole_at(self, x0: Scalar) -> bool:
        return self.den(Fraction(x0)) == 0

    # -- rendering ----------------------------------------------------------------

    def __str__(self) -> str:
        """Grammar-compatible rendering, e.g. "(x^2 - x)/(x^2 - 3*x + 3)"."""
        ns = str(self.num)
        if self.den.degree == 0:
            return ns
        if " " in ns:
            ns = f"({ns})"
        mono = [k for k, c in enumerate(self.den.coeffs) if c != 0]
        if len(mono) == 1 and self.den.leading == 1:
            ds = "x" if self.den.degree == 1 else f"x^{self.den.degree}"
        else:
            ds = f"({self.den})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFun({self})"

    # -- serialization --------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RatFun":
        return cls(Poly.from_json_obj(obj["num"]), Poly.from_json_obj(obj["den"]))


def _as_ratfun(v) -> RatFun | None:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, (int, Fraction, Poly)):
        return RatFun(v)
    return None


#: preconstructed values used throughout the package
ZERO = RatFun()
ONE = RatFun.const(1)
X = RatFun.x()

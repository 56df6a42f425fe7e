"""Chebyshev polynomials of the first kind and their ratio recurrence.

T_n is generated exactly by T_{n+1} = 2x T_n - T_{n-1} with T_0 = 1, T_1 = x.
The associated ratio functions f_n = T_{n-1}/T_n -+ x satisfy the pair
identity (f_n - x)(f_{n+1} + x) = -1 under the minus convention, which also
yields a finite continued fraction for each f_n.  The plus convention is kept
selectable because it appears in print, but it fails the pair identity; the
verification suite flags that divergence instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .contfrac import ContinuedFraction
from .rational import Poly, RatFun

Convention = Literal["minus", "plus"]


@dataclass(frozen=True)
class ChebyshevPair:
    """Consecutive polynomials (T_{n-1}, T_n) with the ratio function f_n."""

    n: int
    t_prev: Poly
    t_cur: Poly
    f: RatFun

    @classmethod
    def sequence(cls, n_max: int, convention: Convention = "minus") -> Iterator["ChebyshevPair"]:
        """Yield pairs for n = 1..n_max in one pass over the recurrence."""
        if n_max < 1:
            raise ValueError("n_max must be >= 1")
        sign = {"minus": -1, "plus": 1}[convention]
        x = RatFun.x()
        prev, cur = Poly.const(1), Poly.x()
        two_x = Poly((0, 2))
        for n in range(1, n_max + 1):
            yield cls(n=n, t_prev=prev, t_cur=cur, f=RatFun(prev, cur) + x * sign)
            prev, cur = cur, two_x * cur - prev


def chebyshev_T(n: int) -> Poly:
    """Exact T_n via the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = Poly.const(1), Poly.x()
    if n == 0:
        return prev
    two_x = Poly((0, 2))
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def chebyshev_pair(n: int) -> tuple[Poly, Poly]:
    """(T_{n-1}, T_n) in one pass."""
    if n < 1:
        raise ValueError("n must be >= 1")
    prev, cur = Poly.const(1), Poly.x()
    two_x = Poly((0, 2))
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return prev, cur


def chebyshev_f(n: int, convention: Convention = "minus") -> RatFun:
    """The ratio function f_n = T_{n-1}/T_n - x (minus) or + x (plus)."""
    t_prev, t_cur = chebyshev_pair(n)
    ratio = RatFun(t_prev, t_cur)
    if convention == "minus":
        return ratio - RatFun.x()
    if convention == "plus":
        return ratio + RatFun.x()
    raise ValueError(f"unknown convention {convention!r}")


def pair_residual(n: int, convention: Convention = "minus") -> RatFun:
    """(f_n - x)(f_{n+1} + x) + 1; identically zero under the minus convention."""
    x = RatFun.x()
    fn = chebyshev_f(n, convention)
    fn1 = chebyshev_f(n + 1, convention)
    return (fn - x) * (fn1 + x) + RatFun.const(1)


def ode_residual(n: int) -> Poly:
    """(1 - x^2) T_n'' - x T_n' + n^2 T_n, the zero polynomial for every n."""
    t = chebyshev_T(n)
    d1 = t.derivative()
    d2 = d1.derivative()
    one_minus_x2 = Poly((1, 0, -1))
    return one_minus_x2 * d2 - Poly.x() * d1 + t * (n * n)


def chebyshev_cf(n: int) -> ContinuedFraction:
    """Unrolled minus-convention recurrence f_{n} = -x - 1/(f_{n-1} - x).

    The partial numerators are all -1, the intermediate partial denominators
    are -2x, and the terminal level is f_1 - x = 1/x - 2x.  Collapsing equals
    chebyshev_f(n, "minus") exactly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f1 = chebyshev_f(1, "minus")          # 1/x - x
    if n == 1:
        return ContinuedFraction(head=RatFun(), terms=(), terminal=f1)
    minus_one = RatFun.const(-1)
    minus_2x = RatFun(Poly((0, -2)))
    terminal = f1 - RatFun.x()            # 1/x - 2x
    terms = tuple((minus_one, minus_2x) for _ in range(n - 2)) + ((minus_one, terminal),)
    return ContinuedFraction(head=RatFun(Poly((0, -1))), terms=terms, terminal=terminal)

"""Chebyshev ratio functions and their continued fractions, exactly.

The three-term recurrence T_{n+1} + T_{n-1} = 2x T_n forces the pair
identity (f_n - x)(f_{n+1} + x) = -1 for f_n = T_{n-1}/T_n - x.  The plus
variant f_n = T_{n-1}/T_n + x circulates in print but fails the identity,
which exact arithmetic makes unmissable.
"""

from fractions import Fraction

from laddercf import chebyshev_T, chebyshev_cf, chebyshev_f, ode_residual, pair_residual

print("First Chebyshev polynomials:")
for n in range(6):
    print(f"  T_{n} = {chebyshev_T(n)}")

print("\nODE residual (1 - x^2) T_n'' - x T_n' + n^2 T_n for n <= 8:")
print(" ", [str(ode_residual(n)) for n in range(9)])

print("\nPair identity residual (f_n - x)(f_(n+1) + x) + 1, minus convention:")
print(" ", [str(pair_residual(n, 'minus')) for n in range(1, 9)])

print("\nThe plus convention reproduces the familiar f_1 but breaks the identity:")
print(f"  f_1 (plus)  = {chebyshev_f(1, 'plus')}")
res = pair_residual(1, "plus")
print(f"  residual    = {res}")
print(f"  at x = 1/2  = {res.eval_at(Fraction(1, 2))}   (should be 0)")

print("\nMinus-convention ratio functions as continued fractions:")
for n in (2, 3, 4):
    cf = chebyshev_cf(n)
    print(f"  f_{n} = {cf}")
    print(f"      collapses to {cf.collapse()} == chebyshev_f({n}): "
          f"{cf.collapse() == chebyshev_f(n, 'minus')}")

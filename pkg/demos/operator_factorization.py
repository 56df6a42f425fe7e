"""Factor differential operators and shift Bessel order by a Darboux transform.

The operator A = D^2 + (1/x)D - beta^2/x^2 has x^beta in its kernel, so it
right-divides by D - beta/x; swapping the factors produces the same operator
with beta replaced by beta + 1, certified by the intertwining identity.
"""

from fractions import Fraction

from laddercf import (DiffOp, RatFun, bessel_operator, darboux, euler_from_diffop,
                      parse_expression, right_divide, to_schrodinger)

beta = Fraction(3, 2)
a = bessel_operator(beta)
g = RatFun.const(beta) / RatFun.x()
print(f"A      = {a}")
print(f"g      = {g}   (log-derivative of x^{beta}, a kernel element)")

q, r = right_divide(a, g)
print(f"Q      = {q}")
print(f"R      = {r}")

ahat = darboux(a, g)
print(f"A^     = {ahat}   (order beta + 1 = {beta + 1})")

dg = DiffOp.D() - DiffOp.mul_by(g)
print(f"intertwining: A^ (D - g) - (D - g) A = {(ahat @ dg) - (dg @ a)}")

print("\nThe same operator in the t-picture (x = e^-t), where it factors freely:")
e = euler_from_diffop(a)
print(f"  {e!r}")
print(f"  action on e^(2t): {e.apply_exp(Fraction(2))}   (pure algebra, no calculus)")

print("\nSchrodinger normalization of A (gauge away the first-order term):")
sf = to_schrodinger(a)
print(f"  q = {sf.q},  w = {sf.gauge_logderiv}")

print("\nParsing the grammar used by the CLI:")
parsed = parse_expression("D^2 + (1/x)*D - 9/4/x^2")
print(f"  parsed   : {parsed}")
print(f"  equals A : {parsed == a}")

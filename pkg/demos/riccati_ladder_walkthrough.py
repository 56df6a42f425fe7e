"""Walk the ladder of exact rational Riccati solutions.

Starting from the fixed points f = 1/2 +- x at beta = -1/2, each step
f -> beta+1 + x^2/(f + beta) raises the order by one.  Everything below is
exact rational arithmetic: a residual printed as 0 is the zero function,
not a small number.
"""

from fractions import Fraction

from laddercf import bessel_cf, fixed_points, ladder, residual_t, step_down, step_up

print("Fixed points of the step transform (beta = -1/2):")
for f, beta in fixed_points(1):
    fhat, betahat = step_up(f, beta)
    print(f"  f = {f}: step gives {fhat} at beta^ = {betahat} (unchanged)")

print("\nMinus-branch ladder, first six rungs:")
for state in ladder(6, "minus"):
    res = residual_t(state.f, state.beta)
    print(f"  f_{state.j} (beta = {state.beta}) = {state.f}")
    print(f"      residual of f_t + f^2 = beta^2 + x^2:  {res}")

print("\nEvery step is invertible; pulling f_4 back down:")
f4 = ladder(4, "minus")[-1].f
f, beta = f4, Fraction(7, 2)
while beta > Fraction(1, 2):
    f, beta = step_down(f, beta)
    print(f"  down to beta = {beta}: f = {f}")

print("\nThe same rungs as finite continued fractions:")
for depth in (2, 3, 5):
    cf = bessel_cf(depth, "minus")
    print(f"  f_{depth} = {cf}")
    print(f"      collapses to {cf.collapse()}")

print("\nValue of the depth-5 fraction at x = 1/2 (float vs exact):")
cf5 = bessel_cf(5, "minus")
exact = cf5.collapse().eval_at(Fraction(1, 2))
print(f"  float bottom-up: {cf5.eval_float(0.5)!r}")
print(f"  exact collapse:  {exact} = {float(exact)!r}")

"""Cross-check the exact ladder against closed-form K-Bessel values.

The plus-branch rational solutions f_j equal -x K'_{j-1/2}(x)/K_{j-1/2}(x);
the half-integer K's are elementary, so double precision provides an
independent oracle for the exact algebra.
"""

from fractions import Fraction

from laddercf import compare_ladder_to_bessel, k_half, ladder, log_deriv_t

print("Closed-form half-integer K values at x = 1:")
for n in range(4):
    print(f"  K_{n}+1/2(1) = {k_half(n, 1.0):.15f}")

print("\nThe n = 0 log-derivative is exactly the fixed point 1/2 + x:")
for x in (0.5, 1.0, 2.0):
    print(f"  -x K'/K at {x}: {log_deriv_t(0, x):.15f}   vs 1/2 + x = {0.5 + x}")

print("\nPlus-branch rungs against the Bessel oracle:")
print("  j  x    ladder (exact, rounded)   -x K'/K              |err|")
for state in ladder(4, "plus"):
    for x in (0.5, 2.0):
        exact = float(state.f.eval_at(Fraction(x)))
        oracle = log_deriv_t(state.j - 1, x)
        print(f"  {state.j}  {x:<4} {exact:<25.16f} {oracle:<20.16f} {abs(exact - oracle):.2e}")

report = compare_ladder_to_bessel(10, [0.5 * k for k in range(1, 11)])
print(f"\nFull sweep j <= 10 on x = 0.5..5.0: max |err| = {report.max_abs_err:.3e}")
print("(the acceptance bound is 1e-10)")

"""Exact operator ladders and continued fractions for Bessel and Chebyshev functions.

The package keeps two strictly separated layers: exact rational-function and
operator algebra (everything structural is proved by canonical-form equality),
and a small floating-point reference for half-integer modified Bessel
functions used only to cross-check the exact results numerically.
"""

from .bessel import CompareReport, CompareRow, compare_ladder_to_bessel, k_half, k_half_deriv, log_deriv_t
from .chebyshev import ChebyshevPair, chebyshev_cf, chebyshev_f, chebyshev_T, ode_residual, pair_residual
from .contfrac import CFPoleError, ContinuedFraction
from .operators import (DiffOp, EulerOp, SchrodingerForm, bessel_operator, darboux,
                        diffop_from_euler, euler_compose, euler_from_diffop,
                        factored_potential, inverse_substitution, right_divide,
                        to_schrodinger)
from .parse import ExprError, parse_expression, parse_operator, parse_ratfun
from .rational import Poly, PoleError, RatFun, frac_from_str, frac_str, poly_gcd
from .riccati import (LadderState, RiccatiForm, bessel_cf, fixed_points, ladder,
                      mu_of, residual_t, seed, step_down, step_up)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "CFPoleError", "ChebyshevPair", "CompareReport", "CompareRow", "ContinuedFraction",
    "DiffOp", "EulerOp", "ExprError", "LadderState", "Poly", "PoleError", "RatFun",
    "RiccatiForm", "SchrodingerForm", "VerificationReport", "bessel_cf",
    "bessel_operator", "chebyshev_T", "chebyshev_cf", "chebyshev_f",
    "compare_ladder_to_bessel", "darboux", "diffop_from_euler", "euler_compose",
    "euler_from_diffop", "factored_potential", "fixed_points", "frac_from_str",
    "frac_str", "inverse_substitution", "k_half", "k_half_deriv", "ladder",
    "log_deriv_t", "mu_of", "ode_residual", "pair_residual", "parse_expression",
    "parse_operator", "parse_ratfun", "poly_gcd", "residual_t", "right_divide",
    "run_suite", "seed", "step_down", "step_up", "to_schrodinger",
]

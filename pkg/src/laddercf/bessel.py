"""Floating-point reference values for half-integer modified Bessel functions.

For order nu = n + 1/2 the decaying solution K_nu of the modified Bessel
equation is elementary:

    K_{n+1/2}(x) = sqrt(pi/(2x)) * exp(-x)
                   * sum_{k=0}^{n} (n+k)! / (k! (n-k)!) * (2x)^(-k),

a positive-term sum, so double precision carries no cancellation.  These
values anchor the numeric end of the ladder validation: the plus-branch
rational solutions f_j equal -x * K'_{j-1/2}(x) / K_{j-1/2}(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .riccati import ladder


def k_half(n: int, x: float) -> float:
    """Modified Bessel function K of half-integer order.

    Parameters
    ----------
    n : int
        Nonnegative integer part of the order; the order is nu = n + 1/2.
    x : float
        Argument, strictly positive.

    Returns
    -------
    float
        K_{n+1/2}(x) from the closed-form finite sum.
    """
    if n < 0:
        raise ValueError("order index n must be >= 0")
    if x <= 0:
        raise ValueError("x must be positive")
    total = 0.0
    for k in range(n + 1):
        coeff = math.factorial(n + k) // (math.factorial(k) * math.factorial(n - k))
        total += coeff / (2.0 * x) ** k
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) * total


def _k_signed(n: int, x: float) -> float:
    # K_{-nu} = K_{nu}: indices below zero reflect (n = -1 is order -1/2)
    return k_half(n if n >= 0 else -n - 1, x)


def k_half_deriv(n: int, x: float) -> float:
    """d/dx of K_{n+1/2}, via K'_nu = -(K_{nu-1} + K_{nu+1}) / 2."""
    return -0.5 * (_k_signed(n - 1, x) + k_half(n + 1, x))


def log_deriv_t(n: int, x: float) -> float:
    """The t-logarithmic derivative -x * K'_{n+1/2}(x) / K_{n+1/2}(x).

    For n = 0 this is identically 1/2 + x, the plus-branch fixed point.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    return -x * k_half_deriv(n, x) / k_half(n, x)


@dataclass(frozen=True)
class CompareRow:
    """One grid entry of the ladder-versus-Bessel comparison."""

    j: int
    x: float
    ladder_value: float | None
    bessel_value: float
    abs_err: float | None

    @property
    def flagged(self) -> bool:
        """True when x hit a pole of the rational f_j and the row is excluded."""
        return self.ladder_value is None


@dataclass(frozen=True)
class CompareReport:
    rows: tuple[CompareRow, ...]
    max_abs_err: float

    def to_csv_lines(self) -> list[str]:
        lines = ["j,x,ladder_value,bessel_value,abs_err"]
        for r in self.rows:
            if r.flagged:
                lines.append(f"{r.j},{r.x},pole,{r.bessel_value!r},excluded")
            else:
                lines.append(f"{r.j},{r.x},{r.ladder_value!r},{r.bessel_value!r},{r.abs_err!r}")
        return lines


def compare_ladder_to_bessel(max_j: int, grid: list[float]) -> CompareReport:
    """Compare plus-branch ladder values with -x K'_{j-1/2}/K_{j-1/2} on a grid.

    Ladder values are evaluated exactly at each grid point (grid floats are
    taken at their binary value) and rounded once; grid points falling on a
    pole of f_j are flagged and excluded from the reported maximum.
    """
    if max_j < 1:
        raise ValueError("max_j must be >= 1")
    if any(x <= 0 for x in grid):
        raise ValueError("grid points must be positive")
    states = ladder(max_j, branch="plus")
    rows: list[CompareRow] = []
    max_err = 0.0
    for state in states:
        for x in grid:
            bessel = log_deriv_t(state.j - 1, x)
            if state.f.has_pole_at(Fraction(x)):
                rows.append(CompareRow(j=state.j, x=x, ladder_value=None,
                                       bessel_value=bessel, abs_err=None))
                continue
            exact = float(state.f.eval_at(Fraction(x)))
            err = abs(exact - bessel)
            max_err = max(max_err, err)
            rows.append(CompareRow(j=state.j, x=x, ladder_value=exact,
                                   bessel_value=bessel, abs_err=err))
    return CompareReport(rows=tuple(rows), max_abs_err=max_err)

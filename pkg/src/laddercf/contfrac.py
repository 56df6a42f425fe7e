"""Finite continued fractions with exact rational-function entries.

A fraction is stored as a head plus a list of bars, outermost first::

    value = head + pn_1 / (pd_1 + pn_2 / (pd_2 + ... + pn_k / pd_k))

Each bar contributes a (partial numerator, partial denominator) pair; the
innermost partial denominator is duplicated in `terminal` so the tail of the
unrolled recurrence stays directly addressable.  An empty bar list encodes
the degenerate depth-1 case, where the value is simply head + terminal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import RatFun


class CFPoleError(ZeroDivisionError):
    """A partial denominator vanished during numeric evaluation.

    `level` is the 1-based index of the offending bar, counted from the
    outermost; the innermost (terminal) bar has level == len(terms).
    """

    def __init__(self, level: int, x0: float):
        super().__init__(f"zero denominator at continued-fraction level {level} for x = {x0}")
        self.level = level
        self.x0 = x0


@dataclass(frozen=True)
class ContinuedFraction:
    head: RatFun
    terms: tuple[tuple[RatFun, RatFun], ...]
    terminal: RatFun

    def __post_init__(self):
        if self.terms and self.terms[-1][1] != self.terminal:
            raise ValueError("terminal must equal the innermost partial denominator")

    @property
    def depth(self) -> int:
        """Number of bars plus one (the head level)."""
        return len(self.terms) + 1

    def collapse(self) -> RatFun:
        """Exact bottom-up collapse to a single rational function."""
        if not self.terms:
            return self.head + self.terminal
        acc = None
        pn_next = RatFun()
        for pn, pd in reversed(self.terms):
            acc = pd if acc is None else pd + pn_next / acc
            pn_next = pn
        return self.head + pn_next / acc

    def eval_float(self, x0: float) -> float:
        """Floating bottom-up evaluation; raises CFPoleError at a vanishing level."""
        if not self.terms:
            return self.head.eval_float(x0) + self.terminal.eval_float(x0)
        acc = None
        pn_next = 0.0
        for level in range(len(self.terms), 0, -1):
            pn, pd = self.terms[level - 1]
            d = pd.eval_float(x0) if acc is None else pd.eval_float(x0) + pn_next / acc
            if d == 0.0:
                raise CFPoleError(level, x0)
            acc = d
            pn_next = pn.eval_float(x0)
        return self.head.eval_float(x0) + pn_next / acc

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            tail = str(self.terminal)
            if self.head.is_zero:
                return tail
            if " " in tail:
                return f"{self.head} + ({tail})"
            return _sign_join(str(self.head), tail)
        inner = str(self.terms[-1][1])
        for i in range(len(self.terms) - 2, -1, -1):
            pn_below = self.terms[i + 1][0]
            inner = _sign_join(str(self.terms[i][1]), _bar(pn_below, inner))
        return _sign_join(str(self.head), _bar(self.terms[0][0], inner))

    def to_json_obj(self) -> dict:
        return {
            "head": self.head.to_json_obj(),
            "terms": [{"num": pn.to_json_obj(), "den": pd.to_json_obj()}
                      for pn, pd in self.terms],
            "terminal": self.terminal.to_json_obj(),
        }


def _bar(pn: RatFun, inner: str) -> str:
    # render "pn/(inner)" as a signed term string
    s = str(pn)
    if " " in s:
        s = f"({s})"
    return f"{s}/({inner})"


def _sign_join(left: str, term: str) -> str:
    # "a + term", folding a leading minus of a single-factor term into the sign
    if term.startswith("-"):
        return f"{left} - {term[1:]}"
    return f"{left} + {term}"

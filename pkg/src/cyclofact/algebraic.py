"""Exact sign arithmetic for a real root of a trusted minimal polynomial.

A root is designated by its (monic, degree >= 2) minimal polynomial together
with an isolating rational interval.  Signs of polynomial expressions in the
root are decided exactly: reduce modulo the minimal polynomial, then refine
the isolating interval by bisection until interval arithmetic pins the sign.
Reduction to the zero polynomial means the expression vanishes at the root,
so refinement only runs on expressions with a nonzero value and terminates.

The minimal polynomial is trusted to be irreducible (so it has no rational
roots and bisection midpoints are never roots); a refinement cap turns a
violated trust assumption into an error instead of a hang.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomials import RatPoly

_REFINEMENT_CAP = 4096


class AlgebraicNumber:
    """A positive real algebraic number with exact sign queries.

    The isolating interval shrinks as queries run; instances cache that
    refinement, so they are cheap to reuse but not safe to share across
    threads mid-query.
    """

    def __init__(self, minpoly: RatPoly, lo: Fraction, hi: Fraction):
        if minpoly.is_zero or minpoly.degree() < 2:
            raise ValueError("minimal polynomial must have degree >= 2")
        if not minpoly.is_monic():
            raise ValueError("minimal polynomial must be monic")
        lo, hi = Fraction(lo), Fraction(hi)
        if lo < 0:
            raise ValueError("isolating interval must lie in the nonnegative reals")
        if not lo < hi:
            raise ValueError("empty isolating interval")
        s_lo, s_hi = minpoly.eval(lo), minpoly.eval(hi)
        if s_lo == 0 or s_hi == 0 or (s_lo > 0) == (s_hi > 0):
            raise ValueError("interval endpoints must straddle exactly one sign change")
        self.minpoly = minpoly
        self._lo = lo
        self._hi = hi
        self._sign_lo = 1 if s_lo > 0 else -1

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def refine(self) -> None:
        """Halve the isolating interval (one exact bisection step)."""
        mid = (self._lo + self._hi) / 2
        s = self.minpoly.eval(mid)
        if s == 0:
            raise ValueError(
                "bisection midpoint is a rational root: the designated polynomial "
                "is not irreducible"
            )
        if (s > 0) == (self._sign_lo > 0):
            self._lo = mid
        else:
            self._hi = mid

    def _range_of(self, reduced: RatPoly) -> tuple[Fraction, Fraction]:
        lo_b = Fraction(0)
        hi_b = Fraction(0)
        for deg, coeff in reduced.terms.items():
            mlo = self._lo**deg
            mhi = self._hi**deg
            if coeff > 0:
                lo_b += coeff * mlo
                hi_b += coeff * mhi
            else:
                lo_b += coeff * mhi
                hi_b += coeff * mlo
        return lo_b, hi_b

    def sign_of(self, expr: RatPoly) -> int:
        """Exact sign of expr evaluated at the root: -1, 0 or +1."""
        reduced = expr.mod(self.minpoly)
        if reduced.is_zero:
            return 0
        for _ in range(_REFINEMENT_CAP):
            lo_b, hi_b = self._range_of(reduced)
            if lo_b > 0:
                return 1
            if hi_b < 0:
                return -1
            self.refine()
        raise RuntimeError(
            "sign refinement did not converge; is the designated polynomial "
            "really the minimal polynomial of the root?"
        )

    def sign_of_coords(self, coords: Sequence[Fraction]) -> int:
        """Sign of sum(coords[i] * root^i) for coordinates in the power basis."""
        return self.sign_of(RatPoly({i: c for i, c in enumerate(coords) if c}))

    def compare(self, value: Fraction) -> int:
        """Sign of (root - value)."""
        return self.sign_of(RatPoly({1: Fraction(1), 0: -Fraction(value)}))


def power_coordinates(minpoly: RatPoly, kmax: int) -> list[tuple[Fraction, ...]]:
    """Coordinates of root^k, k = 0..kmax, in the power basis 1..root^(n-1).

    Iterated multiply-by-X with the top coefficient folded back through
    X^n = -(lower part of the minimal polynomial); all exact.
    """
    if not minpoly.is_monic():
        raise ValueError("minimal polynomial must be monic")
    n = minpoly.degree()
    fold = [-minpoly.coeff(i) for i in range(n)]
    vec = [Fraction(0)] * n
    vec[0] = Fraction(1)
    out = [tuple(vec)]
    for _ in range(kmax):
        top = vec[n - 1]
        vec = [Fraction(0)] + vec[:-1]
        if top:
            vec = [v + top * f for v, f in zip(vec, fold)]
        out.append(tuple(vec))
    return out

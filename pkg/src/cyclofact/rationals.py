"""Exact rational helpers shared across the package.

Every quantity in the core library is an exact ``fractions.Fraction``
(arbitrary precision, always reduced, positive denominator).  No floating
point is used anywhere: all comparisons, ceilings and interval searches
below are integer arithmetic on numerator/denominator.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def parse_rat(text: str) -> Fraction:
    """Parse "num/den" or "num" into a reduced Fraction.

    Denominator must be positive; whitespace around tokens is tolerated.
    """
    s = text.strip()
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num = int(num_s.strip())
        den = int(den_s.strip())
        if den <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(num, den)
    return Fraction(int(s))


def format_rat(x: Fraction) -> str:
    """Serialize a rational as "num/den", omitting "/den" when den == 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def rat_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def simplest_in_open(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational strictly between lo and hi.

    Stern-Brocot mediant walk over nonnegative rationals: descend the tree,
    stepping toward the interval until the mediant falls inside it.  The
    first mediant inside the interval is an ancestor of every other rational
    in it, hence has minimal denominator; the walk is deterministic.
    """
    if lo < 0:
        raise ValueError("interval must lie in the nonnegative rationals")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    # Fast-forward over the integer part so wide intervals do not cost
    # one mediant step per unit.
    base = lo.numerator // lo.denominator
    if Fraction(base + 1) < hi:
        return Fraction(base + 1)
    lo -= base
    hi -= base
    ln, ld = 0, 1
    rn, rd = 1, 0
    while True:
        mn, md = ln + rn, ld + rd
        m = Fraction(mn, md)
        if m <= lo:
            ln, ld = mn, md
        elif m >= hi:
            rn, rd = mn, md
        else:
            return m + base

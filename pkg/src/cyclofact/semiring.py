"""The additive monoid of nonnegative-integer polynomials evaluated at q > 1.

For a non-integer rational q = a/b > 1 (lowest terms, b >= 2) the monoid of
all values f(q), f ranging over nonnegative-integer polynomials, is atomic
with atom set {q^n}.  A factorization of x is a NatPoly z with z(q) = x; its
length is the coefficient sum.  Two value-preserving rewriting moves connect
factorizations of the same element:

* up move:   a copies of q^j   ->  b copies of q^(j+1)   (length -(a-b))
* down move: b copies of q^j   ->  a copies of q^(j-1)   (length +(a-b), j >= 1)

Running up moves to exhaustion yields the unique factorization with every
coefficient <= a-1; it is minimum-length.  (Uniqueness: multiply by b^E and
read levels bottom-up -- each digit is forced modulo a.)  Running down moves
until every coefficient at degree >= 1 is <= b-1 maximizes length; that the
terminal form is maximal for arbitrary elements is only proved here for
integer values (where x copies of 1 bound the length), so length_stats
cross-checks it against the exhaustive enumeration whenever the full length
set is requested.

Membership is decided by the same bottom-up digit argument: exponents are
bounded by the largest e with q^e <= x, and after scaling by b^e every digit
of a sub-a representation is forced, so the decision runs in one pass with
exact integer arithmetic.

For integer q (b = 1) the monoid is all of the nonnegative integers, a UFM:
the single factorization of x is x copies of the atom 1, and every operation
short-circuits accordingly.

Everything here is pure and safe for concurrent use; enumeration keeps its
memo table per call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .polynomials import NatPoly

DEFAULT_ORACLE_CAP = 10**6


class OracleBudgetExceeded(RuntimeError):
    """The exhaustive enumeration exceeded its state budget."""

    def __init__(self, message: str = "oracle budget exhausted"):
        super().__init__(message)


class NotInMonoidError(ValueError):
    """An operation required a value that is not an element of the monoid."""


class NormalFormDiscrepancy(AssertionError):
    """Normal-form length disagrees with the exhaustive enumeration.

    Never expected to fire; exists so a maximality failure of the down
    normal form would be reported rather than silently assumed away.
    """


@dataclass(frozen=True)
class RationalBase:
    """The base q = a/b > 1 in lowest terms.

    b == 1 selects the integer (UFM) regime; the rewriting and enumeration
    operations require b >= 2.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ValueError("base requires positive numerator and denominator")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("base a/b must be in lowest terms")
        if self.a <= self.b:
            raise ValueError("base must satisfy q = a/b > 1")

    @classmethod
    def from_rational(cls, q: Fraction) -> "RationalBase":
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @property
    def q(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def is_integer(self) -> bool:
        return self.b == 1

    def __str__(self) -> str:
        return str(self.a) if self.b == 1 else f"{self.a}/{self.b}"


def _require_fractional(base: RationalBase) -> None:
    if base.is_integer:
        raise ValueError("operation requires a non-integer base q = a/b with b >= 2")


def max_atom_exponent(base: RationalBase, x: Fraction) -> int:
    """Largest e with q^e <= x, or -1 when x < 1 (no atom fits)."""
    x = Fraction(x)
    if x < 1:
        return -1
    num, den = 1, 1
    e = -1
    while num * x.denominator <= x.numerator * den:
        e += 1
        num *= base.a
        den *= base.b
    return e


def _integer_witness(x: Fraction) -> Optional[NatPoly]:
    if x.denominator != 1:
        return None
    n = x.numerator
    return NatPoly({0: n}) if n else NatPoly.zero()


def member_witness(base: RationalBase, x: Fraction) -> Optional[NatPoly]:
    """Witness factorization of x, or None when x is not in the monoid.

    The returned witness is the canonical sub-a digit representation, i.e.
    already the minimum-length factorization.  Runs one bottom-up pass of
    forced digits; no search is involved.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("monoid elements are nonnegative")
    if x == 0:
        return NatPoly.zero()
    if base.is_integer:
        return _integer_witness(x)
    a, b = base.a, base.b
    top = max_atom_exponent(base, x)
    if top < 0:
        return None
    scaled = x * b**top
    if scaled.denominator != 1:
        return None
    t = scaled.numerator
    digits: dict[int, int] = {}
    bpow = b**top
    for level in range(top + 1):
        n = t * pow(bpow, -1, a) % a
        t -= n * bpow
        if t < 0:
            return None
        t //= a
        if n:
            digits[level] = n
        if t == 0:
            break
        bpow //= b
    if t != 0:
        return None
    return NatPoly(digits)


def is_member(base: RationalBase, x: Fraction) -> bool:
    return member_witness(base, x) is not None


def divides(base: RationalBase, x: Fraction, y: Fraction) -> Optional[NatPoly]:
    """Witness that y - x lies in the monoid, or None.

    x and y are assumed to be elements already; y < x is immediately
    impossible because the monoid is positive.
    """
    x, y = Fraction(x), Fraction(y)
    if y < x:
        return None
    return member_witness(base, y - x)


def apply_up_move(base: RationalBase, z: NatPoly, j: int) -> NatPoly:
    """One up move at degree j: a copies of q^j become b copies of q^(j+1)."""
    _require_fractional(base)
    terms = z.terms
    if terms.get(j, 0) < base.a:
        raise ValueError(f"up move needs at least a={base.a} copies at degree {j}")
    terms[j] -= base.a
    if not terms[j]:
        del terms[j]
    terms[j + 1] = terms.get(j + 1, 0) + base.b
    return NatPoly(terms)


def apply_down_move(base: RationalBase, z: NatPoly, j: int) -> NatPoly:
    """One down move at degree j >= 1: b copies of q^j become a copies of q^(j-1)."""
    _require_fractional(base)
    if j < 1:
        raise ValueError("down moves only apply at degree >= 1")
    terms = z.terms
    if terms.get(j, 0) < base.b:
        raise ValueError(f"down move needs at least b={base.b} copies at degree {j}")
    terms[j] -= base.b
    if not terms[j]:
        del terms[j]
    terms[j - 1] = terms.get(j - 1, 0) + base.a
    return NatPoly(terms)


def up_normal_form(base: RationalBase, z: NatPoly) -> NatPoly:
    """Run up moves to exhaustion: the unique all-coefficients-below-a form.

    This is the minimum-length factorization of z's value.  Degrees are
    processed in increasing order; batching consecutive moves at one degree
    into a divmod is exact and keeps the pass linear.
    """
    if base.is_integer:
        v = z.eval(base.q)
        return NatPoly({0: int(v)}) if v else NatPoly.zero()
    a, b = base.a, base.b
    terms = z.terms
    if not terms:
        return NatPoly.zero()
    j = min(terms)
    top = max(terms)
    while j <= top:
        c = terms.get(j, 0)
        if c >= a:
            moves, rest = divmod(c, a)
            if rest:
                terms[j] = rest
            else:
                del terms[j]
            terms[j + 1] = terms.get(j + 1, 0) + moves * b
            top = max(top, j + 1)
        j += 1
    return NatPoly(terms)


def down_normal_form(base: RationalBase, z: NatPoly) -> NatPoly:
    """Run down moves to exhaustion: coefficients at degree >= 1 all below b.

    Length strictly increases by a-b per move and is bounded by the element
    value, so the descending pass terminates; it realizes the maximum-length
    factorization (cross-checked against enumeration by length_stats).
    """
    if base.is_integer:
        v = z.eval(base.q)
        return NatPoly({0: int(v)}) if v else NatPoly.zero()
    a, b = base.a, base.b
    terms = z.terms
    if not terms:
        return NatPoly.zero()
    for j in range(max(terms), 0, -1):
        c = terms.get(j, 0)
        if c >= b:
            moves, rest = divmod(c, b)
            if rest:
                terms[j] = rest
            else:
                del terms[j]
            terms[j - 1] = terms.get(j - 1, 0) + moves * a
    return NatPoly(terms)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, cap: int):
        self.left = cap

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise OracleBudgetExceeded()


def _factorization_digit_runs(
    base: RationalBase, x: Fraction, budget: _Budget
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every digit string (degree, coeff pairs) of a factorization of x.

    Depth-first over levels 0..top: at each level the digit is forced modulo
    a, leaving a one-dimensional ladder of choices; the final level's digit
    is forced exactly.  Yields nothing when x is not an element.
    """
    a, b = base.a, base.b
    top = max_atom_exponent(base, x)
    if top < 0:
        return
    scaled = x * b**top
    if scaled.denominator != 1:
        return
    stack: list[tuple[int, int]] = []

    def rec(level: int, t: int, bpow: int) -> Iterator[tuple[tuple[int, int], ...]]:
        budget.spend()
        if level == top:
            if t:
                stack.append((level, t))
                yield tuple(stack)
                stack.pop()
            else:
                yield tuple(stack)
            return
        n = t * pow(bpow, -1, a) % a
        while n * bpow <= t:
            rest = (t - n * bpow) // a
            if n:
                stack.append((level, n))
                yield from rec(level + 1, rest, bpow // b)
                stack.pop()
            else:
                yield from rec(level + 1, rest, bpow // b)
            n += a

    yield from rec(0, scaled.numerator, b**top)


def iter_factorizations(
    base: RationalBase, x: Fraction, cap: int = DEFAULT_ORACLE_CAP
) -> Iterator[NatPoly]:
    """Stream the complete factorization set of x (exhaustive oracle).

    Raises OracleBudgetExceeded when the search visits more than cap states.
    For x outside the monoid the stream is empty; x = 0 yields the empty
    factorization.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("monoid elements are nonnegative")
    if x == 0:
        yield NatPoly.zero()
        return
    if base.is_integer:
        w = _integer_witness(x)
        if w is not None:
            yield w
        return
    budget = _Budget(cap)
    for run in _factorization_digit_runs(base, x, budget):
        yield NatPoly(dict(run))


def enumerate_factorizations(
    base: RationalBase, x: Fraction, cap: int = DEFAULT_ORACLE_CAP
) -> list[NatPoly]:
    """The complete factorization set of x as a list (exhaustive oracle)."""
    return list(iter_factorizations(base, x, cap))


def enumerate_length_set(
    base: RationalBase, x: Fraction, cap: int = DEFAULT_ORACLE_CAP
) -> set[int]:
    """Exhaustive length set of x via the digit dynamic program.

    Independent of the normal forms: memoizes the set of achievable digit
    sums per (level, residual) state instead of materializing every
    factorization, so it stays usable where the full set would not.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("monoid elements are nonnegative")
    if x == 0:
        return {0}
    if base.is_integer:
        w = _integer_witness(x)
        return {w.length()} if w is not None else set()
    a, b = base.a, base.b
    top = max_atom_exponent(base, x)
    if top < 0:
        return set()
    scaled = x * b**top
    if scaled.denominator != 1:
        return set()
    budget = _Budget(cap)
    memo: dict[tuple[int, int], frozenset[int]] = {}

    def rec(level: int, t: int, bpow: int) -> frozenset[int]:
        key = (level, t)
        cached = memo.get(key)
        if cached is not None:
            return cached
        budget.spend()
        if level == top:
            result = frozenset({t})
        else:
            acc: set[int] = set()
            n = t * pow(bpow, -1, a) % a
            while n * bpow <= t:
                for tail in rec(level + 1, (t - n * bpow) // a, bpow // b):
                    acc.add(n + tail)
                budget.spend()
                n += a
            result = frozenset(acc)
        memo[key] = result
        return result

    return set(rec(0, scaled.numerator, b**top))


@dataclass(frozen=True)
class LengthStats:
    """Minimum/maximum factorization lengths and their ratio for one element."""

    min_len: int
    max_len: int
    elasticity: Fraction
    length_set: Optional[tuple[int, ...]] = None


def length_stats(
    base: RationalBase,
    x: Fraction,
    want_full_set: bool = False,
    cap: int = DEFAULT_ORACLE_CAP,
    witness: Optional[NatPoly] = None,
) -> LengthStats:
    """Length statistics of a nonzero element x.

    min comes from the up normal form, max from the down normal form of a
    single membership witness; the full length set (when requested) comes
    from the exhaustive digit DP and is cross-checked against both.
    Supplying a presentation of x as `witness` skips the membership
    decision (certificates flow through, they are not re-derived).
    """
    x = Fraction(x)
    if x <= 0:
        raise NotInMonoidError("length statistics require a nonzero element")
    if base.is_integer:
        if x.denominator != 1:
            raise NotInMonoidError(f"{x} is not an element of the monoid at q={base}")
        n = x.numerator
        return LengthStats(n, n, Fraction(1), (n,) if want_full_set else None)
    if witness is not None:
        if witness.eval(base.q) != x:
            raise ValueError("supplied witness does not evaluate to x")
    else:
        witness = member_witness(base, x)
        if witness is None:
            raise NotInMonoidError(f"{x} is not an element of the monoid at q={base}")
    min_len = up_normal_form(base, witness).length()
    max_len = down_normal_form(base, witness).length()
    lengths: Optional[tuple[int, ...]] = None
    if want_full_set:
        full = enumerate_length_set(base, x, cap)
        if min(full) != min_len or max(full) != max_len:
            raise NormalFormDiscrepancy(
                f"normal-form lengths ({min_len}, {max_len}) disagree with "
                f"enumerated range ({min(full)}, {max(full)}) for x={x}, q={base}"
            )
        lengths = tuple(sorted(full))
    return LengthStats(min_len, max_len, Fraction(max_len, min_len), lengths)

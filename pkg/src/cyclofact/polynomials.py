"""Sparse exact polynomials: integer, nonnegative-integer and rational.

Three thin wrappers around a ``{degree: coefficient}`` map:

* ``IntPoly``  -- integer coefficients, used for minimal polynomials and
  differences of polynomials.
* ``NatPoly``  -- strictly positive integer coefficients.  Doubles as a
  factorization (coefficient at i = multiplicity of the atom q^i) and as an
  element presentation f with f(q) = value.
* ``RatPoly``  -- rational coefficients, the input type for minimal-pair
  computations and the polynomial-string parser.

Zero coefficients are never stored, so the zero polynomial is the empty map;
it is a distinct queryable state (``is_zero``) and asking for its support or
order is a hard error.  Sparse maps are the right shape here: presentations
have few terms but the exponents can grow large.

All instances are immutable values and safe to share across threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rat = Fraction


class ZeroPolynomialError(ValueError):
    """Raised by operations that are undefined on the zero polynomial."""


def _clean(terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> dict[int, int]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    out: dict[int, int] = {}
    for deg, coeff in items:
        if deg < 0:
            raise ValueError(f"negative degree {deg}")
        if coeff:
            out[deg] = out.get(deg, 0) + coeff
            if not out[deg]:
                del out[deg]
    return out


class _SparsePoly:
    """Shared machinery for the integer-coefficient wrappers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned = _clean(terms)
        self._check(cleaned)
        self._terms = cleaned
        self._hash: int | None = None

    @staticmethod
    def _check(terms: dict[int, int]) -> None:
        pass

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    def support(self) -> set[int]:
        """Degrees carrying a nonzero coefficient; undefined for zero."""
        if not self._terms:
            raise ZeroPolynomialError("undefined support of the zero polynomial")
        return set(self._terms)

    def order(self) -> int:
        """min(support) = largest d with X^d dividing the polynomial."""
        if not self._terms:
            raise ZeroPolynomialError("undefined order of the zero polynomial")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("undefined degree of the zero polynomial")
        return max(self._terms)

    def eval(self, x: Fraction) -> Fraction:
        """Exact value sum(c_i * x^i) as a reduced rational."""
        x = Fraction(x)
        total = Fraction(0)
        for deg, coeff in self._terms.items():
            total += coeff * x**deg
        return total

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [degree, coefficient] pairs sorted by degree."""
        return [[d, c] for d, c in sorted(self._terms.items())]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]):
        return cls([(int(d), int(c)) for d, c in pairs])

    def __eq__(self, other) -> bool:
        if isinstance(other, _SparsePoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        parts = []
        for deg, coeff in sorted(self._terms.items()):
            if deg == 0:
                parts.append(f"{coeff}")
            elif deg == 1:
                parts.append(f"{coeff}*X" if coeff != 1 else "X")
            else:
                parts.append(f"{coeff}*X^{deg}" if coeff != 1 else f"X^{deg}")
        return f"{type(self).__name__}({' + '.join(parts)})"


class IntPoly(_SparsePoly):
    """Sparse polynomial with (nonzero) integer coefficients."""

    def __add__(self, other: "IntPoly") -> "IntPoly":
        merged = dict(self._terms)
        for deg, coeff in other._terms.items():
            merged[deg] = merged.get(deg, 0) + coeff
        return IntPoly(merged)

    def __neg__(self) -> "IntPoly":
        return IntPoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return IntPoly(out)

    def sign_variations(self) -> int:
        """Sign changes in the coefficient sequence by increasing degree.

        Zero coefficients are skipped.  By Descartes' rule the result is an
        upper bound for the number of positive roots and has the same parity.
        """
        if not self._terms:
            raise ZeroPolynomialError("sign variations undefined for the zero polynomial")
        changes = 0
        prev = 0
        for _, coeff in sorted(self._terms.items()):
            sign = 1 if coeff > 0 else -1
            if prev and sign != prev:
                changes += 1
            prev = sign
        return changes


class NatPoly(_SparsePoly):
    """Sparse polynomial with strictly positive integer coefficients.

    Also the factorization type: coefficient n_i at degree i means n_i
    copies of the atom q^i, so ``length`` is the formal number of atoms.
    """

    @staticmethod
    def _check(terms: dict[int, int]) -> None:
        for deg, coeff in terms.items():
            if coeff < 0:
                raise ValueError(f"negative coefficient {coeff} at degree {deg}")

    @classmethod
    def zero(cls) -> "NatPoly":
        return cls()

    @classmethod
    def atom(cls, exponent: int) -> "NatPoly":
        return cls({exponent: 1})

    def length(self) -> int:
        """Sum of coefficients, i.e. the value at 1 (factorization length)."""
        return sum(self._terms.values())

    def __add__(self, other: "NatPoly") -> "NatPoly":
        merged = dict(self._terms)
        for deg, coeff in other._terms.items():
            merged[deg] = merged.get(deg, 0) + coeff
        return NatPoly(merged)

    def __mul__(self, other: "NatPoly") -> "NatPoly":
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return NatPoly(out)

    def __pow__(self, n: int) -> "NatPoly":
        if n < 0:
            raise ValueError("negative power")
        result = NatPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def as_int_poly(self) -> IntPoly:
        return IntPoly(self._terms)


class RatPoly:
    """Sparse polynomial with rational coefficients (immutable)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[int, Fraction] = {}
        for deg, coeff in items:
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            c = Fraction(coeff)
            if c:
                out[deg] = out.get(deg, Fraction(0)) + c
                if not out[deg]:
                    del out[deg]
        self._terms = out

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, degree: int) -> Fraction:
        return self._terms.get(degree, Fraction(0))

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("undefined degree of the zero polynomial")
        return max(self._terms)

    def is_monic(self) -> bool:
        return bool(self._terms) and self.coeff(self.degree()) == 1

    def eval(self, x: Fraction) -> Fraction:
        total = Fraction(0)
        for deg, coeff in self._terms.items():
            total += coeff * Fraction(x) ** deg
        return total

    def denominator_lcm(self) -> int:
        """lcm of the coefficient denominators (1 for the zero polynomial)."""
        ell = 1
        for coeff in self._terms.values():
            ell = math.lcm(ell, coeff.denominator)
        return ell

    def scale(self, c: Fraction) -> "RatPoly":
        c = Fraction(c)
        return RatPoly({d: c * v for d, v in self._terms.items()})

    def __add__(self, other: "RatPoly") -> "RatPoly":
        merged = dict(self._terms)
        for deg, coeff in other._terms.items():
            merged[deg] = merged.get(deg, Fraction(0)) + coeff
        return RatPoly(merged)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, Fraction(0)) + c1 * c2
        return RatPoly(out)

    def mod(self, divisor: "RatPoly") -> "RatPoly":
        """Remainder of exact division by a nonzero polynomial."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial modulo zero")
        ddeg = divisor.degree()
        lead = divisor.coeff(ddeg)
        rem = dict(self._terms)

        def top() -> int | None:
            live = [d for d, c in rem.items() if c]
            return max(live) if live else None

        t = top()
        while t is not None and t >= ddeg:
            factor = rem[t] / lead
            for d, c in divisor._terms.items():
                nd = t - ddeg + d
                rem[nd] = rem.get(nd, Fraction(0)) - factor * c
            rem.pop(t, None)
            t = top()
        return RatPoly(rem)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "RatPoly(0)"
        parts = [f"({c})*X^{d}" for d, c in sorted(self._terms.items())]
        return f"RatPoly({' + '.join(parts)})"

    @classmethod
    def from_int_poly(cls, p: IntPoly | NatPoly) -> "RatPoly":
        return cls({d: Fraction(c) for d, c in p.terms.items()})


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*
        (?P<var>[Xx](?:\s*\^\s*(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def parse_polynomial(text: str) -> RatPoly:
    """Parse strings like "X^2 - 3X + 1" or "X - 3/2" into a RatPoly.

    Accepted term syntax: optional rational coefficient, optional '*',
    optional X with optional '^exp'.  Terms are combined left to right with
    '+'/'-' separators.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    # Tokenize into signed terms.  A leading sign is optional.
    chunks = re.findall(r"[+-]?[^+-]+", s.replace(" ", " "))
    terms: list[tuple[int, Fraction]] = []
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"malformed polynomial term {chunk!r} in {text!r}")
        coeff = Fraction(m.group("coeff").replace(" ", "")) if m.group("coeff") else Fraction(1)
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        terms.append((exp, sign * coeff))
    return RatPoly(terms)

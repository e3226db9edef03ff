from fractions import Fraction as F

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclofact.polynomials import (
    IntPoly,
    NatPoly,
    RatPoly,
    ZeroPolynomialError,
    parse_polynomial,
)
from cyclofact.rationals import format_rat, parse_rat, simplest_in_open


def test_eval_examples():
    assert IntPoly().eval(F(3, 2)) == 0
    assert NatPoly({2: 1, 3: 2}).eval(F(3, 2)) == 9
    assert NatPoly({1: 2}).eval(F(3, 2)) == 3


def test_support_examples():
    assert NatPoly({2: 1, 3: 2}).support() == {2, 3}
    assert NatPoly({0: 5}).support() == {0}
    assert NatPoly({7: 1}).support() == {7}
    with pytest.raises(ZeroPolynomialError):
        NatPoly().support()


def test_order_examples():
    assert NatPoly({2: 1, 3: 2}).order() == 2
    assert NatPoly({1: 3}).order() == 1
    assert NatPoly({0: 2}).order() == 0
    with pytest.raises(ZeroPolynomialError):
        IntPoly().order()


def test_sign_variation_examples():
    assert IntPoly({2: 1, 1: -3, 0: 2}).sign_variations() == 2
    assert IntPoly({2: 1, 0: 1}).sign_variations() == 0
    assert IntPoly({1: 2, 0: -3}).sign_variations() == 1
    with pytest.raises(ZeroPolynomialError):
        IntPoly().sign_variations()


def test_natpoly_rejects_negative_coefficients():
    with pytest.raises(ValueError):
        NatPoly({1: -2})


def test_zero_polynomial_is_distinct_state():
    z = NatPoly.zero()
    assert z.is_zero
    assert not NatPoly({0: 1}).is_zero
    assert z.length() == 0


sparse_int_polys = st.dictionaries(
    st.integers(min_value=0, max_value=12),
    st.integers(min_value=-30, max_value=30).filter(bool),
    max_size=6,
).map(IntPoly)

rationals = st.fractions(
    min_value=F(-8), max_value=F(8), max_denominator=12
)


@given(sparse_int_polys, sparse_int_polys, rationals)
def test_eval_is_semiring_homomorphism(f, g, x):
    assert (f + g).eval(x) == f.eval(x) + g.eval(x)
    assert (f * g).eval(x) == f.eval(x) * g.eval(x)


@given(sparse_int_polys)
def test_order_bounds_support(f):
    if f.is_zero:
        return
    o = f.order()
    assert all(o <= d for d in f.support())
    # X^order divides exactly: shifting down by the order leaves a nonzero
    # constant term.
    shifted = IntPoly({d - o: c for d, c in f.terms.items()})
    assert shifted.coeff(0) != 0


@given(
    st.lists(st.integers(min_value=1, max_value=9), min_size=0, max_size=4),
    st.dictionaries(
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=1, max_value=9),
        min_size=1,
        max_size=3,
    ),
)
def test_descartes_parity(roots, positive_tail):
    # f = prod(X - r_i) * g with g having only positive coefficients, hence
    # positive leading coefficient and no positive roots: the variation
    # count must be >= #roots and congruent to it mod 2.
    f = IntPoly(positive_tail)
    for r in roots:
        f = f * IntPoly({1: 1, 0: -r})
    v = f.sign_variations()
    assert v >= len(roots)
    assert (v - len(roots)) % 2 == 0


@given(rationals, rationals)
def test_rationals_always_reduced(x, y):
    import math

    z = x * y + x - y
    assert math.gcd(abs(z.numerator), z.denominator) == 1
    assert z.denominator >= 1


def test_rat_serialization_round_trip():
    assert format_rat(F(3, 2)) == "3/2"
    assert format_rat(F(9)) == "9"
    assert format_rat(F(-5, 3)) == "-5/3"
    for s in ("3/2", "9", "-5/3", "0"):
        assert format_rat(parse_rat(s)) == s
    with pytest.raises(ValueError):
        parse_rat("3/-2")


def test_poly_pair_serialization():
    p = NatPoly({3: 2, 0: 1})
    assert p.to_pairs() == [[0, 1], [3, 2]]
    assert NatPoly.from_pairs(p.to_pairs()) == p


@given(st.fractions(min_value=F(0), max_value=F(50), max_denominator=40),
       st.fractions(min_value=F(1, 40), max_value=F(3), max_denominator=40))
def test_simplest_in_open_is_minimal(lo, width):
    hi = lo + width
    b = simplest_in_open(lo, hi)
    assert lo < b < hi
    # no rational with a smaller denominator lies in the interval
    for den in range(1, b.denominator):
        lo_num = lo.numerator * den // lo.denominator
        for num in range(lo_num, (hi.numerator * den) // hi.denominator + 2):
            assert not lo < F(num, den) < hi


def test_parse_polynomial():
    p = parse_polynomial("X^2 - 3X + 1")
    assert p.terms == {2: F(1), 1: F(-3), 0: F(1)}
    assert parse_polynomial("X - 3/2").terms == {1: F(1), 0: F(-3, 2)}
    assert parse_polynomial("2*X^3 + X").terms == {3: F(2), 1: F(1)}
    assert parse_polynomial("5").terms == {0: F(5)}
    with pytest.raises(ValueError):
        parse_polynomial("X^2 + + 3")
    with pytest.raises(ValueError):
        parse_polynomial("")


def test_ratpoly_mod():
    m = parse_polynomial("X^2 - 3X + 1")
    r = RatPoly({3: F(1)}).mod(m)  # X^3 = (X+3)m + 8X - 3
    assert r.terms == {1: F(8), 0: F(-3)}
    assert RatPoly({2: F(1), 1: F(-3), 0: F(1)}).mod(m).is_zero

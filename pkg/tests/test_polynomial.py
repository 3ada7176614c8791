"""Exact polynomial arithmetic and the hex codec."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newmanpoly.polynomial import (
    EvenValue,
    IntPolynomial,
    InvalidHex,
    NewmanPolynomial,
    NonMonicDivisor,
    ZeroDivisor,
    parse_polynomial,
)

coeff_lists = st.lists(st.integers(-9, 9), min_size=0, max_size=13)
polys = coeff_lists.map(IntPolynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def monic(coeffs):
    return IntPolynomial(tuple(coeffs) + (1,))


monic_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=9).map(monic)


# ---------------------------------------------------------------- ring laws


@given(polys, polys, polys)
def test_add_associative_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


@given(polys, polys, polys)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, polys, polys)
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys)
def test_additive_inverse(a):
    assert (a + (-a)).is_zero()
    assert a - a == IntPolynomial(())


@given(polys, polys, st.integers(-4, 4))
def test_evaluation_is_ring_homomorphism(a, b, t):
    # plain integer arithmetic is the oracle for + and *
    assert (a + b)(t) == a(t) + b(t)
    assert (a * b)(t) == a(t) * b(t)


@given(polys, polys)
def test_degree_of_product(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree == a.degree + b.degree


# ---------------------------------------------------------------- division


@given(polys, monic_polys)
def test_divrem_identity(a, b):
    q, r = a.divrem(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, monic_polys)
def test_divrem_of_exact_product(a, b):
    q, r = (a * b).divrem(b)
    assert r.is_zero()
    assert q == a


def test_divrem_rejects_zero_and_nonmonic():
    p = parse_polynomial("x^2+1")
    with pytest.raises(ZeroDivisor):
        p.divrem(IntPolynomial(()))
    with pytest.raises(NonMonicDivisor):
        p.divrem(parse_polynomial("2x+1"))


@given(polys, polys, st.integers(-3, 3))
def test_derivative_product_rule(a, b, t):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs == rhs
    assert lhs(t) == rhs(t)


@given(polys, st.integers(1, 4), st.integers(-2, 2))
def test_substitute_power(p, k, t):
    assert p.substitute_power(k)(t) == p(t**k)


# ------------------------------------------------------------ construction


def test_trailing_zeros_are_stripped():
    assert IntPolynomial((1, 2, 0, 0)) == IntPolynomial((1, 2))
    assert IntPolynomial((0, 0, 0)).is_zero()
    assert IntPolynomial(()).degree == float("-inf")


def test_reciprocal_detection():
    assert parse_polynomial("x^4+x^3-x^2+x+1").is_reciprocal()
    assert not parse_polynomial("x^4+x^3-x^2+1").is_reciprocal()
    assert not IntPolynomial(()).is_reciprocal()


def test_shift():
    p = parse_polynomial("x+1")
    assert p.shift(3) == parse_polynomial("x^4+x^3")
    assert p.shift(0) == p


def test_parse_both_syntaxes():
    a = parse_polynomial("1 1 0 -1")
    b = parse_polynomial("-x^3+x+1")
    assert a == b
    assert parse_polynomial("1, 0, 1") == parse_polynomial("x^2+1")
    assert parse_polynomial("x") == IntPolynomial((0, 1))
    assert parse_polynomial("x^10-x^8-x^5+x+1").degree == 10


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_polynomial("x^^2")
    with pytest.raises(ValueError):
        parse_polynomial("")
    with pytest.raises(ValueError):
        parse_polynomial("y^2+1")


def test_line_round_trip():
    p = parse_polynomial("x^5-3x^2+7")
    assert IntPolynomial.from_line(p.to_line()) == p


def test_str_forms():
    assert str(parse_polynomial("x^2-x-1")) == "x^2-x-1"
    assert str(IntPolynomial((1,))) == "1"
    assert str(IntPolynomial(())) == "0"
    assert str(IntPolynomial((0, 2))) == "2x"


# --------------------------------------------------------------- worked case

P16 = parse_polynomial("x^16+x^15-x^11-x^8-x^5+x+1")
Q22 = parse_polynomial("x^22+x^20+x^18+x^15+x^13+2x^11+x^9+x^7+x^4+x^2+1")
N38 = parse_polynomial("x^38+x^37+x^36+x^35+x^34+x^27+x^11+x^4+x^3+x^2+x+1")


def test_degree_16_times_its_cofactor():
    """The degree-38 product has 0/1 coefficients even though the cofactor
    carries a coefficient 2."""
    assert P16 * Q22 == N38
    assert N38.is_newman()
    assert not Q22.is_newman()
    q, r = N38.divrem(P16)
    assert r.is_zero() and q == Q22


# ------------------------------------------------------------------ bitmask


def test_newman_from_polynomial_and_back():
    n = NewmanPolynomial.from_polynomial(N38)
    assert n.degree == 38
    assert n.to_polynomial() == N38
    assert n.exponents() == (0, 1, 2, 3, 4, 11, 27, 34, 35, 36, 37, 38)


def test_newman_rejects_bad_inputs():
    with pytest.raises(ValueError):
        NewmanPolynomial.from_polynomial(parse_polynomial("x^2-1"))
    with pytest.raises(ValueError):
        NewmanPolynomial.from_polynomial(parse_polynomial("x^2+x"))  # constant 0
    with pytest.raises(EvenValue):
        NewmanPolynomial(6)
    with pytest.raises(ValueError):
        NewmanPolynomial(0)


def test_hex_codec_pins():
    assert NewmanPolynomial.from_exponents([0, 1, 3]).to_hex() == "B"
    assert NewmanPolynomial.from_hex("B").to_polynomial() == parse_polynomial("x^3+x+1")
    assert NewmanPolynomial.from_hex("b").to_hex() == "B"  # case-insensitive input
    with pytest.raises(InvalidHex):
        NewmanPolynomial.from_hex("0x1F")
    with pytest.raises(InvalidHex):
        NewmanPolynomial.from_hex("")
    with pytest.raises(EvenValue):
        NewmanPolynomial.from_hex("A")  # bit 0 clear: constant term missing


@given(st.sets(st.integers(1, 200), max_size=24))
def test_hex_round_trip(exps):
    n = NewmanPolynomial.from_exponents({0} | exps)
    assert NewmanPolynomial.from_hex(n.to_hex()) == n
    assert n.to_hex() == n.to_hex().upper()


@given(st.sets(st.integers(1, 60), max_size=12))
def test_bits_evaluate_like_the_polynomial(exps):
    n = NewmanPolynomial.from_exponents({0} | exps)
    p = n.to_polynomial()
    assert n(2) == p(2) == n.bits
    assert n(-2) == p(-2)


@settings(max_examples=40)
@given(st.sets(st.integers(1, 40), max_size=10), st.sets(st.integers(1, 40), max_size=10))
def test_newman_products_stay_nonnegative(e1, e2):
    a = NewmanPolynomial.from_exponents({0} | e1).to_polynomial()
    b = NewmanPolynomial.from_exponents({0} | e2).to_polynomial()
    prod = a * b
    assert all(c >= 0 for c in prod.coeffs)
    assert prod.constant_term() == 1

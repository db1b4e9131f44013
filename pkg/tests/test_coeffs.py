from fractions import Fraction

from hypothesis import given, strategies as st

from rbhopf.coeffs import (
    LAMBDA,
    ONE,
    SYMBOLIC,
    ZERO,
    Coeff,
    WeightMode,
    coeff_add,
    coeff_mul,
    coeff_neg,
    format_coeff,
    specialize,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coeffs = st.dictionaries(st.integers(0, 4), rationals, max_size=4).map(Coeff)
modes = st.one_of(st.just(SYMBOLIC), rationals.map(WeightMode))


def test_ring_examples():
    assert coeff_add(LAMBDA, LAMBDA) == Coeff({1: 2})
    assert coeff_mul(LAMBDA, LAMBDA) == Coeff.lam(2)
    s = coeff_add(ONE, coeff_neg(ONE))
    assert s == ZERO and s.terms == {}


def test_canonical_sparse_form():
    c = Coeff({0: 0, 1: Fraction(0), 2: 3})
    assert c.terms == {2: 3}
    assert (Coeff({1: 1}) - LAMBDA).terms == {}


def test_specialize_examples():
    assert specialize(Coeff({0: 2, 1: 1}), WeightMode(0)) == Coeff.const(2)
    assert specialize(Coeff.lam(2), WeightMode(-1)) == ONE
    assert specialize(LAMBDA, SYMBOLIC) == LAMBDA


def test_format():
    assert format_coeff(Coeff.const(2)) == "2"
    assert format_coeff(Coeff.const(Fraction(-1, 3))) == "-1/3"
    assert format_coeff(LAMBDA) == "lambda"
    assert format_coeff(Coeff.lam(2)) == "lambda^2"
    assert format_coeff(Coeff({0: 3, 1: 2})) == "3 + 2*lambda"
    assert format_coeff(Coeff({0: 1, 1: -1})) == "1 - lambda"
    assert format_coeff(ZERO) == "0"


@given(coeffs, coeffs, coeffs)
def test_commutative_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a + (-a) == ZERO


@given(coeffs, coeffs, modes)
def test_specialize_is_ring_homomorphism(a, b, mode):
    assert specialize(a * b, mode) == specialize(a, mode) * specialize(b, mode)
    assert specialize(a + b, mode) == specialize(a, mode) + specialize(b, mode)


@given(coeffs)
def test_hash_consistent_with_eq(a):
    b = Coeff(a.terms)
    assert a == b and hash(a) == hash(b)

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendriform.scalars import LAM, ONE, Q, ZERO, Scalar, parse_scalar, scalar_eval

coeffs = st.one_of(st.integers(-5, 5), st.fractions(max_denominator=7).filter(lambda f: abs(f) < 6))
polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=4).map(Scalar)
points = st.fractions(max_denominator=5).filter(lambda f: abs(f) < 4)


@given(polys, polys, points, points)
def test_evaluation_is_a_ring_homomorphism(a, b, x, y):
    assert (a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y)
    assert (a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y)
    assert (a - b).eval(x, y) == a.eval(x, y) - b.eval(x, y)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(polys)
@settings(max_examples=200)
def test_print_parse_round_trip(a):
    assert parse_scalar(str(a)) == a


def test_printing_order():
    c = (ONE + LAM) ** 2 - Q * Fraction(1, 2)
    assert str(c) == "1 - 1/2*q + 2*lam + lam^2"
    assert str(ZERO) == "0"
    assert str(-LAM * Q) == "-lam*q"


def test_constant_queries():
    assert Scalar.const(3).is_constant()
    assert Scalar.const(Fraction(6, 3)).constant_value() == 2
    assert not LAM.is_constant()
    with pytest.raises(ValueError):
        LAM.constant_value()
    assert (LAM**3 * Q + LAM).lam_degree() == 3


def test_specialize_partially():
    c = LAM * Q + 2 * Q
    assert c.specialize(lam0=2) == 4 * Q
    assert c.specialize(q0=Fraction(1, 2)) == LAM * Fraction(1, 2) + 1
    assert scalar_eval(c, 1, 1) == 3


def test_integer_coefficients_stay_integers():
    c = Scalar({(0, 0): Fraction(4, 2)})
    assert type(c.terms[(0, 0)]) is int


@pytest.mark.parametrize("bad", ["lam +", "2 ** q", "x", "(lam", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)

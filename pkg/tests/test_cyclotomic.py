from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coinvariants.cyclotomic import Cyclotomic, cyclotomic_polynomial, two_cos


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(7) == (1,) * 7


def test_roots_of_unity():
    z = Cyclotomic.root(12)
    assert z ** 12 == 1
    assert z ** 6 == -1
    i = Cyclotomic.root(12, 3)
    assert i * i == -1
    assert Cyclotomic.root(5, 5) == 1


def test_two_cos_values():
    assert two_cos(3, 1) == -1
    assert two_cos(4, 1) == 0
    assert two_cos(6, 1) == 1
    assert two_cos(2, 1) == -2
    # (2 cos(2 pi / 5))^2 + 2 cos(2 pi/5) - 1 = 0
    c = two_cos(5, 1)
    assert c * c + c - 1 == 0


def test_conjugate_and_rational():
    z = Cyclotomic.root(8)
    assert z.conjugate() == z ** 7
    assert (z + z.conjugate()).conjugate() == z + z.conjugate()
    assert Cyclotomic.rational(5, Fraction(3, 2)).to_fraction() == Fraction(3, 2)
    assert not z.is_rational()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        Cyclotomic.root(3) + Cyclotomic.root(4)


def test_embed():
    z3 = Cyclotomic.root(3)
    assert z3.embed(12) == Cyclotomic.root(12, 4)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(5, 0).inverse()


elements = st.tuples(st.sampled_from([3, 5, 8, 12]), st.lists(st.integers(-4, 4), min_size=1, max_size=6))


@settings(max_examples=60, deadline=None)
@given(elements)
def test_inverse_property(case):
    order, coeffs = case
    a = Cyclotomic(order, coeffs)
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert (a / a) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([5, 7, 12]), st.lists(st.integers(-3, 3), min_size=1, max_size=5), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_field_axioms(order, xs, ys):
    a, b = Cyclotomic(order, xs), Cyclotomic(order, ys)
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()

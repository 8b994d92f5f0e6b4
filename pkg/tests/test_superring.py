from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coinvariants.series import dimension
from coinvariants.superring import (
    ContextError,
    SuperPoly,
    SuperRing,
    Var,
    basis_enumerate,
    cyclic_basis_enumerate,
    cyclic_reduce,
    fermion_sign,
    ideal_generators,
    polarization_sets,
    polarize,
    reduce,
    reduce_poly,
)

RING = SuperRing(2, 2)


def mono(ring, text):
    sign, m = ring.parse_monomial(text)
    assert sign == 1
    return m


def test_fermion_sign():
    assert fermion_sign(0b01, 0b10) == 1
    assert fermion_sign(0b10, 0b01) == -1
    assert fermion_sign(0b01, 0b01) == 0
    assert fermion_sign(0b110, 0b001) == 1


def test_parse_and_format_roundtrip():
    ring = SuperRing(2, 1)
    for text in ["1", "x1_1^3 x2_2 t1_1", "x2_1 t1_1 t2_1"]:
        sign, m = ring.parse_monomial(text)
        assert sign == 1 and ring.format_monomial(m) == text
    sign, m = ring.parse_monomial("t2_1 t1_1")
    assert sign == -1 and ring.format_monomial(m) == "t1_1 t2_1"
    assert ring.parse_monomial("t1_1 t1_1")[0] == 0
    with pytest.raises(ValueError):
        ring.parse_monomial("y1_1")


def test_cyclic_names():
    ring = SuperRing(1, 1, width=1)
    assert ring.format_monomial(ring.parse_monomial("x_1^2 t_1")[1]) == "x_1^2 t_1"


def test_theta_squares_vanish():
    t = SuperPoly.gen(RING, Var(True, 1, 1))
    assert (t * t).is_zero()


def test_mixed_contexts_rejected():
    with pytest.raises(ContextError):
        SuperPoly.gen(RING, Var(False, 1, 1)) + SuperPoly.gen(SuperRing(1, 1), Var(False, 1, 1))


def test_multidegree_counts():
    ring = SuperRing(1, 1)
    assert len(ring.monomials_of_multidegree((2, 1))) == 3 * 2
    assert len(ring.monomials_of_multidegree((0, 3))) == 0


gen_strategy = st.sampled_from(RING.variables())
words = st.lists(gen_strategy, max_size=4)
polys = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=3).map(
    lambda terms: sum((SuperPoly.from_word(RING, w, c) for w, c in terms), SuperPoly(RING))
)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_associativity_and_distributivity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=80, deadline=None)
@given(words, words)
def test_supercommutativity(u, v):
    a, b = SuperPoly.from_word(RING, u), SuperPoly.from_word(RING, v)
    odd_u = sum(g.odd for g in u) % 2
    odd_v = sum(g.odd for g in v) % 2
    sign = -1 if odd_u and odd_v else 1
    assert a * b == (b * a).scale(sign)


def test_polarization_sets():
    assert polarization_sets(2, 2, 1) == ((False, 1), (False, 2))
    assert polarization_sets(2, 2, 2) == ((False, 2), (True, 1))
    assert polarization_sets(2, 2, 3) == ((True, 1), (True, 2))
    with pytest.raises(ValueError):
        polarization_sets(2, 2, 4)


def test_polarization_of_norm():
    ring = SuperRing(2, 0)
    x1, x2 = SuperPoly.gen(ring, Var(False, 1, 1)), SuperPoly.gen(ring, Var(False, 2, 1))
    y1, y2 = SuperPoly.gen(ring, Var(False, 1, 2)), SuperPoly.gen(ring, Var(False, 2, 2))
    assert polarize(1, x1 * x1 + x2 * x2) == (x1 * y1 + x2 * y2).scale(2)


def _multidegree(p):
    return p.ring.multidegree(next(iter(p.terms)))


def _is_multiple_of_generator(p, gens):
    if p.is_zero():
        return True
    for g in gens:
        (m, c), = list(g.items())[:1]
        if m in p.terms:
            ratio = Fraction(p.coefficient(m)) / c
            if p == g.scale(ratio):
                return True
    return False


@pytest.mark.parametrize("n,k,j", [(3, 2, 1), (4, 1, 2), (3, 3, 0), (2, 0, 3)])
def test_polarization_permutes_quadratic_generators(n, k, j):
    gens = ideal_generators(n, k, j)
    quadratics = [g for g in gens if len(g) == 2 and sum(_multidegree(g)) == 2]
    for ell in range(1, k + j):
        for g in quadratics:
            assert _is_multiple_of_generator(polarize(ell, g), quadratics)


def test_ideal_generator_counts():
    # k=2, j=1: 3 bosonic quadratics, 2 mixed, 0 fermionic, degree-n first-index monomials
    gens = ideal_generators(3, 2, 1)
    assert len(gens) == 3 + 2 + 0 + (4 + 3)


@pytest.mark.parametrize("n,k,j", [(n, k, j) for n in range(2, 8) for k in range(4) for j in range(4) if k + j <= 4])
def test_basis_size_matches_dimension(n, k, j):
    basis = basis_enumerate(n, k, j)
    assert len(basis) == len(set(basis)) == dimension(n, k, j)


def test_small_bases():
    ring = SuperRing(0, 1)
    assert [ring.format_monomial(m) for m in basis_enumerate(3, 0, 1)] == ["1", "t1_1", "t2_1", "t1_1 t2_1"]
    assert len(basis_enumerate(2, 2, 0)) == 9


def test_reduce_examples():
    ring = SuperRing(2, 1)
    assert reduce(mono(ring, "x2_1^2"), 3, 2, 1) == (-1, mono(ring, "x1_1^2"))
    assert reduce(mono(ring, "x1_1^3"), 3, 2, 1)[0] == 0
    assert reduce(mono(ring, "x1_1 x1_2 x2_2"), 3, 2, 1) == (1, mono(ring, "x2_1 x1_2^2"))
    ring2 = SuperRing(0, 2)
    assert reduce(mono(ring2, "t1_1 t1_2 t2_2"), 3, 0, 2)[0] == 0


@pytest.mark.parametrize("n,k,j", [(3, 2, 1), (4, 1, 2), (2, 2, 2), (5, 3, 0)])
def test_reduce_idempotent_and_kills_generators(n, k, j):
    for b in basis_enumerate(n, k, j):
        assert reduce(b, n, k, j) == (1, b)
    for g in ideal_generators(n, k, j):
        assert reduce_poly(g, n).is_zero()


def test_reduce_poly_linear():
    ring = SuperRing(2, 0)
    p = SuperPoly.monomial(ring, mono(ring, "x2_1^2"), 3) + SuperPoly.monomial(ring, mono(ring, "x1_1^2"), 3)
    assert reduce_poly(p, 4).is_zero()


def test_cyclic_basis():
    ring = SuperRing(1, 0, width=1)
    assert [ring.format_monomial(m) for m in cyclic_basis_enumerate(3, 1, 0)] == ["1", "x_1", "x_1^2"]
    assert cyclic_reduce(mono(ring, "x_1^3"), 3, 1, 0)[0] == 0

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from coinvariants.cyclotomic import Cyclotomic
from coinvariants.linalg import FieldEchelon, IntegerEchelon, integer_row, rank


def test_integer_echelon_rank_and_membership():
    ech = IntegerEchelon(3)
    assert ech.add({0: 2, 1: 4})
    assert ech.add({1: 3, 2: 6})
    assert not ech.add({0: 1, 1: 5, 2: 6})
    assert ech.rank == 2
    assert ech.contains({0: Fraction(1, 2), 1: 1})
    assert not ech.contains({2: 1})


def test_integer_row_clears_denominators():
    assert integer_row({0: Fraction(1, 2), 3: Fraction(2, 3)}) == {0: 3, 3: 4}


def test_full_detection():
    ech = IntegerEchelon(2)
    ech.add({0: 1})
    ech.add({1: 1})
    assert ech.full()


def test_field_echelon_over_cyclotomics():
    i = Cyclotomic.root(4)
    one = Cyclotomic.rational(4, 1)
    ech = FieldEchelon(2)
    assert ech.add({0: one, 1: i})
    assert not ech.add({0: i, 1: -one})  # i times the first row
    assert ech.rank == 1


def _dense_rank(rows, ncols):
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c]:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


row_strategy = st.dictionaries(st.integers(0, 5), st.integers(-3, 3), max_size=6)


@settings(max_examples=80, deadline=None)
@given(st.lists(row_strategy, max_size=8), st.randoms())
def test_rank_matches_dense_and_ignores_row_order(rows, rnd):
    expected = _dense_rank(rows, 6)
    assert rank(rows) == expected
    assert rank(rows, field=True) == expected
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rank(shuffled) == expected

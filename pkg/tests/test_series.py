from itertools import product

import pytest

from coinvariants.chartab import CHI1, CHI2, CHI3, CHI4, CharLabel, GroupElement, dihedral_class_representatives
from coinvariants.series import (
    CharacterSeries,
    SeriesError,
    catalan_series,
    character_series,
    cyclic_character_series,
    cyclic_dimension,
    cyclic_hilbert,
    dimension,
    grading_names,
    hilbert_series,
    q_integer,
    specialize_to_qt,
    universal_coefficients,
)
from coinvariants.symfunc import GradingPoly, Partition, in_hook


def test_universal_coefficients_small():
    c = universal_coefficients(3)
    assert c == {
        (Partition(), CHI1): 1,
        (Partition((1, 1)), CHI2): 1,
        (Partition((3,)), CHI2): 1,
        (Partition((1,)), CharLabel("chi", 1)): 1,
        (Partition((2,)), CharLabel("chi", 1)): 1,
    }
    c4 = universal_coefficients(4)
    assert c4[(Partition((2,)), CHI3)] == 1 and c4[(Partition((2,)), CHI4)] == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_universal_coefficients_weighted_sum(n):
    # the (1, 0) specialization is the regular representation: total multiplicity weight 2n
    series = character_series(n, 1, 0)
    assert series.hilbert().eval_ones() == 2 * n


def test_hilbert_examples():
    names = grading_names(1, 1)
    assert hilbert_series(3, 1, 1).format(names) == "1 + 2*q + 2*u + 2*q^2 + 3*q*u + u^2 + q^3 + q^2*u"
    assert hilbert_series(4, 1, 0).format(["q"]) == "1 + 2*q + 2*q^2 + 2*q^3 + q^4"
    assert hilbert_series(5, 0, 0) == GradingPoly.one(0)


@pytest.mark.parametrize("n,k,j", [(n, k, j) for n in range(2, 7) for k in range(4) for j in range(4)])
def test_dimension_is_hilbert_at_ones(n, k, j):
    assert hilbert_series(n, k, j).eval_ones() == dimension(n, k, j)
    assert character_series(n, k, j).hilbert() == hilbert_series(n, k, j)


def test_dimension_values():
    assert dimension(2, 0, 2) == 9
    assert dimension(5, 0, 2) == 10
    assert dimension(4, 1, 1) == 17


def test_hook_pruning():
    series = character_series(4, 0, 1)
    for _, shape, _ in series.terms:
        assert in_hook(shape, 0, 1)
    assert {str(lab) for lab in series.labels()} == {"chi1", "chi2", "chi^1"}


@pytest.mark.parametrize("n", range(2, 9))
def test_catalan(n):
    qt = GradingPoly(2, {(1, 1): 1})
    assert catalan_series(n, 2, 0) == q_integer(n + 1) + qt
    assert character_series(n, 2, 0).coefficient_of(CHI2) == catalan_series(n, 2, 0)


def test_catalan_text():
    assert catalan_series(4, 2, 0).format(["q", "t"]) == "q*t + q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4"


def test_specialize_to_qt():
    poly = hilbert_series(3, 3, 1)
    assert specialize_to_qt(poly, 3, 1) == hilbert_series(3, 2, 0)
    with pytest.raises(SeriesError):
        specialize_to_qt(hilbert_series(3, 1, 1), 1, 1)


def test_evaluate_identity_is_hilbert():
    series = character_series(5, 2, 1)
    e = GroupElement.rotation(0, 5)
    values = series.evaluate(e)
    assert {d: v.to_fraction() for d, v in values.items()} == dict(series.hilbert().items())


def test_reflection_trace_degree_one():
    # on the degree-one component a reflection has trace 0
    series = character_series(6, 1, 0)
    for g, _ in dihedral_class_representatives(6):
        if g.kind == "reflection":
            assert series.evaluate(g).get((1,), 0) == 0


def test_series_validation():
    with pytest.raises(SeriesError):
        CharacterSeries("dihedral", 3, 1, 0, ((0, Partition(), CHI1),))
    with pytest.raises(SeriesError):
        CharacterSeries("dihedral", 3, 1, 0, ((1, Partition((1, 1, 1)), CHI1),))
    with pytest.raises(SeriesError):
        CharacterSeries("dihedral", 3, 1, 0, ((1, Partition(), CHI1), (2, Partition(), CHI1)))
    with pytest.raises(SeriesError):
        dimension(1, 1, 0)
    with pytest.raises(SeriesError):
        hilbert_series(3, -1, 0)


def test_format():
    assert character_series(4, 2, 0).format() == "chi1 + s(1,1)*chi2 + s(4)*chi2 + s(2)*chi3 + s(2)*chi4 + s(1)*chi^1 + s(3)*chi^1"


def test_cyclic_closed_forms():
    assert cyclic_hilbert(3, 1, 0).format(["q"]) == "1 + q + q^2"
    for n, k, j in product(range(1, 7), range(4), range(4)):
        assert cyclic_dimension(n, k, j) == cyclic_hilbert(n, k, j).eval_ones()
        assert cyclic_character_series(n, k, j).hilbert() == cyclic_hilbert(n, k, j)
    # the (1, 0) case is the regular representation of Z_n
    assert cyclic_dimension(5, 1, 0) == 5


def test_grading_names():
    assert grading_names(1, 0) == ["q"]
    assert grading_names(2, 0) == ["q", "t"]
    assert grading_names(2, 1) == ["q1", "q2", "u"]
    assert grading_names(0, 2) == ["u1", "u2"]

"""Exact coinvariant rings of dihedral and cyclic groups in bosonic and fermionic variable sets."""
from .chartab import CharLabel, GroupElement, irreducible_labels
from .series import (
    CharacterSeries,
    catalan_series,
    character_series,
    cyclic_character_series,
    cyclic_dimension,
    cyclic_hilbert,
    dimension,
    hilbert_series,
    universal_coefficients,
)
from .superring import SuperMonomial, SuperPoly, SuperRing, basis_enumerate, reduce, reduce_poly
from .symfunc import GradingPoly, Partition, super_schur

__version__ = "0.1.0"

__all__ = [
    "CharLabel",
    "CharacterSeries",
    "GradingPoly",
    "GroupElement",
    "Partition",
    "SuperMonomial",
    "SuperPoly",
    "SuperRing",
    "basis_enumerate",
    "catalan_series",
    "character_series",
    "cyclic_character_series",
    "cyclic_dimension",
    "cyclic_hilbert",
    "dimension",
    "hilbert_series",
    "irreducible_labels",
    "reduce",
    "reduce_poly",
    "super_schur",
    "universal_coefficients",
]

"""Closed-form character series, Hilbert series and dimensions.

The dihedral character series is stored symbolically as a sum of
``coefficient * s_shape(q/u) * chi`` terms, and only expanded into
multidegrees on request.  Grading variables are ``q_1..q_k`` (bosonic sets)
followed by ``u_1..u_j`` (fermionic sets).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from .chartab import (
    CHI1,
    CHI2,
    CHI3,
    CHI4,
    CharLabel,
    GroupElement,
    char_value,
    normalize_label,
)
from .cyclotomic import Cyclotomic
from .symfunc import GradingPoly, Partition, binom, in_hook, super_schur

Exponent = Tuple[int, ...]


class SeriesError(ValueError):
    pass


def _check_dihedral(n: int, k: int = 0, j: int = 0):
    if n < 2:
        raise SeriesError(f"dihedral group I2(n) needs n >= 2, got n={n}")
    if k < 0 or j < 0:
        raise SeriesError(f"k and j must be nonnegative, got k={k}, j={j}")


def _check_cyclic(n: int, k: int = 0, j: int = 0):
    if n < 1:
        raise SeriesError(f"cyclic group Z_n needs n >= 1, got n={n}")
    if k < 0 or j < 0:
        raise SeriesError(f"k and j must be nonnegative, got k={k}, j={j}")


def universal_coefficients(n: int) -> Dict[Tuple[Partition, CharLabel], int]:
    """The coefficients ``c_{lambda, mu}`` for I2(n); pairs not listed are zero."""
    _check_dihedral(n)
    coeffs: Dict[Tuple[Partition, CharLabel], int] = {}

    def put(shape, label):
        key = (Partition(shape), label)
        coeffs[key] = coeffs.get(key, 0) + 1

    put((), CHI1)
    put((1, 1), CHI2)
    put((n,), CHI2)
    if n % 2 == 0:
        put((n // 2,), CHI3)
        put((n // 2,), CHI4)
    for i in range(1, (n - 1) // 2 + 1):
        put((i,), CharLabel("chi", i))
        put((n - i,), CharLabel("chi", i))
    return coeffs


@lru_cache(maxsize=None)
def _super_schur_cached(shape: Partition, k: int, j: int) -> GradingPoly:
    return super_schur(shape, k, j)


@dataclass(frozen=True)
class CharacterSeries:
    """``sum coefficient * s_shape(q/u) * label`` for a fixed group and (k, j)."""

    group: str
    n: int
    k: int
    j: int
    terms: Tuple[Tuple[int, Partition, CharLabel], ...] = field(default=())

    def __post_init__(self):
        seen = set()
        max_len = 2 if self.group == "dihedral" else 1
        for coeff, shape, label in self.terms:
            if coeff <= 0:
                raise SeriesError(f"nonpositive coefficient {coeff} for {shape} {label}")
            if len(shape) > max_len:
                raise SeriesError(f"shape {shape} too long for {self.group} series")
            if (shape, label) in seen:
                raise SeriesError(f"duplicate term {shape} {label}")
            seen.add((shape, label))

    @property
    def nvars(self) -> int:
        return self.k + self.j

    def labels(self) -> List[CharLabel]:
        out = []
        for _, _, label in self.terms:
            if label not in out:
                out.append(label)
        return out

    def coefficient_of(self, label: CharLabel) -> GradingPoly:
        """Graded multiplicity of one irreducible character."""
        total = GradingPoly.zero(self.nvars)
        for coeff, shape, lab in self.terms:
            if lab == label:
                total = total + _super_schur_cached(shape, self.k, self.j) * coeff
        return total

    def expand(self) -> Dict[Exponent, Dict[CharLabel, int]]:
        """Multidegree -> {label: multiplicity}."""
        out: Dict[Exponent, Dict[CharLabel, int]] = {}
        for coeff, shape, label in self.terms:
            for exp, c in _super_schur_cached(shape, self.k, self.j).items():
                slot = out.setdefault(exp, {})
                slot[label] = slot.get(label, 0) + coeff * c
        return out

    def hilbert(self) -> GradingPoly:
        """Evaluation at the identity: multiplicities weighted by dimension."""
        total = GradingPoly.zero(self.nvars)
        for coeff, shape, label in self.terms:
            total = total + _super_schur_cached(shape, self.k, self.j) * (coeff * label.dimension)
        return total

    def evaluate(self, g: GroupElement) -> Dict[Exponent, Cyclotomic]:
        """Multidegree -> character value at ``g`` (in Q(zeta_n))."""
        out: Dict[Exponent, Cyclotomic] = {}
        for coeff, shape, label in self.terms:
            value = char_value(label, g, self.n)
            for exp, c in _super_schur_cached(shape, self.k, self.j).items():
                out[exp] = out.get(exp, Cyclotomic.rational(self.n, 0)) + value * (coeff * c)
        return {e: v for e, v in out.items() if not v.is_zero()}

    def format(self) -> str:
        pieces = []
        for coeff, shape, label in self.terms:
            body = str(label) if not shape else f"s{shape}*{label}"
            pieces.append((f"{coeff}*" if coeff != 1 else "") + body)
        return " + ".join(pieces) if pieces else "0"


def character_series(n: int, k: int, j: int) -> CharacterSeries:
    """Multigraded character series of the I2(n) coinvariant ring in (k, j) variable sets.

    Terms whose shape violates the hook condition are dropped, and each label
    is reduced to an irreducible one.
    """
    _check_dihedral(n, k, j)
    merged: Dict[Tuple[Partition, CharLabel], int] = {}
    for (shape, label), c in universal_coefficients(n).items():
        if not in_hook(shape, k, j):
            continue
        for lab in normalize_label(label, n):
            merged[(shape, lab)] = merged.get((shape, lab), 0) + c
    terms = tuple((c, shape, lab) for (shape, lab), c in merged.items())
    return CharacterSeries("dihedral", n, k, j, terms)


def hilbert_series(n: int, k: int, j: int) -> GradingPoly:
    """``1 + s_(1,1) + s_(n) + 2 sum_{i=1}^{n-1} s_(i)``, all in (q/u)."""
    _check_dihedral(n, k, j)
    total = GradingPoly.one(k + j)
    total = total + super_schur((1, 1), k, j) + super_schur((n,), k, j)
    for i in range(1, n):
        total = total + super_schur((i,), k, j) * 2
    return total


def row_at_ones(m: int, k: int, j: int) -> int:
    return sum(binom(k + l - 1, l) * binom(j, m - l) for l in range(m + 1))


def dimension(n: int, k: int, j: int) -> int:
    """Dimension of the I2(n) coinvariant ring with k bosonic and j fermionic sets."""
    _check_dihedral(n, k, j)
    total = 1 + binom(k, 2) + k * j + binom(j + 1, 2)
    total += sum(binom(j, h) * binom(k + n - h - 1, n - h) for h in range(n + 1))
    total += 2 * sum(
        binom(j, h) * binom(k + i - h - 1, i - h) for i in range(1, n) for h in range(i + 1)
    )
    return total


def catalan_series(n: int, k: int, j: int) -> GradingPoly:
    """Graded multiplicity of the sign character: ``s_(n)(q/u) + s_(1,1)(q/u)``."""
    _check_dihedral(n, k, j)
    return super_schur((n,), k, j) + super_schur((1, 1), k, j)


def q_integer(m: int) -> GradingPoly:
    """``[m]_{q,t} = q^(m-1) + q^(m-2) t + ... + t^(m-1)`` in two variables."""
    return GradingPoly(2, {(m - 1 - i, i): 1 for i in range(m)})


def specialize_to_qt(poly: GradingPoly, k: int, j: int) -> GradingPoly:
    """Keep only q_1, q_2 (renamed q, t): all other q_i and every u_i go to zero."""
    if k < 2:
        raise SeriesError("the (q, t) specialization needs at least two bosonic sets")
    if poly.nvars != k + j:
        raise SeriesError("polynomial does not live in k + j variables")
    out = {}
    for exp, c in poly.items():
        if any(exp[2:]):
            continue
        out[exp[:2]] = c
    return GradingPoly(2, out)


def cyclic_character_series(n: int, k: int, j: int) -> CharacterSeries:
    """``sum_{i=0}^{n-1} s_(i)(q/u) chi_i`` for Z_n."""
    _check_cyclic(n, k, j)
    terms = []
    for i in range(n):
        shape = Partition((i,))
        if in_hook(shape, k, j):
            terms.append((1, shape, CharLabel("cyclic", i)))
    return CharacterSeries("cyclic", n, k, j, tuple(terms))


def cyclic_hilbert(n: int, k: int, j: int) -> GradingPoly:
    _check_cyclic(n, k, j)
    total = GradingPoly.zero(k + j)
    for i in range(n):
        total = total + super_schur((i,), k, j)
    return total


def cyclic_dimension(n: int, k: int, j: int) -> int:
    _check_cyclic(n, k, j)
    return sum(row_at_ones(i, k, j) for i in range(n))


def grading_names(k: int, j: int) -> List[str]:
    """Display names for grading variables: q (k=1), q,t for (2, 0), else q1..qk; u or u1..uj."""
    if k == 1:
        bos = ["q"]
    elif (k, j) == (2, 0):
        bos = ["q", "t"]
    else:
        bos = [f"q{i}" for i in range(1, k + 1)]
    ferm = ["u"] if j == 1 else [f"u{i}" for i in range(1, j + 1)]
    return bos + ferm

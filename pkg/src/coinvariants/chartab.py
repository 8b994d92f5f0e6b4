"""Character tables of the dihedral group I2(n) and the cyclic group Z_n.

Group elements are ``rho^e phi^s`` (dihedral, ``s`` in {0, 1}) or ``a^e``
(cyclic).  Character values live in Q(zeta_n).

The one-dimensional dihedral characters follow the standard table, with
``chi2`` the determinant (sign) character:

    ======  ========  ========
    label   rho       phi
    ======  ========  ========
    chi1    1         1
    chi2    1         -1
    chi3    -1        1
    chi4    -1        -1
    ======  ========  ========

``chi3`` and ``chi4`` exist only for even n.  With this table the reducible
extended character ``chi^(n/2)`` equals ``chi3 + chi4``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from .cyclotomic import Cyclotomic, two_cos


class CharacterError(ValueError):
    """A character label that does not exist for the requested group."""


@dataclass(frozen=True, order=True)
class GroupElement:
    """``rho^exponent`` (kind "rotation") or ``rho^exponent phi`` (kind "reflection").

    Cyclic-group elements ``a^exponent`` use kind "rotation" with ``cyclic=True``.
    """

    kind: str
    exponent: int
    n: int
    cyclic: bool = False

    def __post_init__(self):
        if self.kind not in ("rotation", "reflection"):
            raise ValueError(f"unknown element kind {self.kind!r}")
        if self.cyclic and self.kind != "rotation":
            raise ValueError("cyclic groups have no reflections")
        object.__setattr__(self, "exponent", self.exponent % self.n)

    @classmethod
    def rotation(cls, e: int, n: int) -> "GroupElement":
        return cls("rotation", e, n)

    @classmethod
    def reflection(cls, e: int, n: int) -> "GroupElement":
        return cls("reflection", e, n)

    @classmethod
    def cyclic_power(cls, e: int, n: int) -> "GroupElement":
        return cls("rotation", e, n, cyclic=True)

    @property
    def flips(self) -> int:
        return 1 if self.kind == "reflection" else 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if (self.n, self.cyclic) != (other.n, other.cyclic):
            raise ValueError("elements of different groups")
        # (rho^a phi^s)(rho^b phi^t) = rho^(a + (-1)^s b) phi^(s + t)
        sign = -1 if self.flips else 1
        e = self.exponent + sign * other.exponent
        kind = "reflection" if (self.flips + other.flips) % 2 else "rotation"
        return GroupElement(kind, e, self.n, self.cyclic)

    def inverse(self) -> "GroupElement":
        if self.kind == "reflection":
            return self
        return GroupElement("rotation", -self.exponent, self.n, self.cyclic)

    def __str__(self) -> str:
        if self.cyclic:
            return f"a^{self.exponent}"
        base = f"rho^{self.exponent}"
        return base + " phi" if self.kind == "reflection" else base


def dihedral_elements(n: int) -> List[GroupElement]:
    return [GroupElement.rotation(e, n) for e in range(n)] + [
        GroupElement.reflection(e, n) for e in range(n)
    ]


def cyclic_elements(n: int) -> List[GroupElement]:
    return [GroupElement.cyclic_power(e, n) for e in range(n)]


def dihedral_class_representatives(n: int) -> List[Tuple[GroupElement, int]]:
    """One element per conjugacy class of I2(n), with the class size."""
    reps = [(GroupElement.rotation(0, n), 1)]
    for e in range(1, n // 2 + 1):
        reps.append((GroupElement.rotation(e, n), 1 if 2 * e == n else 2))
    if n % 2:
        reps.append((GroupElement.reflection(0, n), n))
    else:
        reps.append((GroupElement.reflection(0, n), n // 2))
        reps.append((GroupElement.reflection(1, n), n // 2))
    return reps


@dataclass(frozen=True, order=True)
class CharLabel:
    """Irreducible (or extended) character label.

    ``kind`` is one of ``"chi1".."chi4"`` (one-dimensional dihedral), ``"chi"``
    (two-dimensional dihedral ``chi^index``), or ``"cyclic"`` (``chi_index`` of Z_n).
    """

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("chi1", "chi2", "chi3", "chi4", "chi", "cyclic"):
            raise CharacterError(f"unknown character kind {self.kind!r}")

    @property
    def dimension(self) -> int:
        return 2 if self.kind == "chi" else 1

    def __str__(self) -> str:
        if self.kind == "chi":
            return f"chi^{self.index}"
        if self.kind == "cyclic":
            return f"chi_{self.index}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "CharLabel":
        text = text.strip()
        if text.startswith("chi^"):
            return cls("chi", int(text[4:]))
        if text.startswith("chi_"):
            return cls("cyclic", int(text[4:]))
        return cls(text)


CHI1, CHI2, CHI3, CHI4 = (CharLabel(f"chi{i}") for i in range(1, 5))

_ONE_DIM = {
    # (value on rho, value on phi)
    "chi1": (1, 1),
    "chi2": (1, -1),
    "chi3": (-1, 1),
    "chi4": (-1, -1),
}


def validate_label(label: CharLabel, n: int, extended: bool = True) -> None:
    if label.kind == "cyclic":
        raise CharacterError(f"{label} is a cyclic-group label, not a dihedral one")
    if n < 2:
        raise CharacterError(f"dihedral groups need n >= 2, got {n}")
    if label.kind in ("chi3", "chi4") and n % 2:
        raise CharacterError(f"{label} exists only for even n (got n={n})")
    if label.kind == "chi":
        top = n - 1 if extended else (n - 1) // 2
        if not 1 <= label.index <= top:
            raise CharacterError(f"{label} needs 1 <= h <= {top} for n={n}")


def is_irreducible(label: CharLabel, n: int) -> bool:
    """False for extended labels ``chi^h`` with ``h > (n-1)//2``."""
    validate_label(label, n)
    return label.kind != "chi" or label.index <= (n - 1) // 2


def irreducible_labels(n: int) -> List[CharLabel]:
    labels = [CHI1, CHI2]
    if n % 2 == 0:
        labels += [CHI3, CHI4]
    labels += [CharLabel("chi", h) for h in range(1, (n - 1) // 2 + 1)]
    return labels


def normalize_label(label: CharLabel, n: int) -> List[CharLabel]:
    """Decompose a (possibly extended) label into irreducible labels.

    ``chi^(n-h)`` becomes ``chi^h``; for even n, ``chi^(n/2)`` becomes
    ``[chi3, chi4]``.
    """
    validate_label(label, n)
    if label.kind != "chi":
        return [label]
    h = min(label.index, n - label.index)
    if 2 * h == n:
        return [CHI3, CHI4]
    return [CharLabel("chi", h)]


def dihedral_char_value(label: CharLabel, g: GroupElement, n: int) -> Cyclotomic:
    """Exact value of a dihedral character at ``g``, in Q(zeta_n)."""
    validate_label(label, n)
    if g.n != n or g.cyclic:
        raise ValueError(f"{g} is not an element of I2({n})")
    if label.kind == "chi":
        if g.kind == "reflection":
            return Cyclotomic.rational(n, 0)
        return two_cos(n, label.index * g.exponent)
    on_rho, on_phi = _ONE_DIM[label.kind]
    return Cyclotomic.rational(n, on_rho ** g.exponent * on_phi ** g.flips)


def cyclic_char_value(i: int, ell: int, n: int) -> Cyclotomic:
    """``chi_i(a^ell) = zeta_n^(i ell)``."""
    if not 0 <= i < n:
        raise CharacterError(f"cyclic character index {i} out of range for n={n}")
    return Cyclotomic.root(n, i * ell)


def char_value(label: CharLabel, g: GroupElement, n: int) -> Cyclotomic:
    if label.kind == "cyclic":
        return cyclic_char_value(label.index, g.exponent, n)
    return dihedral_char_value(label, g, n)


def class_function(label: CharLabel, n: int, cyclic: bool = False) -> Dict[GroupElement, Cyclotomic]:
    elements = cyclic_elements(n) if cyclic else dihedral_elements(n)
    return {g: char_value(label, g, n) for g in elements}


def regular_character(n: int, cyclic: bool = False) -> Dict[GroupElement, Cyclotomic]:
    elements = cyclic_elements(n) if cyclic else dihedral_elements(n)
    order = len(elements)
    return {g: Cyclotomic.rational(n, order if i == 0 else 0) for i, g in enumerate(elements)}


def inner_product(f: Mapping[GroupElement, Cyclotomic], h: Mapping[GroupElement, Cyclotomic], n: int):
    """``(1/|G|) sum_g f(g) conj(h(g))``; a Fraction when the result is rational."""
    if set(f) != set(h):
        raise ValueError("class functions are defined on different element sets")
    total = Cyclotomic.rational(n, 0)
    for g, value in f.items():
        total = total + value * h[g].conjugate()
    total = total / len(f)
    return total.to_fraction() if total.is_rational() else total


@lru_cache(maxsize=None)
def dihedral_table(n: int) -> Tuple[Tuple[CharLabel, ...], Tuple[Tuple[GroupElement, int], ...], Tuple[Tuple[Cyclotomic, ...], ...]]:
    """Irreducible labels, class representatives with sizes, and the value matrix."""
    labels = tuple(irreducible_labels(n))
    reps = tuple(dihedral_class_representatives(n))
    values = tuple(tuple(dihedral_char_value(lab, g, n) for g, _ in reps) for lab in labels)
    return labels, reps, values


def class_inner_product(f: Sequence[Cyclotomic], h: Sequence[Cyclotomic], n: int) -> Fraction:
    """Inner product of dihedral class functions given on :func:`dihedral_class_representatives`."""
    reps = dihedral_class_representatives(n)
    total = Cyclotomic.rational(f[0].order, 0)
    for (_, size), a, b in zip(reps, f, h):
        total = total + a * b.conjugate() * size
    total = total / (2 * n)
    return total.to_fraction() if total.is_rational() else total

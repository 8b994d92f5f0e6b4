"""Exact row echelon forms over Z (fraction-free) and over any exact field.

Rows are sparse ``{column: value}`` dicts; columns can be any sortable keys
given a column order.  Rows are added one at a time, so callers can stream
spanning sets and stop early once the rank reaches the column count.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


def integer_row(values: Mapping[int, object]) -> Dict[int, int]:
    """Clear denominators of a rational row (Fractions or ints)."""
    den = 1
    for v in values.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return {c: int(v * den) for c, v in values.items() if v}


class IntegerEchelon:
    """Fraction-free echelon basis of an integer row space.

    Each pivot row is primitive with a positive leading entry; elimination
    cross-multiplies and divides out the row content, so entries never leave Z.
    """

    def __init__(self, ncols: Optional[int] = None):
        self.ncols = ncols
        self.pivots: Dict[int, Dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full(self) -> bool:
        return self.ncols is not None and self.rank >= self.ncols

    def _eliminate(self, row: Dict[int, int], col: int) -> Dict[int, int]:
        piv = self.pivots[col]
        a, b = row[col], piv[col]
        g = gcd(a, b)
        fa, fb = b // g, a // g
        out = {c: v * fa for c, v in row.items()}
        for c, v in piv.items():
            nv = out.get(c, 0) - v * fb
            if nv:
                out[c] = nv
            else:
                out.pop(c, None)
        return _primitive(out) if out else out

    def add(self, row: Mapping[int, int]) -> bool:
        """Insert a row; True if it increased the rank."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            if lead not in self.pivots:
                self.pivots[lead] = _primitive(row)
                return True
            row = self._eliminate(row, lead)
        return False

    def residual(self, row: Mapping[int, object]) -> Dict[int, object]:
        """Reduce any row (field entries allowed) against every pivot, ascending."""
        row = {c: v for c, v in row.items() if v != 0}
        for col in sorted(self.pivots):
            if col not in row:
                continue
            piv = self.pivots[col]
            factor = row[col] / piv[col] if not isinstance(row[col], int) else Fraction(row[col], piv[col])
            for c, v in piv.items():
                nv = row.get(c, 0) - factor * v
                if nv != 0:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.residual(row)


class FieldEchelon:
    """Echelon basis over an exact field whose scalars support ``/``."""

    def __init__(self, ncols: Optional[int] = None):
        self.ncols = ncols
        self.pivots: Dict[int, Dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full(self) -> bool:
        return self.ncols is not None and self.rank >= self.ncols

    def residual(self, row: Mapping[int, object]) -> Dict[int, object]:
        row = {c: v for c, v in row.items() if v != 0}
        for col in sorted(self.pivots):
            if col not in row:
                continue
            factor = row[col]
            for c, v in self.pivots[col].items():
                nv = row.get(c, 0) - factor * v
                if nv != 0:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: Mapping[int, object]) -> bool:
        row = self.residual(row)
        if not row:
            return False
        lead = min(row)
        lead_value = row[lead]
        inv = lead_value.inverse() if hasattr(lead_value, "inverse") else Fraction(1) / lead_value
        self.pivots[lead] = {c: v * inv for c, v in row.items()}
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.residual(row)


def rank(rows: Iterable[Mapping[int, object]], field: bool = False) -> int:
    """Rank of a list of sparse rows (integer rows unless ``field``)."""
    ech = FieldEchelon() if field else IntegerEchelon()
    for row in rows:
        ech.add(row if field else integer_row(row))
    return ech.rank

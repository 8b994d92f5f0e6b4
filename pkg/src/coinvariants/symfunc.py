"""Partitions, multigraded integer polynomials, and (super) Schur polynomials.

Everything here is exact: exponents are small tuples of ints, coefficients are
Python ints.  A :class:`GradingPoly` in ``k + j`` variables uses the first ``k``
slots for the bosonic gradings ``q_1..q_k`` and the last ``j`` for the
fermionic gradings ``u_1..u_j``.
"""
from __future__ import annotations

import itertools
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]


def binom(a: int, b: int) -> int:
    """Generalized binomial ``a (a-1) ... (a-b+1) / b!``, zero for ``b < 0``.

    Unlike the "zero when b > a" rule this gives ``binom(-1, 0) == 1``, which is
    what multiset counts ``binom(k + m - 1, m)`` need when ``k == 0``.
    """
    if b < 0:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if any(p == 0 for p in parts):
            raise ValueError(f"zero part inside {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def row(cls, m: int) -> "Partition":
        return cls((m,))

    @classmethod
    def column(cls, m: int) -> "Partition":
        return cls((1,) * m)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part access that returns 0 past the end."""
        return self[i] if i < len(self) else 0

    def transpose(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """True when the diagram of ``other`` fits inside this one."""
        other = Partition(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def subpartitions(self) -> Iterator["Partition"]:
        """All partitions whose diagram is contained in this one."""

        def rec(i: int, cap: int):
            if i == len(self):
                yield ()
                return
            for p in range(min(cap, self[i]), -1, -1):
                if p == 0:
                    yield ()
                else:
                    for rest in rec(i + 1, p):
                        yield (p,) + rest

        for parts in rec(0, self[0] if self else 0):
            yield Partition(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        if not self:
            return "()"
        return "(" + ",".join(map(str, self)) + ")"


class GradingPoly:
    """Polynomial with integer coefficients in ``nvars`` commuting variables.

    Values are immutable; arithmetic returns new objects.  Zero coefficients
    are never stored.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: Dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "GradingPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "GradingPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "GradingPoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def var(cls, i: int, nvars: int) -> "GradingPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "GradingPoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GradingPoly.one(self.nvars) * other
        self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return GradingPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return GradingPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradingPoly(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        out: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GradingPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = GradingPoly.one(self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = GradingPoly.one(self.nvars) * other
        if not isinstance(other, GradingPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def embed(self, nvars: int, offset: int) -> "GradingPoly":
        """Re-index into ``nvars`` variables, placing ours at ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        pad_l, pad_r = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return GradingPoly(nvars, {pad_l + e + pad_r: c for e, c in self._terms.items()})

    def eval_ones(self) -> int:
        return sum(self._terms.values())

    def substitute(self, values: Sequence) -> object:
        """Evaluate at the given scalars (any ring supporting ``*`` and ``+``)."""
        total = 0
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(values, exp):
                term = term * v ** e
            total = total + term
        return total

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, degree: int) -> "GradingPoly":
        return GradingPoly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def sorted_terms(self):
        """Terms by ascending total degree, then lex-descending exponent."""
        return sorted(self._terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"GradingPoly({self.nvars}, {self.format()})"


def _ssyt_contents(lam: Partition, nu: Partition, m: int) -> Iterator[Exponent]:
    """Content vectors of all semistandard fillings of ``lam / nu`` with entries <= m."""
    cells = [(r, c) for r in range(len(lam)) for c in range(nu.part(r), lam[r])]
    filling: Dict[Tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            content = [0] * m
            for v in filling.values():
                content[v - 1] += 1
            yield tuple(content)
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, m + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def skew_schur_poly(lam: Sequence[int], nu: Sequence[int], m: int) -> GradingPoly:
    """Skew Schur polynomial ``s_{lam/nu}(x_1..x_m)`` by tableau enumeration."""
    lam, nu = Partition(lam), Partition(nu)
    if not lam.contains(nu):
        return GradingPoly.zero(m)
    terms: Dict[Exponent, int] = {}
    for content in _ssyt_contents(lam, nu, m):
        terms[content] = terms.get(content, 0) + 1
    return GradingPoly(m, terms)


def schur_poly(lam: Sequence[int], m: int) -> GradingPoly:
    """Schur polynomial ``s_lam(x_1..x_m)``; zero when ``lam`` has more than m rows."""
    lam = Partition(lam)
    if len(lam) > m:
        return GradingPoly.zero(m)
    return skew_schur_poly(lam, (), m)


def complete_homogeneous(r: int, m: int) -> GradingPoly:
    if r < 0:
        return GradingPoly.zero(m)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(m), r):
        exp = [0] * m
        for i in combo:
            exp[i] += 1
        terms[tuple(exp)] = 1
    return GradingPoly(m, terms)


def _det(matrix: list) -> GradingPoly:
    # Laplace expansion along the first row; entries are GradingPolys.
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = None
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * _det(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else GradingPoly.zero(matrix[0][0].nvars)


def skew_schur_jacobi_trudi(lam: Sequence[int], nu: Sequence[int], m: int) -> GradingPoly:
    """Skew Schur polynomial as ``det(h_{lam_i - nu_j - i + j})``."""
    lam, nu = Partition(lam), Partition(nu)
    if not lam.contains(nu):
        return GradingPoly.zero(m)
    size = len(lam)
    if size == 0:
        return GradingPoly.one(m)
    matrix = [
        [complete_homogeneous(lam.part(i) - nu.part(j) - i + j, m) for j in range(size)]
        for i in range(size)
    ]
    return _det(matrix)


def super_schur(lam: Sequence[int], k: int, j: int) -> GradingPoly:
    """Hook Schur polynomial ``sum_{nu <= lam} s_nu(q) s_{lam'/nu'}(u)`` in k + j variables."""
    lam = Partition(lam)
    nvars = k + j
    total = GradingPoly.zero(nvars)
    lam_t = lam.transpose()
    for nu in lam.subpartitions():
        if len(nu) > k:
            continue
        bos = schur_poly(nu, k)
        if bos.is_zero():
            continue
        ferm = skew_schur_poly(lam_t, nu.transpose(), j)
        if ferm.is_zero():
            continue
        total = total + bos.embed(nvars, 0) * ferm.embed(nvars, k)
    return total


def in_hook(lam: Sequence[int], k: int, j: int) -> bool:
    """The (k, j)-hook condition ``lam_{k+1} <= j`` under which ``super_schur`` is nonzero."""
    return Partition(lam).part(k) <= j


def super_schur_at_ones(lam: Sequence[int], k: int, j: int) -> int:
    """Closed-form value of ``super_schur(lam, k, j)`` at all-ones, for rows and columns."""
    lam = Partition(lam)
    m = lam.size
    if lam == Partition.row(m):
        return sum(binom(k + l - 1, l) * binom(j, m - l) for l in range(m + 1))
    if lam == Partition.column(m):
        return sum(binom(k, l) * binom(j + m - l - 1, m - l) for l in range(m + 1))
    raise ValueError(f"closed form only covers row or column shapes, got {lam}")

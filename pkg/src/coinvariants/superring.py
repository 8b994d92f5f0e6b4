"""Supercommutative polynomials in k bosonic and j fermionic variable sets.

Each variable set has ``width`` generators: two (``x_1, x_2`` or
``theta_1, theta_2``) for the dihedral ring, one for the cyclic ring.
Monomials are stored canonically as ``(bos, ferm)`` where ``bos`` is a tuple
of exponents and ``ferm`` is a bitmask; the fermionic factors are understood
to be multiplied in increasing bit order

    theta_1^(1) < theta_2^(1) < theta_1^(2) < ... < theta_2^(j)

and any reordering sign is carried by the coefficient.

Text form of a monomial: ``x1_1^3 x2_2 t1_1`` (generator index, underscore,
set index); the cyclic ring drops the generator index (``x_1^2 t_3``).  The
empty monomial prints as ``1``.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple


class ContextError(ValueError):
    """Operands come from different rings."""


class ReductionError(RuntimeError):
    """The straightening rules ended on a monomial outside the basis."""


class SuperMonomial(NamedTuple):
    bos: Tuple[int, ...]
    ferm: int


class Var(NamedTuple):
    """A single generator: ``odd`` picks theta over x; ``idx`` is 1 or 2; ``set`` is 1-based."""

    odd: bool
    idx: int
    set: int


def _popcount(x: int) -> int:
    return bin(x).count("1")


def fermion_sign(a: int, b: int) -> int:
    """Sign of reordering ``prod(a) * prod(b)`` into increasing bit order; 0 on overlap."""
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += _popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if swaps & 1 else 1


class SuperRing:
    """Context object: sizes plus generator indexing."""

    def __init__(self, k: int, j: int, width: int = 2):
        if k < 0 or j < 0:
            raise ValueError(f"k and j must be nonnegative, got k={k}, j={j}")
        if width not in (1, 2):
            raise ValueError("width must be 1 (cyclic) or 2 (dihedral)")
        self.k, self.j, self.width = k, j, width
        self.nbos = width * k
        self.nferm = width * j

    def __eq__(self, other):
        return isinstance(other, SuperRing) and (self.k, self.j, self.width) == (other.k, other.j, other.width)

    def __hash__(self):
        return hash((self.k, self.j, self.width))

    def __repr__(self):
        return f"SuperRing(k={self.k}, j={self.j}, width={self.width})"

    # generator bookkeeping

    def slot(self, v: Var) -> int:
        limit = self.j if v.odd else self.k
        if not (1 <= v.set <= limit and 1 <= v.idx <= self.width):
            raise ValueError(f"{v} is not a generator of {self}")
        return (v.set - 1) * self.width + (v.idx - 1)

    def variables(self) -> List[Var]:
        out = [Var(False, i, l) for l in range(1, self.k + 1) for i in range(1, self.width + 1)]
        out += [Var(True, i, l) for l in range(1, self.j + 1) for i in range(1, self.width + 1)]
        return out

    def one(self) -> SuperMonomial:
        return SuperMonomial((0,) * self.nbos, 0)

    def var_monomial(self, v: Var) -> SuperMonomial:
        s = self.slot(v)
        if v.odd:
            return SuperMonomial((0,) * self.nbos, 1 << s)
        bos = [0] * self.nbos
        bos[s] = 1
        return SuperMonomial(tuple(bos), 0)

    def factors(self, m: SuperMonomial) -> List[Tuple[Var, int]]:
        """(generator, exponent) pairs in canonical order."""
        out = []
        for s, e in enumerate(m.bos):
            if e:
                out.append((Var(False, s % self.width + 1, s // self.width + 1), e))
        for s in range(self.nferm):
            if m.ferm >> s & 1:
                out.append((Var(True, s % self.width + 1, s // self.width + 1), 1))
        return out

    def mul_monomials(self, a: SuperMonomial, b: SuperMonomial) -> Tuple[int, SuperMonomial]:
        """``a * b = sign * canonical``; sign 0 when a fermion repeats."""
        sign = fermion_sign(a.ferm, b.ferm)
        if not sign:
            return 0, a
        return sign, SuperMonomial(tuple(x + y for x, y in zip(a.bos, b.bos)), a.ferm | b.ferm)

    def word(self, gens: Sequence[Var]) -> Tuple[int, SuperMonomial]:
        """Product of generators in the written order."""
        sign, m = 1, self.one()
        for v in gens:
            s, m = self.mul_monomials(m, self.var_monomial(v))
            if not s:
                return 0, m
            sign *= s
        return sign, m

    def divide(self, m: SuperMonomial, f: SuperMonomial) -> Optional[SuperMonomial]:
        """Monomial ``r`` with ``m = +-r*f`` or None if ``f`` does not divide ``m``."""
        if f.ferm & ~m.ferm:
            return None
        bos = tuple(a - b for a, b in zip(m.bos, f.bos))
        if any(e < 0 for e in bos):
            return None
        return SuperMonomial(bos, m.ferm & ~f.ferm)

    def multidegree(self, m: SuperMonomial) -> Tuple[int, ...]:
        w = self.width
        bos = tuple(sum(m.bos[l * w:(l + 1) * w]) for l in range(self.k))
        ferm = tuple(_popcount(m.ferm >> (l * w) & ((1 << w) - 1)) for l in range(self.j))
        return bos + ferm

    def degree(self, m: SuperMonomial) -> int:
        return sum(m.bos) + _popcount(m.ferm)

    def monomials_of_multidegree(self, d: Sequence[int]) -> List[SuperMonomial]:
        """All canonical monomials with the given per-set degrees."""
        w = self.width
        bos_parts = []
        for l in range(self.k):
            bos_parts.append(list(_compositions(d[l], w)))
        ferm_parts = []
        for l in range(self.j):
            e = d[self.k + l]
            if e > w:
                return []
            ferm_parts.append([sum(1 << (l * w + b) for b in combo) for combo in itertools.combinations(range(w), e)])
        out = []
        for bos in itertools.product(*bos_parts):
            flat = tuple(x for part in bos for x in part)
            for fs in itertools.product(*ferm_parts):
                out.append(SuperMonomial(flat, sum(fs)))
        return out

    def monomials_up_to(self, degree: int) -> Iterator[SuperMonomial]:
        for d in multidegrees_up_to(self.k, self.j, degree, self.width):
            yield from self.monomials_of_multidegree(d)

    # text form

    def _name(self, v: Var) -> str:
        letter = "t" if v.odd else "x"
        return f"{letter}_{v.set}" if self.width == 1 else f"{letter}{v.idx}_{v.set}"

    def format_monomial(self, m: SuperMonomial) -> str:
        parts = []
        for v, e in self.factors(m):
            name = self._name(v)
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts) if parts else "1"

    _TOKEN = re.compile(r"^([xt])(\d?)_(\d+)(?:\^(\d+))?$")

    def parse_monomial(self, text: str) -> Tuple[int, SuperMonomial]:
        """Parse a space-separated word of generators; returns (sign, canonical monomial)."""
        text = text.strip()
        if text in ("", "1"):
            return 1, self.one()
        gens = []
        for tok in text.split():
            match = self._TOKEN.match(tok)
            if not match:
                raise ValueError(f"cannot parse generator {tok!r}")
            letter, idx, set_, exp = match.groups()
            idx = int(idx) if idx else 1
            gens.extend([Var(letter == "t", idx, int(set_))] * int(exp or 1))
        return self.word(gens)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multidegrees_up_to(k: int, j: int, degree: int, width: int = 2) -> Iterator[Tuple[int, ...]]:
    """Per-set degree vectors with total <= degree (fermionic entries <= width)."""
    ranges = [range(degree + 1)] * k + [range(min(width, degree) + 1)] * j
    for d in itertools.product(*ranges):
        if sum(d) <= degree:
            yield d


class SuperPoly:
    """Finite linear combination of canonical monomials with exact scalar coefficients."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: SuperRing, terms: Optional[Dict[SuperMonomial, object]] = None):
        self.ring = ring
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, ring: SuperRing, m: SuperMonomial, coeff=1) -> "SuperPoly":
        return cls(ring, {m: coeff})

    @classmethod
    def gen(cls, ring: SuperRing, v: Var) -> "SuperPoly":
        return cls(ring, {ring.var_monomial(v): 1})

    @classmethod
    def from_word(cls, ring: SuperRing, gens: Sequence[Var], coeff=1) -> "SuperPoly":
        sign, m = ring.word(gens)
        return cls(ring, {m: coeff * sign} if sign else {})

    @property
    def terms(self) -> Dict[SuperMonomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: SuperMonomial):
        return self._terms.get(m, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "SuperPoly"):
        if self.ring != other.ring:
            raise ContextError(f"mixed contexts {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, SuperPoly):
            other = SuperPoly(self.ring, {self.ring.one(): other})
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return SuperPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SuperPoly":
        if c == 0:
            return SuperPoly(self.ring)
        return SuperPoly(self.ring, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperPoly):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        out: Dict[SuperMonomial, object] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                sign, m = ring.mul_monomials(a, b)
                if not sign:
                    continue
                v = ca * cb if sign > 0 else -(ca * cb)
                out[m] = out[m] + v if m in out else v
        return SuperPoly(ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = SuperPoly(self.ring, {self.ring.one(): 1})
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SuperPoly):
            return self.ring == other.ring and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def map_coefficients(self, fn) -> "SuperPoly":
        return SuperPoly(self.ring, {m: fn(c) for m, c in self._terms.items()})

    def multidegrees(self) -> set:
        return {self.ring.multidegree(m) for m in self._terms}

    def substitute(self, images: Dict[Var, "SuperPoly"], target: Optional[SuperRing] = None) -> "SuperPoly":
        """Ring homomorphism sending each generator to ``images[v]`` (parity-preserving)."""
        ring = self.ring
        target = target or ring
        unit = SuperPoly(target, {target.one(): 1})
        out = SuperPoly(target)
        power_cache: Dict[Tuple[Var, int], SuperPoly] = {}
        for m, c in self._terms.items():
            img = unit
            for v, e in ring.factors(m):
                key = (v, e)
                if key not in power_cache:
                    power_cache[key] = images[v] ** e
                img = img * power_cache[key]
            out = out + img.scale(c)
        return out

    def format(self) -> str:
        if not self._terms:
            return "0"
        ring = self.ring
        keyed = sorted(self._terms.items(), key=lambda mc: (ring.degree(mc[0]), tuple(-x for x in mc[0].bos), mc[0].ferm))
        parts = []
        for m, c in keyed:
            mono = ring.format_monomial(m)
            if mono == "1":
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SuperPoly({self.format()})"


# polarization


def polarization_sets(k: int, j: int, ell: int) -> Tuple[Tuple[bool, int], Tuple[bool, int]]:
    """(source set, target set) of ``E_ell`` as (odd, set index) pairs."""
    if not 1 <= ell <= k + j - 1:
        raise ValueError(f"polarization index {ell} outside 1..{k + j - 1}")
    if ell < k:
        return (False, ell), (False, ell + 1)
    if ell == k:
        return (False, k), (True, 1)
    return (True, ell - k), (True, ell - k + 1)


def _derivative(ring: SuperRing, m: SuperMonomial, v: Var) -> Tuple[int, SuperMonomial]:
    """Left derivative of a monomial by a generator: (coefficient, monomial)."""
    s = ring.slot(v)
    if v.odd:
        if not m.ferm >> s & 1:
            return 0, m
        sign = -1 if _popcount(m.ferm & ((1 << s) - 1)) & 1 else 1
        return sign, SuperMonomial(m.bos, m.ferm & ~(1 << s))
    e = m.bos[s]
    if not e:
        return 0, m
    bos = list(m.bos)
    bos[s] -= 1
    return e, SuperMonomial(tuple(bos), m.ferm)


def polarize(ell: int, p: SuperPoly) -> SuperPoly:
    """Apply ``E_ell = sum_i v_i^(target) d/dv_i^(source)``."""
    ring = p.ring
    (src_odd, src), (tgt_odd, tgt) = polarization_sets(ring.k, ring.j, ell)
    out: Dict[SuperMonomial, object] = {}
    for i in range(1, ring.width + 1):
        target = ring.var_monomial(Var(tgt_odd, i, tgt))
        for m, c in p.items():
            dc, dm = _derivative(ring, m, Var(src_odd, i, src))
            if not dc:
                continue
            sign, prod = ring.mul_monomials(target, dm)
            if not sign:
                continue
            v = c * (dc * sign)
            out[prod] = out[prod] + v if prod in out else v
    return SuperPoly(ring, out)


# the invariant ideal and its monomial basis


def dihedral_ring(k: int, j: int) -> SuperRing:
    return SuperRing(k, j, width=2)


def _unified(k: int, odd: bool, set_: int) -> int:
    return k + set_ if odd else set_


def _quadratic(ring: SuperRing, a: Tuple[bool, int], b: Tuple[bool, int]) -> SuperPoly:
    """``a_1 b_1 + a_2 b_2`` in written order."""
    return SuperPoly.from_word(ring, [Var(a[0], 1, a[1]), Var(b[0], 1, b[1])]) + SuperPoly.from_word(
        ring, [Var(a[0], 2, a[1]), Var(b[0], 2, b[1])]
    )


def first_index_monomials(ring: SuperRing, degree: int, min_bos_set: int = 1, min_ferm_set: int = 1, bosonic: bool = True) -> List[SuperMonomial]:
    """Monomials in x_1^(l) (l >= min_bos_set) and theta_1^(l) (l >= min_ferm_set) of exact degree."""
    bos_sets = list(range(min_bos_set, ring.k + 1)) if bosonic else []
    ferm_sets = list(range(min_ferm_set, ring.j + 1))
    out = []
    for nferm in range(min(degree, len(ferm_sets)) + 1):
        nbos = degree - nferm
        if nbos and not bos_sets:
            continue
        for fsets in itertools.combinations(ferm_sets, nferm):
            fmask = sum(1 << ring.slot(Var(True, 1, l)) for l in fsets)
            for bexp in (_compositions(nbos, len(bos_sets)) if bos_sets else [()]):
                bos = [0] * ring.nbos
                for l, e in zip(bos_sets, bexp):
                    bos[ring.slot(Var(False, 1, l))] = e
                out.append(SuperMonomial(tuple(bos), fmask))
    return out


def ideal_generators(n: int, k: int, j: int) -> List[SuperPoly]:
    """Polarizations of the two fundamental invariants, listed family by family."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    ring = dihedral_ring(k, j)
    gens = []
    for h in range(1, k + 1):
        for i in range(h, k + 1):
            gens.append(_quadratic(ring, (False, h), (False, i)))
    for h in range(1, k + 1):
        for i in range(1, j + 1):
            gens.append(_quadratic(ring, (False, h), (True, i)))
    for h in range(1, j + 1):
        for i in range(h + 1, j + 1):
            gens.append(_quadratic(ring, (True, h), (True, i)))
    for m in first_index_monomials(ring, n):
        gens.append(SuperPoly.monomial(ring, m))
    return gens


def basis_enumerate(n: int, k: int, j: int) -> List[SuperMonomial]:
    """The straightened monomial basis of the I2(n) coinvariant ring, without duplicates."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return list(_basis(n, k, j))


@lru_cache(maxsize=None)
def _basis(n: int, k: int, j: int) -> Tuple[SuperMonomial, ...]:
    ring = dihedral_ring(k, j)
    found: Dict[SuperMonomial, None] = {}

    def add(m: SuperMonomial, extra: Optional[Var] = None):
        if extra is not None:
            sign, m = ring.mul_monomials(m, ring.var_monomial(extra))
            if not sign:
                return
        found.setdefault(m, None)

    for d in range(n):
        for m in first_index_monomials(ring, d):
            add(m)
    for i in range(1, k + 1):
        for d in range(n):
            for m in first_index_monomials(ring, d, min_bos_set=i):
                add(m, Var(False, 2, i))
    for i in range(1, j + 1):
        for d in range(n):
            for m in first_index_monomials(ring, d, min_ferm_set=i + 1, bosonic=False):
                add(m, Var(True, 2, i))
    for h in range(1, k + 1):
        for i in range(h + 1, k + 1):
            add(ring.word([Var(False, 1, h), Var(False, 2, i)])[1])
    for h in range(1, k + 1):
        for i in range(1, j + 1):
            add(ring.word([Var(False, 1, h), Var(True, 2, i)])[1])
    for h in range(1, j + 1):
        for i in range(h, j + 1):
            add(ring.word([Var(True, 1, h), Var(True, 2, i)])[1])
    return tuple(found)


def _rewrite(ring: SuperRing, m: SuperMonomial, old: Sequence[Var], new: Sequence[Var], coeff: int) -> Tuple[int, SuperMonomial]:
    """Replace the factor ``word(old)`` of ``m`` using ``word(old) == coeff * word(new)``."""
    s_old, f_old = ring.word(old)
    r = ring.divide(m, f_old)
    assert r is not None and s_old
    sigma, _ = ring.mul_monomials(r, f_old)
    s_new, f_new = ring.word(new)
    if not s_new:
        return 0, m
    s3, out = ring.mul_monomials(r, f_new)
    if not s3:
        return 0, m
    # m = sigma * r * f_old = sigma * s_old * r * word(old)
    return sigma * s_old * coeff * s_new * s3, out


def _split(ring: SuperRing, m: SuperMonomial):
    """(first-index generators with multiplicity, second-index generators with multiplicity)."""
    first, second = [], []
    for v, e in ring.factors(m):
        (first if v.idx == 1 else second).extend([v] * e)
    return first, second


def reduce(m: SuperMonomial, n: int, k: int, j: int) -> Tuple[int, SuperMonomial]:
    """Straighten a monomial: ``(c, b)`` with ``m == c * b`` modulo the ideal, c in {-1, 0, 1}.

    Rules are tried in a fixed order (fermionic pair, quadratic trade, degree
    cutoff, set-index swap) and the loop runs until none applies.
    """
    ring = dihedral_ring(k, j)
    key = lambda v: _unified(k, v.odd, v.set)
    sign = 1
    while True:
        first, second = _split(ring, m)
        # fermionic pair: theta_1^(i) theta_2^(i) together with another first-index factor
        if len(first) >= 2 and any(v.odd and Var(True, 1, v.set) in first for v in second):
            return 0, ring.one()
        # quadratic trade: exchange two second-index generators for first-index ones
        if len(second) >= 2:
            a, b = sorted(second, key=key)[:2]
            s, m = _rewrite(ring, m, [a, b], [Var(a.odd, 1, a.set), Var(b.odd, 1, b.set)], -1)
            if not s:
                return 0, ring.one()
            sign *= s
            continue
        # degree cutoff: first-index part of degree >= n lies in the ideal
        if len(first) >= n:
            return 0, ring.one()
        # set-index swap: move the lone second-index generator to the smallest set present
        if second and len(first) >= 2:
            t = second[0]
            low = min(first, key=key)
            if key(low) < key(t):
                s, m = _rewrite(
                    ring, m, [low, t], [Var(low.odd, 2, low.set), Var(t.odd, 1, t.set)], 1
                )
                if not s:
                    return 0, ring.one()
                sign *= s
                continue
        break
    if m not in _basis_set(n, k, j):
        raise ReductionError(f"straightening stopped at non-basis monomial {ring.format_monomial(m)}")
    return sign, m


@lru_cache(maxsize=None)
def _basis_set(n: int, k: int, j: int) -> frozenset:
    return frozenset(_basis(n, k, j))


def reduce_poly(p: SuperPoly, n: int) -> SuperPoly:
    """Linear extension of :func:`reduce`; the result is supported on basis monomials."""
    ring = p.ring
    if ring.width == 1:
        return cyclic_reduce_poly(p, n)
    out: Dict[SuperMonomial, object] = {}
    for m, c in p.items():
        s, b = reduce(m, n, ring.k, ring.j)
        if not s:
            continue
        v = c if s > 0 else -c
        out[b] = out[b] + v if b in out else v
    return SuperPoly(ring, out)


# cyclic groups


def cyclic_ring(k: int, j: int) -> SuperRing:
    return SuperRing(k, j, width=1)


def cyclic_basis_enumerate(n: int, k: int, j: int) -> List[SuperMonomial]:
    """All monomials of total degree <= n - 1 in one generator per set."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ring = cyclic_ring(k, j)
    return list(ring.monomials_up_to(n - 1))


def cyclic_reduce(m: SuperMonomial, n: int, k: int, j: int) -> Tuple[int, SuperMonomial]:
    ring = cyclic_ring(k, j)
    if ring.degree(m) >= n:
        return 0, ring.one()
    return 1, m


def cyclic_reduce_poly(p: SuperPoly, n: int) -> SuperPoly:
    ring = p.ring
    return SuperPoly(ring, {m: c for m, c in p.items() if ring.degree(m) < n})


def format_basis(ring: SuperRing, basis: Iterable[SuperMonomial]) -> List[str]:
    return [ring.format_monomial(m) for m in basis]

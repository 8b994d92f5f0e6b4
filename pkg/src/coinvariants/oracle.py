"""Brute-force verification of the closed forms by exact linear algebra.

Two coordinate systems are used.

* ``x`` coordinates: the real reflection representation, with the rotation
  matrix entries ``cos, sin`` living in Q(zeta_N), ``N = lcm(n, 4)``.  This is
  where :func:`act`, :func:`reynolds` and character traces are computed.
* ``zw`` coordinates: per set ``z = x_1 + i x_2``, ``w = x_1 - i x_2``.  The
  rotation scales a monomial by a root of unity and the reflection swaps
  ``z`` and ``w``, so the Reynolds image of a monomial is 0 or half a sum of
  two monomials.  Graded ranks of the invariant ideal are computed here over
  Z only.

For the cyclic group the action is already diagonal on ``x``, so the two
systems coincide.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .chartab import (
    CHI2,
    GroupElement,
    class_inner_product,
    cyclic_elements,
    dihedral_char_value,
    dihedral_class_representatives,
    dihedral_elements,
)
from .cyclotomic import Cyclotomic, lcm
from .linalg import FieldEchelon, IntegerEchelon, integer_row
from .series import (
    character_series,
    cyclic_character_series,
    cyclic_hilbert,
    hilbert_series,
)
from .superring import (
    SuperMonomial,
    SuperPoly,
    SuperRing,
    Var,
    basis_enumerate,
    cyclic_basis_enumerate,
    cyclic_reduce,
    ideal_generators,
    multidegrees_up_to,
    reduce,
    reduce_poly,
)
from .symfunc import GradingPoly

log = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class OracleError(ValueError):
    pass


# group action in x coordinates


def field_order(n: int, group: str = "dihedral") -> int:
    """Order of the cyclotomic field carrying the x-coordinate action."""
    return lcm(n, 4) if group == "dihedral" else n


class GroupAction:
    """Images of every ring generator under each group element, as degree-1 SuperPolys."""

    def __init__(self, n: int, k: int, j: int, group: str = "dihedral"):
        if group not in ("dihedral", "cyclic"):
            raise OracleError(f"unknown group {group!r}")
        if group == "dihedral" and n < 2:
            raise OracleError(f"dihedral group needs n >= 2, got {n}")
        if n < 1:
            raise OracleError(f"group order parameter must be positive, got {n}")
        self.n, self.k, self.j, self.group = n, k, j, group
        self.ring = SuperRing(k, j, width=2 if group == "dihedral" else 1)
        self.order = field_order(n, group)
        self._cache: Dict[GroupElement, Dict[Var, SuperPoly]] = {}

    def elements(self) -> List[GroupElement]:
        return dihedral_elements(self.n) if self.group == "dihedral" else cyclic_elements(self.n)

    def matrix(self, g: GroupElement):
        """2x2 matrix of g on (x_1, x_2) over Q(zeta_N); column c is the image of x_c."""
        N, n = self.order, self.n
        zeta = Cyclotomic.root(N, (N // n) * g.exponent)
        zinv = Cyclotomic.root(N, -(N // n) * g.exponent)
        i = Cyclotomic.root(N, N // 4)
        cos = (zeta + zinv) / 2
        sin = (zeta - zinv) / (i * 2)
        rot = [[cos, -sin], [sin, cos]]
        if g.kind == "reflection":
            # rho^e phi: phi negates the second column
            return [[rot[0][0], -rot[0][1]], [rot[1][0], -rot[1][1]]]
        return rot

    def images(self, g: GroupElement) -> Dict[Var, SuperPoly]:
        if g in self._cache:
            return self._cache[g]
        ring = self.ring
        out: Dict[Var, SuperPoly] = {}
        if self.group == "cyclic":
            scale = Cyclotomic.root(self.n, g.exponent)
            for v in ring.variables():
                out[v] = SuperPoly.gen(ring, v).scale(scale)
        else:
            mat = self.matrix(g)
            for v in ring.variables():
                c = v.idx - 1
                terms = {}
                for r in range(2):
                    if not mat[r][c].is_zero():
                        terms[ring.var_monomial(Var(v.odd, r + 1, v.set))] = mat[r][c]
                out[v] = SuperPoly(ring, terms)
        self._cache[g] = out
        return out

    def act(self, g: GroupElement, p: SuperPoly) -> SuperPoly:
        if p.ring != self.ring:
            raise OracleError("polynomial is not in this action's ring")
        return p.substitute(self.images(g))

    def reynolds(self, p: SuperPoly) -> SuperPoly:
        elems = self.elements()
        total = SuperPoly(self.ring)
        for g in elems:
            total = total + self.act(g, p)
        return total.scale(Cyclotomic.rational(self.order, 1) / len(elems))


def act(g: GroupElement, p: SuperPoly) -> SuperPoly:
    """Diagonal action of ``g`` on a polynomial in x coordinates."""
    ring = p.ring
    group = "cyclic" if g.cyclic else "dihedral"
    return _action(g.n, ring.k, ring.j, group).act(g, _lift(p, field_order(g.n, group)))


def reynolds(p: SuperPoly, n: int, group: str = "dihedral") -> SuperPoly:
    """Average of ``g . p`` over the group."""
    ring = p.ring
    return _action(n, ring.k, ring.j, group).reynolds(_lift(p, field_order(n, group)))


@lru_cache(maxsize=None)
def _action(n: int, k: int, j: int, group: str) -> GroupAction:
    return GroupAction(n, k, j, group)


def _lift(p: SuperPoly, order: int) -> SuperPoly:
    def up(c):
        if isinstance(c, Cyclotomic):
            return c if c.order == order else c.embed(order)
        return Cyclotomic.rational(order, c)

    return p.map_coefficients(up)


# zw coordinates: invariant ideal components over Z


def _charge(ring: SuperRing, m: SuperMonomial) -> int:
    if ring.width == 1:
        return ring.degree(m)
    c = 0
    for s in range(0, ring.nbos, 2):
        c += m.bos[s] - m.bos[s + 1]
    for s in range(0, ring.nferm, 2):
        c += (m.ferm >> s & 1) - (m.ferm >> (s + 1) & 1)
    return c


def _swap(ring: SuperRing, m: SuperMonomial) -> Tuple[int, SuperMonomial]:
    """Image of a zw monomial under the reflection ``z <-> w`` (sign, monomial)."""
    bos = list(m.bos)
    for s in range(0, ring.nbos, 2):
        bos[s], bos[s + 1] = bos[s + 1], bos[s]
    ferm, sign = 0, 1
    for s in range(0, ring.nferm, 2):
        a, b = m.ferm >> s & 1, m.ferm >> (s + 1) & 1
        if a and b:
            sign = -sign
        ferm |= (b << s) | (a << (s + 1))
    return sign, SuperMonomial(tuple(bos), ferm)


class IdealModel:
    """Graded components of the invariant ideal, in zw coordinates, over Z.

    ``component(d)`` is a fraction-free echelon basis of the span of
    ``R(m1) * m2`` over monomials ``m1`` of positive multidegree ``d1 <= d``
    and ``m2`` of multidegree ``d - d1``, where ``R`` is the Reynolds
    projection (scaled to integer rows).
    """

    def __init__(self, n: int, k: int, j: int, group: str = "dihedral"):
        self.n, self.k, self.j, self.group = n, k, j, group
        self.ring = SuperRing(k, j, width=2 if group == "dihedral" else 1)
        self._columns: Dict[Exponent, Dict[SuperMonomial, int]] = {}
        self._components: Dict[Exponent, IntegerEchelon] = {}
        self._invariants: Dict[Exponent, List[Dict[SuperMonomial, int]]] = {}

    def columns(self, d: Exponent) -> Dict[SuperMonomial, int]:
        if d not in self._columns:
            monos = self.ring.monomials_of_multidegree(d)
            self._columns[d] = {m: i for i, m in enumerate(monos)}
        return self._columns[d]

    def invariants(self, d: Exponent) -> List[Dict[SuperMonomial, int]]:
        """Integer multiples of Reynolds images of the monomials of multidegree d."""
        if d in self._invariants:
            return self._invariants[d]
        ring, n = self.ring, self.n
        seen = set()
        out = []
        for m in self.columns(d):
            if _charge(ring, m) % n:
                continue
            if self.group == "cyclic":
                row = {m: 1}
            else:
                s, m2 = _swap(ring, m)
                if m2 == m:
                    if s < 0:
                        continue
                    row = {m: 2}
                else:
                    row = {m: 1, m2: s}
            key = frozenset(row)
            if key in seen:
                continue
            seen.add(key)
            out.append(row)
        self._invariants[d] = out
        return out

    def rows(self, d: Exponent) -> Iterable[Dict[int, int]]:
        """Spanning rows of the degree-d ideal component, as column-indexed int dicts."""
        ring = self.ring
        cols = self.columns(d)
        for d1 in _sub_multidegrees(d):
            if not any(d1):
                continue
            invs = self.invariants(d1)
            if not invs:
                continue
            rest = tuple(a - b for a, b in zip(d, d1))
            for m2 in ring.monomials_of_multidegree(rest):
                for inv in invs:
                    row: Dict[int, int] = {}
                    for m1, c in inv.items():
                        sign, prod = ring.mul_monomials(m1, m2)
                        if sign:
                            col = cols[prod]
                            row[col] = row.get(col, 0) + sign * c
                    row = {c: v for c, v in row.items() if v}
                    if row:
                        yield row

    def component(self, d: Exponent) -> IntegerEchelon:
        d = tuple(d)
        if d not in self._components:
            ech = IntegerEchelon(len(self.columns(d)))
            for row in self.rows(d):
                ech.add(row)
                if ech.full():
                    break
            self._components[d] = ech
        return self._components[d]

    def quotient_dim(self, d: Exponent) -> int:
        return len(self.columns(tuple(d))) - self.component(d).rank

    def vector(self, p: SuperPoly, d: Exponent) -> Dict[int, object]:
        cols = self.columns(tuple(d))
        out = {}
        for m, c in p.items():
            if m not in cols:
                raise OracleError(f"term {self.ring.format_monomial(m)} is not of multidegree {d}")
            out[cols[m]] = c
        return out


def _sub_multidegrees(d: Sequence[int]):
    import itertools

    return itertools.product(*[range(x + 1) for x in d])


@lru_cache(maxsize=None)
def ideal_model(n: int, k: int, j: int, group: str = "dihedral") -> IdealModel:
    return IdealModel(n, k, j, group)


def to_zw(p: SuperPoly) -> SuperPoly:
    """Rewrite a dihedral x-coordinate polynomial in zw coordinates (coefficients in Q(i)).

    ``x_1 = (z + w)/2`` and ``x_2 = (z - w)/(2i)``, likewise for theta.
    """
    ring = p.ring
    if ring.width == 1:
        return p
    i = Cyclotomic.root(4, 1)
    half = Cyclotomic.rational(4, 1) / 2
    images = {}
    for v in ring.variables():
        z = ring.var_monomial(Var(v.odd, 1, v.set))
        w = ring.var_monomial(Var(v.odd, 2, v.set))
        if v.idx == 1:
            images[v] = SuperPoly(ring, {z: half, w: half})
        else:
            f = half / i
            images[v] = SuperPoly(ring, {z: f, w: -f})
    return p.substitute(images)


def _split_gaussian(vec: Dict[int, object]) -> Tuple[Dict[int, object], Dict[int, object]]:
    """Real and imaginary rational parts of a vector over Q(i)."""
    re, im = {}, {}
    for c, v in vec.items():
        if isinstance(v, Cyclotomic):
            if v.coeffs[0]:
                re[c] = v.coeffs[0]
            if v.order == 4 and v.coeffs[1]:
                im[c] = v.coeffs[1]
        elif v:
            re[c] = v
    return re, im


def in_ideal(p: SuperPoly, n: int, group: str = "dihedral") -> bool:
    """Membership of an x-coordinate polynomial in the invariant ideal (all multidegrees)."""
    ring = p.ring
    model = ideal_model(n, ring.k, ring.j, group)
    zw = to_zw(p)
    by_degree: Dict[Exponent, SuperPoly] = {}
    for m, c in zw.items():
        d = ring.multidegree(m)
        by_degree.setdefault(d, SuperPoly(ring))
        by_degree[d] = by_degree[d] + SuperPoly(ring, {m: c})
    for d, part in by_degree.items():
        ech = model.component(d)
        for half in _split_gaussian(model.vector(part, d)):
            if half and not ech.contains(half):
                return False
    return True


# Hilbert series oracle


@dataclass
class GradedDims:
    """Quotient dimensions per multidegree (positive entries only)."""

    dims: Dict[Exponent, int]
    cap: int
    top_degree: int
    nvars: int

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def violations(self) -> List[Exponent]:
        """Nonzero components above the predicted top degree."""
        return sorted(d for d in self.dims if sum(d) > self.top_degree)

    def as_poly(self) -> GradingPoly:
        return GradingPoly(self.nvars, self.dims)


def quotient_hilbert_oracle(
    n: int, k: int, j: int, cap: Optional[int] = None, group: str = "dihedral", coords: str = "zw"
) -> GradedDims:
    """Quotient dimension for every multidegree of total degree <= cap.

    ``cap`` defaults to ``n + 2`` and must be at least ``n + 1``.  ``coords="x"``
    runs the slower x-coordinate path (Reynolds images over Q(zeta_N)).
    """
    if group == "dihedral" and n < 2:
        raise OracleError(f"dihedral group needs n >= 2, got {n}")
    if n < 1:
        raise OracleError(f"n must be positive, got {n}")
    if cap is None:
        cap = n + 2
    if cap < n + 1:
        raise OracleError(f"degree cap {cap} too small: need at least n + 1 = {n + 1}")
    width = 2 if group == "dihedral" else 1
    top = n if group == "dihedral" else n - 1
    dims: Dict[Exponent, int] = {}
    if coords == "zw":
        model = ideal_model(n, k, j, group)
        for d in multidegrees_up_to(k, j, cap, width):
            q = model.quotient_dim(d)
            if q:
                dims[d] = q
    elif coords == "x":
        dims = _x_coordinate_dims(n, k, j, cap, group)
    else:
        raise OracleError(f"unknown coordinate system {coords!r}")
    log.debug("oracle %s n=%d k=%d j=%d cap=%d: total %d", group, n, k, j, cap, sum(dims.values()))
    return GradedDims(dims, cap, top, k + j)


def _x_coordinate_dims(n: int, k: int, j: int, cap: int, group: str) -> Dict[Exponent, int]:
    action = _action(n, k, j, group)
    ring = action.ring
    N = action.order
    invariants: Dict[Exponent, List[SuperPoly]] = {}

    def invs(d1):
        if d1 not in invariants:
            out = []
            for m in ring.monomials_of_multidegree(d1):
                r = action.reynolds(SuperPoly.monomial(ring, m, Cyclotomic.rational(N, 1)))
                if not r.is_zero():
                    out.append(r)
            invariants[d1] = out
        return invariants[d1]

    dims = {}
    for d in multidegrees_up_to(k, j, cap, ring.width):
        monos = ring.monomials_of_multidegree(d)
        cols = {m: i for i, m in enumerate(monos)}
        ech = FieldEchelon(len(monos))
        for d1 in _sub_multidegrees(d):
            if not any(d1) or ech.full():
                continue
            rest = tuple(a - b for a, b in zip(d, d1))
            for m2 in ring.monomials_of_multidegree(rest):
                for inv in invs(d1):
                    prod = inv * SuperPoly.monomial(ring, m2, Cyclotomic.rational(N, 1))
                    ech.add({cols[m]: c for m, c in prod.items()})
                    if ech.full():
                        break
        q = len(monos) - ech.rank
        if q:
            dims[d] = q
    return dims


def expected_dims(n: int, k: int, j: int, group: str = "dihedral") -> Dict[Exponent, int]:
    poly = hilbert_series(n, k, j) if group == "dihedral" else cyclic_hilbert(n, k, j)
    return dict(poly.items())


# basis certification


@dataclass
class CertificationReport:
    group: str
    n: int
    k: int
    j: int
    basis_size: int = 0
    checked_monomials: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, multidegree=None, witness=None):
        self.failures.append(
            {
                "check": check,
                "config": [self.n, self.k, self.j],
                "multidegree": list(multidegree) if multidegree is not None else None,
                "witness": witness,
            }
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "group": self.group,
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "passed": self.passed,
            "basis_size": self.basis_size,
            "checked_monomials": self.checked_monomials,
            "failures": self.failures,
        }


def _reduce_any(ring: SuperRing, m: SuperMonomial, n: int):
    if ring.width == 1:
        return cyclic_reduce(m, n, ring.k, ring.j)
    return reduce(m, n, ring.k, ring.j)


def random_monomial(ring: SuperRing, max_degree: int, rng: random.Random) -> SuperMonomial:
    """A monomial with total degree uniform in [0, max_degree] and random support."""
    nslots = ring.nbos + ring.nferm
    if nslots == 0:
        return ring.one()
    target = rng.randint(0, max_degree)
    bos = [0] * ring.nbos
    ferm = 0
    for _ in range(target):
        s = rng.randrange(nslots)
        if s < ring.nbos:
            bos[s] += 1
        else:
            ferm |= 1 << (s - ring.nbos)
    return SuperMonomial(tuple(bos), ferm)


def certify_basis(
    n: int, k: int, j: int, group: str = "dihedral", samples: int = 200, seed: int = 0, cap: Optional[int] = None
) -> CertificationReport:
    """Check the monomial basis against the oracle.

    (i) basis monomials of each multidegree are independent modulo the ideal,
    (ii) their count matches the oracle's quotient dimension,
    (iii) ``m - reduce(m)`` lies in the ideal for ``samples`` random monomials.
    Also: reduce fixes every basis monomial and kills every ideal generator.
    """
    report = CertificationReport(group, n, k, j)
    if group == "dihedral":
        ring = SuperRing(k, j, 2)
        basis = basis_enumerate(n, k, j)
    else:
        ring = SuperRing(k, j, 1)
        basis = cyclic_basis_enumerate(n, k, j)
    report.basis_size = len(basis)
    model = ideal_model(n, k, j, group)
    oracle = quotient_hilbert_oracle(n, k, j, cap=cap, group=group)
    for d in oracle.violations():
        report.fail("vanishing above top degree", d, oracle.dims[d])

    by_degree: Dict[Exponent, List[SuperMonomial]] = {}
    for b in basis:
        by_degree.setdefault(ring.multidegree(b), []).append(b)

    for d in sorted(set(by_degree) | set(oracle.dims)):
        members = by_degree.get(d, [])
        if len(members) != oracle.dims.get(d, 0):
            report.fail("count", d, {"basis": len(members), "oracle": oracle.dims.get(d, 0)})
        if not members:
            continue
        ech = model.component(d)
        residues = FieldEchelon()
        for b in members:
            vec = model.vector(to_zw(SuperPoly.monomial(ring, b)), d)
            residues.add(ech.residual(vec))
        if residues.rank != len(members):
            report.fail("independence", d, [ring.format_monomial(b) for b in members])

    for b in basis:
        s, b2 = _reduce_any(ring, b, n)
        if (s, b2) != (1, b):
            report.fail("idempotence", ring.multidegree(b), ring.format_monomial(b))
    if group == "dihedral":
        for gen in ideal_generators(n, k, j):
            if not reduce_poly(gen, n).is_zero():
                report.fail("generator reduces to zero", None, gen.format())
    else:
        for m in ring.monomials_up_to(n):
            if ring.degree(m) == n and cyclic_reduce(m, n, k, j)[0]:
                report.fail("generator reduces to zero", ring.multidegree(m), ring.format_monomial(m))

    rng = random.Random(seed)
    top = oracle.cap
    for _ in range(samples):
        m = random_monomial(ring, top, rng)
        s, b = _reduce_any(ring, m, n)
        diff = SuperPoly.monomial(ring, m)
        if s:
            diff = diff - SuperPoly.monomial(ring, b, s)
        if not in_ideal(diff, n, group):
            report.fail("m - reduce(m) in ideal", ring.multidegree(m), ring.format_monomial(m))
        report.checked_monomials += 1
    log.debug("certified %s n=%d k=%d j=%d: %d failures", group, n, k, j, len(report.failures))
    return report


# character traces


def character_trace_oracle(n: int, k: int, j: int, g: GroupElement, d: Sequence[int], group: str = "dihedral") -> Cyclotomic:
    """Trace of g on the degree-d quotient component, via act then reduce in the monomial basis."""
    d = tuple(d)
    action = _action(n, k, j, group)
    ring = action.ring
    basis = basis_enumerate(n, k, j) if group == "dihedral" else cyclic_basis_enumerate(n, k, j)
    total = Cyclotomic.rational(action.order, 0)
    one = Cyclotomic.rational(action.order, 1)
    for b in basis:
        if ring.multidegree(b) != d:
            continue
        image = action.act(g, SuperPoly.monomial(ring, b, one))
        reduced = reduce_poly(image, n)
        total = total + reduced.coefficient(b)
    return total


def trace_series(n: int, k: int, j: int, g: GroupElement, group: str = "dihedral") -> Dict[Exponent, Cyclotomic]:
    """Nonzero traces of g on every quotient component, keyed by multidegree."""
    ring = _action(n, k, j, group).ring
    basis = basis_enumerate(n, k, j) if group == "dihedral" else cyclic_basis_enumerate(n, k, j)
    degrees = sorted({ring.multidegree(b) for b in basis})
    out = {}
    for d in degrees:
        t = character_trace_oracle(n, k, j, g, d, group)
        if not t.is_zero():
            out[d] = t
    return out


def predicted_traces(n: int, k: int, j: int, g: GroupElement, group: str = "dihedral") -> Dict[Exponent, Cyclotomic]:
    """Character series evaluated at g, embedded in the oracle's field."""
    series = character_series(n, k, j) if group == "dihedral" else cyclic_character_series(n, k, j)
    order = field_order(n, group)
    return {d: v.embed(order) for d, v in series.evaluate(g).items()}


def sign_multiplicity_oracle(n: int, k: int, j: int) -> GradingPoly:
    """Graded multiplicity of the sign character chi2, from oracle traces on class representatives."""
    reps = dihedral_class_representatives(n)
    per_rep = [trace_series(n, k, j, g) for g, _ in reps]
    order = field_order(n)
    chi = [dihedral_char_value(CHI2, g, n).embed(order) for g, _ in reps]
    degrees = set()
    for t in per_rep:
        degrees |= set(t)
    out = {}
    zero = Cyclotomic.rational(order, 0)
    for d in degrees:
        values = [t.get(d, zero) for t in per_rep]
        mult = class_inner_product(values, chi, n)
        if mult:
            out[d] = int(mult)
    return GradingPoly(k + j, out)


# secondary experiment


def generator_span_experiment(n: int, k: int, j: int, cap: Optional[int] = None) -> Dict[Exponent, Tuple[int, int]]:
    """Per multidegree: (rank of the ideal generated by the listed polarized elements, rank of the full ideal).

    Reported as data; the listed elements are known to lie in the ideal but are
    not claimed to generate it.
    """
    cap = n + 2 if cap is None else cap
    ring = SuperRing(k, j, 2)
    model = ideal_model(n, k, j)
    gens = []
    for g in ideal_generators(n, k, j):
        zw = to_zw(g)
        re_terms = {}
        for m, c in zw.items():
            if not c.is_rational():
                raise OracleError("generator is not rational in zw coordinates")
            re_terms[m] = c.to_fraction()
        gens.append((ring.multidegree(next(iter(zw.terms))), re_terms))
    out = {}
    for d in multidegrees_up_to(k, j, cap, 2):
        cols = model.columns(d)
        ech = IntegerEchelon(len(cols))
        for d1, gen in gens:
            rest = tuple(a - b for a, b in zip(d, d1))
            if any(x < 0 for x in rest):
                continue
            for m2 in ring.monomials_of_multidegree(rest):
                row = {}
                for m1, c in gen.items():
                    sign, prod = ring.mul_monomials(m1, m2)
                    if sign:
                        row[cols[prod]] = row.get(cols[prod], 0) + sign * c
                ech.add(integer_row(row))
        full = model.component(d).rank
        if ech.rank or full:
            out[d] = (ech.rank, full)
    return out

"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as their canonical residue modulo the N-th cyclotomic
polynomial, i.e. a coefficient vector of length ``phi(N)`` in the power basis
``1, zeta, zeta^2, ...``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import List, Sequence, Tuple


def _poly_divmod(num: List, den: List) -> Tuple[List, List]:
    """Long division of ascending-coefficient polynomials over Q."""
    num = list(num)
    out = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        q = Fraction(num[-1]) / lead
        out[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return out, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly: List = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem), "z^n - 1 not divisible by a cyclotomic factor"
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def _tables(n: int):
    """Degree of Phi_n and reduced power-basis vectors of zeta^e for e < max(n, 2 deg)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    top = max(n, 2 * deg)
    powers = []
    vec = [0] * deg
    vec[0] = 1
    for _ in range(top):
        powers.append(tuple(vec))
        # multiply by zeta: shift, then fold the overflow term using the monic Phi_n
        carry = vec[-1]
        vec = [0] + vec[:-1]
        if carry:
            for i in range(deg):
                vec[i] -= carry * phi[i]
    return deg, tuple(powers)


class Cyclotomic:
    """An element of Q(zeta_N).  Immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        deg, powers = _tables(order)
        self.order = order
        vec = [Fraction(0)] * deg
        for e, c in enumerate(coeffs):
            if not c:
                continue
            if e < deg:
                vec[e] += c
            else:
                for i, p in enumerate(powers[e % order]):
                    if p:
                        vec[i] += c * p
        self.coeffs = tuple(Fraction(c) for c in vec)

    @classmethod
    def _raw(cls, order: int, coeffs: Tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        deg, _ = _tables(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def root(cls, order: int, exponent: int = 1) -> "Cyclotomic":
        """``zeta_order ** exponent``."""
        _, powers = _tables(order)
        return cls._raw(order, tuple(Fraction(c) for c in powers[exponent % order]))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return other
            raise ValueError(f"mixed cyclotomic orders {self.order} and {other.order}; embed first")
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            if other == 0:
                return Cyclotomic.rational(self.order, 0)
            return Cyclotomic._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        deg, powers = _tables(self.order)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                if b:
                    prod[i + k] += a * b
        out = list(prod[:deg])
        for e in range(deg, 2 * deg - 1):
            c = prod[e]
            if c:
                for i, p in enumerate(powers[e]):
                    if p:
                        out[i] += c * p
        return Cyclotomic._raw(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # extended Euclid: find s with s * a == 1 mod Phi
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("non-invertible residue; modulus is not irreducible")
        c = r1[0]
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, ``zeta -> zeta^(N-1)``."""
        n = self.order
        return Cyclotomic(n, _spread({(-e) % n: c for e, c in enumerate(self.coeffs) if c}))

    def embed(self, order: int) -> "Cyclotomic":
        """Image in Q(zeta_order) under zeta_N -> zeta_order^(order/N)."""
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        return Cyclotomic(order, _spread({e * step: c for e, c in enumerate(self.coeffs) if c}))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def format(self, symbol: str | None = None) -> str:
        symbol = symbol or f"z{self.order}"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else (symbol if e == 1 else f"{symbol}^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}: {self.format()})"

    __str__ = format


def _spread(by_exponent: dict) -> List:
    if not by_exponent:
        return []
    out = [0] * (max(by_exponent) + 1)
    for e, c in by_exponent.items():
        out[e] = c
    return out


def _poly_mul(a: List, b: List) -> List:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            out[i + k] += x * y
    return out


def _poly_sub(a: List, b: List) -> List:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def two_cos(order: int, h: int) -> Cyclotomic:
    """``2 cos(2 pi h / order) = zeta^h + zeta^-h``."""
    return Cyclotomic.root(order, h) + Cyclotomic.root(order, -h)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)

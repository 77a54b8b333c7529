"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

Elements are polynomials in zeta_N with rational coefficients, reduced modulo
the N-th cyclotomic polynomial. Binary operations between different levels lift
both operands to the lcm of the levels.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import DivisionByZero, LevelMismatch, NotARootOfUnity
from .scalar import RootScalar

# Polynomials are tuples of coefficients, lowest degree first, without trailing zeros.


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_divmod(a, b):
    """Quotient and remainder of a by b (b nonzero)."""
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(_trim(a))
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = Fraction(a[-1]) / lead
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a = list(_trim(a))
    return _trim(q), tuple(a)


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic polynomials are indexed by positive integers")
    num = (-1,) + (0,) * (n - 1) + (1,)
    for d in divisors(n)[:-1]:
        num, rem = poly_divmod(num, cyclotomic_polynomial(d))
        assert not rem
    return tuple(int(c) for c in num)


def _reduce(p, n: int) -> tuple:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    p = list(p)
    # Phi_n is monic: plain long division
    for k in range(len(p) - 1, deg - 1, -1):
        c = p[k]
        if c:
            for i in range(deg + 1):
                p[k - deg + i] -= c * phi[i]
    p = p[:deg] + [0] * max(0, deg - len(p))
    return tuple(Fraction(c) for c in p)


def _poly_inverse_mod(a, n: int):
    """s with s*a == 1 mod Phi_n, by the extended Euclidean algorithm over Q."""
    m = tuple(Fraction(c) for c in cyclotomic_polynomial(n))
    r0, r1 = m, _trim(a)
    s0, s1 = (), (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
    # r0 is the gcd; a unit because Phi_n is irreducible and a != 0 mod Phi_n
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c = r0[0]
    return tuple(x / c for x in s0)


class CycloNumber:
    """An element of Q(zeta_N).

    >>> i = CycloNumber.zeta(4)
    >>> i * i == -1
    True
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Sequence = ()):
        if level < 1:
            raise ValueError("level must be a positive integer")
        self.level = level
        self.coeffs = _reduce([Fraction(c) for c in coeffs], level)

    @classmethod
    def _raw(cls, level, coeffs):
        obj = object.__new__(cls)
        obj.level = level
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zeta(cls, level: int, k: int = 1) -> CycloNumber:
        k %= level
        return cls(level, [0] * k + [1])

    @classmethod
    def from_rational(cls, x, level: int = 1) -> CycloNumber:
        return cls(level, [x])

    @classmethod
    def from_terms(cls, level: int, terms) -> CycloNumber:
        """Sum of c * zeta_level**k over (k, c) pairs."""
        p = [Fraction(0)] * level
        for k, c in terms:
            p[k % level] += Fraction(c)
        return cls(level, p)

    def terms(self):
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def lift(self, level: int) -> CycloNumber:
        """Re-express at a multiple of the current level."""
        if level == self.level:
            return self
        if level % self.level:
            raise LevelMismatch(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        p = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 if self.coeffs else 0)
        for k, c in enumerate(self.coeffs):
            p[k * step] = c
        return CycloNumber(level, p)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.level == self.level:
                return self, other
            n = self.level * other.level // gcd(self.level, other.level)
            return self.lift(n), other.lift(n)
        if isinstance(other, (int, Fraction)):
            return self, CycloNumber(self.level, [other])
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNumber._raw(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.level, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNumber._raw(a.level, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber._raw(self.level, tuple(x * other for x in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNumber._raw(a.level, _reduce(poly_mul(a.coeffs, b.coeffs), a.level))

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_N)")
        return CycloNumber(self.level, _poly_inverse_mod(self.coeffs, self.level))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNumber(self.level, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        pair = self._coerce(other) if isinstance(other, (CycloNumber, int, Fraction)) else None
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    __hash__ = None

    def __repr__(self):
        return f"CycloNumber({self.level}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for k, c in self.terms():
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ") + f" [N={self.level}]"


def add(a: CycloNumber, b: CycloNumber) -> CycloNumber:
    return a + b


def mul(a: CycloNumber, b: CycloNumber) -> CycloNumber:
    return a * b


def inv(a: CycloNumber) -> CycloNumber:
    return a.inverse()


def embed_scalar(s: RootScalar, n: int) -> CycloNumber:
    """Send exp(2 pi i p/q) to zeta_n**(p n / q)."""
    if s.free:
        raise NotARootOfUnity(f"{s} has a free part and no numeric value")
    p, q = s.torsion.numerator, s.torsion.denominator
    if n % q:
        raise LevelMismatch(f"{s} is not an {n}-th root of unity")
    return CycloNumber.zeta(n, p * (n // q))

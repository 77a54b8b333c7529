"""Exact model of k* for an algebraically closed field of characteristic 0.

k* is represented as the divisible abelian group

    (Q/Z)  (+)  Q^(symbols)

written multiplicatively: a value is ``exp(2 pi i * torsion) * prod sym**e``.
Every element has an n-th root for every n, so all root extractions are exact.
"""

from __future__ import annotations

import builtins
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional

from .errors import IncompatibleConstraints, NoSolution


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q'")
    return Fraction(x)


class RootScalar:
    """Element of the divisible group modelling k*.

    >>> minus_one = RootScalar(Fraction(1, 2))
    >>> minus_one * minus_one == ONE
    True
    >>> print(RootScalar(0, {"q": 1}).root(3))
    q^(1/3)
    """

    __slots__ = ("torsion", "free", "_hash")

    def __init__(self, torsion=0, free: Optional[Mapping[str, object]] = None):
        t = _frac(torsion) % 1
        items = []
        if free:
            for sym, e in free.items():
                if not isinstance(sym, str) or not sym:
                    raise ValueError(f"symbol names must be nonempty strings, got {sym!r}")
                e = _frac(e)
                if e:
                    items.append((sym, e))
        items.sort()
        object.__setattr__(self, "torsion", t)
        object.__setattr__(self, "free", tuple(items))
        object.__setattr__(self, "_hash", hash((t, self.free)))

    def __setattr__(self, name, value):
        raise AttributeError("RootScalar is immutable")

    @classmethod
    def _raw(cls, torsion: Fraction, free: tuple) -> RootScalar:
        # trusted constructor: torsion already reduced, free sorted without zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "torsion", torsion)
        object.__setattr__(obj, "free", free)
        object.__setattr__(obj, "_hash", hash((torsion, free)))
        return obj

    @property
    def free_dict(self) -> dict:
        return dict(self.free)

    @property
    def is_torsion(self) -> bool:
        return not self.free

    @property
    def is_identity(self) -> bool:
        return self.torsion == 0 and not self.free

    @property
    def order(self) -> int:
        """Multiplicative order; 0 when the element has infinite order."""
        return 0 if self.free else self.torsion.denominator

    def __eq__(self, other):
        if not isinstance(other, RootScalar):
            return NotImplemented
        return self.torsion == other.torsion and self.free == other.free

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.free:
            return f"RootScalar({self.torsion!r}, {dict(self.free)!r})"
        return f"RootScalar({self.torsion!r})"

    def __str__(self):
        parts = []
        if self.torsion:
            parts.append(f"e(2pi i*{self.torsion})")
        for sym, e in self.free:
            parts.append(sym if e == 1 else f"{sym}^({e})")
        return "*".join(parts) or "1"

    def __mul__(self, other: RootScalar) -> RootScalar:
        if not isinstance(other, RootScalar):
            return NotImplemented
        t = (self.torsion + other.torsion) % 1
        if not other.free:
            return RootScalar._raw(t, self.free)
        if not self.free:
            return RootScalar._raw(t, other.free)
        acc = dict(self.free)
        for sym, e in other.free:
            acc[sym] = acc.get(sym, 0) + e
        return RootScalar._raw(t, tuple(sorted((s, e) for s, e in acc.items() if e)))

    def inverse(self) -> RootScalar:
        return RootScalar._raw((-self.torsion) % 1, tuple((s, -e) for s, e in self.free))

    def __truediv__(self, other: RootScalar) -> RootScalar:
        if not isinstance(other, RootScalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int) -> RootScalar:
        if not isinstance(e, int):
            raise TypeError("RootScalar powers take integer exponents; use root() for radicals")
        if e == 0:
            return ONE
        return RootScalar._raw((self.torsion * e) % 1, tuple((s, x * e) for s, x in self.free))

    def root(self, n: int) -> RootScalar:
        """The canonical n-th root: torsion divided by n, free exponents divided by n."""
        if n < 1:
            raise ValueError("root order must be a positive integer")
        return RootScalar._raw(self.torsion / n, tuple((s, x / n) for s, x in self.free))


ONE = RootScalar()
MINUS_ONE = RootScalar(Fraction(1, 2))


def root_of_unity(p: int, q: int) -> RootScalar:
    """exp(2 pi i p / q)."""
    return RootScalar(Fraction(p, q))


def symbol(name: str, exponent=1) -> RootScalar:
    return RootScalar(0, {name: exponent})


def mul(a: RootScalar, b: RootScalar) -> RootScalar:
    return a * b


def inv(a: RootScalar) -> RootScalar:
    return a.inverse()


def pow(a: RootScalar, e: int) -> RootScalar:  # noqa: A001 - mirrors the group operation name
    return a ** e


def canonical_root(a: RootScalar, n: int) -> RootScalar:
    return a.root(n)


def is_sign(a: RootScalar) -> Optional[int]:
    if a == ONE:
        return 1
    if a == MINUS_ONE:
        return -1
    return None


def solve_root_constraints(r: int, A: RootScalar, n: int, B: RootScalar) -> RootScalar:
    """Find x with x**r == A and x**n == B.

    The free part is forced. For the torsion part the candidates are
    ``(A.torsion + j) / r`` for ``j in range(r)``; the smallest ``j`` solving
    ``n*j = r*B.torsion - n*A.torsion (mod r)`` is returned.
    """
    if r < 1 or n < 1:
        raise ValueError("root orders must be positive integers")
    if A ** n != B ** r:
        raise IncompatibleConstraints(
            f"x^{r} = {A} and x^{n} = {B} are incompatible: A^{n} != B^{r}"
        )
    # integral because A^n == B^r forces n*A.t == r*B.t mod 1
    c = r * B.torsion - n * A.torsion
    assert c.denominator == 1
    c = int(c) % r
    g = gcd(n, r)
    if c % g:
        raise NoSolution(f"no x with x^{r} = {A} and x^{n} = {B}")
    rg, ng, cg = r // g, n // g, c // g
    j = (cg * builtins.pow(ng, -1, rg)) % rg if rg > 1 else 0
    x = RootScalar._raw((A.torsion + j) / r, tuple((s, e / r) for s, e in A.free))
    assert x ** r == A and x ** n == B
    return x


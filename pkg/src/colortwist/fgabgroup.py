"""Finitely generated abelian groups given by integer relation matrices.

A presentation on generators g_1..g_s with relation rows r means
``prod g_i**r_i == e`` for each row. Canonical coordinates come from the Smith
normal form ``U R V = D``: a word x maps to ``x V``, whose torsion entries are
reduced modulo the invariant factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterator, Optional, Sequence

from .errors import InfiniteGroup, PresentationMismatch

Matrix = list  # list of rows of Python ints


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix, inner: Optional[int] = None) -> Matrix:
    if inner is None:
        inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def smith_normal_form(M: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Return (U, D, V, V_inv) with U*M*V == D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ... . ``ncols`` fixes the
    column count when M has no rows.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U = identity_matrix(m)
    V = identity_matrix(n)
    Vi = identity_matrix(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col_dst += q * col_src; inverse acts on rows of Vi: row_src -= q * row_dst
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    D = A
    assert matmul(matmul(U, [list(r) for r in M], m), V, n) == D if m else True
    assert matmul(V, Vi) == identity_matrix(n)
    return U, D, V, Vi


def hermite_rows(B: Matrix):
    """Row-style Hermite reduction: returns (H, T) with T*B == H, T unimodular.

    H is upper echelon; pivots are positive and entries above each pivot are
    reduced into [0, pivot).
    """
    H = [list(r) for r in B]
    m = len(H)
    n = len(H[0]) if m else 0
    T = identity_matrix(m)
    row = 0
    for col in range(n):
        if row >= m:
            break
        while True:
            nz = [(abs(H[i][col]), i) for i in range(row, m) if H[i][col]]
            if not nz:
                break
            _, pi = min(nz)
            H[row], H[pi] = H[pi], H[row]
            T[row], T[pi] = T[pi], T[row]
            p = H[row][col]
            done = True
            for i in range(row + 1, m):
                if H[i][col]:
                    q = H[i][col] // p
                    H[i] = [a - q * b for a, b in zip(H[i], H[row])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[row])]
                    done = done and H[i][col] == 0
            if done:
                break
        if row < m and H[row][col]:
            if H[row][col] < 0:
                H[row] = [-x for x in H[row]]
                T[row] = [-x for x in T[row]]
            p = H[row][col]
            for i in range(row):
                q = H[i][col] // p
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[row])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[row])]
            row += 1
    return H, T


def integer_left_kernel(B: Matrix, ncols: int) -> Matrix:
    """Basis of {y : y*B == 0} over the integers."""
    if not B:
        return []
    H, T = hermite_rows(B)
    return [T[i] for i in range(len(B)) if not any(H[i][:ncols])]


@dataclass(frozen=True)
class Decomposition:
    rank: int
    invariant_factors: tuple
    # per retained canonical coordinate: its modulus (0 = free); torsion first
    moduli: tuple
    # columns of V (word -> canonical) and rows of V^-1 (canonical -> word), retained coords only
    to_canonical: tuple
    to_word: tuple
    U: tuple
    D: tuple
    V: tuple


@dataclass(frozen=True)
class GroupPresentation:
    """Abelian group on ``len(generators)`` generators modulo integer relations."""

    generators: tuple
    relations: tuple = ()

    def __post_init__(self):
        gens = tuple(str(g) for g in self.generators)
        rels = tuple(tuple(int(x) for x in r) for r in self.relations)
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be unique")
        for r in rels:
            if len(r) != len(gens):
                raise ValueError(f"relation {list(r)} has length {len(r)}, expected {len(gens)}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)

    @classmethod
    def cyclic_product(cls, orders: Sequence[int], names: Optional[Sequence[str]] = None):
        """Z/d_1 x ... x Z/d_k, with d = 0 meaning a copy of Z."""
        s = len(orders)
        names = list(names) if names else [f"g{i + 1}" for i in range(s)]
        rels = [[d if j == i else 0 for j in range(s)] for i, d in enumerate(orders) if d != 0]
        return cls(tuple(names), tuple(tuple(r) for r in rels))

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @cached_property
    def decomposition(self) -> Decomposition:
        s = self.num_generators
        U, D, V, Vi = smith_normal_form(self.relations, ncols=s)
        diag = [D[i][i] if i < len(D) else 0 for i in range(s)]
        keep = [i for i in range(s) if diag[i] != 1]
        moduli = tuple(diag[i] for i in keep)
        return Decomposition(
            rank=sum(1 for d in moduli if d == 0),
            invariant_factors=tuple(d for d in moduli if d > 1),
            moduli=moduli,
            to_canonical=tuple(tuple(V[r][i] for r in range(s)) for i in keep),
            to_word=tuple(tuple(Vi[i]) for i in keep),
            U=tuple(map(tuple, U)),
            D=tuple(map(tuple, D)),
            V=tuple(map(tuple, V)),
        )

    @property
    def rank(self) -> int:
        return self.decomposition.rank

    @property
    def invariant_factors(self) -> tuple:
        return self.decomposition.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int:
        """|G|, or 0 for infinite groups."""
        return prod(self.invariant_factors) if self.is_finite else 0

    @property
    def exponent(self) -> int:
        if not self.is_finite:
            return 0
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def canonical_coords(self, word: Sequence[int]) -> tuple:
        dec = self.decomposition
        out = []
        for col, d in zip(dec.to_canonical, dec.moduli):
            y = sum(a * b for a, b in zip(word, col))
            out.append(y % d if d else y)
        return tuple(out)

    def word_from_coords(self, coords: Sequence[int]) -> tuple:
        dec = self.decomposition
        s = self.num_generators
        return tuple(sum(c * row[k] for c, row in zip(coords, dec.to_word)) for k in range(s))

    def element(self, word: Sequence[int]) -> GroupElement:
        return GroupElement(self, word)

    def generator(self, i: int) -> GroupElement:
        return GroupElement(self, [int(j == i) for j in range(self.num_generators)])

    def identity(self) -> GroupElement:
        return GroupElement(self, [0] * self.num_generators)

    def canonical_generators(self) -> list:
        """Elements of the canonical basis, one per retained SNF coordinate."""
        return [GroupElement(self, w) for w in self.decomposition.to_word]

    def __str__(self):
        parts = [f"C{d}" for d in self.invariant_factors] + ["Z"] * self.rank
        return " x ".join(parts) or "trivial"


class GroupElement:
    """An element of a presented group, stored as a word plus canonical coordinates."""

    __slots__ = ("presentation", "exponents", "coords")

    def __init__(self, presentation: GroupPresentation, exponents: Sequence[int]):
        exponents = tuple(int(x) for x in exponents)
        if len(exponents) != presentation.num_generators:
            raise ValueError(
                f"word {list(exponents)} has wrong length for {presentation.num_generators} generators"
            )
        self.presentation = presentation
        self.exponents = exponents
        self.coords = presentation.canonical_coords(exponents)

    def _check(self, other: GroupElement):
        if self.presentation != other.presentation:
            raise PresentationMismatch("elements belong to different presentations")

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.presentation, [a + b for a, b in zip(self.exponents, other.exponents)])

    def inverse(self) -> GroupElement:
        return GroupElement(self.presentation, [-a for a in self.exponents])

    def __pow__(self, e: int) -> GroupElement:
        return GroupElement(self.presentation, [a * e for a in self.exponents])

    def normal_form(self) -> GroupElement:
        """Same element, with the word rebuilt from canonical coordinates."""
        return GroupElement(self.presentation, self.presentation.word_from_coords(self.coords))

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)

    @property
    def order(self) -> int:
        """Order of the element; 0 if infinite."""
        out = 1
        for y, d in zip(self.coords, self.presentation.decomposition.moduli):
            if d == 0:
                if y:
                    return 0
            elif y:
                k = d // gcd(y, d)
                out = out * k // gcd(out, k)
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.presentation == other.presentation and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"GroupElement({list(self.exponents)})"


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inverse(a: GroupElement) -> GroupElement:
    return a.inverse()


def identity(presentation: GroupPresentation) -> GroupElement:
    return presentation.identity()


def canonical_decomposition(P: GroupPresentation):
    """(rank, invariant factors, (U, D, V)) of the presentation."""
    dec = P.decomposition
    return dec.rank, dec.invariant_factors, (dec.U, dec.D, dec.V)


def cyclic_intersection(t: GroupElement, K: Sequence[GroupElement]):
    """Smallest n >= 1 with t**n in <K>, and one word c with t**n == prod K[i]**c[i].

    Returns None when no positive power of t lies in <K> (t has infinite order
    modulo <K>).
    """
    P = t.presentation
    for k in K:
        t._check(k)
    moduli = P.decomposition.moduli
    width = len(moduli)
    # integer relations a*t + sum c_i k_i + sum e_j d_j u_j == 0 in canonical coordinates
    rows = [list(t.coords)] + [list(k.coords) for k in K]
    rows += [[d if j == i else 0 for j in range(width)] for i, d in enumerate(moduli) if d]
    if width == 0:
        return 1, [0] * len(K)
    kernel = integer_left_kernel(rows, width)
    if not kernel:
        return None
    # bring the t-coefficient column to its gcd with a Hermite pass
    H, _ = hermite_rows(kernel)
    top = H[0]
    if top[0] == 0:
        return None
    n = top[0]
    expression = []
    for c, k in zip(top[1 : 1 + len(K)], K):
        o = k.order
        expression.append(-c % o if o else -c)
    return n, expression


def enumerate_elements(P: GroupPresentation) -> Iterator[GroupElement]:
    """Every element of a finite group exactly once, as normal-form words."""
    if not P.is_finite:
        raise InfiniteGroup(f"{P} is infinite")
    ranges = [range(d) for d in P.decomposition.moduli]
    for coords in itertools.product(*ranges):
        yield GroupElement(P, P.word_from_coords(coords))


def change_generators(P: GroupPresentation, W: Sequence[Sequence[int]], W_inv: Sequence[Sequence[int]],
                      names: Optional[Sequence[str]] = None) -> GroupPresentation:
    """Same group on new generators g'_k = prod g_i**W[k][i] (W unimodular).

    A relation r over the old generators becomes r * W_inv over the new ones.
    """
    s = P.num_generators
    assert matmul([list(r) for r in W], [list(r) for r in W_inv]) == identity_matrix(s)
    rels = [tuple(sum(r[i] * W_inv[i][k] for i in range(s)) for k in range(s)) for r in P.relations]
    return GroupPresentation(tuple(names) if names else P.generators, tuple(rels))

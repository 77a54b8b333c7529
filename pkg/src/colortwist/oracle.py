"""Brute-force ground truth on small finite groups.

Everything here enumerates group elements and evaluates maps pointwise, so it
is independent of the generator-level shortcuts used elsewhere. Value tables
are encoded as integer arrays (torsion numerators modulo a common denominator,
then scaled free exponents) and compared with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Optional

import numpy as np

from .bichar import Bicharacter
from .errors import InfiniteGroup
from .fgabgroup import GroupPresentation, enumerate_elements
from .scalar import ONE, root_of_unity

MAX_EXHAUSTIVE = 64
MAX_COBOUNDARY = 16


@dataclass
class OracleReport:
    name: str
    checked: int
    violations: list = field(default_factory=list)  # witness tuples of words
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self, limit: int = 5) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "violations": len(self.violations),
            "witnesses": [[list(w) for w in v] for v in self.violations[:limit]],
            "notes": list(self.notes),
        }


@lru_cache(maxsize=64)
def finite_table(presentation: GroupPresentation, limit: int = MAX_EXHAUSTIVE) -> "FiniteTable":
    return FiniteTable(presentation, limit)


class FiniteTable:
    """Elements of a finite group with an index-based multiplication table."""

    def __init__(self, presentation: GroupPresentation, limit: int = MAX_EXHAUSTIVE):
        if not presentation.is_finite:
            raise InfiniteGroup(f"{presentation} is infinite")
        if presentation.order > limit:
            raise ValueError(f"|G| = {presentation.order} exceeds the exhaustive limit {limit}")
        self.presentation = presentation
        self.elements = list(enumerate_elements(presentation))
        self.index = {g.coords: k for k, g in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = np.empty((n, n), dtype=np.int64)
        for a, g in enumerate(self.elements):
            for b, h in enumerate(self.elements):
                self.mul[a, b] = self.index[(g * h).coords]

    def __len__(self):
        return len(self.elements)

    def words(self, *idx):
        return tuple(self.elements[k].exponents for k in idx)


def _as_callable(m) -> Callable:
    if isinstance(m, Bicharacter):
        # evaluate on the given word; unvalidated matrices expose representative dependence
        return lambda g, h: m.eval_words(g.exponents, h.exponents)
    return m


def _presentation_of(m, presentation):
    if presentation is not None:
        return presentation
    if isinstance(m, Bicharacter):
        return m.presentation
    raise ValueError("a presentation is required for callable maps")


def value_table(table: FiniteTable, m) -> list:
    f = _as_callable(m)
    return [[f(g, h) for h in table.elements] for g in table.elements]


def _scale(scalars):
    denoms, syms = 1, set()
    for v in scalars:
        denoms = lcm(denoms, v.torsion.denominator)
        for sym, e in v.free:
            syms.add(sym)
            denoms = lcm(denoms, e.denominator)
    return denoms, sorted(syms)


def _encode_grid(grid, denoms, syms, dtype):
    n1, n2 = len(grid), len(grid[0]) if grid else 0
    arr = np.zeros((n1, n2, 1 + len(syms)), dtype=dtype)
    for a, row in enumerate(grid):
        for b, v in enumerate(row):
            arr[a, b, 0] = int(v.torsion * denoms)
            fd = dict(v.free)
            for k, sym in enumerate(syms):
                if sym in fd:
                    arr[a, b, 1 + k] = int(fd[sym] * denoms)
    return arr


def encode(*tables):
    """Integer arrays for RootScalar tables sharing one scale; returns (arrays, modulus)."""
    denoms, syms = _scale(v for tab in tables for row in tab for v in row)
    dtype = object if denoms > 2**40 else np.int64
    return [_encode_grid(tab, denoms, syms, dtype) for tab in tables], denoms


def encoded_tables(table: FiniteTable, *maps):
    """Encoded value tables of several maps over all element pairs, on one scale.

    Bicharacters are expanded bilinearly from their generator values on the
    enumerated words; any other callable is evaluated pointwise.
    """
    grids = [m.values if isinstance(m, Bicharacter) else value_table(table, m) for m in maps]
    denoms, syms = _scale(v for g in grids for row in g for v in row)
    words = np.array([g.exponents for g in table.elements], dtype=object if denoms > 2**40 else np.int64)
    big = denoms > 2**40 or (words.size and int(np.abs(words).max()) > 2**10)
    dtype = object if big else np.int64
    words = words.astype(dtype)
    out = []
    for m, grid in zip(maps, grids):
        arr = _encode_grid(grid, denoms, syms, dtype)
        if isinstance(m, Bicharacter):
            arr[..., 0] %= denoms
            arr = np.einsum("ai,ijk,bj->abk", words, arr, words)
        out.append(arr)
    return out, denoms


def _is_identity(diff, modulus):
    tors = diff[..., 0] % modulus == 0
    if diff.shape[-1] > 1:
        return tors & np.all(diff[..., 1:] == 0, axis=-1)
    return tors


def _witnesses(table, mask, arity):
    out = []
    for idx in np.argwhere(~mask):
        out.append(table.words(*[int(i) for i in idx[:arity]]))
    return out


def check_cocycle_identity(sigma, presentation: Optional[GroupPresentation] = None) -> OracleReport:
    """sigma(a, bc) sigma(b, c) == sigma(a, b) sigma(ab, c) on all triples."""
    P = _presentation_of(sigma, presentation)
    table = finite_table(P)
    (T,), L = encoded_tables(table, sigma)
    M = table.mul
    n = len(table)
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    lhs = T[a, M[b, c]] + T[b, c]
    rhs = T[a, b] + T[M[a, b], c]
    mask = _is_identity(lhs - rhs, L)
    return OracleReport("cocycle_identity", n ** 3, _witnesses(table, mask, 3))


def exhaustive_bimultiplicativity(m, presentation: Optional[GroupPresentation] = None) -> OracleReport:
    """m(gh, k) == m(g, k) m(h, k) and m(g, hk) == m(g, h) m(g, k) on all triples."""
    P = _presentation_of(m, presentation)
    table = finite_table(P)
    (T,), L = encoded_tables(table, m)
    M = table.mul
    n = len(table)
    g, h, k = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    left = _is_identity(T[M[g, h], k] - T[g, k] - T[h, k], L)
    right = _is_identity(T[g, M[h, k]] - T[g, h] - T[g, k], L)
    mask = left & right
    return OracleReport("bimultiplicativity", 2 * n ** 3, _witnesses(table, mask, 3))


def _parities(table, T, L):
    # L must be even so that -1 is representable
    n = len(table)
    diag = T[np.arange(n), np.arange(n)]
    minus = diag.copy()
    minus[:, 0] = minus[:, 0] - L // 2
    return _is_identity(diag, L), _is_identity(minus, L)


def exhaustive_twist_check(chi: Bicharacter, sigma) -> OracleReport:
    """chi0 / chi == sigma / sigma^T on all element pairs, chi0 read off element parities."""
    table = finite_table(chi.presentation)
    (X, S), L = encoded_tables(table, chi, sigma)
    if L % 2:
        L, X, S = 2 * L, 2 * X, 2 * S
    is_plus, is_minus = _parities(table, X, L)
    report = OracleReport("coboundary_relation", len(table) ** 2)
    if not np.all(is_plus | is_minus):
        bad = [table.words(int(i)) for i in np.flatnonzero(~(is_plus | is_minus))]
        report.violations.extend(bad)
        report.notes.append("chi(g, g) is not a sign for some g")
        return report
    odd = is_minus
    both_odd = np.logical_and.outer(odd, odd)
    C0 = np.zeros_like(X)
    C0[..., 0] = np.where(both_odd, L // 2, 0)
    lhs = C0 - X
    rhs = S - np.transpose(S, (1, 0, 2))
    mask = _is_identity(lhs - rhs, L)
    report.violations.extend(_witnesses(table, mask, 2))
    return report


def exhaustive_parity(chi: Bicharacter) -> OracleReport:
    """Parity is multiplicative on all pairs and the even part has index 1 or 2."""
    table = finite_table(chi.presentation)
    (X,), L = encoded_tables(table, chi)
    if L % 2:
        L, X = 2 * L, 2 * X
    is_plus, is_minus = _parities(table, X, L)
    n = len(table)
    report = OracleReport("parity", n * n)
    if not np.all(is_plus | is_minus):
        report.violations.extend(table.words(int(i)) for i in np.flatnonzero(~(is_plus | is_minus)))
        return report
    sign = np.where(is_plus, 1, -1)
    mult = sign[table.mul] == np.multiply.outer(sign, sign)
    report.violations.extend(_witnesses(table, mult, 2))
    even = int(is_plus.sum())
    index = n // even if n % even == 0 else None
    report.notes.append(f"|G+| = {even}, index {index}")
    if index not in (1, 2):
        report.violations.append(("index",))
    return report


def coboundary_search(beta, presentation: Optional[GroupPresentation] = None):
    """Search for b: G -> k* with beta(g, h) == b(g) b(h) / b(gh).

    Since b(g c) = b(g) b(c) / beta(g, c), b is fixed by its values on the
    canonical generators c_i, and walking c_i around its cycle forces
    b(c_i)**d_i == prod_k beta(c_i**k, c_i). The search runs over the d_i
    roots of that product per generator, so it is complete.
    Returns a dict {coords: RootScalar} or None.
    """
    P = _presentation_of(beta, presentation)
    table = finite_table(P, limit=MAX_COBOUNDARY)
    f = _as_callable(beta)
    tab = value_table(table, f)
    e = table.index[P.identity().coords]
    moduli = P.decomposition.moduli
    basis = P.canonical_generators()
    options = []
    for c, d in zip(basis, moduli):
        ci = table.index[c.coords]
        acc = ONE
        k = e
        for _ in range(d):
            acc = acc * tab[k][ci]
            k = int(table.mul[k, ci])
        base = acc.root(d)
        options.append([base * root_of_unity(j, d) for j in range(d)])
    coords_order = sorted(table.index)  # lexicographic: predecessor always visited first
    for choice in itertools.product(*options):
        b = {P.identity().coords: tab[e][e]}
        for y in coords_order:
            if y in b:
                continue
            i = max(k for k, v in enumerate(y) if v)
            prev = list(y)
            prev[i] -= 1
            prev = tuple(prev)
            pi = table.index[prev]
            ci = table.index[basis[i].coords]
            b[y] = b[prev] * choice[i] * tab[pi][ci].inverse()
        ok = True
        for g, x in enumerate(table.elements):
            for h, z in enumerate(table.elements):
                gh = table.elements[int(table.mul[g, h])]
                if b[x.coords] * b[z.coords] * b[gh.coords].inverse() != tab[g][h]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return b
    return None


def is_coboundary(beta: Bicharacter, cross_check_limit: int = 8):
    """(decision, witness) for whether beta is a coboundary.

    Decision rule: a bimultiplicative beta is a coboundary iff it is symmetric
    (the value group is divisible). For |G| <= cross_check_limit the explicit
    search must agree. Witness: the coboundary potential b, or an asymmetric pair.
    """
    P = beta.presentation
    if not P.is_finite:
        raise InfiniteGroup(f"{P} is infinite")
    if P.order > MAX_COBOUNDARY:
        raise ValueError(f"|G| = {P.order} exceeds {MAX_COBOUNDARY}")
    s = P.num_generators
    asym = next(
        ((i, j) for i in range(s) for j in range(i + 1, s) if beta.values[i][j] != beta.values[j][i]),
        None,
    )
    decision = asym is None
    witness = None if decision else {"asymmetric_pair": [P.generators[asym[0]], P.generators[asym[1]]]}
    if P.order <= cross_check_limit:
        b = coboundary_search(beta)
        if (b is not None) != decision:
            raise AssertionError(f"coboundary criterion and search disagree on {beta!r}")
        if b is not None:
            witness = {"potential": b}
    return decision, witness


@dataclass
class CensusTable:
    group: str
    N: int
    bicharacters: list
    classes: list  # lists of indices into bicharacters

    @property
    def num_bicharacters(self) -> int:
        return len(self.bicharacters)

    @property
    def class_sizes(self) -> list:
        return [len(c) for c in self.classes]

    def summary_line(self) -> str:
        nb, nc = self.num_bicharacters, len(self.classes)
        return f"{nb} bicharacter{'s' * (nb != 1)}, {nc} class{'es' * (nc != 1)}"


def all_bicharacters(P: GroupPresentation, N: int):
    """Every bicharacter of G with values in mu_N, built on the canonical basis."""
    moduli = P.decomposition.moduli
    if any(d == 0 for d in moduli):
        raise InfiniteGroup(f"{P} is infinite")
    p = len(moduli)
    s = P.num_generators
    coords = [P.canonical_coords([int(k == g) for k in range(s)]) for g in range(s)]
    choices = [gcd(gcd(moduli[i], moduli[j]), N) for i in range(p) for j in range(p)]
    for ks in itertools.product(*[range(c) for c in choices]):
        can = [[root_of_unity(ks[i * p + j], choices[i * p + j]) for j in range(p)] for i in range(p)]
        vals = []
        for a in range(s):
            row = []
            for b_ in range(s):
                out = ONE
                for i in range(p):
                    for j in range(p):
                        e = coords[a][i] * coords[b_][j]
                        if e:
                            out = out * can[i][j] ** e
                row.append(out)
            vals.append(row)
        yield Bicharacter(P, vals)


def bicharacter_census(P: GroupPresentation, N: Optional[int] = None) -> CensusTable:
    """Partition the mu_N-valued bicharacters of G into cohomology classes."""
    if not P.is_finite:
        raise InfiniteGroup(f"{P} is infinite")
    if P.order > MAX_COBOUNDARY:
        raise ValueError(f"|G| = {P.order} exceeds {MAX_COBOUNDARY}")
    if N is None:
        N = P.exponent ** 2
    chars = list(all_bicharacters(P, N))
    classes = []
    for k, chi in enumerate(chars):
        for cls in classes:
            if is_coboundary(chi * chars[cls[0]].inverse())[0]:
                cls.append(k)
                break
        else:
            classes.append([k])
    return CensusTable(group=str(P), N=N, bicharacters=chars, classes=classes)

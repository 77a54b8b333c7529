"""Bicharacters and bimultiplicative 2-cocycles on a presented abelian group.

Both are stored by their values on generator pairs and evaluated by bilinear
extension over word exponents, so a value matrix must be compatible with every
relation of the presentation for evaluation to be well defined on the group.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotASign, NotSymmetric, PresentationMismatch, RelationIncompatible
from .fgabgroup import GroupElement, GroupPresentation
from .scalar import MINUS_ONE, ONE, RootScalar, is_sign


def _eval_words(values, g: Sequence[int], h: Sequence[int]) -> RootScalar:
    torsion = Fraction(0)
    free = {}
    for i, a in enumerate(g):
        if not a:
            continue
        row = values[i]
        for j, b in enumerate(h):
            if not b:
                continue
            v = row[j]
            e = a * b
            torsion += v.torsion * e
            for sym, x in v.free:
                free[sym] = free.get(sym, 0) + x * e
    return RootScalar(torsion, free)


class Bicharacter:
    """A map G x G -> k*, multiplicative in each argument.

    ``values[i][j]`` is the value on the generator pair (g_i, g_j).
    """

    kind = "bicharacter"

    def __init__(self, presentation: GroupPresentation, values, validate: bool = True):
        s = presentation.num_generators
        rows = tuple(tuple(v for v in row) for row in values)
        if len(rows) != s or any(len(r) != s for r in rows):
            raise ValueError(f"value matrix must be {s}x{s}")
        for row in rows:
            for v in row:
                if not isinstance(v, RootScalar):
                    raise TypeError(f"values must be RootScalar, got {type(v).__name__}")
        self.presentation = presentation
        self.values = rows
        if validate:
            self.check_relations()

    @classmethod
    def trivial(cls, presentation: GroupPresentation):
        s = presentation.num_generators
        return cls(presentation, [[ONE] * s for _ in range(s)])

    def relation_defects(self):
        """(relation index, generator index, side, value) for each failed relation test."""
        s = self.presentation.num_generators
        out = []
        for k, r in enumerate(self.presentation.relations):
            for j in range(s):
                left = ONE
                right = ONE
                for i, e in enumerate(r):
                    if e:
                        left = left * self.values[i][j] ** e
                        right = right * self.values[j][i] ** e
                if left != ONE:
                    out.append((k, j, "first", left))
                if right != ONE:
                    out.append((k, j, "second", right))
        return out

    def check_relations(self):
        defects = self.relation_defects()
        if defects:
            k, j, side, value = defects[0]
            rel = self.presentation.relations[k]
            gen = self.presentation.generators[j]
            raise RelationIncompatible(
                f"{self.kind} does not factor through relation #{k} {list(rel)}: "
                f"value {value} against generator {gen} in the {side} argument",
                relation_index=k,
                relation=list(rel),
            )

    def __call__(self, g: GroupElement, h: GroupElement) -> RootScalar:
        return self.eval(g, h)

    def eval(self, g: GroupElement, h: GroupElement) -> RootScalar:
        if g.presentation != self.presentation or h.presentation != self.presentation:
            raise PresentationMismatch(f"elements do not belong to this {self.kind}'s group")
        return _eval_words(self.values, g.exponents, h.exponents)

    def eval_words(self, g: Sequence[int], h: Sequence[int]) -> RootScalar:
        return _eval_words(self.values, g, h)

    def _same(self, other):
        if self.presentation != other.presentation:
            raise PresentationMismatch("value matrices live on different presentations")

    def __mul__(self, other) -> Bicharacter:
        self._same(other)
        s = self.presentation.num_generators
        vals = [[self.values[i][j] * other.values[i][j] for j in range(s)] for i in range(s)]
        return type(self)(self.presentation, vals, validate=False)

    def inverse(self):
        """Pointwise inverse."""
        return type(self)(
            self.presentation, [[v.inverse() for v in row] for row in self.values], validate=False
        )

    def transpose(self):
        s = self.presentation.num_generators
        return type(self)(
            self.presentation, [[self.values[j][i] for j in range(s)] for i in range(s)], validate=False
        )

    def __eq__(self, other):
        if not isinstance(other, Bicharacter):
            return NotImplemented
        return self.presentation == other.presentation and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.values)
        return f"{type(self).__name__}([{rows}])"


class Cocycle2(Bicharacter):
    """A bimultiplicative sigma: G x G -> k*; automatically a 2-cocycle."""

    kind = "cocycle"

    def as_bicharacter(self) -> Bicharacter:
        return Bicharacter(self.presentation, self.values, validate=False)


def eval(m: Bicharacter, g: GroupElement, h: GroupElement) -> RootScalar:  # noqa: A001
    return m.eval(g, h)


def is_symmetric(chi: Bicharacter) -> bool:
    """chi(g, h) * chi(h, g) == 1 on all generator pairs."""
    s = chi.presentation.num_generators
    return all(chi.values[i][j] * chi.values[j][i] == ONE for i in range(s) for j in range(i, s))


def parity(chi: Bicharacter, g: GroupElement) -> int:
    value = chi.eval(g, g)
    sign = is_sign(value)
    if sign is None:
        raise NotASign(f"chi({g}, {g}) = {value} is not +-1")
    return sign


def generator_parities(chi: Bicharacter) -> list:
    return [parity(chi, chi.presentation.generator(i)) for i in range(chi.presentation.num_generators)]


def chi0(chi: Bicharacter) -> Bicharacter:
    """The super sign: -1 exactly on pairs of odd generators."""
    par = generator_parities(chi)
    vals = [[MINUS_ONE if p == -1 and q == -1 else ONE for q in par] for p in par]
    return Bicharacter(chi.presentation, vals, validate=False)


def antisymmetrize(sigma: Bicharacter) -> Bicharacter:
    """(g, h) -> sigma(g, h) / sigma(h, g)."""
    s = sigma.presentation.num_generators
    v = sigma.values
    vals = [[v[i][j] * v[j][i].inverse() for j in range(s)] for i in range(s)]
    return Bicharacter(sigma.presentation, vals, validate=False)


def twist_character(chi: Bicharacter, sigma: Bicharacter) -> Bicharacter:
    chi._same(sigma)
    return Bicharacter(chi.presentation, (chi * antisymmetrize(sigma)).values, validate=False)


def is_alternating(chi: Bicharacter) -> bool:
    """chi(g, g) == 1 for every g: symmetric with trivial values on the generator diagonal."""
    s = chi.presentation.num_generators
    return is_symmetric(chi) and all(chi.values[i][i] == ONE for i in range(s))


def require_symmetric(chi: Bicharacter):
    if not is_symmetric(chi):
        s = chi.presentation.num_generators
        i, j = next((i, j) for i in range(s) for j in range(i, s)
                    if chi.values[i][j] * chi.values[j][i] != ONE)
        gens = chi.presentation.generators
        raise NotSymmetric(
            f"chi({gens[i]},{gens[j]}) * chi({gens[j]},{gens[i]}) = "
            f"{chi.values[i][j] * chi.values[j][i]} != 1"
        )

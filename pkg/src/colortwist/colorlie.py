"""G-graded color Lie algebras over Q(zeta_N).

Conventions (matching the twisted factor chi_sigma = chi * sigma / sigma^T):

* antisymmetry  [a, b] = -chi(g, h) [b, a]
* Jacobi        chi(k, g)[a,[b,c]] + chi(g, h)[b,[c,a]] + chi(h, k)[c,[a,b]] = 0

for a in L_g, b in L_h, c in L_k. Elements are sparse dicts name -> CycloNumber.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Mapping, Sequence

from .bichar import Bicharacter, Cocycle2, chi0, require_symmetric, twist_character
from .cyclo import CycloNumber, embed_scalar
from .errors import GradingError, LevelMismatch, NotARootOfUnity, UnknownBasisName
from .fgabgroup import GroupElement

Element = dict  # basis name -> CycloNumber


@dataclass(frozen=True)
class GradedBasis:
    names: tuple
    grades: tuple  # GroupElement per name

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")
        if len(self.names) != len(self.grades):
            raise ValueError("every basis vector needs a grade")
        pres = {g.presentation for g in self.grades}
        if len(pres) > 1:
            raise GradingError("grades must share one presentation")

    def grade(self, name: str) -> GroupElement:
        try:
            return self.grades[self.names.index(name)]
        except ValueError:
            raise UnknownBasisName(name) from None


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _clean(x: Mapping) -> Element:
    return {k: v for k, v in x.items() if not v.is_zero()}


def _axpy(acc: dict, coeff, x: Mapping):
    for k, v in x.items():
        term = coeff * v
        acc[k] = acc[k] + term if k in acc else term


class ColorLieAlgebra:
    def __init__(self, basis: GradedBasis, chi: Bicharacter, level: int, brackets: Mapping):
        self.basis = basis
        self.chi = chi
        self.level = level
        self._index = {n: i for i, n in enumerate(basis.names)}
        consts = {}
        for (x, y), result in brackets.items():
            for name in (x, y, *result):
                if name not in self._index:
                    raise UnknownBasisName(name)
            res = _clean({k: v.lift(level) if v.level != level else v for k, v in result.items()})
            if not res:
                continue
            target = basis.grade(x) * basis.grade(y)
            for z in res:
                if basis.grade(z) != target:
                    raise GradingError(f"[{x},{y}] has a component on {z} outside grade {target}")
            consts[(x, y)] = res
        self.brackets = consts
        self._chi_cache = {}

    def chi_num(self, g: GroupElement, h: GroupElement) -> CycloNumber:
        key = (g.coords, h.coords)
        if key not in self._chi_cache:
            value = self.chi.eval(g, h)
            if value.free:
                raise NotARootOfUnity(f"chi({g}, {h}) = {value} is not a root of unity")
            if self.level % value.torsion.denominator:
                raise LevelMismatch(f"chi({g}, {h}) = {value} does not embed at level {self.level}")
            self._chi_cache[key] = embed_scalar(value, self.level)
        return self._chi_cache[key]

    def basis_bracket(self, x: str, y: str) -> Element:
        if x not in self._index:
            raise UnknownBasisName(x)
        if y not in self._index:
            raise UnknownBasisName(y)
        return self.brackets.get((x, y), {})

    def bracket(self, x: Mapping, y: Mapping) -> Element:
        acc = {}
        for a, ca in x.items():
            if ca.is_zero():
                continue
            for b, cb in y.items():
                if cb.is_zero():
                    continue
                res = self.basis_bracket(a, b)
                if res:
                    _axpy(acc, ca * cb, res)
        return _clean(acc)

    def unit(self, name: str) -> Element:
        if name not in self._index:
            raise UnknownBasisName(name)
        return {name: CycloNumber(self.level, [1])}

    def structure_constants(self) -> dict:
        return {k: dict(v) for k, v in self.brackets.items()}

    def with_brackets(self, brackets: Mapping) -> ColorLieAlgebra:
        return ColorLieAlgebra(self.basis, self.chi, self.level, brackets)


def bracket(A: ColorLieAlgebra, x: Mapping, y: Mapping) -> Element:
    return A.bracket(x, y)


def check_antisymmetry(A: ColorLieAlgebra) -> CheckReport:
    """[a, b] + chi(g, h) [b, a] == 0 for every ordered basis pair."""
    report = CheckReport("antisymmetry")
    names = A.basis.names
    for a in names:
        ga = A.basis.grade(a)
        for b in names:
            gb = A.basis.grade(b)
            acc = dict(A.basis_bracket(a, b))
            _axpy(acc, A.chi_num(ga, gb), A.basis_bracket(b, a))
            report.checked += 1
            if _clean(acc):
                report.violations.append((a, b))
    return report


def check_color_jacobi(A: ColorLieAlgebra) -> CheckReport:
    """chi(k,g)[a,[b,c]] + chi(g,h)[b,[c,a]] + chi(h,k)[c,[a,b]] == 0 on basis triples."""
    report = CheckReport("color_jacobi")
    names = A.basis.names
    grade = {n: A.basis.grade(n) for n in names}
    units = {n: A.unit(n) for n in names}
    for a in names:
        for b in names:
            for c in names:
                g, h, k = grade[a], grade[b], grade[c]
                acc = {}
                _axpy(acc, A.chi_num(k, g), A.bracket(units[a], A.basis_bracket(b, c)))
                _axpy(acc, A.chi_num(g, h), A.bracket(units[b], A.basis_bracket(c, a)))
                _axpy(acc, A.chi_num(h, k), A.bracket(units[c], A.basis_bracket(a, b)))
                report.checked += 1
                if _clean(acc):
                    report.violations.append((a, b, c))
    return report


@dataclass
class SuperReport:
    chi_is_super: bool
    antisymmetry: CheckReport
    jacobi: CheckReport

    @property
    def ok(self) -> bool:
        return self.chi_is_super and self.antisymmetry.ok and self.jacobi.ok


def check_super(A: ColorLieAlgebra) -> SuperReport:
    """The commutation factor is the super sign and the color axioms hold."""
    return SuperReport(
        chi_is_super=A.chi == chi0(A.chi),
        antisymmetry=check_antisymmetry(A),
        jacobi=check_color_jacobi(A),
    )


def _torsion_level(values) -> int:
    n = 1
    for v in values:
        if v.free:
            raise NotARootOfUnity(f"{v} is not a root of unity")
        n = lcm(n, v.torsion.denominator)
    return n


def twist_algebra(A: ColorLieAlgebra, sigma: Cocycle2) -> ColorLieAlgebra:
    """[a, b]_sigma = sigma(g, h) [a, b], with commutation factor chi * sigma / sigma^T."""
    grades = A.basis.grades
    needed = {(g.coords, h.coords): sigma.eval(g, h) for g in grades for h in grades}
    level = lcm(A.level, _torsion_level(needed.values()))
    new = {}
    for (x, y), res in A.brackets.items():
        factor = embed_scalar(needed[(A.basis.grade(x).coords, A.basis.grade(y).coords)], level)
        new[(x, y)] = {z: factor * v for z, v in res.items()}
    return ColorLieAlgebra(A.basis, twist_character(A.chi, sigma), level, new)


def gl_chi(basis_grades: Sequence[GroupElement], chi: Bicharacter, level: int,
           prefix: str = "E") -> ColorLieAlgebra:
    """The color general linear algebra on a graded vector space.

    Basis E_ij has grade g_i - g_j and [a, b] = ab - chi(grade a, grade b) ba.
    """
    require_symmetric(chi)
    n = len(basis_grades)
    if any(g.presentation != chi.presentation for g in basis_grades):
        raise GradingError("grades must lie in the bicharacter's group")
    sep = "" if n <= 10 else "_"
    name = [[f"{prefix}{i}{sep}{j}" for j in range(n)] for i in range(n)]
    grade = [[basis_grades[i] * basis_grades[j].inverse() for j in range(n)] for i in range(n)]
    names = tuple(name[i][j] for i in range(n) for j in range(n))
    basis = GradedBasis(names, tuple(grade[i][j] for i in range(n) for j in range(n)))
    shell = ColorLieAlgebra(basis, chi, level, {})
    one = CycloNumber(level, [1])
    brackets = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    c = shell.chi_num(grade[i][j], grade[k][l])
                    acc = {}
                    # E_ij E_kl = delta_jk E_il ; E_kl E_ij = delta_li E_kj
                    if j == k:
                        _axpy(acc, one, {name[i][l]: one})
                    if l == i:
                        _axpy(acc, -c, {name[k][j]: one})
                    acc = _clean(acc)
                    if acc:
                        brackets[(name[i][j], name[k][l])] = acc
    return ColorLieAlgebra(basis, chi, level, brackets)

"""JSON literals for scalars, cyclotomic numbers, groups, value matrices and algebras."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bichar import Bicharacter, Cocycle2
from .colorlie import ColorLieAlgebra, GradedBasis
from .cyclo import CycloNumber
from .errors import InputParseError
from .fgabgroup import GroupPresentation
from .scalar import RootScalar

_FRAC = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, bool):
        raise InputParseError(f"not a fraction: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputParseError(f"fractions are written as 'p/q' strings, got {s!r}")
    m = _FRAC.match(s)
    if not m:
        raise InputParseError(f"malformed fraction {s!r}; expected 'p/q'")
    q = int(m.group(2)) if m.group(2) else 1
    if q == 0:
        raise InputParseError(f"zero denominator in {s!r}")
    return Fraction(int(m.group(1)), q)


def scalar_to_json(a: RootScalar) -> dict:
    return {"torsion": frac_str(a.torsion), "free": {s: frac_str(e) for s, e in a.free}}


def scalar_from_json(obj) -> RootScalar:
    if not isinstance(obj, dict) or "torsion" not in obj:
        raise InputParseError(f"scalar literal needs a 'torsion' field: {obj!r}")
    free = obj.get("free", {}) or {}
    if not isinstance(free, dict):
        raise InputParseError(f"'free' must be an object: {free!r}")
    try:
        return RootScalar(parse_frac(obj["torsion"]), {str(k): parse_frac(v) for k, v in free.items()})
    except ValueError as exc:
        raise InputParseError(str(exc)) from exc


def cyclo_to_json(x: CycloNumber) -> dict:
    return {"level": x.level, "terms": [[k, frac_str(c)] for k, c in x.terms()]}


def cyclo_from_json(obj) -> CycloNumber:
    if not isinstance(obj, dict) or not isinstance(obj.get("level"), int) or obj["level"] < 1:
        raise InputParseError(f"cyclotomic literal needs a positive integer 'level': {obj!r}")
    terms = obj.get("terms", [])
    try:
        pairs = [(int(k), parse_frac(c)) for k, c in terms]
    except (TypeError, ValueError) as exc:
        raise InputParseError(f"malformed cyclotomic terms {terms!r}") from exc
    return CycloNumber.from_terms(obj["level"], pairs)


def group_to_json(P: GroupPresentation) -> dict:
    return {"generators": list(P.generators), "relations": [list(r) for r in P.relations]}


def group_from_json(obj) -> GroupPresentation:
    if not isinstance(obj, dict) or not isinstance(obj.get("generators"), list):
        raise InputParseError("group block needs a 'generators' list")
    rels = obj.get("relations", [])
    if not isinstance(rels, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in rels
    ):
        raise InputParseError("'relations' must be a list of integer lists")
    try:
        return GroupPresentation(tuple(obj["generators"]), tuple(tuple(r) for r in rels))
    except ValueError as exc:
        raise InputParseError(str(exc)) from exc


def values_to_json(m: Bicharacter) -> dict:
    return {"values": [[scalar_to_json(v) for v in row] for row in m.values]}


def values_from_json(obj, P: GroupPresentation):
    """Parse a value matrix without validating it against the relations."""
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
        raise InputParseError("value block needs a 'values' matrix")
    rows = obj["values"]
    s = P.num_generators
    if len(rows) != s or any(not isinstance(r, list) or len(r) != s for r in rows):
        raise InputParseError(f"'values' must be a {s}x{s} matrix")
    return [[scalar_from_json(v) for v in row] for row in rows]


def element_from_json(obj, P: GroupPresentation):
    if not isinstance(obj, list) or len(obj) != P.num_generators or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in obj
    ):
        raise InputParseError(f"grade {obj!r} must be an integer array of length {P.num_generators}")
    return P.element(obj)


def algebra_to_json(A: ColorLieAlgebra) -> dict:
    brackets = []
    for (x, y), res in sorted(A.brackets.items()):
        brackets.append({
            "left": x,
            "right": y,
            "result": [{"basis": z, "coeff": cyclo_to_json(c)} for z, c in sorted(res.items())],
        })
    return {
        "basis": [{"name": n, "grade": list(g.exponents)} for n, g in zip(A.basis.names, A.basis.grades)],
        "brackets": brackets,
        "level": A.level,
    }


@dataclass
class AlgebraBlock:
    basis: GradedBasis
    level: int
    brackets: dict

    def build(self, chi: Bicharacter) -> ColorLieAlgebra:
        return ColorLieAlgebra(self.basis, chi, self.level, self.brackets)


def algebra_from_json(obj, P: GroupPresentation) -> AlgebraBlock:
    if not isinstance(obj, dict):
        raise InputParseError("algebra block must be an object")
    level = obj.get("level")
    if not isinstance(level, int) or level < 1:
        raise InputParseError("algebra block needs a positive integer 'level'")
    basis_raw = obj.get("basis")
    if not isinstance(basis_raw, list) or not basis_raw:
        raise InputParseError("algebra block needs a nonempty 'basis' list")
    names, grades = [], []
    for b in basis_raw:
        if not isinstance(b, dict) or not isinstance(b.get("name"), str):
            raise InputParseError(f"malformed basis entry {b!r}")
        names.append(b["name"])
        grades.append(element_from_json(b.get("grade"), P))
    try:
        basis = GradedBasis(tuple(names), tuple(grades))
    except ValueError as exc:
        raise InputParseError(str(exc)) from exc
    known = set(names)
    brackets = {}
    for entry in obj.get("brackets", []):
        try:
            x, y, result = entry["left"], entry["right"], entry["result"]
        except (KeyError, TypeError) as exc:
            raise InputParseError(f"malformed bracket entry {entry!r}") from exc
        res = {}
        for term in result:
            if not isinstance(term, dict) or "basis" not in term or "coeff" not in term:
                raise InputParseError(f"malformed bracket term {term!r}")
            z = term["basis"]
            c = cyclo_from_json(term["coeff"])
            res[z] = res[z] + c if z in res else c
        for name in (x, y, *res):
            if name not in known:
                raise InputParseError(f"bracket mentions unknown basis vector {name!r}")
        if (x, y) in brackets:
            raise InputParseError(f"bracket [{x},{y}] given twice")
        brackets[(x, y)] = res
    return AlgebraBlock(basis=basis, level=level, brackets=brackets)


@dataclass
class InputFile:
    """Parsed (not yet validated) contents of an input file."""

    group: GroupPresentation
    values: Optional[list]
    algebra: Optional[AlgebraBlock]
    raw: dict

    def bicharacter(self, validate: bool = True) -> Optional[Bicharacter]:
        if self.values is None:
            return None
        return Bicharacter(self.group, self.values, validate=validate)


def parse_input(text: str) -> InputFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict) or "group" not in raw:
        raise InputParseError("input must be an object with a 'group' block")
    P = group_from_json(raw["group"])
    values = values_from_json(raw["bicharacter"], P) if raw.get("bicharacter") is not None else None
    algebra = algebra_from_json(raw["algebra"], P) if raw.get("algebra") is not None else None
    if algebra is not None and values is None:
        raise InputParseError("an algebra block needs a bicharacter block for its commutation factor")
    return InputFile(group=P, values=values, algebra=algebra, raw=raw)


def input_to_json(P: GroupPresentation, chi: Optional[Bicharacter] = None,
                 algebra: Optional[ColorLieAlgebra] = None) -> dict:
    out = {"group": group_to_json(P)}
    if chi is not None:
        out["bicharacter"] = values_to_json(chi)
    if algebra is not None:
        out["algebra"] = algebra_to_json(algebra)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def sigma_from_json(obj, P: GroupPresentation) -> Cocycle2:
    return Cocycle2(P, values_from_json(obj, P), validate=False)

"""Certificate documents for a twist, and an independent re-checker."""

from __future__ import annotations

import hashlib
from typing import Optional

from .bichar import Bicharacter, Cocycle2, antisymmetrize, chi0, twist_character
from .colorlie import ColorLieAlgebra, SuperReport
from .jsonio import (
    algebra_to_json,
    group_from_json,
    group_to_json,
    scalar_from_json,
    scalar_to_json,
    values_from_json,
    values_to_json,
)
from .scalar import ONE
from .scheunert import Certificate


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _report_json(rep) -> dict:
    return {"ok": rep.ok, "checked": rep.checked, "violations": [list(v) for v in rep.violations]}


def certificate_to_json(cert: Certificate, input_hash: Optional[str] = None,
                        twisted: Optional[ColorLieAlgebra] = None,
                        super_report: Optional[SuperReport] = None) -> dict:
    doc = {
        "group": group_to_json(cert.chi.presentation),
        "strategy": cert.strategy,
        "chi": values_to_json(cert.chi),
        "sigma": values_to_json(cert.sigma),
        "chi0": values_to_json(cert.chi0),
        "chi_sigma": values_to_json(cert.chi_sigma),
        "checks": [
            {
                "identity": c["identity"],
                "arguments": c["arguments"],
                "lhs": scalar_to_json(c["lhs"]),
                "rhs": scalar_to_json(c["rhs"]),
                "ok": c["ok"],
            }
            for c in cert.checks
        ],
        "exhaustive": cert.exhaustive,
        "ok": cert.ok,
    }
    if input_hash is not None:
        doc["input_sha256"] = input_hash
    if twisted is not None:
        doc["twisted_algebra"] = algebra_to_json(twisted)
    if super_report is not None:
        doc["check_super"] = {
            "ok": super_report.ok,
            "chi_is_super": super_report.chi_is_super,
            "antisymmetry": _report_json(super_report.antisymmetry),
            "jacobi": _report_json(super_report.jacobi),
        }
        doc["ok"] = doc["ok"] and super_report.ok
    return doc


def verify_certificate(doc: dict) -> list:
    """Re-evaluate every stated identity from the certificate's own data.

    Returns a list of disagreements (empty when the certificate is consistent).
    """
    problems = []
    P = group_from_json(doc["group"])
    chi = Bicharacter(P, values_from_json(doc["chi"], P), validate=False)
    sigma = Cocycle2(P, values_from_json(doc["sigma"], P), validate=False)
    gens = list(P.generators)
    twisted = twist_character(chi, sigma)
    target = chi0(chi)
    for name, stated, actual in (("chi0", doc["chi0"], target), ("chi_sigma", doc["chi_sigma"], twisted)):
        if values_from_json(stated, P) != [list(r) for r in actual.values]:
            problems.append(f"{name} matrix does not match its recomputation")
    for c in doc["checks"]:
        lhs, rhs = scalar_from_json(c["lhs"]), scalar_from_json(c["rhs"])
        if c["identity"] == "chi*sigma/sigma^T = chi0":
            i, j = (gens.index(a) for a in c["arguments"])
            real_l, real_r = twisted.values[i][j], target.values[i][j]
        elif c["identity"].startswith("sigma respects relation"):
            k, gname = c["arguments"]
            j = gens.index(gname)
            first = "first" in c["identity"]
            real_l = ONE
            for i, e in enumerate(P.relations[k]):
                if e:
                    real_l = real_l * (sigma.values[i][j] if first else sigma.values[j][i]) ** e
            real_r = ONE
        else:
            problems.append(f"unknown identity {c['identity']!r}")
            continue
        if (real_l, real_r) != (lhs, rhs):
            problems.append(f"{c['identity']} at {c['arguments']}: stated sides differ from recomputation")
        if c["ok"] != (real_l == real_r):
            problems.append(f"{c['identity']} at {c['arguments']}: ok flag is wrong")
    stated_ok = doc.get("ok")
    flags = all(c["ok"] for c in doc["checks"])
    if doc.get("exhaustive"):
        flags = flags and all(v["ok"] for v in doc["exhaustive"].values())
    if doc.get("check_super"):
        flags = flags and doc["check_super"]["ok"]
    if stated_ok != flags:
        problems.append("overall ok flag disagrees with the individual checks")
    if antisymmetrize(sigma) != chi0(chi) * chi.inverse():
        if stated_ok:
            problems.append("sigma / sigma^T differs from chi0 / chi but the certificate claims success")
    return problems

"""Command line front end: validate, twist, census, demo.

Exit codes: 0 success, 1 domain failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import oracle
from .bichar import Bicharacter, is_symmetric, require_symmetric
from .certificate import certificate_to_json, content_hash
from .colorlie import check_antisymmetry, check_color_jacobi, check_super, gl_chi, twist_algebra
from .errors import ColorTwistError, DiagonalObstruction, NoSolution, InputParseError, UnknownDemo
from .fgabgroup import GroupPresentation
from .jsonio import dumps, parse_input, input_to_json, values_to_json
from .scalar import MINUS_ONE, ONE, root_of_unity, symbol
from .scheunert import STRATEGIES, scheunert_certificate

log = logging.getLogger("colortwist")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputParseError(f"cannot read {path}: {exc}") from exc
    return text, parse_input(text)


def cmd_validate(args) -> int:
    text, inp = _read(args.path)
    report = {"input_sha256": content_hash(text), "checks": []}

    def add(name, ok, detail=None):
        report["checks"].append({"check": name, "ok": ok, **({"detail": detail} if detail else {})})

    failed = False
    chi = None
    if inp.values is not None:
        try:
            chi = inp.bicharacter(validate=True)
            add("relation_compatibility", True)
        except ColorTwistError as exc:
            add("relation_compatibility", False, str(exc))
            failed = True
    if chi is not None:
        sym = is_symmetric(chi)
        add("symmetry", sym, None if sym else "chi(g,h) chi(h,g) != 1 for some generator pair")
        failed = failed or not sym
    if inp.algebra is not None and chi is not None and not failed:
        try:
            A = inp.algebra.build(chi)
            anti = check_antisymmetry(A)
            jac = check_color_jacobi(A)
            add("antisymmetry", anti.ok, [list(v) for v in anti.violations] or None)
            add("color_jacobi", jac.ok, [list(v) for v in jac.violations] or None)
            failed = failed or not (anti.ok and jac.ok)
        except ColorTwistError as exc:
            add("algebra", False, str(exc))
            failed = True
    report["ok"] = not failed
    _emit(dumps(report), args.out)
    for c in report["checks"]:
        if not c["ok"]:
            print(f"validation failed: {c['check']}: {c.get('detail')}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_twist(args) -> int:
    text, inp = _read(args.path)
    if inp.values is None:
        raise InputParseError("twist needs a bicharacter block")
    chi = inp.bicharacter(validate=True)
    require_symmetric(chi)
    try:
        sigma, cert = scheunert_certificate(chi, strategy=args.strategy)
    except (DiagonalObstruction, NoSolution) as exc:
        detail = {"error": type(exc).__name__, "detail": str(exc), "strategy": args.strategy}
        if isinstance(exc, DiagonalObstruction):
            detail.update(generator=exc.generator, n=exc.n, word=exc.word)
        print(dumps(detail), file=sys.stderr, end="")
        return EXIT_FAIL
    twisted = report = None
    if inp.algebra is not None:
        A = inp.algebra.build(chi)
        twisted = twist_algebra(A, sigma)
        report = check_super(twisted)
    doc = certificate_to_json(cert, input_hash=content_hash(text), twisted=twisted, super_report=report)
    _emit(dumps(doc), args.out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def _parse_orders(text: str):
    try:
        orders = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputParseError(f"--group expects comma-separated integers, got {text!r}") from None
    if any(d < 0 for d in orders):
        raise InputParseError("cyclic orders must be nonnegative")
    return orders


def cmd_census(args) -> int:
    orders = _parse_orders(args.group)
    P = GroupPresentation.cyclic_product(orders)
    if not P.is_finite:
        print("census requires a finite group (0 denotes a copy of Z)", file=sys.stderr)
        return EXIT_FAIL
    if P.order > oracle.MAX_COBOUNDARY:
        print(f"census is limited to |G| <= {oracle.MAX_COBOUNDARY}", file=sys.stderr)
        return EXIT_FAIL
    table = oracle.bicharacter_census(P, args.values)
    doc = {
        "group": str(P),
        "N": table.N,
        "num_bicharacters": table.num_bicharacters,
        "classes": [
            {"size": len(c), "representative": values_to_json(table.bicharacters[c[0]])["values"]}
            for c in table.classes
        ],
        "summary": table.summary_line(),
    }
    _emit(dumps(doc), args.out)
    return EXIT_OK


def demo_input(name: str) -> dict:
    if name == "gl-super":
        P = GroupPresentation(("t",), ((2,),))
        chi = Bicharacter(P, [[MINUS_ONE]])
        A = gl_chi([P.element([0]), P.element([1])], chi, 2)
        return input_to_json(P, chi, A)
    if name == "quantum-torus":
        P = GroupPresentation(("e1", "e2"))
        q = symbol("q")
        chi = Bicharacter(P, [[ONE, q], [q.inverse(), ONE]])
        return input_to_json(P, chi)
    if name == "z3z3":
        P = GroupPresentation(("g1", "g2"), ((3, 0), (0, 3)))
        z = root_of_unity(1, 3)
        chi = Bicharacter(P, [[ONE, z], [z.inverse(), ONE]])
        A = gl_chi([P.element([0, 0]), P.element([1, 0]), P.element([0, 1])], chi, 3)
        return input_to_json(P, chi, A)
    raise UnknownDemo(f"unknown demo {name!r}; choose gl-super, quantum-torus or z3z3")


DEMOS = ("gl-super", "quantum-torus", "z3z3")


def cmd_demo(args) -> int:
    _emit(dumps(demo_input(args.name)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colortwist", description="Cocycle twisting of color Lie algebras.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check relation compatibility, symmetry and color axioms")
    v.add_argument("path")
    v.add_argument("--out")
    v.set_defaults(func=cmd_validate)

    t = sub.add_parser("twist", help="construct sigma and write a certificate")
    t.add_argument("path")
    t.add_argument("--strategy", choices=STRATEGIES, default="canonical")
    t.add_argument("--out")
    t.set_defaults(func=cmd_twist)

    c = sub.add_parser("census", help="count bicharacters and cohomology classes of a small group")
    c.add_argument("--group", required=True, help="cyclic orders, e.g. 2,2 (0 = Z)")
    c.add_argument("--values", type=int, default=None, help="value group mu_N (default exponent^2)")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)

    d = sub.add_parser("demo", help="write a ready-to-run example input")
    d.add_argument("name", help="one of: " + ", ".join(DEMOS))
    d.add_argument("--out")
    d.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputParseError, UnknownDemo) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ColorTwistError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

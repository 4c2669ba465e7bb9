"""Command-line interface: ``hopfzest {examples,enumerate,verify,export,cohomology}``.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import serialize
from .cochain import GroupCoefficients, UnityCoefficients, enumerate_cohomology
from .coquasi import build_braided_zested, build_zested, verify_coquasi_bialgebra, verify_coquasitriangular
from .errors import InvalidDatum, ZestingError
from .group import cyclic, subgroup_generated
from .report import VerificationReport
from .scalar import ONE, TorsionScalar, ts_nth_roots, unity
from .ydmodule import builtin_a12
from .zesting import (
    BraidedZestingDatum,
    builtin_z4_braided,
    enumerate_a12,
    enumerate_cyclic_zestings,
    enumerate_fk3,
    evaluate_assoczesting,
    evaluate_bz2,
    evaluate_bz3,
    trivial_datum,
    verify_assoc_datum,
    verify_braided_datum,
)

_NAMED = {"1": ONE, "-1": unity(1, 2), "i": unity(1, 4), "-i": unity(3, 4)}


def parse_scalar(text: str) -> TorsionScalar:
    """``1``, ``-1``, ``i``, ``-i`` or ``a/b`` meaning ``exp(2πi a/b)``."""
    text = text.strip()
    if text in _NAMED:
        return _NAMED[text]
    try:
        frac = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse root of unity {text!r}") from None
    return unity(frac.numerator, frac.denominator)


def _plural(k: int, word: str, plural: str | None = None) -> str:
    return f"{k} {word if k == 1 else (plural or word + 's')}"


def summarize_enumeration(data) -> str:
    families = len({d.meta["family"] for d in data})
    classes = len({d.meta["class"] for d in data})
    roots = len({d.meta["root"] for d in data})
    parts = [_plural(families, "family", "families")]
    if classes > 1:
        parts.append(_plural(classes, "class", "classes"))
    parts.append(_plural(roots, "root"))
    return f"{_plural(len(data), 'zesting')} ({' × '.join(parts)})"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_text(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return serialize.dumps([r.to_json() for r in reports])
    return "\n".join(r.to_text() for r in reports) + "\n"


# -- subcommands ------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.family == "a12":
        data = enumerate_a12(args.n)
    elif args.family == "fk3":
        data = enumerate_fk3(args.ell, args.k)
    else:
        yd = serialize.yd_from_json(serialize.load_file(args.yd))
        G = yd.group
        gamma0 = subgroup_generated(G, [G.element_from_json(x) for x in json.loads(args.gamma0)])
        nus = None
        if args.nus:
            nus = [G.element_from_json(x) for x in json.loads(args.nus)]
        data = enumerate_cyclic_zestings(yd, gamma0, nus=nus)

    failed = 0
    lines = [summarize_enumeration(data)]
    for d in data:
        ok = verify_assoc_datum(d).passed
        failed += not ok
        m = d.meta
        lines.append(
            f"  [{m['family']}.{m['class']}.{m['root']}] Φ: {m['phi']}; ν = {m['nu']}; "
            f"m = {m['m']}; q = {m['q']}; {'valid' if ok else 'INVALID'}"
        )
    if args.write_dir:
        os.makedirs(args.write_dir, exist_ok=True)
        for d in data:
            m = d.meta
            path = os.path.join(args.write_dir, f"datum_{m['family']}_{m['class']}_{m['root']}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(serialize.dumps(serialize.datum_to_json(d)))
    if args.format == "json":
        payload = {
            "summary": lines[0],
            "count": len(data),
            "data": [dict(d.meta) for d in data],
            "all_valid": failed == 0,
        }
        sys.stdout.write(serialize.dumps(payload))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if failed == 0 else 1


def _verify_object(obj: dict, braided: bool, tables: bool) -> list[VerificationReport]:
    if obj.get("format") == "structure-constants":
        Z = serialize.load_structure_constants(obj)
        reports = [verify_coquasi_bialgebra(Z)]
        if Z.r is not None:
            reports.append(verify_coquasitriangular(Z))
        return reports
    d = serialize.datum_from_json(obj)
    if braided:
        if not isinstance(d, BraidedZestingDatum):
            raise ValueError("--braided requires a braided datum file")
        reports = [verify_braided_datum(d)]
        if tables:
            Z = build_braided_zested(d, force=True)
            reports += [verify_coquasi_bialgebra(Z), verify_coquasitriangular(Z)]
        return reports
    assoc = d.assoc if isinstance(d, BraidedZestingDatum) else d
    reports = [verify_assoc_datum(assoc)]
    if tables:
        reports.append(verify_coquasi_bialgebra(build_zested(assoc, force=True)))
    return reports


def cmd_verify(args) -> int:
    obj = serialize.load_file(args.datum)
    reports = _verify_object(obj, args.braided, not args.no_tables)
    _emit(_report_text(reports, args.format), args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_export(args) -> int:
    d = serialize.datum_from_json(serialize.load_file(args.datum))
    try:
        obj = serialize.export_structure_constants(d, force=args.force)
    except InvalidDatum as exc:
        sys.stderr.write(f"error: {exc}\n")
        if exc.report is not None:
            sys.stderr.write(exc.report.to_text() + "\n")
        return 1
    _emit(serialize.dumps(obj), args.out)
    return 0


def cmd_cohomology(args) -> int:
    G = cyclic(args.group_order)
    kind, _, order = args.coefficients.partition(":")
    if kind == "cyclic":
        M = GroupCoefficients(cyclic(int(order)))
    elif kind == "unity":
        M = UnityCoefficients(int(order))
    else:
        raise ValueError("coefficients must be cyclic:M or unity:M")
    res = enumerate_cohomology(args.degree, G, M, budget=args.budget)
    if args.format == "json":
        payload = {
            "degree": res.degree,
            "classes": res.class_count,
            "cocycles": res.cocycle_count,
            "coboundaries": res.coboundary_count,
            "representatives": [c.to_json()["values"] for c in res.representatives],
        }
        sys.stdout.write(serialize.dumps(payload))
    else:
        sys.stdout.write(
            f"H^{res.degree}({G!r}, {M!r}): {res.class_count} classes "
            f"({res.cocycle_count} cocycles, {res.coboundary_count} coboundaries)\n"
        )
        for c in res.representatives:
            sys.stdout.write("  " + " ".join(str(v) for v in c.values) + "\n")
    return 0


def _z4_sweep() -> tuple[str, bool]:
    """Evaluate the ℤ/4 example for every ζ ∈ μ_4 and every η with η² = ζ."""
    lines = ["ζ     η      (assoczesting)@(1,1,1,1)   BZ2@(1,1,1)      BZ3@(1,1,1)      report"]
    consistent = True
    for z in ts_nth_roots(ONE, 4):
        for eta in ts_nth_roots(z, 2):
            bd = builtin_z4_braided(z, eta)
            G = bd.assoc.grading_group
            one = G.element(1)
            a = evaluate_assoczesting(bd.assoc, one, one, one, one)
            b2 = evaluate_bz2(bd, one, one, one)
            b3 = evaluate_bz3(bd, one, one, one)
            rep = verify_braided_datum(bd)
            fails = ", ".join(r.name for r in rep.failures) or "all pass"
            lines.append(
                f"{str(z):5} {str(eta):6} lhs={a[0]!s:3} rhs={a[1]!s:3}        "
                f"lhs={b2[0]!s:3} rhs={b2[1]!s:3}  lhs={b3[0]!s:3} rhs={b3[1]!s:3}  {fails}"
            )
            expected = z**2 == ONE
            consistent &= rep.row("BZ2").passed
            consistent &= rep.row("(assoczesting)").passed == expected
            consistent &= rep.row("BZ3").passed == expected
    verdict = "confirmed" if consistent else "NOT confirmed"
    lines.append(f"BZ2 holds for all (ζ, η); (assoczesting) and BZ3 hold iff ζ² = 1: {verdict}")
    return "\n".join(lines) + "\n", consistent


def cmd_examples(args) -> int:
    if args.action == "list":
        sys.stdout.write(
            "a12      A(1|2) over C2 × C_{n²}; --n N --index I\n"
            "fk3      FK3 over G(3, ell); --ell L --k K --index I\n"
            "z4       braided Z/4 example; --zeta Z --eta E\n"
            "trivial  trivial datum for A(1|2); --n N\n"
        )
        return 0
    if args.action == "z4-sweep":
        text, ok = _z4_sweep()
        sys.stdout.write(text)
        return 0 if ok else 1
    if args.name == "a12":
        d = enumerate_a12(args.n)[args.index]
    elif args.name == "fk3":
        d = enumerate_fk3(args.ell, args.k)[args.index]
    elif args.name == "z4":
        d = builtin_z4_braided(args.zeta, args.eta)
    elif args.name == "trivial":
        d = trivial_datum(builtin_a12(args.n))
    else:
        raise ValueError(f"unknown example {args.name!r}")
    _emit(serialize.dumps(serialize.datum_to_json(d)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfzest", description="Zestings of pointed Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("examples", help="list, write or claim-check built-in examples")
    ex_sub = ex.add_subparsers(dest="action", required=True)
    ex_sub.add_parser("list")
    ex_sub.add_parser("z4-sweep", help="evaluate the Z/4 braided example for all (ζ, η)")
    w = ex_sub.add_parser("write", help="write a built-in datum as JSON")
    w.add_argument("name", choices=["a12", "fk3", "z4", "trivial"])
    w.add_argument("--n", type=int, default=2)
    w.add_argument("--ell", type=int, default=9)
    w.add_argument("--k", type=int, default=1)
    w.add_argument("--index", type=int, default=0)
    w.add_argument("--zeta", type=parse_scalar, default=unity(1, 2))
    w.add_argument("--eta", type=parse_scalar, default=unity(1, 4))
    w.add_argument("--out")
    ex.set_defaults(func=cmd_examples)

    en = sub.add_parser("enumerate", help="enumerate cyclic zestings")
    en_sub = en.add_subparsers(dest="family", required=True)
    a = en_sub.add_parser("a12")
    a.add_argument("--n", type=int, required=True)
    f = en_sub.add_parser("fk3")
    f.add_argument("--ell", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    c = en_sub.add_parser("custom")
    c.add_argument("--yd", required=True, help="YD datum JSON file")
    c.add_argument("--gamma0", required=True, help="JSON list of generators of Γ₀")
    c.add_argument("--nus", help="JSON list of ν values (default: coset representatives)")
    for q in (a, f, c):
        q.add_argument("--write-dir")
        q.add_argument("--format", choices=["text", "json"], default="text")
    en.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="verify a datum or structure-constant file")
    v.add_argument("datum")
    v.add_argument("--braided", action="store_true")
    v.add_argument("--no-tables", action="store_true", help="skip the structure-constant axioms")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export", help="export structure constants of a datum")
    x.add_argument("datum")
    x.add_argument("--force", action="store_true")
    x.add_argument("--out")
    x.set_defaults(func=cmd_export)

    h = sub.add_parser("cohomology", help="brute-force H^n(C_N, M)")
    h.add_argument("--degree", type=int, choices=[1, 2, 3], default=2)
    h.add_argument("--group-order", type=int, required=True)
    h.add_argument("--coefficients", default="cyclic:2", help="cyclic:M or unity:M")
    h.add_argument("--budget", type=int, default=1 << 20)
    h.add_argument("--format", choices=["text", "json"], default="text")
    h.set_defaults(func=cmd_cohomology)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ZestingError, ValueError, KeyError, IndexError, OSError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

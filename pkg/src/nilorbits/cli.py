"""Command line front end.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error,
3 resource limit.  JSON is the default output; ``--text`` renders key/value
lines instead.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import epoly, stringy
from .errors import NilOrbitError, ResourceLimit, TotalMismatch, UnsupportedAlgebra
from .induction import footprint, seesaw_check
from .levi import InductionDatum, LeviType, pre_collapse
from .partitions import (
    AlgebraType,
    Partition,
    classify,
    collapse_with_steps,
    make_partition,
    orbit_dimension,
)
from .qseries import NotPolynomial, QRational, as_polynomial, is_palindromic, leading_terms, render_terms
from .springer import springer_dual, springer_inverse
from .sweeps import SCHEMA, SUITES, catalog_records, orbit_groups, run_suite, write_jsonl

OUT_ENV = "NILORBITS_OUT_DIR"


class UsageError(Exception):
    pass


# -- argument parsing helpers -------------------------------------------------


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        raw = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot read partition {text!r}; use comma-separated integers")
    return make_partition(raw)


def _expand_parts(text: str) -> list:
    """'1x3,2' -> [1, 1, 1, 2]."""
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        m = re.fullmatch(r"(\d+)(?:x(\d+))?", tok)
        if not m:
            raise UsageError(f"bad gl block {tok!r}")
        out += [int(m.group(1))] * int(m.group(2) or 1)
    return out


def parse_levi(text: str, family: str) -> LeviType:
    """'p1,p2,...;tail' with 'pxk' for k copies of p."""
    if ";" not in text:
        raise UsageError("a Levi is written 'gl parts;tail', e.g. '1x3;2'")
    gl, tail = text.split(";", 1)
    try:
        tail = int(tail)
    except ValueError:
        raise UsageError(f"bad tail size {tail!r}")
    return LeviType.of(family, _expand_parts(gl), tail)


def algebra_for(family: str, d: Partition, rank: int | None) -> AlgebraType:
    algebra = AlgebraType.for_total(family, d.total) if rank is None else AlgebraType(family, rank)
    if algebra.N != d.total:
        raise TotalMismatch(f"{d} has total {d.total}, but {algebra} needs {algebra.N}")
    return algebra


# -- output -------------------------------------------------------------------


def _render_text(obj, indent: str = "") -> list:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{indent}{k}:")
                lines += _render_text(v, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    elif isinstance(obj, list):
        for x in obj:
            sub = _render_text(x, indent + "  ")
            if sub:
                lines.append(f"{indent}-" + sub[0][len(indent) + 1:])
                lines += sub[1:]
    else:
        lines.append(f"{indent}{obj}")
    return lines


def emit(obj: dict, args, stream=None):
    stream = stream or sys.stdout
    if getattr(args, "text", False):
        body = {k: v for k, v in obj.items() if k != "schema"}
        stream.write("\n".join(_render_text(body)) + "\n")
    else:
        stream.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True) + "\n")


def _default_out(explicit, name: str):
    if explicit:
        return Path(explicit)
    base = os.environ.get(OUT_ENV)
    return Path(base) / name if base else None


# -- commands -----------------------------------------------------------------


def cmd_orbit(args) -> int:
    d = parse_partition(args.partition)
    algebra = algebra_for(args.family, d, args.rank)
    out = {"family": algebra.family, "rank": algebra.rank, "partition": d.to_list()}
    if args.action == "classify":
        out.update(classify(d, algebra))
    elif args.action == "dual":
        if algebra.family == "C":
            out = {"family": "B", "dual": springer_dual(d).to_list()}
        elif algebra.family == "B":
            out = {"family": "C", "dual": springer_inverse(d).to_list()}
        else:
            raise UnsupportedAlgebra("Springer duality pairs types B and C")
    elif args.action == "collapse":
        image, steps = collapse_with_steps(d, algebra)
        out.update({"collapse": image.to_list(), "steps": steps})
    elif args.action == "dimension":
        out["dimension"] = orbit_dimension(d, algebra)
    emit(out, args)
    return 0


def cmd_groups(args) -> int:
    d = parse_partition(args.partition)
    algebra = algebra_for(args.family, d, args.rank)
    if algebra.family not in ("B", "C"):
        raise UnsupportedAlgebra("component groups are tabulated for B and C")
    out = {"family": algebra.family, "partition": d.to_list()}
    out.update(orbit_groups(d, algebra))
    emit(out, args)
    return 0


def cmd_induce(args) -> int:
    levi = parse_levi(args.levi, args.family)
    tail = parse_partition(args.tail_orbit) if args.tail_orbit else Partition((1,) * levi.tail)
    if args.gl_orbits:
        blocks = [parse_partition(b) for b in args.gl_orbits.split("|")]
    else:
        blocks = [Partition((1,) * p) for p in levi.gl_parts]
    datum = InductionDatum(levi, tuple(blocks), tail)
    image, steps = collapse_with_steps(pre_collapse(datum), levi.algebra)
    out = {
        "datum": datum.to_json(),
        "pre_collapse": pre_collapse(datum).to_list(),
        "induced": image.to_list(),
        "collapse_steps": steps,
    }
    emit(out, args)
    return 0


def cmd_footprint(args) -> int:
    report = footprint(parse_partition(args.partition))
    out = report.to_json()
    out["polarizations"] = [p.to_json() for p in report.polarizations]
    emit(out, args)
    return 0


def cmd_seesaw(args) -> int:
    report = seesaw_check(parse_partition(args.partition))
    out = report.to_json()
    out["verdict"] = "pass" if report.ok else "fail"
    emit(out, args)
    return 0 if report.ok else 1


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _value_report(value, args) -> dict:
    value = value if isinstance(value, QRational) else QRational(value)
    out = {"value": value.render(), "exact_value": value.to_json()}
    poly = as_polynomial(value)
    out["polynomial"] = not isinstance(poly, NotPolynomial)
    if args.leading:
        terms = leading_terms(value, args.leading)
        out["leading"] = [list(t) for t in terms]
        out["leading_rendered"] = render_terms(terms)
    if args.check_palindrome:
        lo, hi = _range(args.check_palindrome)
        out["palindromic"] = out["polynomial"] and is_palindromic(poly, lo, hi)
    return out


def _range(text: str) -> tuple:
    try:
        lo, hi = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("--check-palindrome takes LOW,HIGH")
    return lo, hi


EPOLY_KINDS = {
    "grassmannian": (("k", "n"), lambda a: epoly.e_grassmannian(a.k, a.n)),
    "ig": (("k", "n"), lambda a: epoly.e_ig(a.k, a.n)),
    "og-odd": (("k", "n"), lambda a: epoly.e_og_odd(a.k, a.n)),
    "og-even": (("k", "n"), lambda a: epoly.e_og_even(a.k, a.n)),
    "projective": (("n",), lambda a: epoly.e_projective(a.n)),
    "quadric": (("m",), lambda a: epoly.e_quadric(a.m)),
    "flag": (("parts",), lambda a: epoly.e_flag(_expand_parts(a.parts))),
    "sym-strata": (("k", "m"), lambda a: epoly.e_rank_strata_sym(a.k, a.m)),
    "skew-strata": (("k", "m"), lambda a: epoly.e_rank_strata_skew(a.k, a.m)),
    "complete-quadrics": (("m",), lambda a: epoly.complete_quadrics_poly(a.m)),
}


def cmd_epoly(args) -> int:
    needs, fn = EPOLY_KINDS[args.kind]
    _need(args, *needs)
    out = {"kind": args.kind}
    out.update(_value_report(fn(args), args))
    emit(out, args)
    return 0


def cmd_stringy(args) -> int:
    kind = args.kind
    out = {"kind": kind}
    if kind == "spherical":
        _need(args, "family", "r", "l")
        res = stringy.stringy_spherical(args.family, args.r, args.l)
        out.update({"family": args.family, "r": args.r, "l": args.l, "exact": res.exact})
        if not res.exact:
            out["trusted_from"] = res.trusted_from
            out["leading"] = [list(t) for t in res.leading]
            out["leading_rendered"] = render_terms(res.leading)
            out["closed_form_check"] = stringy.c2_closed_form_report(args.l)
        else:
            out.update(_value_report(res.value, args))
    elif kind == "minimal":
        _need(args, "family", "rank")
        res = stringy.stringy_minimal_orbit(AlgebraType(args.family, args.rank))
        out.update(_value_report(res.value, args))
    elif kind == "parabolic-cover":
        _need(args, "family", "levi")
        res = stringy.stringy_parabolic_cover(parse_levi(args.levi, args.family))
        out.update(_value_report(res.value, args))
    elif kind == "regular-cover":
        _need(args, "rank")
        cover = stringy.universal_cover_regular(args.rank)
        mirror = stringy.subregular_B_closure(args.rank) * epoly.Q**2
        out.update(_value_report(cover, args))
        out["mirror_check"] = cover == mirror
    emit(out, args)
    return 0


def cmd_verify(args) -> int:
    bound = args.max_rank if args.max_rank is not None else args.max_n
    if bound is None:
        bound = args.max_l
    report = run_suite(args.suite, bound, args.jobs)
    path = _default_out(args.out, f"verify-{args.suite}.jsonl")
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_jsonl(path, report.failures)
    out = report.to_json(timing=not args.no_timing)
    if path is not None:
        out["failures_file"] = str(path)
    emit(out, args)
    return report.exit_code


def cmd_catalog(args) -> int:
    families = tuple(sorted(set(args.family.split(",")))) if args.family else ("B", "C")
    records = catalog_records(args.max_rank, families, args.jobs)
    path = _default_out(args.out, "catalog.jsonl")
    if path is None:
        for rec in records:
            sys.stdout.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        return 0
    path.parent.mkdir(parents=True, exist_ok=True)
    write_jsonl(path, records)
    emit({"records": len(records), "out": str(path)}, args)
    return 0


# -- parser -------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="plain key/value output")

    parser = argparse.ArgumentParser(prog="nilorbits", description="Nilpotent orbit calculus for classical Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def orbit_args(p, family_required=True):
        p.add_argument("--family", choices=list("ABCD"), required=family_required, default=None if family_required else "C")
        p.add_argument("--partition", required=True)
        p.add_argument("--rank", type=int)

    p = sub.add_parser("orbit", parents=[common], help="classify, dualize, collapse or measure an orbit")
    p.add_argument("action", choices=["classify", "dual", "collapse", "dimension"])
    orbit_args(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("groups", parents=[common], help="component groups, canonical quotient and kernel")
    orbit_args(p)
    p.set_defaults(func=cmd_groups)

    p = sub.add_parser("induce", parents=[common], help="induce an orbit from a Levi subalgebra")
    p.add_argument("--levi", required=True, help="gl parts;tail, e.g. 1x3;2")
    p.add_argument("--family", choices=list("BCD"), default="C")
    p.add_argument("--tail-orbit", help="partition of the tail (default zero orbit)")
    p.add_argument("--gl-orbits", help="one partition per gl factor, separated by |")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("footprint", parents=[common], help="degree pairs over all polarizations")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_footprint)

    p = sub.add_parser("seesaw", parents=[common], help="check deg * dual deg against the canonical quotient")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_seesaw)

    def series_args(p):
        p.add_argument("--leading", type=_positive)
        p.add_argument("--check-palindrome", metavar="LOW,HIGH")

    p = sub.add_parser("epoly", parents=[common], help="E-polynomials of homogeneous spaces and strata")
    p.add_argument("kind", choices=sorted(EPOLY_KINDS))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--parts")
    series_args(p)
    p.set_defaults(func=cmd_epoly)

    p = sub.add_parser("stringy", parents=[common], help="stringy E-functions")
    p.add_argument("kind", choices=["spherical", "minimal", "parabolic-cover", "regular-cover"])
    p.add_argument("--family", choices=list("ABCD"))
    p.add_argument("--r", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--levi")
    series_args(p)
    p.set_defaults(func=cmd_stringy)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--max-rank", type=_positive)
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--max-l", type=_positive)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", help=f"failures file (default ${OUT_ENV}/verify-SUITE.jsonl)")
    p.add_argument("--no-timing", action="store_true", help="omit wall time from the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="export special orbits as JSON Lines")
    p.add_argument("--max-rank", type=_positive, required=True)
    p.add_argument("--family", help="B, C or B,C (default both)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", help=f"output file (default ${OUT_ENV}/catalog.jsonl, else stdout)")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"nilorbits: error: {exc}\n")
        return 2
    except ResourceLimit as exc:
        emit(exc.to_json(), args, sys.stdout)
        return 3
    except NilOrbitError as exc:
        emit(exc.to_json(), args, sys.stdout)
        return 1


if __name__ == "__main__":
    sys.exit(main())

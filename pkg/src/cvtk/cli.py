"""Command-line interface.

Commands mirror the library layers: cheb and variety emit polynomials, word
and rep exercise the group-theoretic layer, intersect and detect run the full
pipeline, alexander and slopes print the classical invariants, and
verify-paper replays every frozen datum and prints a named check table.

Exit codes: 0 success, 1 verification failure, 2 usage error. JSON output is
canonical (sorted keys, two-space indent, rationals as "num/den" strings) so
parsing and re-serializing is byte-identical.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys

from .cheb import G_poly, f_poly, g_poly
from .golden import load_fixtures
from .intersect import build_intersection_report, intersection_loci
from .knotgrp import (
    complex_roots,
    family_words,
    mat_trace,
    mu_from_x,
    numeric_rep,
    relator_residual,
    standard_relator,
    two_bridge_word,
    word_eval,
)
from .trace import VerificationError, alexander_poly, boundary_slope_candidates
from .variety import d_split, d_variety_poly, x_variety_poly
from .verify import (
    all_passed,
    render_results,
    run_checks,
    run_property_checks,
)

RELATOR_TOL = 1e-9


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def complex_str(z: complex, digits: int = 12) -> str:
    """12-significant-digit approximation in the form 'a + bi'."""
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.{digits}g} {sign} {abs(z.imag):.{digits}g}i"


def _poly_root_strs(poly) -> list:
    return [complex_str(z) for z in complex_roots(poly)]


# ---------------------------------------------------------------------------
# Subcommands. Each returns a process exit code.


def cmd_cheb(args) -> int:
    table = {"f": f_poly, "g": g_poly, "G": G_poly}
    poly = table[args.kind](args.j)
    if args.format == "json":
        print(canonical_json(poly.to_json()))
    else:
        print(poly)
    return 0


def cmd_variety(args) -> int:
    if args.split:
        if args.model != "D":
            raise ValueError("--split applies to the D model only")
        pair = d_split(args.n)
        if args.format == "json":
            obj = {"line": pair.line.to_json(), "quotient": pair.quotient.to_json()}
            print(canonical_json(obj))
        else:
            print(f"line: {pair.line}")
            print(f"quotient: {pair.quotient}")
        return 0
    poly = x_variety_poly(args.n) if args.model == "X" else d_variety_poly(args.n)
    if args.format == "json":
        print(canonical_json(poly.to_json()))
    else:
        print(poly)
    return 0


def _augmented_report_json(report) -> dict:
    """Report JSON plus 12-digit complex approximations of every root."""
    obj = report.to_json()
    for locus, locus_obj in zip(report.loci, obj["loci"]):
        x_roots = []
        for factor in locus.x_min_polys or ():
            x_roots.extend(_poly_root_strs(factor))
        locus_obj["approx"] = {
            "modulus_roots": _poly_root_strs(locus.modulus),
            "x_roots": x_roots,
            "longitude_roots": _poly_root_strs(locus.longitude_min_poly),
        }
    return obj


def cmd_intersect(args) -> int:
    report = build_intersection_report(args.n)
    text = canonical_json(_augmented_report_json(report))
    print(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if report.status == "ok" else 1


def cmd_detect(args) -> int:
    report = build_intersection_report(args.n)
    slope = report.slope
    if args.json:
        obj = {"n": report.n, "slope": slope.to_json(), "status": report.status}
        print(canonical_json(obj))
    else:
        print(f"n: {report.n}")
        print(f"meridian trace integral: {'yes' if slope.meridian_integral else 'no'}")
        print(
            f"longitude trace integral: {'yes' if slope.longitude_integral else 'no'}"
        )
        print(f"detected boundary slope: {slope.detected_slope}")
        print(f"surface: {slope.surface_description}")
    return 0 if report.status == "ok" else 1


def cmd_rep(args) -> int:
    loci = intersection_loci(args.n)
    if not 0 <= args.locus < len(loci):
        raise ValueError(f"locus index must be in [0, {len(loci) - 1}]")
    locus = loci[args.locus]
    roots = complex_roots(locus.modulus)
    if not 0 <= args.root < len(roots):
        raise ValueError(f"root index must be in [0, {len(roots) - 1}]")
    r0 = roots[args.root]
    fn = f_poly(args.n).coeffs
    value = sum(complex(c) * r0 ** k for k, c in enumerate(fn))
    x0 = cmath.sqrt(2 + r0 - 1 / (value * value))
    mu = mu_from_x(x0)
    rep = numeric_rep(args.n, mu, r0)
    fam = family_words(args.n)
    p = 4 * args.n * args.n - 1
    q = p - 2 * args.n
    res_family = relator_residual(rep, fam.relator)
    res_standard = relator_residual(rep, standard_relator(p, q))
    print(f"n: {args.n}  locus: {args.locus}  root: {args.root}")
    print(f"modulus: {locus.modulus}")
    print(f"r0 ~ {complex_str(r0)}")
    print(f"x0 ~ {complex_str(x0)}")
    print(f"mu ~ {complex_str(mu)}")
    print(f"family relator residual: {res_family:.3e}")
    print(f"two-bridge ({p}, {q}) relator residual: {res_standard:.3e}")
    print(f"tr(a) ~ {complex_str(mat_trace(rep.A))}")
    print(f"tr(a b^-1) ~ {complex_str(r0)}")
    print(f"tr(s1) ~ {complex_str(mat_trace(word_eval(rep, fam.s1)))}")
    print(f"tr(s2) ~ {complex_str(mat_trace(word_eval(rep, fam.s2)))}")
    print(f"tr(longitude) ~ {complex_str(mat_trace(word_eval(rep, fam.longitude)))}")
    if res_family >= RELATOR_TOL or res_standard >= RELATOR_TOL:
        print("relator residual exceeds tolerance", file=sys.stderr)
        return 1
    return 0


def cmd_word(args) -> int:
    word = two_bridge_word(args.p, args.q)
    relator = standard_relator(args.p, args.q)
    print(f"word: {word}")
    print(f"length: {len(word)}")
    print(f"relator: {relator}")
    return 0


def cmd_alexander(args) -> int:
    poly, disc = alexander_poly(args.n)
    obj = {"n": args.n, "polynomial": poly.to_json(), "discriminant": str(disc)}
    print(canonical_json(obj))
    return 0


def cmd_slopes(args) -> int:
    candidates = boundary_slope_candidates(args.n)
    obj = {"n": args.n, "candidates": [c.to_json() for c in candidates]}
    print(canonical_json(obj))
    return 0


def cmd_verify_paper(args) -> int:
    if args.n is not None:
        results = run_property_checks(args.n)
    else:
        fixtures = load_fixtures(args.fixtures) if args.fixtures else None
        results = run_checks(fixtures=fixtures)
    print(render_results(results))
    return 0 if all_passed(results) else 1


# ---------------------------------------------------------------------------
# Parser.


def _add_n(parser) -> None:
    parser.add_argument("--n", type=int, required=True, help="family index, n >= 2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvtk",
        description="Exact character variety toolkit for the knot family J(2n, 2n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cheb", help="print a trace polynomial f_j, g_j, or G_j")
    p.add_argument("--kind", choices=("f", "g", "G"), required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=cmd_cheb)

    p = sub.add_parser("variety", help="print a character variety polynomial")
    _add_n(p)
    p.add_argument("--model", choices=("X", "D"), required=True)
    p.add_argument("--split", action="store_true", help="factor D as line * quotient")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("intersect", help="full intersection report as JSON")
    _add_n(p)
    p.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("detect", help="boundary slope detection verdict")
    _add_n(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("rep", help="numeric representation at an intersection point")
    _add_n(p)
    p.add_argument("--locus", type=int, default=0, help="intersection locus index")
    p.add_argument("--root", type=int, default=0, help="root index in the locus")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("word", help="two-bridge word and relator for (p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("alexander", help="Alexander polynomial and discriminant")
    _add_n(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("slopes", help="boundary slope candidate list")
    _add_n(p)
    p.set_defaults(func=cmd_slopes)

    p = sub.add_parser("verify-paper", help="replay all frozen data checks")
    p.add_argument("--fixtures", metavar="PATH", help="override the frozen fixtures")
    p.add_argument(
        "--n",
        type=int,
        help="run only the fixture-free property checks up through this n",
    )
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

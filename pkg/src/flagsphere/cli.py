"""Command-line front end.

Subcommands:

* ``analyze FILE``: full invariant report for one complex.
* ``verify FILE|gen:NAME[:K] [--suite ...]``: run identity checks, exit 0
  iff all hold exactly.
* ``census --max-vertices N [--dim D]``: exhaustive labeled-graph census.
* ``generate NAME [--n K | --m K]``: write a complex file.

Exit codes: 0 pass, 1 identity failure (or finding with ``--strict``),
2 input error, 3 inapplicable request.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import census as census_mod
from .complexes import SimplicialComplex
from .errors import (
    FlagsphereError,
    InapplicableError,
    InputError,
    NotASphere,
    UnknownGenerator,
)
from .files import dumps_complex, load_complex
from .generators import (
    cross_polytope_boundary,
    cycle,
    icosahedron,
    simplex_boundary,
    two_points,
)
from .homology import is_generalized_homology_sphere, is_homology_sphere, reduced_homology
from .invariants import (
    LINK_SUM_CONSTANT,
    analyze,
    dehn_sommerville_check,
    h_polynomial,
    h_tilde,
    join_multiplicativity_check,
    link_derivative_identity,
    theorem_identity,
)
from .polynomial import IntPolynomial

GENERATORS: dict[str, tuple[Callable[..., SimplicialComplex], str | None]] = {
    "icosahedron": (icosahedron, None),
    "two-points": (two_points, None),
    "cycle": (cycle, "m"),
    "cross-polytope": (cross_polytope_boundary, "n"),
    "simplex-boundary": (simplex_boundary, "n"),
}

SUITES = ("all", "ds", "theorem", "links", "gamma", "joins")


@dataclass
class IdentityResult:
    name: str
    passed: bool
    witnesses: dict[str, str]


@dataclass
class VerificationReport:
    complex_id: str
    results: list[IdentityResult]

    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_input(spec: str) -> tuple[SimplicialComplex, str]:
    if spec.startswith("gen:"):
        parts = spec.split(":")
        name = parts[1] if len(parts) > 1 else ""
        if name not in GENERATORS:
            raise UnknownGenerator(f"unknown generator '{name}'")
        fn, param = GENERATORS[name]
        if param is None:
            if len(parts) > 2:
                raise InputError(f"generator '{name}' takes no parameter")
            return fn(), spec
        if len(parts) != 3:
            raise InputError(f"generator '{name}' needs a parameter, e.g. gen:{name}:4")
        try:
            value = int(parts[2])
        except ValueError:
            raise InputError(f"bad generator parameter '{parts[2]}'") from None
        return fn(value), spec
    return load_complex(spec), spec


def _poly_str(p: IntPolynomial | None) -> str | None:
    return None if p is None else str(p)


# -- analyze ----------------------------------------------------------------


def _analyze_report(L: SimplicialComplex, label: str) -> dict:
    inv = analyze(L)
    profile = reduced_homology(L)
    f_half = L.f_polynomial()(Fraction(-1, 2))
    h_minus_one = inv.h_poly(-1)
    return {
        "complex": label,
        "vertex_count": L.vertex_count,
        "dim": inv.dim,
        "m": inv.m,
        "f_vector": list(L.f_vector()),
        "f_poly": list(inv.f_poly.coeffs),
        "h_poly": list(inv.h_poly.coeffs),
        "h_tilde": list(inv.h_tilde.coeffs) if inv.h_tilde is not None else None,
        "gamma": list(inv.gamma.gammas) if inv.gamma is not None else None,
        "cd_value": inv.cd_value,
        "theorem_lhs": str(inv.theorem_lhs) if inv.theorem_lhs is not None else None,
        "theorem_rhs": str(inv.theorem_rhs) if inv.theorem_rhs is not None else None,
        "is_flag": L.is_flag(),
        "is_homology_sphere": is_homology_sphere(L),
        "is_ghs": is_generalized_homology_sphere(L),
        "betti": list(profile.betti),
        "torsion": [list(t) for t in profile.torsion],
        "euler_characteristic": L.euler_characteristic(),
        "orbifold_euler": str(f_half),
        "h_at_minus_one": str(h_minus_one),
        # under this normalization f(-1/2) always equals h(-1)/2^m
        "normalization_ok": f_half == Fraction(h_minus_one, 2**inv.m),
    }


def _analyze_text(report: dict) -> str:
    lines = [
        f"complex: {report['complex']}",
        f"vertices: {report['vertex_count']}  dim: {report['dim']}  m: {report['m']}",
        f"f-vector: {tuple(report['f_vector'])}",
        f"f(t) = {IntPolynomial(report['f_poly'])}",
        f"h(t) = {IntPolynomial(report['h_poly'])}",
    ]
    if report["h_tilde"] is not None:
        lines.append(f"h-tilde(t) = {IntPolynomial(report['h_tilde'])}")
    if report["gamma"] is not None:
        lines.append(f"gamma: {tuple(report['gamma'])}")
    if report["cd_value"] is not None:
        lines.append(f"charney-davis value: {report['cd_value']}")
    lines.append(f"flag: {_yn(report['is_flag'])}")
    lines.append(f"homology sphere: {_yn(report['is_homology_sphere'])}")
    lines.append(f"generalized homology sphere: {_yn(report['is_ghs'])}")
    lines.append(f"reduced betti: {tuple(report['betti'])}")
    lines.append(f"euler characteristic: {report['euler_characteristic']}")
    lines.append(
        f"orbifold euler f(-1/2) = {report['orbifold_euler']}, "
        f"h(-1) = {report['h_at_minus_one']}, "
        f"f(-1/2) == h(-1)/2^m: {_yn(report['normalization_ok'])}"
    )
    if report["theorem_lhs"] is not None:
        equal = report["theorem_lhs"] == report["theorem_rhs"]
        lines.append(
            f"theorem identity: lhs = {report['theorem_lhs']}, "
            f"rhs = {report['theorem_rhs']}, equal: {_yn(equal)}"
        )
    return "\n".join(lines) + "\n"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(args: argparse.Namespace) -> int:
    L, label = _resolve_input(args.path)
    report = _analyze_report(L, label)
    if args.json:
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    else:
        _emit(_analyze_text(report), args.output)
    return 0


# -- verify -----------------------------------------------------------------


_JOIN_PARTNERS = ("gen:two-points", "gen:cycle:5")


def _check_ds(L: SimplicialComplex) -> IdentityResult:
    if not is_homology_sphere(L):
        raise NotASphere("Dehn-Sommerville check needs a homology sphere")
    h = h_polynomial(L)
    passed = dehn_sommerville_check(L)
    witnesses = {
        "h": str(h),
        "f(-1/2)": str(L.f_polynomial()(Fraction(-1, 2))),
    }
    return IdentityResult("dehn-sommerville", passed, witnesses)


def _check_gamma(L: SimplicialComplex) -> IdentityResult:
    if not is_homology_sphere(L):
        raise NotASphere("gamma check needs a homology sphere")
    m = L.dim + 1
    h = h_polynomial(L)
    gamma = h.gamma_expand(m)
    passed = gamma.to_polynomial(m) == h
    witnesses = {"gamma": str(tuple(gamma.gammas))}
    if L.dim % 2 == 0:
        d = L.dim // 2
        top = (-1) ** d * h_tilde(L)(-1)
        passed = passed and gamma.gammas[d] == top
        witnesses["gamma_top"] = str(gamma.gammas[d])
        witnesses["(-1)^d h-tilde(-1)"] = str(top)
    return IdentityResult("gamma", passed, witnesses)


def _check_theorem(L: SimplicialComplex) -> IdentityResult:
    witness = theorem_identity(L)
    return IdentityResult(
        "theorem",
        witness.equal,
        {"lhs": str(witness.lhs), "rhs": str(witness.rhs), "constant": str(LINK_SUM_CONSTANT)},
    )


def _check_links(L: SimplicialComplex) -> IdentityResult:
    passed = link_derivative_identity(L)
    return IdentityResult(
        "link-derivative",
        passed,
        {"f'": str(L.f_polynomial().derivative())},
    )


def _check_joins(L: SimplicialComplex) -> IdentityResult:
    witnesses = {}
    passed = True
    partners = [(_resolve_input(p)[0], p) for p in _JOIN_PARTNERS] + [(L, "self")]
    for partner, name in partners:
        h_ok = join_multiplicativity_check(L, partner)
        f_ok = (L.join(partner)).f_polynomial() == L.f_polynomial() * partner.f_polynomial()
        witnesses[name] = f"h {'ok' if h_ok else 'FAIL'}, f {'ok' if f_ok else 'FAIL'}"
        passed = passed and h_ok and f_ok
    return IdentityResult("join-multiplicativity", passed, witnesses)


def run_suite(L: SimplicialComplex, label: str, suite: str) -> VerificationReport:
    """Run the requested identity checks.  ``all`` runs every check that
    applies to this complex; naming one explicitly raises (exit 3) when it
    does not apply."""
    results = []
    if suite == "all":
        results.append(_check_links(L))
        if is_homology_sphere(L):
            results.append(_check_ds(L))
            results.append(_check_gamma(L))
            if L.dim % 2 == 0 and is_generalized_homology_sphere(L):
                results.append(_check_theorem(L))
    elif suite == "ds":
        results.append(_check_ds(L))
    elif suite == "gamma":
        results.append(_check_gamma(L))
    elif suite == "theorem":
        results.append(_check_theorem(L))
    elif suite == "links":
        results.append(_check_links(L))
    elif suite == "joins":
        results.append(_check_joins(L))
    else:
        raise InputError(f"unknown suite '{suite}'")
    return VerificationReport(label, results)


def _verify_text(report: VerificationReport) -> str:
    lines = [f"complex: {report.complex_id}"]
    for r in report.results:
        status = "pass" if r.passed else "FAIL"
        parts = "; ".join(f"{k} = {v}" for k, v in r.witnesses.items())
        lines.append(f"{status:4s}  {r.name}  [{parts}]")
    verdict = "all identities hold" if report.all_passed() else "identity FAILURE"
    lines.append(verdict)
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    L, label = _resolve_input(args.path)
    report = run_suite(L, label, args.suite)
    if args.json:
        doc = {
            "complex": report.complex_id,
            "results": [
                {"name": r.name, "passed": r.passed, "witnesses": r.witnesses}
                for r in report.results
            ],
            "all_passed": report.all_passed(),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit(_verify_text(report), args.output)
    return 0 if report.all_passed() else 1


# -- census -----------------------------------------------------------------


def _census_text(dicts: list[dict]) -> str:
    lines = []
    for d in dicts:
        bits = [
            f"n={d['n']}",
            f"mask={d['bitmask']}",
            f"dim={d['dim']}",
            f"ghs={_yn(d['is_ghs'])}",
            f"f={tuple(d['f'])}",
            f"h={tuple(d['h'])}",
        ]
        if d["cd_value"] is not None:
            bits.append(f"cd={d['cd_value']}")
        if d["theorem_lhs"] is not None:
            bits.append(f"theorem={d['theorem_lhs']}={d['theorem_rhs']}")
        if d["finding"] is not None:
            bits.append(f"FINDING={d['finding']}")
        lines.append("  ".join(bits))
    lines.append(f"total: {len(dicts)} record(s)")
    return "\n".join(lines) + "\n"


def _dedup_summary(dicts: list[dict]) -> str:
    """Group survivors by the cheap invariant key (degree sequence stands
    in via f/h) and report one representative per class."""
    buckets: dict[tuple, list[dict]] = {}
    for d in dicts:
        key = (d["n"], d["dim"], tuple(d["f"]), tuple(d["h"]))
        buckets.setdefault(key, []).append(d)
    lines = []
    for key in sorted(buckets):
        members = buckets[key]
        rep = members[0]
        lines.append(
            f"n={key[0]}  dim={key[1]}  f={key[2]}  h={key[3]}  "
            f"count={len(members)}  representative-mask={rep['bitmask']}"
        )
    lines.append(f"classes: {len(buckets)}")
    return "\n".join(lines) + "\n"


def cmd_census(args: argparse.Namespace) -> int:
    records = list(
        census_mod.run_census(args.max_vertices, dim_filter=args.dim, force=args.force)
    )
    dicts = [census_mod.record_to_dict(r) for r in records]
    if args.json:
        text = census_mod.dumps_json(dicts)
    elif args.csv:
        text = census_mod.dumps_csv(dicts)
    elif args.dedup:
        text = _dedup_summary(dicts)
    else:
        text = _census_text(dicts)
    _emit(text, args.output)
    failures = any(
        d["theorem_pass"] is False or not d["ds_pass"] or not d["links_pass"] for d in dicts
    )
    findings = any(d["finding"] is not None for d in dicts)
    if failures or (args.strict and findings):
        return 1
    return 0


# -- generate ---------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    if args.name not in GENERATORS:
        raise UnknownGenerator(f"unknown generator '{args.name}'")
    fn, param = GENERATORS[args.name]
    if param is None:
        if args.n is not None or args.m is not None:
            raise InputError(f"generator '{args.name}' takes no parameter")
        L = fn()
    else:
        value = args.n if param == "n" else args.m
        if value is None:
            raise InputError(f"generator '{args.name}' needs --{param}")
        L = fn(value)
    _emit(dumps_complex(L), args.output)
    return 0


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagsphere",
        description="Exact face-enumeration invariants of simplicial complexes "
        "and the identities relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one complex")
    p.add_argument("path", help="complex file or gen:NAME[:K]")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("path", help="complex file or gen:NAME[:K]")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("census", help="exhaustive labeled-graph census")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("generate", help="write a complex file")
    p.add_argument("name", help="|".join(GENERATORS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_generate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FlagsphereError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

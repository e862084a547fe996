"""Batch command-line interface.

One process, one query.  Results go to stdout (text or JSON), diagnostics to
stderr.  Exit codes: 0 success, 1 a checked property failed, 2 invalid input
or a request outside the proved range.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, geometry, oracle, zeroset
from .cones import EnumerationCapExceeded
from .forms import CanonicalType, format_dim_vector
from .zeroset import OutsideProvenRange


def _parse_type(text: str) -> CanonicalType:
    return CanonicalType.parse(text)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            if isinstance(value, list):
                print(f"{key}:")
                for item in value:
                    print(f"  {item}")
            else:
                print(f"{key}: {value}")


def cmd_classify(args) -> int:
    t = _parse_type(args.type)
    boundary, repr_type = geometry.classify_type(t)
    try:
        threshold = zeroset.zeroset_threshold(t)
    except OutsideProvenRange:
        threshold = None
    payload = {
        "type": str(t),
        "n": t.n,
        "delta": str(t.delta),
        "sum_reciprocals": str(t.sum_reciprocals),
        "boundary": boundary,
        "repr_type": repr_type,
        "lcm": t.lcm,
        "product": t.product,
        "zeroset_threshold": threshold,
    }
    _emit(payload, args.format)
    return 0


def cmd_ci(args) -> int:
    t = _parse_type(args.type)
    report = geometry.GeometryReport.compute(t, args.p, cap=args.cap)
    payload = {
        "p": report.p,
        "is_ci": report.is_ci,
        "is_normal": report.is_normal,
        "components": len(report.components) if report.is_ci else None,
        "defect": report.defect,
    }
    _emit(payload, args.format)
    return 0


def cmd_components(args) -> int:
    t = _parse_type(args.type)
    comps = geometry.irreducible_components(t, args.p, cap=args.cap)
    payload = {
        "p": args.p,
        "count": len(comps),
        "components": [format_dim_vector(d) for d in comps],
    }
    _emit(payload, args.format)
    return 0


def cmd_zeroset(args) -> int:
    t = _parse_type(args.type)
    report = zeroset.ZeroSetReport.compute(t, args.p, cap=args.cap)
    _emit(report.to_dict(), args.format)
    return 0


def cmd_witness(args) -> int:
    t = _parse_type(args.type)
    p, d = geometry.ci_failure_witness(t)
    from .forms import euler_quadratic
    q = euler_quadratic(t, d)
    value = q + p * (d.d0 - d.dinf)
    payload = {
        "p": p,
        "d": format_dim_vector(d),
        "quadratic": q,
        "criterion_value": value,
        "violates": "weak" if value < 0 else "strict_only",
    }
    _emit(payload, args.format)
    return 0


def cmd_verify(args) -> int:
    t = _parse_type(args.type)
    results = checks.run_all(t, pmax=args.pmax, seed=args.seed, samples=args.samples)
    all_ok = all(r.ok for r in results)
    if args.format == "json":
        payload = {
            "type": str(t),
            "seed": args.seed,
            "samples": args.samples,
            "pmax": args.pmax,
            "all_ok": all_ok,
            "results": [{"name": r.name, "ok": r.ok, "details": r.details}
                        for r in results],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"seed: {args.seed}  samples: {args.samples}  pmax: {args.pmax}")
        for r in results:
            mark = "OK  " if r.ok else "FAIL"
            line = f"{mark} {r.name}"
            if r.details:
                line += f"  ({r.details})"
            print(line)
        print(f"{'all checks passed' if all_ok else 'CHECKS FAILED'}")
    return 0 if all_ok else 1


def cmd_oracle(args) -> int:
    t = _parse_type(args.type)
    if args.lambdas:
        lam = oracle.LambdaChoice(tuple(Fraction(x) for x in args.lambdas.split(",")))
    else:
        lam = oracle.LambdaChoice.default_for(t)
    mu = Fraction(args.mu) if args.mu is not None else None
    sizes = tuple(range(1, args.sizes + 1))
    results = checks.oracle_suite(t, lam, mu, sizes=sizes, full=args.full or None)
    all_ok = all(r.ok for r in results)
    if args.format == "json":
        payload = {
            "type": str(t),
            "lambdas": [str(x) for x in lam.lambdas],
            "all_ok": all_ok,
            "results": [{"name": r.name, "ok": r.ok, "details": r.details}
                        for r in results],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            mark = "OK  " if r.ok else "FAIL"
            line = f"{mark} {r.name}"
            if r.details:
                line += f"  ({r.details})"
            print(line)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canalg",
        description="Exact decision procedures for module varieties over "
                    "canonical algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_p=False):
        sp.add_argument("--type", required=True,
                        help="comma-separated arm lengths, e.g. 2,3,6")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--cap", type=int, default=10**8,
                        help="enumeration cap; exceeding it is an error")
        if with_p:
            sp.add_argument("--p", type=int, required=True,
                            help="level: analyses run at dimension vector p*h")

    common(sub.add_parser("classify", help="type invariants and classification"))
    common(sub.add_parser("ci", help="complete-intersection / normality decision"),
           with_p=True)
    common(sub.add_parser("components", help="list irreducible components"),
           with_p=True)
    common(sub.add_parser("zeroset", help="zero-set report at level p"), with_p=True)
    common(sub.add_parser("witness", help="explicit criterion-violating vector"))

    sp = sub.add_parser("verify", help="run all invariant suites")
    common(sp)
    sp.add_argument("--pmax", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=300)

    sp = sub.add_parser("oracle", help="matrix-level validation of the tube model")
    common(sp)
    sp.add_argument("--lambdas", default=None,
                    help="comma-separated rationals for the tube points 3..n")
    sp.add_argument("--mu", default=None,
                    help="homogeneous parameter (rational, off the tube points)")
    sp.add_argument("--sizes", type=int, default=3,
                    help="largest homogeneous quasi-length to build")
    sp.add_argument("--full", action="store_true",
                    help="force the full pairwise Hom battery")
    return parser


HANDLERS = {
    "classify": cmd_classify,
    "ci": cmd_ci,
    "components": cmd_components,
    "zeroset": cmd_zeroset,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (OutsideProvenRange, EnumerationCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``fewweight construct | verify | sums``.

Exit status: 0 success or match, 1 mismatch, 2 invalid input, 3 degenerate code.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .charsums import (
    WeilParams,
    gauss_bruteforce,
    gauss_closed,
    quad_bruteforce,
    quad_closed,
    weil_bruteforce,
    weil_closed,
)
from .codes import (
    D1,
    D2,
    DefiningSetError,
    DegenerateCodeError,
    build_d1,
    build_d2,
    puncture_by_scaling,
    read_defining_set,
    weight_distribution_bruteforce,
    weight_distribution_charsum,
)
from .cyclo import render
from .gf import FieldError, FieldSpec, default_size_limit
from .theory import VerificationReport, classify_optimality, verify

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3


class UsageError(ValueError):
    pass


def _field(args) -> FieldSpec:
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(t) for t in args.modulus.split(",")]
    limit = args.size_limit if args.size_limit is not None else default_size_limit()
    return FieldSpec(args.p, args.m, modulus=modulus, size_limit=limit)


def _element(text: str, spec: FieldSpec):
    if "," in text:
        return spec([int(t) for t in text.split(",")])
    return spec(int(text))


def _optimality(dist, p):
    if dist.d is None:
        return None
    return classify_optimality(dist.n, dist.k, dist.d, p).to_dict()


def _code_json(dist) -> dict:
    return dist.to_dict()


def dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"p": r.p, "m": r.m, "u": r.u, "family": r.family},
        "case": r.tag.case.value,
        "status": r.status,
        "code": _code_json(r.bruteforce) if r.bruteforce else None,
        "punctured": _code_json(r.punctured) if r.punctured else None,
        "optimality": r.optimality.to_dict() if r.optimality else None,
        "punctured_optimality": r.punctured_optimality.to_dict() if r.punctured_optimality else None,
        "verification": {"match": r.match, "pless": list(r.pless), "diff": r.diff},
    }


def cmd_construct(args) -> int:
    spec = _field(args)
    if args.set:
        D = read_defining_set(args.set, spec)
        family = "custom"
    else:
        if args.u is None:
            raise UsageError("-u is required with --family")
        family = args.family.upper()
        D = (build_d1 if family == D1 else build_d2)(spec, args.u)
    if len(D) == 0:
        raise DegenerateCodeError("defining set is empty")
    if args.method == "bruteforce" or family == "custom":
        dist = weight_distribution_bruteforce(D)
    else:
        dist = weight_distribution_charsum(D)
    punctured = None
    if args.puncture:
        punctured = weight_distribution_bruteforce(puncture_by_scaling(D))
    shown = punctured if punctured is not None else dist

    if args.format == "json":
        out = {
            "schema_version": SCHEMA_VERSION,
            "params": {"p": spec.p, "m": spec.m, "u": args.u, "family": family},
            "code": _code_json(dist),
            "punctured": _code_json(punctured) if punctured else None,
            "optimality": _optimality(shown, spec.p),
            "verification": {"match": None, "pless": list(shown.pless_moments(spec.p))},
        }
        sys.stdout.write(dump(out))
    else:
        if punctured is not None:
            print(f"original:  {dist}")
            print(f"punctured: {punctured}")
        else:
            print(dist)
        opt = _optimality(shown, spec.p)
        if opt:
            print(f"griesmer: {opt['verdict']} (max d at this length and dimension: {opt['max_d']})")
    return EXIT_OK


def _verify_one(job):
    family, p, m, u, size_limit = job
    spec = FieldSpec(p, m, size_limit=size_limit)
    return verify(family, p, m, u, spec)


def _report_line(r: VerificationReport) -> str:
    head = f"{r.family} p={r.p} m={r.m} u={r.u} {r.tag.case.value:<14} {r.status}"
    if r.bruteforce is not None:
        head += f"  {r.bruteforce}"
    if r.punctured is not None:
        head += f"  punctured {r.punctured} ({r.punctured_optimality.verdict})"
    return head


def cmd_verify(args) -> int:
    limit = args.size_limit if args.size_limit is not None else default_size_limit()
    if args.sweep:
        jobs = [
            (fam, args.p, m, u, limit)
            for m in range(1, args.m_max + 1)
            for u in range(1, args.u_max + 1)
            for fam in (D1, D2)
        ]
        for fam, p, m, _, _ in jobs:
            FieldSpec(p, m, size_limit=limit)  # validate every tuple before computing
    else:
        if args.family is None or args.m is None or args.u is None:
            raise UsageError("verify needs --family, -m and -u, or --sweep")
        jobs = [(args.family.upper(), args.p, args.m, args.u, limit)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]

    if args.format == "json":
        if args.sweep:
            sys.stdout.write(dump({"schema_version": SCHEMA_VERSION, "results": [report_to_dict(r) for r in reports]}))
        else:
            sys.stdout.write(dump(report_to_dict(reports[0])))
    else:
        for r in reports:
            print(_report_line(r))
            if r.diff:
                print("  diff: " + json.dumps(r.diff))
    if any(r.status == "MISMATCH" for r in reports):
        return EXIT_MISMATCH
    if not args.sweep and reports[0].status == "DEGENERATE":
        return EXIT_DEGENERATE
    return EXIT_OK


def _approx(x) -> complex:
    z = x.to_complex()
    return complex(round(z.real, 10) + 0.0, round(z.imag, 10) + 0.0)


def _sum_lines(label, closed, brute):
    z = _approx(closed)
    return [
        label,
        f"  closed:     {render(closed)}",
        f"  bruteforce: {render(brute)}",
        f"  approx:     {z.real:.10f} {'+' if z.imag >= 0 else '-'} {abs(z.imag):.10f}i",
        f"  agree:      {closed == brute}",
    ]


def cmd_sums(args) -> int:
    spec = _field(args)
    records = []
    if args.kind == "gauss":
        closed, brute = gauss_closed(spec), gauss_bruteforce(spec)
        records.append(({"sum": "gauss"}, f"G(eta) over GF({spec.p}^{spec.m})", closed, brute))
    else:
        if args.a is None:
            raise UsageError("--a is required")
        a = _element(args.a, spec)
        if not a:
            raise UsageError("a must be nonzero")
        bs = [_element(args.b, spec)] if args.b is not None else list(spec.elements())
        if args.kind == "weil":
            if args.u is None:
                raise UsageError("-u is required for Weil sums")
            params = WeilParams(spec, args.u)
            for b in bs:
                records.append((
                    {"sum": "weil", "u": args.u, "a": list(a.coords), "b": list(b.coords)},
                    f"S_{args.u}(a={a}, b={b})",
                    weil_closed(a, b, params),
                    weil_bruteforce(a, b, params),
                ))
        else:
            for b in bs:
                records.append((
                    {"sum": "quad", "a": list(a.coords), "b": list(b.coords)},
                    f"Q(a={a}, b={b})",
                    quad_closed(a, b),
                    quad_bruteforce(a, b),
                ))
    if args.format == "json":
        out = []
        for meta, _, closed, brute in records:
            z = _approx(closed)
            out.append({
                **meta,
                "closed": render(closed),
                "bruteforce": render(brute),
                "coeffs": list(closed.coeffs),
                "approx": [z.real, z.imag],
                "agree": closed == brute,
            })
        sys.stdout.write(dump({"schema_version": SCHEMA_VERSION, "params": {"p": spec.p, "m": spec.m}, "sums": out}))
    else:
        for _, label, closed, brute in records:
            print("\n".join(_sum_lines(label, closed, brute)))
    return EXIT_OK if all(c == b for _, _, c, b in records) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fewweight", description="Few-weight trace codes from defining sets.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, required=True, help="odd prime")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--size-limit", type=int, default=None,
                        help="bound on p^(2m); also read from $FEWWEIGHT_SIZE_LIMIT")

    c = sub.add_parser("construct", parents=[common], help="build a code and print its weight enumerator")
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-u", type=int)
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["d1", "d2", "D1", "D2"])
    src.add_argument("--set", metavar="FILE", help="custom defining set file")
    c.add_argument("--puncture", action="store_true", help="also build the F_p^*-punctured code")
    c.add_argument("--method", choices=["auto", "bruteforce", "charsum"], default="auto")
    c.add_argument("--modulus", help="comma-separated modulus coefficients, lowest degree first")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="compare predicted and computed distributions")
    v.add_argument("-m", type=int)
    v.add_argument("-u", type=int)
    v.add_argument("--family", choices=["d1", "d2", "D1", "D2"])
    v.add_argument("--sweep", action="store_true", help="all m <= --m-max, u <= --u-max, both families")
    v.add_argument("--m-max", type=int, default=4)
    v.add_argument("--u-max", type=int, default=4)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sums", parents=[common], help="evaluate character sums exactly")
    s.add_argument("kind", choices=["gauss", "weil", "quad"])
    s.add_argument("-m", type=int, required=True)
    s.add_argument("-u", type=int)
    s.add_argument("--a", help="element as comma-separated base-p digits, or an F_p constant")
    s.add_argument("--b", help="as --a; omit to tabulate over all b")
    s.add_argument("--modulus")
    s.set_defaults(func=cmd_sums)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except DegenerateCodeError as exc:
        print(f"DEGENERATE: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (UsageError, FieldError, DefiningSetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

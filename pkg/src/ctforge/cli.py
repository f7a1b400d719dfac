"""Command-line front end.

    ctforge verify      -- check the q-Dyson identity (or its q=1 form)
    ctforge certify     -- emit vanishing certificates for negative exponents
    ctforge ct          -- constant terms of parsed expressions
    ctforge tournament  -- exhaustive witness-lemma check
    ctforge identities  -- the classical q-series identity suite
    ctforge bench       -- timing grid, CSV output

Exit codes: 0 success, 1 identity/certification/computation failure,
2 usage or parse errors.  CT_FORGE_THREADS bounds the bench worker pool
(default: machine parallelism).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .ctengine import ct_all_bruteforce, ct_all_series, ct_factored_pfrac
from .errors import CTForgeError
from .identities import run_suite
from .laurent import LaurentPoly
from .parser import ParseError, LoweringError, lower, parse
from .qdyson import (certificate_to_json, certify_vanishing, lhs_value_at,
                     validate_certificate, verify_dyson, verify_qdyson)
from .tournament import exhaustive_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _csv_ints(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def worker_count() -> int:
    env = os.environ.get("CT_FORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ctforge",
        description="Exact constant-term engine and q-Dyson verifier.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify the q-Dyson identity at given parameters")
    p.add_argument("--a0", type=int, required=True, help="the a_0 parameter")
    p.add_argument("--a", type=_csv_ints, required=True,
                   help="comma-separated a_1..a_n")
    p.add_argument("--method", choices=("brute", "replay", "both"),
                   default="brute")
    p.add_argument("--q1", action="store_true",
                   help="check the classical q=1 statement instead")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("certify", help="certify vanishing at negative exponents")
    p.add_argument("--a", type=_csv_ints, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--b", type=int)
    group.add_argument("--all-b", action="store_true")
    p.add_argument("--json-out", type=Path, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="also confirm each root by the series oracle")

    p = sub.add_parser("ct", help="constant term of an expression")
    p.add_argument("--expr", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--var", help="extraction variable, e.g. x0")
    group.add_argument("--all-vars", action="store_true")
    p.add_argument("--trunc", type=int, default=8,
                   help="series window degree for display/cross-checks")
    p.add_argument("--method", choices=("series", "pfrac", "both"),
                   default=None,
                   help="default: both when the expression has poles in the "
                        "extraction variable, series otherwise")

    p = sub.add_parser("tournament", help="exhaustive witness lemma check")
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--a-max", type=int, default=3)

    p = sub.add_parser("identities", help="classical q-series identity suite")
    p.add_argument("--trunc", type=int, default=8)

    p = sub.add_parser("bench", help="timing grid, CSV rows")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--max-a", type=int, default=2)
    p.add_argument("--out", type=Path, default=None)

    return ap


# -- verify ---------------------------------------------------------------------

def run_verify(ap: argparse.ArgumentParser, args) -> int:
    params = (args.a0,) + args.a
    if any(x < 0 for x in params):
        ap.error("parameters must be nonnegative")
    if args.q1:
        report = verify_dyson(args.a0, args.a)
    else:
        report = verify_qdyson(args.a0, args.a, args.method)
    if args.json:
        payload = {
            "command": "verify", "ok": report.ok, "a0": args.a0,
            "a": list(args.a), "method": report.method,
            "lhs": None if report.lhs is None else str(report.lhs),
            "rhs": str(report.rhs), "detail": report.detail,
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK if report.ok else EXIT_FAIL
    for line in report.detail:
        print(line)
    if report.ok:
        if report.lhs is not None:
            print(f"LHS = RHS = {report.rhs}")
        else:
            print(f"identity certified; RHS = {report.rhs}")
        return EXIT_OK
    print(report.counterexample())
    return EXIT_FAIL


# -- certify ----------------------------------------------------------------------

def run_certify(ap: argparse.ArgumentParser, args) -> int:
    if any(x < 0 for x in args.a):
        ap.error("parameters must be nonnegative")
    asum = sum(args.a)
    if args.all_b:
        if asum < 1:
            ap.error("--all-b needs a positive parameter sum")
        bs = list(range(1, asum + 1))
    else:
        if not 1 <= args.b <= asum:
            ap.error(f"--b must lie in [1, {asum}]")
        bs = [args.b]
    from .errors import CertificationError
    for b in bs:
        try:
            cert = certify_vanishing(args.a, b)
            validate_certificate(cert)
        except CertificationError as e:
            print(f"certification FAILED at b={b}: {e}", file=sys.stderr)
            return EXIT_FAIL
        counts = cert.leaf_counts()
        oracle_note = ""
        if args.oracle:
            value = lhs_value_at(args.a, -b)
            if not value.is_zero():
                print(f"series oracle NONZERO at b={b}: {value}", file=sys.stderr)
                return EXIT_FAIL
            oracle_note = ", series oracle zero"
        nodes = sum(counts.values())
        print(f"b={b}: {nodes} nodes, "
              f"{counts.get('zero_case1', 0)} zero_case1, "
              f"{counts.get('zero_case2', 0)} zero_case2, "
              f"{counts.get('recursed', 0)} recursed"
              f"{oracle_note}")
        if args.json_out is not None:
            path = args.json_out
            if len(bs) > 1:
                path = path.with_name(f"{path.stem}_b{b}{path.suffix or '.json'}")
            path.write_text(certificate_to_json(cert))
            print(f"  wrote {path}")
    return EXIT_OK


# -- ct ----------------------------------------------------------------------------

def _parse_var(ap, text: str) -> int:
    if not text.startswith("x") or not text[1:].isdigit():
        ap.error(f"--var must look like x0, x1, ...; got {text!r}")
    return int(text[1:])


def _print_summands(parts: list) -> None:
    if not parts:
        print("0")
        return
    scalars = [p.scalar for p in parts
               if not p.factors and not any(p.mono) and p.poly is None]
    if len(scalars) == len(parts):
        total = scalars[0]
        for s in scalars[1:]:
            total = total + s
        print(total)
        return
    print("  +  ".join(str(p) for p in parts))


def run_ct(ap: argparse.ArgumentParser, args) -> int:
    ast = parse(args.expr)
    if args.all_vars:
        ff = lower(ast)
        value = (ct_all_bruteforce(ff) if not ff.denominator_factors()
                 else ct_all_series(ff))
        print(value)
        return EXIT_OK

    var = _parse_var(ap, args.var)
    from .parser import free_vars
    nvars = max(free_vars(ast) | {var}) + 1
    ff = lower(ast, nvars)
    window = {v: args.trunc for v in range(nvars)}
    window[var] = 0

    method = args.method
    if method is None:
        has_poles = any(var in (v for v, e in enumerate(f.mono) if e)
                        for f in ff.denominator_factors())
        method = "both" if has_poles else "series"

    series_lp = pfrac_parts = None
    if method in ("series", "both"):
        series_lp = ff.expand_within(window).free_of(var)
    if method in ("pfrac", "both"):
        pfrac_parts = ct_factored_pfrac(ff, var)

    if method == "series":
        print(series_lp)
        return EXIT_OK
    if method == "both":
        total = LaurentPoly.zero(nvars)
        for p in pfrac_parts:
            total = total + p.expand_within(window)
        if total != series_lp:
            print("partial fractions and series DISAGREE:", file=sys.stderr)
            print(f"  pfrac : {total}", file=sys.stderr)
            print(f"  series: {series_lp}", file=sys.stderr)
            return EXIT_FAIL
    _print_summands(pfrac_parts)
    return EXIT_OK


# -- tournament ---------------------------------------------------------------------

def run_tournament(args) -> int:
    report = exhaustive_check(args.s_max, args.a_max)
    print(f"instances checked: {report.instances}")
    print(f"case-1 witnesses:  {report.witnesses_case1}")
    print(f"case-2 witnesses:  {report.witnesses_case2}")
    print(f"counterexamples:   {report.failures}")
    return EXIT_OK if report.ok else EXIT_FAIL


# -- identities -----------------------------------------------------------------------

def run_identities(args) -> int:
    failed = []
    for result in run_suite(args.trunc):
        print(f"{'PASS' if result.ok else 'FAIL'}  {result.name}  ({result.detail})")
        if not result.ok:
            failed.append(result.name)
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- bench ------------------------------------------------------------------------------

def _bench_instance(tup: tuple[int, ...]) -> list[str]:
    a0, a = tup[0], tup[1:]
    rows = []
    for method in ("brute", "replay"):
        t0 = time.perf_counter()
        report = verify_qdyson(a0, a, method)
        millis = (time.perf_counter() - t0) * 1000.0
        terms = len(report.rhs.num.c) + len(report.rhs.den.c)
        rows.append(f"{len(a)},{'-'.join(str(x) for x in tup)},"
                    f"{method},{millis:.3f},{terms}")
        if not report.ok:
            raise CTForgeError(f"bench instance failed: {tup}")
    return rows


def run_bench(args) -> int:
    from itertools import product
    instances = []
    for nv in range(1, args.max_n + 2):
        for tup in product(range(args.max_a + 1), repeat=nv):
            instances.append(tup)
    rows = ["n,a,method,millis,terms"]
    workers = worker_count()
    if workers > 1 and len(instances) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_bench_instance, instances):
                rows.extend(chunk)
    else:
        for tup in instances:
            rows.extend(_bench_instance(tup))
    text = "\n".join(rows) + "\n"
    if args.out is not None:
        args.out.write_text(text)
        print(f"wrote {args.out} ({len(rows) - 1} rows)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------------

def main(argv: list[str] | None = None) -> int:
    ap = build_arg_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(ap, args)
        if args.command == "certify":
            return run_certify(ap, args)
        if args.command == "ct":
            return run_ct(ap, args)
        if args.command == "tournament":
            return run_tournament(args)
        if args.command == "identities":
            return run_identities(args)
        if args.command == "bench":
            return run_bench(args)
    except (ParseError, LoweringError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CTForgeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

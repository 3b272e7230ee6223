"""Command-line front end.

Subcommands: poly, roots, verify, mode, field, bench.  Exit codes are the
contract: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.
Large integers are serialized as decimal strings; native JSON numbers
lose precision once coefficients pass 2**53.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import fields, roots
from .rationals import rational_from_string
from .recurrence import build_amn_polynomial, instantiate_solution, polynomial_report, solution_report

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

POLY_M_MAX = 500
FIELD_M_MAX = 50


def _thread_count(args) -> int:
    env = os.environ.get("AMN_THREADS")
    if env is not None:
        return max(1, int(env))
    if args.threads is not None:
        return max(1, args.threads)
    return os.cpu_count() or 1


def _emit(text: str, path: str | None) -> int:
    try:
        if path is None:
            sys.stdout.write(text)
            if not text.endswith("\n"):
                sys.stdout.write("\n")
        else:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _select_b0(args) -> Fraction:
    if args.b0 is not None:
        return rational_from_string(args.b0)
    if args.designated:
        j, sign = args.m + 1, 1
    else:
        if args.j is None:
            raise ValueError("select b0 with --j/--sign, --designated, or --b0")
        j, sign = args.j, +1 if args.sign == "+" else -1
        if not 1 <= j <= args.m + 1:
            raise ValueError(f"root index j must be in 1..{args.m + 1}")
    return Fraction(sign * (2 * j + 1), 3)


def cmd_poly(args) -> int:
    if not 1 <= args.m <= POLY_M_MAX:
        print(f"error: P_m defined for m >= 1 (supported up to {POLY_M_MAX})", file=sys.stderr)
        return EXIT_USAGE
    report = polynomial_report(args.m)
    return _emit(json.dumps(report, indent=2), args.output)


def cmd_verify(args, chain: bool) -> int:
    if not 1 <= args.m <= POLY_M_MAX:
        print(f"error: verification defined for m in 1..{POLY_M_MAX}", file=sys.stderr)
        return EXIT_USAGE
    chain = chain or getattr(args, "chain", False)
    threads = _thread_count(args)
    tamper = getattr(args, "tamper", False)

    if chain and args.m >= 2 and threads > 1:
        # fan the per-m inclusion checks out to workers, then do the rest serially
        t0 = time.perf_counter()
        with ProcessPoolExecutor(max_workers=threads) as pool:
            failures = [f for fs in pool.map(roots.check_inclusion, range(2, args.m + 1)) for f in fs]
        report = roots.verification_report(args.m, chain=False, tamper=tamper)
        report["monotonicity_ok"] = not failures
        report["timings_ms"]["monotonicity_ms"] = (time.perf_counter() - t0) * 1000
    else:
        report = roots.verification_report(args.m, chain=chain, tamper=tamper)

    ok = (
        report["oracle_matches"]
        and report["factorization_ok"]
        and report["system_ok"]
        and report["monotonicity_ok"]
    )
    rc = _emit(json.dumps(report, indent=2), args.output)
    if rc != EXIT_OK:
        return rc
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_mode(args) -> int:
    if not 0 <= args.m <= POLY_M_MAX:
        print(f"error: mode defined for m in 0..{POLY_M_MAX}", file=sys.stderr)
        return EXIT_USAGE
    try:
        b0 = _select_b0(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = solution_report(instantiate_solution(args.m, b0))
    return _emit(json.dumps(report, indent=2), args.output)


def cmd_field(args) -> int:
    if not 0 <= args.m <= FIELD_M_MAX:
        print(f"error: field operations defined for m in 0..{FIELD_M_MAX}", file=sys.stderr)
        return EXIT_USAGE
    try:
        b0 = _select_b0(args)
        f = fields.ZeroModeField(instantiate_solution(args.m, b0))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    import io

    buf = io.StringIO()
    fields.sample_grid(f, buf, extent=args.extent, n=args.grid, step=args.step)
    return _emit(buf.getvalue(), args.output)


def cmd_bench(args) -> int:
    if not 1 <= args.m_max <= POLY_M_MAX:
        print(f"error: bench defined for m-max in 1..{POLY_M_MAX}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for m in range(1, args.m_max + 1):
        t0 = time.perf_counter()
        amn = build_amn_polynomial(m)
        build_ms = (time.perf_counter() - t0) * 1000
        rows.append(
            {
                "m": m,
                "build_ms": build_ms,
                "max_coefficient_bits": max(abs(c).bit_length() for c in amn.integer.coeffs),
            }
        )
    return _emit(json.dumps(rows, indent=2), args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amnmodes",
        description="Exact construction and verification of the Adam-Muratori-Nash "
        "polynomial sequence and its zero modes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_b0=False):
        p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
        p.add_argument("--format", choices=["json", "csv", "text"], default=None)
        p.add_argument("--threads", type=int, default=None,
                       help="worker pool size (env AMN_THREADS overrides)")
        if with_b0:
            p.add_argument("--j", type=int, default=None, help="root index, 1..m+1")
            p.add_argument("--sign", choices=["+", "-"], default="+")
            p.add_argument("--designated", action="store_true",
                           help="use the designated member (j = m+1, +)")
            p.add_argument("--b0", default=None, help='explicit rational b0, e.g. "5/3"')

    p = sub.add_parser("poly", help="emit P_m in rational and integer form")
    p.add_argument("--m", type=int, required=True)
    common(p)

    p = sub.add_parser("roots", help="verify the root set of P_m")
    p.add_argument("--m", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="full exact verification for one m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--chain", action="store_true", help="also check the inclusion chain up to m")
    p.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    common(p)

    p = sub.add_parser("mode", help="emit the coefficient solution for a chosen b0")
    p.add_argument("--m", type=int, required=True)
    common(p, with_b0=True)

    p = sub.add_parser("field", help="sample a zero-mode field on a grid (CSV)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--grid", type=int, default=5, help="points per axis")
    p.add_argument("--extent", type=float, default=2.0, help="half-width of the cube")
    p.add_argument("--step", type=float, default=1e-3, help="finite-difference step")
    common(p, with_b0=True)

    p = sub.add_parser("bench", help="timing and coefficient growth per m")
    p.add_argument("--m-max", type=int, required=True)
    common(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "poly":
        return cmd_poly(args)
    if args.command == "roots":
        return cmd_verify(args, chain=False)
    if args.command == "verify":
        return cmd_verify(args, chain=False)
    if args.command == "mode":
        return cmd_mode(args)
    if args.command == "field":
        return cmd_field(args)
    if args.command == "bench":
        return cmd_bench(args)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``chebzsig {eval,order,omega,classify,scan,selftest}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .cheb_arith import cheb_eval, cheb_eval_mod
from .cheb_order import che_order
from .factorint import DEFAULT_RHO_BUDGET, DEFAULT_TRIAL_BOUND, factorize, is_prime
from .omega_poly import dump_omega_table, omega, omega_eval
from .zsigmondy import TheoremViolation, analyze, default_workers, verify_rectangle

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

CSV_COLUMNS = ["n", "a", "verdict", "detail", "omega_bits", "wall_ms"]


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``A..B`` (or a single integer) into an inclusive interval."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi) if sep else int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if bounds[0] < 2 or bounds[1] < bounds[0]:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 2 <= A <= B")
    return bounds


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def cmd_eval(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise SystemExit(f"error: n must be nonnegative, got {args.n}")
    if args.mod is not None:
        if args.mod < 2:
            raise SystemExit(f"error: modulus must be at least 2, got {args.mod}")
        print(cheb_eval_mod(args.n, args.x, args.mod))
    else:
        print(cheb_eval(args.n, args.x))
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    if not is_prime(args.p):
        fac = factorize(args.p) if args.p > 1 else None
        shown = " * ".join(str(p) for p, e in fac.factors for _ in range(e)) if fac else str(args.p)
        print(f"error: {args.p} is not prime ({args.p} = {shown})", file=sys.stderr)
        return EXIT_USAGE
    r = che_order(args.p, args.a)
    print(r.order)
    print(f"side: {r.witness_side.value}")
    return EXIT_OK


def cmd_omega(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise SystemExit(f"error: n must be positive, got {args.n}")
    if args.dump:
        dump_omega_table(range(1, args.n + 1), sys.stdout)
    elif args.at is None:
        print("[" + ", ".join(str(c) for c in omega(args.n).omega.coeffs) + "]")
    else:
        value = omega_eval(args.n, args.at)
        if value > 1:
            fac = factorize(value)
            print(f"{value} = {str(fac).replace('*', '·')}")
        else:
            print(value)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        r = analyze(args.n, args.a, args.trial_bound, args.rho_budget)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.format == "json":
        print(json.dumps(r.to_json(), indent=2))
    else:
        print(f"Omega_{r.n}({r.a}) = {r.omega_value}")
        for c in r.classifications:
            print(f"  p={c.p}  Che={c.f}  i={c.i}  greatest={c.is_greatest_prime_of_n}  p^2|Omega={c.p_squared_divides_omega}")
        if r.cofactor is not None:
            print(f"  unsplit cofactor {r.cofactor}")
        print(f"verdict: {r.verdict.value} ({r.detail()})")
    return EXIT_UNDECIDED if r.verdict.value == "undecided" else EXIT_OK


def render_scan(report, fmt: str, timing: bool) -> str:
    buf = io.StringIO()
    if fmt == "json":
        doc = {
            "n_range": list(report.n_range),
            "a_range": list(report.a_range),
            "counts": report.counts(),
            "violations": [v.to_json() for v in report.violations],
            "rows": [r.to_json() for r in report.rows],
        }
        if timing:
            doc["elapsed_s"] = round(report.elapsed_s, 3)
        json.dump(doc, buf, indent=1)
        buf.write("\n")
    elif fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in report.rows:
            w.writerow([r.n, r.a, r.verdict.value, r.detail(), r.omega_value.bit_length(),
                        f"{r.wall_ms:.3f}" if timing else ""])
    else:
        c = report.counts()
        buf.write(f"scan n={report.n_range[0]}..{report.n_range[1]} a={report.a_range[0]}..{report.a_range[1]}\n")
        buf.write(f"primitive: {c['primitive']}  exceptional: {c['exceptional']}  undecided: {c['undecided']}\n")
        buf.write(f"violations: {len(report.violations)}\n")
        for r in report.exceptional:
            buf.write(f"  exceptional n={r.n} a={r.a} {r.detail()}\n")
        for r in report.undecided:
            buf.write(f"  undecided n={r.n} a={r.a} {r.detail()}\n")
        for v in report.violations:
            buf.write(f"  VIOLATION n={v.n} a={v.a}: {v.reason}\n")
        if timing:
            buf.write(f"elapsed: {report.elapsed_s:.1f}s\n")
    return buf.getvalue()


def cmd_scan(args: argparse.Namespace) -> int:
    report = verify_rectangle(args.n, args.a, args.trial_bound, args.rho_budget, args.workers)
    text = render_scan(report, args.format, args.timing)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        c = report.counts()
        print(f"primitive={c['primitive']} exceptional={c['exceptional']} "
              f"undecided={c['undecided']} violations={len(report.violations)}")
    else:
        sys.stdout.write(text)
    if report.violations:
        return EXIT_VIOLATION
    if report.undecided:
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    from .selftest import CHECKS, run_selftest

    names = args.check or None
    if names:
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            print(f"error: unknown checks {unknown}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK if run_selftest(names) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebzsig", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print T_n(x), optionally mod m")
    p.add_argument("n", type=int)
    p.add_argument("x", type=int)
    p.add_argument("--mod", type=int)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("order", help="print Che_p(a)")
    p.add_argument("p", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("omega", help="print Omega_n coefficients or Omega_n(a)")
    p.add_argument("n", type=int)
    p.add_argument("--at", type=int)
    p.add_argument("--dump", action="store_true", help="dump Omega_1..Omega_n as 'n: c0 c1 ...'")
    p.set_defaults(func=cmd_omega)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--trial-bound", type=_positive, default=DEFAULT_TRIAL_BOUND)
    budget.add_argument("--rho-budget", type=_positive, default=DEFAULT_RHO_BUDGET)

    p = sub.add_parser("classify", parents=[budget], help="classify the primes of Omega_n(a)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", parents=[budget], help="verify the exceptional list on a rectangle")
    p.add_argument("--n", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--a", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--workers", type=_positive, default=None,
                   help="worker processes (default: $CHEB_ZSIG_WORKERS or CPU count)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock times (output is then not reproducible)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selftest", help="run the property checks")
    p.add_argument("check", nargs="*", help="names of checks to run (default: all)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and args.command == "scan":
        args.workers = default_workers()
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

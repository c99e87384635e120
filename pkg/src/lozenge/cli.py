"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage or parameter error.
"""

import argparse
import json
import sys

from . import closed_forms as cf
from . import determinants as dt
from . import tiling
from .asymptotics import AsymptoticDomainError, AsymptoticParams, convergence_table, write_csv
from .exact import pochhammer_poly
from .report import exact_str
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lozenge",
        description="Exact counts of rhombus tilings with fixed axis rhombi, and their verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print an exact count")
    c.add_argument("kind", nargs="?", default="axis", choices=["axis", "macmahon", "conjecture", "oracle"])
    c.add_argument("--N", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--L", type=_int_list, help="comma-separated axis positions")
    c.add_argument("--parity", default="even", choices=list(cf.PARITIES))
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--c", type=int)
    c.add_argument("--pattern", choices=list(cf.PATTERNS))
    c.add_argument("--r", type=int)
    c.add_argument("--budget", type=int)
    c.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES))
    v.add_argument("--max-N", dest="max_N", type=int)
    v.add_argument("--max-m", dest="max_m", type=int)
    v.add_argument("--budget", type=int)
    v.add_argument("--json", action="store_true", help="accepted for symmetry; the report is always JSON")

    r = sub.add_parser("reconstruct-p", help="reconstruct P(m; N, l) from determinant samples")
    r.add_argument("--N", type=int, required=True)
    r.add_argument("--l", type=int, required=True)
    r.add_argument("--json", action="store_true")

    a = sub.add_parser("asymptotics", help="exact proportions against the limit law, as CSV")
    a.add_argument("--a", type=float, required=True)
    a.add_argument("--b", type=float, required=True)
    a.add_argument("--N", type=_int_list, required=True, help="comma-separated list of N")
    a.add_argument("--csv", action="store_true", help="accepted for symmetry; output is always CSV")
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + n for n in missing))


def _positions(args):
    if args.l is not None and args.L is not None:
        raise UsageError("give either --l or --L, not both")
    if args.l is not None:
        return (args.l,)
    if args.L is not None:
        return tuple(args.L)
    raise UsageError("missing required flag: --l or --L")


def _axis_problem(args):
    _need(args, "N", "m")
    L = _positions(args)
    if len(L) == 1:
        return cf.AxisProblem(args.N, args.m, L[0], args.parity)
    return cf.AxisSet(args.N, args.m, L, args.parity)


def _axis_set_count(s):
    """Count for several axis rhombi via the half-region determinants."""
    N, m, r = s.N, s.m, s.r
    if s.parity == "even":
        power, simple = N - r, dt.det_exact(dt.build_simple_matrix(N - 1, m))
    else:
        power, simple = N + 1 - r, dt.det_exact(dt.build_simple_matrix(N + 1, m - 1))
    value = 2 ** power * simple * dt.det_exact(dt.build_complex_matrix(N, m, s.L))
    if value.denominator != 1:
        raise cf.NonIntegralError(f"count for {s} is not an integer: {value}")
    return value.numerator


def cmd_count(args, out):
    record = {}
    if args.kind == "macmahon" or (args.kind == "oracle" and args.a is not None):
        _need(args, "a", "b", "c")
        shape = cf.HexagonShape(args.a, args.b, args.c)
        if args.kind == "macmahon":
            value = cf.macmahon_count(shape)
        else:
            value = tiling.enumerate_tilings(shape, budget=args.budget)
        record = {"a": args.a, "b": args.b, "c": args.c}
    elif args.kind == "conjecture":
        _need(args, "pattern", "N", "m", "r")
        value = cf.conjecture_count(args.pattern, args.N, args.m, args.r, args.parity)
        record = {"pattern": args.pattern, "N": args.N, "m": args.m, "r": args.r,
                  "L": list(cf.conjecture_positions(args.pattern, args.r)), "parity": args.parity}
    else:
        p = _axis_problem(args)
        if args.kind == "oracle":
            value = tiling.count_with_fixed_axis(p, budget=args.budget)
        elif isinstance(p, cf.AxisProblem):
            value = cf.fixed_rhombus_count(p)
        else:
            value = _axis_set_count(p)
        record = {"N": p.N, "m": p.m, "parity": p.parity}
        if isinstance(p, cf.AxisProblem):
            record["l"] = p.l
        else:
            record["L"] = list(p.L)
    if args.json:
        record["count"] = exact_str(value)
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(exact_str(value) + "\n")
    return EXIT_OK


def cmd_verify(args, out, err):
    rep = run_suite(args.suite, args.max_N, args.max_m, args.budget)
    out.write(rep.to_json() + "\n")
    # timing varies between runs, so it stays off stdout
    err.write(f"{rep.summary()} in {rep.elapsed:.2f}s\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_reconstruct_p(args, out):
    N, l = args.N, args.l
    if N < 1 or not 1 <= l <= N:
        raise cf.ParameterError(f"l out of range: need 1 <= l <= N, got N = {N}, l = {l}")
    P = dt.reconstruct_P(N, l)
    factored = None
    if N - 2 * l + 1 >= 1:
        q = P.exact_div(pochhammer_poly(l, N - 2 * l + 1))
        factored = f"(m+{l})_{N - 2 * l + 1} * ({q.format()})"
    if args.json:
        rec = {"N": N, "l": l, "coefficients": [exact_str(c) for c in P.coeffs], "polynomial": P.format()}
        if factored:
            rec["factored"] = factored
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        out.write(P.format() + "\n")
        if factored:
            out.write(f"= {factored}\n")
    return EXIT_OK


def cmd_asymptotics(args, out, err):
    p = AsymptoticParams(args.a, args.b)
    skipped = []
    rows = convergence_table(p, args.N, skipped)
    for N in skipped:
        err.write(f"skipped N={N}: m = round(a*N) < 1\n")
    write_csv(rows, out)
    return EXIT_OK


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        if args.command == "reconstruct-p":
            return cmd_reconstruct_p(args, out)
        return cmd_asymptotics(args, out, err)
    except (UsageError, cf.ParameterError, AsymptoticDomainError, tiling.BudgetExceeded, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def entry():
    sys.exit(main())

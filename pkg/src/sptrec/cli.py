"""Command-line entry point: ``sptrec <table|verify|numeric|bench> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

from . import analytic, arith, recurrences
from .partitions import ORACLE_LIMIT, OVERPARTITION_LIMIT, oracle_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# name -> (first index, N -> list indexed 0..N)
_TABLES: dict[str, tuple[int, Callable[[int], Sequence[int]]]] = {
    "p": (0, lambda N: recurrences.p_table(N).data),
    "pbar": (0, lambda N: recurrences.pbar_series(N).coeffs),
    "m2": (0, lambda N: recurrences.m2_series(N).coeffs),
    "spt": (1, lambda N: recurrences.spt_table(N).data),
    "sptbar": (1, lambda N: recurrences.sptbar_table(N).data),
    "m2spt": (1, lambda N: recurrences.m2spt_table(N).data),
    "a": (1, arith.a_values),
    "b": (1, arith.b_values),
    "c": (1, arith.c_values),
    "s": (1, arith.s_values),
    "sigma": (1, arith.sigma_values),
    "bigC": (1, arith.big_C_values),
}

IDENTITIES = ("euler", "thm1", "thm2", "thm3", "cor1", "cor2")
NUMERIC_CHECKS = ("gamma_lemma", "proj_b", "proj_c", "beta_asym")
BENCH_STATS = ("p", "spt", "sptbar", "m2spt")
# dense series products are O(N^2); p's inverse is sparse so it runs at full N
SERIES_CAP = 2000


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"range must be >= 1, got {value}")
    return value


def _emit(rows: list[tuple[str, ...]], header: tuple[str, ...], fmt: str, out) -> None:
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")
    else:
        for row in rows:
            record = dict(zip(header, row))
            # indices are small; exact values stay strings
            record["n"] = int(record["n"])
            out.write(json.dumps(record, separators=(",", ":")) + "\n")


def cmd_table(args, out) -> int:
    start, build = _TABLES[args.stat]
    data = build(args.n)
    rows = [(str(n), str(data[n])) for n in range(start, args.n + 1)]
    _emit(rows, ("n", "value"), args.format, out)
    return EXIT_OK


def _oracle_limit(identity: str) -> int:
    return OVERPARTITION_LIMIT if identity in ("thm2", "cor1") else ORACLE_LIMIT


def _identity_reports(identity: str, N: int, use_oracle: bool) -> list[recurrences.VerificationReport]:
    R = recurrences
    cmp = R.compare_tables
    reports = []
    if identity in ("euler", "thm1", "thm2", "thm3"):
        reports.append(R.verify_series_identity(identity, N))
    if identity == "euler":
        reports.append(cmp("euler/series", R.p_table(N).values, R.p_series_table(N).values))
    elif identity == "cor1":
        reports.append(cmp("cor1", R.sptbar_convolution_table(N).values, R.sptbar_table(N).values))
    elif identity == "cor2":
        reports.append(cmp("cor2", R.m2spt_convolution_table(N).values, R.m2spt_table(N).values))

    if use_oracle:
        oracle = oracle_tables(N)
        if identity == "euler":
            reports.append(cmp("euler/oracle", R.p_table(N).values, oracle["p"].values))
        elif identity == "thm1":
            reports.append(cmp("thm1/oracle", R.spt_table(N).values, oracle["spt"].values))
        elif identity == "thm2":
            reports.append(cmp("thm2/oracle", R.sptbar_table(N).values, oracle["sptbar"].values))
        elif identity == "thm3":
            reports.append(cmp("thm3/oracle", R.m2spt_table(N).values, oracle["m2spt"].values))
        elif identity == "cor1":
            reports.append(cmp("cor1/oracle", R.pbar_series(N).coeffs, oracle["pbar"].data, start=0))
        elif identity == "cor2":
            reports.append(cmp("cor2/oracle", R.m2_series(N).coeffs, oracle["m2"].data, start=0))
    return reports


def cmd_verify(args, out) -> int:
    identities = IDENTITIES if args.identity == "all" else (args.identity,)
    if args.oracle:
        for ident in identities:
            limit = _oracle_limit(ident)
            if args.n > limit:
                raise UsageError(
                    f"refusing: oracle enumeration for {ident} is limited to n <= {limit}, got {args.n}"
                )
    ok = True
    for ident in identities:
        for report in _identity_reports(ident, args.n, args.oracle):
            out.write(report.summary() + "\n")
            ok = ok and report.passed
    return EXIT_OK if ok else EXIT_FAIL


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        grid = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"invalid grid {text!r}: expected comma-separated positive numbers")
    if not grid or any(not g > 0 for g in grid):
        raise UsageError(f"invalid grid {text!r}: values must be positive")
    return grid


def cmd_numeric(args, out) -> int:
    if args.check == "gamma_lemma":
        results = analytic.gamma_lemma_grid(_parse_grid(args.grid))
    elif args.check in ("proj_b", "proj_c"):
        if args.n > 200:
            raise UsageError(f"--n must be <= 200 for {args.check}, got {args.n}")
        fn = analytic.projected_coefficient_B if args.check == "proj_b" else analytic.projected_coefficient_C
        results = [fn(N) for N in range(1, args.n + 1)]
    else:
        results = [analytic.beta_asymptotic_check()]
    for res in results:
        out.write(res.line() + "\n")
    worst = max(r.abs_error for r in results)
    passed = all(r.passed for r in results)
    out.write(
        f"{args.check}: {len(results)} checks, {'all pass' if passed else 'FAILURES'}, max abs error {worst:.3g}\n"
    )
    return EXIT_OK if passed else EXIT_FAIL


def _timed(fn, *a):
    t0 = time.perf_counter()
    result = fn(*a)
    return result, time.perf_counter() - t0


def cmd_bench(args, out) -> int:
    N, stat = args.n, args.stat
    R = recurrences
    recurrence = {"p": R.p_table, "spt": R.spt_table, "sptbar": R.sptbar_table, "m2spt": R.m2spt_table}[stat]
    series = {
        "p": R.p_series_table,
        "spt": R.spt_series_table,
        "sptbar": R.sptbar_convolution_table,
        "m2spt": R.m2spt_convolution_table,
    }[stat]
    series_n = N if stat == "p" else min(N, SERIES_CAP)
    oracle_limit = OVERPARTITION_LIMIT if stat == "sptbar" else ORACLE_LIMIT

    rec, t_rec = _timed(recurrence, N)
    ser, t_ser = _timed(series, series_n)
    rows = [("recurrence", str(N), f"{t_rec:.6f}"), ("series", str(series_n), f"{t_ser:.6f}")]
    agree = rec.data[: series_n + 1] == ser.data
    if N <= oracle_limit:
        orc, t_orc = _timed(oracle_tables, N)
        rows.append(("oracle", str(N), f"{t_orc:.6f}"))
        agree = agree and rec.data == orc[stat].data
    if not agree:
        print(f"bench {stat}: evaluation paths disagree at N = {N}", file=sys.stderr)
        return EXIT_FAIL
    _emit(rows, ("method", "n", "seconds"), args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sptrec", description="Smallest-parts recurrences and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="coefficient table for one statistic")
    p.add_argument("--stat", required=True, choices=sorted(_TABLES))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="verify identities over 1..n")
    p.add_argument("--identity", required=True, choices=IDENTITIES + ("all",))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--oracle", action="store_true", help="also compare against brute-force enumeration")

    p = sub.add_parser("numeric", help="floating-point checks of the projection integrals")
    p.add_argument("--check", required=True, choices=NUMERIC_CHECKS)
    p.add_argument("--n", type=_positive, default=50, help="N range for proj_b / proj_c")
    p.add_argument("--grid", default=",".join(str(g) for g in analytic.DEFAULT_GRID), help="A,B values for gamma_lemma")

    p = sub.add_parser("bench", help="time recurrence vs series (vs oracle) after checking they agree")
    p.add_argument("--stat", required=True, choices=BENCH_STATS)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"table": cmd_table, "verify": cmd_verify, "numeric": cmd_numeric, "bench": cmd_bench}[args.command]
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"sptrec {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

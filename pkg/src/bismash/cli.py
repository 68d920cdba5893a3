"""Command-line front end: census tables, verification reports, plot data.

Three subcommands:

  indicators   per-module indicator rows for one degree (optionally one
               dimension), plus summary tallies on stderr
  count        rows of the counting tower: M, T, R, X, O, Oj, Iplus,
               Izero, It2, ratios
  verify       oracle-equivalence and axiom suite; exit 3 on mismatch

Data goes to stdout (or --out FILE) as CSV (RFC-4180-style quoting,
header row) or JSON (array of objects); diagnostics go to stderr.
Output is byte-deterministic for fixed arguments: rows are sorted, the
column set is fixed per subcommand, and no timestamps appear.

Exit codes: 0 success, 1 usage error, 2 workload guard exceeded,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import bulk
from .construct import WorkloadExceeded, default_max_work, enumerate_involutions
from .counting import (
    CountContext,
    count_I_odd,
    count_I_t2,
    count_M,
    count_O,
    count_O_j,
    count_R,
    count_T,
    count_X,
    e_set,
    ratio_report,
)
from .hopf import (
    check_antipode_axiom,
    check_counit_axiom,
    check_multiplication_associative,
)
from .indicator import indicator_table, tally_indicators
from .matched_pair import divisors

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_WORKLOAD = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad args; the contract reserves 2 for the
    # workload guard, so route usage failures to exit code 1.
    def error(self, message: str):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="bismash", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument(
            "--max-work",
            type=int,
            default=None,
            help="candidate cap for enumerations (default BISMASH_MAX_WORK or 1e8)",
        )
        sp.add_argument(
            "--threads", type=int, default=0, help="worker threads (0 = auto)"
        )

    sp = sub.add_parser("indicators", help="indicator table for one degree")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, default=None, help="restrict to one dimension")
    common(sp)

    sp = sub.add_parser("count", help="counting-tower census rows")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument(
        "--quantity",
        required=True,
        choices=("M", "T", "R", "X", "O", "Oj", "Iplus", "Izero", "It2", "ratios"),
    )
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--j", type=int, default=None, help="orbit value x(t)/t for Oj")
    sp.add_argument(
        "--m-max", type=int, default=200, help="largest multiplier for ratios"
    )
    common(sp)

    sp = sub.add_parser("verify", help="oracle equivalence and axiom suite")
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    return p


def _emit(rows: list[dict], columns: list[str], args) -> None:
    if args.format == "json":
        text = json.dumps(
            [{c: row.get(c, "") for c in columns} for row in rows], indent=0
        )
        text += "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: row.get(c, "") for c in columns})
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_IND_COLUMNS = ["n", "t", "orbit_rep", "i", "indicator"]
_COUNT_COLUMNS = ["n", "t", "quantity", "r", "j", "i", "value"]
_VERIFY_COLUMNS = ["check", "detail", "status"]


def _cmd_indicators(args) -> int:
    n = args.n
    if n < 2:
        raise _UsageError(f"--n must be at least 2, got {n}")
    if args.t is not None and (args.t < 1 or n % args.t):
        raise _UsageError(f"--t must divide n={n}")
    rows = indicator_table(n, args.t, max_work=args.max_work)
    out = [
        {
            "n": n,
            "t": d.t,
            "orbit_rep": str(d.orbit_rep),
            "i": d.i,
            "indicator": v,
        }
        for d, v in rows
    ]
    _emit(out, _IND_COLUMNS, args)
    tal = tally_indicators(rows)
    print(
        f"summary n={n} t={args.t if args.t is not None else 'all'}: "
        f"+1={tal[1]} -1={tal[-1]} 0={tal[0]}",
        file=sys.stderr,
    )
    return EXIT_OK


def _count_rows(args) -> list[dict]:
    n = args.n
    ctx = CountContext(n)
    q = args.quantity
    ts = [args.t] if args.t is not None else divisors(n)
    if args.t is not None and (args.t < 1 or n % args.t):
        raise _UsageError(f"--t must divide n={n}")
    rows: list[dict] = []

    def row(quantity, value, t=None, r="", j="", i=""):
        rows.append(
            {"n": n, "t": t, "quantity": quantity, "r": r, "j": j, "i": i,
             "value": value}
        )

    if q == "M":
        for t in ts:
            row("M", count_M(ctx, t), t)
    elif q == "T":
        for t in ts:
            row("T", count_T(ctx, t), t)
    elif q == "R":
        rs = [args.r] if args.r is not None else list(range(1, n + 1))
        for t in ts:
            for r in rs:
                row("R", count_R(ctx, t, r), t, r)
    elif q == "X":
        for t in ts:
            rs = [args.r] if args.r is not None else list(range(1, t + 1))
            for r in rs:
                row("X", count_X(ctx, t, r), t, r)
    elif q == "O":
        for t in ts:
            rs = [args.r] if args.r is not None else list(range(0, t + 1))
            for r in rs:
                row("O", count_O(ctx, t, r), t, r)
    elif q == "Oj":
        for t in ts:
            if not 1 < t < n:
                raise _UsageError(f"Oj needs 1 < t < n, got t={t}")
            js = [args.j] if args.j is not None else list(e_set(n // t))
            rs = [args.r] if args.r is not None else list(range(1, t + 1))
            for j in js:
                for r in rs:
                    row("Oj", count_O_j(ctx, t, r, j), t, r, j)
    elif q in ("Iplus", "Izero"):
        for t in ts:
            if t % 2 == 0:
                if args.t is not None:
                    raise _UsageError(f"{q} needs odd t, got t={t}")
                continue
            plus, zero = count_I_odd(ctx, t)
            row(q, plus if q == "Iplus" else zero, t)
    elif q == "It2":
        if n % 2:
            raise _UsageError(f"It2 needs even n, got n={n}")
        plus, minus, zero = count_I_t2(ctx)
        row("It2_plus", plus, 2)
        row("It2_minus", minus, 2)
        row("It2_zero", zero, 2)
    elif q == "ratios":
        t = args.t if args.t is not None else 2
        if t != 2 and t % 2 == 0:
            raise _UsageError("ratios supports odd t or t=2")
        for rep in ratio_report(t, range(2, args.m_max + 1)):
            for name in ("ratio_nonzero", "t_over_m", "m_over_inv"):
                row(name, f"{float(rep[name]):.12g}", t, rep["m"])
            for name in ("e_size", "e_bound", "omega", "phi"):
                row(name, rep[name], t, rep["m"])
            for name in ("omega_bound", "phi_bound"):
                val = rep[name]
                row(name, "" if val is None else f"{val:.12g}", t, rep["m"])
    return rows


def _cmd_count(args) -> int:
    if args.n < 2:
        raise _UsageError(f"--n must be at least 2, got {args.n}")
    rows = _count_rows(args)
    _emit(rows, _COUNT_COLUMNS, args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    n = args.n
    if n < 2:
        raise _UsageError(f"--n must be at least 2, got {n}")
    max_work = args.max_work if args.max_work is not None else default_max_work()
    if math.factorial(n - 1) > max_work:
        print(
            f"workload guard: sweep of {math.factorial(n - 1)} permutations "
            f"exceeds limit {max_work}",
            file=sys.stderr,
        )
        return EXIT_WORKLOAD
    rows: list[dict] = []

    def report(check: str, ok: bool, detail: str) -> None:
        rows.append(
            {"check": check, "detail": detail, "status": "PASS" if ok else "FAIL"}
        )

    for k in range(2, min(n, 4) + 1):
        bad = check_counit_axiom(k)
        report(f"hopf_counit n={k}", not bad, f"{len(bad)} offending basis elements")
        bad = check_antipode_axiom(k)
        report(f"hopf_antipode n={k}", not bad, f"{len(bad)} offending basis elements")
        bad = check_multiplication_associative(k)
        report(f"hopf_associative n={k}", not bad, f"{len(bad)} offending triples")

    res = bulk.sweep(n, threads=args.threads)
    report(
        "indicator_oracle_equivalence",
        res.mismatches == 0,
        f"{res.mismatches} mismatches over {res.irrep_classes} modules",
    )
    ctx = CountContext(n)
    m_ok = all(res.m_counts[t] == count_M(ctx, t) for t in divisors(n))
    report("stabilizer_census", m_ok, f"M counts for t in {divisors(n)}")
    sum_ok = sum(res.m_counts.values()) == math.factorial(n - 1)
    report("stabilizer_partition", sum_ok, f"sum M = (n-1)! = {math.factorial(n-1)}")
    dim_ok = res.dim_squared_sum == math.factorial(n)
    report("dimension_identity", dim_ok, f"sum dim^2 = n! = {math.factorial(n)}")

    t_ok, r_ok = True, True
    for t in divisors(n):
        inv = list(enumerate_involutions(n, t, max_work=max_work))
        t_ok &= len(inv) == count_T(ctx, t)
        for r in range(1, n + 1):
            want = sum(
                1 for x in inv if sum(1 for i, v in enumerate(x.word) if v == i) == r
            )
            r_ok &= want == count_R(ctx, t, r)
    report("involution_census", t_ok, "T counts vs enumeration, all t")
    report("fixed_point_census", r_ok, "R counts vs enumeration, all (t, r)")

    xo_ok = True
    for t in divisors(n):
        hist = res.orbit_involutions[t]
        for r in range(0, t + 1):
            want = hist.get(r, 0)
            xo_ok &= want == count_O(ctx, t, r)
            if r:
                xo_ok &= r * want == count_X(ctx, t, r)
    report("orbit_involution_census", xo_ok, "X and O counts vs enumeration")

    if n % 2 == 0:
        plus, minus, zero = count_I_t2(ctx)
        tal = res.tallies[2]
        ok = (tal[1], tal[-1], tal[0]) == (plus, minus, zero)
        report("I_t2", ok, f"{n} -> ({plus},{minus},{zero})")

    _emit(rows, _VERIFY_COLUMNS, args)
    failed = [r for r in rows if r["status"] == "FAIL"]
    for r in failed:
        print(f"mismatch: {r['check']}: {r['detail']}", file=sys.stderr)
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "indicators":
            return _cmd_indicators(args)
        if args.command == "count":
            return _cmd_count(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WorkloadExceeded as exc:
        print(f"workload exceeded: {exc}", file=sys.stderr)
        return EXIT_WORKLOAD


if __name__ == "__main__":
    sys.exit(main())

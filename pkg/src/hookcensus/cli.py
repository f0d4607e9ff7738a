"""Command-line surface: exact count tables, verification suites, constants,
asymptotic reports, and conjecture scans.

All workload output is deterministic: the same flags produce the same
bytes on stdout.  Run metadata appears only on stderr behind --verbose.
Exit codes: 0 success, 1 failed verification, 2 invalid parameters,
3 oracle/series integrity disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import mpmath as mp

from . import asymptotics, cache, conjectures, exactconst, qseries
from .partitions import (PartitionClass, balanced_identity_check, class_size,
                         count_hooks, nekrasov_okounkov_check)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3

GAMMA_DIGITS = 30


def _parse_span(text: str) -> tuple[int, int]:
    """'a..b' -> (a, b); a single integer means (a, a)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part != ""]


def _emit(lines, out) -> None:
    for line in lines:
        out.write(line + "\n")


# -- table -------------------------------------------------------------------

def _grid_key(cls: PartitionClass, source: str, h0: int, h1: int, n0: int, n1: int) -> str:
    return f"hook-counts_{cls.value}_{source}_h{h0}-{h1}_n{n0}-{n1}"


def _compute_grid(cls: PartitionClass, source: str,
                  h0: int, h1: int, n0: int, n1: int) -> list[list[str]]:
    counts: list[list[str]] = []
    if source == "oracle":
        for h in range(h0, h1 + 1):
            counts.append([str(count_hooks(cls, h, n)) for n in range(n0, n1 + 1)])
    else:
        for h in range(h0, h1 + 1):
            coeffs = asymptotics.exact_hook_counts(cls, h, n1)
            counts.append([str(coeffs[n]) for n in range(n0, n1 + 1)])
    return counts


def _grid_entry(cls: PartitionClass, source: str, h0: int, h1: int, n0: int, n1: int,
                use_cache: bool) -> cache.CacheEntry:
    key = _grid_key(cls, source, h0, h1, n0, n1)
    params = {"class": cls.value, "source": source,
              "h_min": h0, "h_max": h1, "n_min": n0, "n_max": n1}
    if use_cache:
        entry = cache.load(key)
        if entry is not None and entry.kind == "hook-counts" and entry.params == params:
            return entry
    payload = {"counts": _compute_grid(cls, source, h0, h1, n0, n1)}
    entry = cache.CacheEntry.build("hook-counts", params, payload)
    if use_cache:
        cache.store(key, entry)
    return entry


def _cmd_table(args, out) -> int:
    cls = PartitionClass.from_tag(args.partition_class)
    h0, h1 = args.h
    n0, n1 = args.n
    if h0 < 1 or h0 > h1 or n0 < 0 or n0 > n1:
        print("table: empty or invalid h/n range", file=sys.stderr)
        return EXIT_USAGE
    sources = ["oracle", "series"] if args.source == "both" else [args.source]
    if "series" in sources:
        if cls not in (PartitionClass.ODD, PartitionClass.DISTINCT):
            print(f"table: no series source for class {cls.value!r}", file=sys.stderr)
            return EXIT_USAGE
        if n1 > asymptotics.MAX_SERIES_ORDER:
            print(f"table: n above series order cap {asymptotics.MAX_SERIES_ORDER}",
                  file=sys.stderr)
            return EXIT_USAGE
    entries = {src: _grid_entry(cls, src, h0, h1, n0, n1, not args.no_cache)
               for src in sources}
    if len(entries) == 2:
        oracle_counts = entries["oracle"].payload["counts"]
        series_counts = entries["series"].payload["counts"]
        if oracle_counts != series_counts:
            for i, (row_o, row_s) in enumerate(zip(oracle_counts, series_counts)):
                for jdx, (vo, vs) in enumerate(zip(row_o, row_s)):
                    if vo != vs:
                        print(f"table: integrity failure at h={h0 + i} n={n0 + jdx}: "
                              f"oracle={vo} series={vs}", file=sys.stderr)
                        return EXIT_INTEGRITY
            return EXIT_INTEGRITY
    entry = entries[sources[0]]
    if args.format == "json":
        out.write(cache.canonical_json(entry.to_document()) + "\n")
    else:
        lines = ["class,h,n,count"]
        for i, row in enumerate(entry.payload["counts"]):
            for jdx, value in enumerate(row):
                lines.append(f"{cls.value},{h0 + i},{n0 + jdx},{value}")
        _emit(lines, out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _suite_gf(h_max: int, n_max: int) -> tuple[int, list[str]]:
    failures = []
    checks = 0
    for h in range(1, h_max + 1):
        odd_series = qseries.hook_gf_odd(h, n_max).coeffs
        distinct_series = qseries.hook_gf_distinct(h, n_max).coeffs
        for n in range(n_max + 1):
            checks += 2
            oracle = count_hooks(PartitionClass.ODD, h, n)
            if odd_series[n] != oracle:
                failures.append(f"odd h={h} n={n}: series={odd_series[n]} oracle={oracle}")
            oracle = count_hooks(PartitionClass.DISTINCT, h, n)
            if distinct_series[n] != oracle:
                failures.append(
                    f"distinct h={h} n={n}: series={distinct_series[n]} oracle={oracle}")
    return checks, failures


def _suite_identities(order: int, limit: int, euler_order: int) -> tuple[int, list[str]]:
    failures = list(qseries.identity_suite(order, limit))
    checks = 2 * (limit + 1) ** 2 + 1
    euler = qseries.pochhammer_infinite(-1, euler_order) * \
        qseries.pochhammer_infinite(1, euler_order, 1, 2)
    checks += 1
    if euler.coefficients(euler_order) != (1,) + (0,) * euler_order:
        first_bad = next(t for t, c in enumerate(euler.coeffs)
                         if c != (1 if t == 0 else 0))
        failures.append(f"euler-product exponent={first_bad} value={euler.coeffs[first_bad]}")
    return checks, failures


def _suite_constants(h_max: int) -> tuple[int, list[str]]:
    failures = []
    checks = 0
    for h in range(1, h_max + 1):
        checks += 3
        closed = exactconst.odd_hook_constant(h)
        integral = exactconst.odd_hook_constant_from_integrals(h)
        if closed != integral:
            failures.append(f"odd-constant h={h}: closed={closed} integral={integral}")
        beta_closed = exactconst.distinct_hook_constant(h)
        beta_integral = exactconst.distinct_hook_constant_from_integrals(h)
        if beta_closed != beta_integral:
            failures.append(f"distinct-constant h={h}: closed={beta_closed} "
                            f"integral={beta_integral}")
        if exactconst.harmonic_tail(h) != exactconst.harmonic_tail_from_double_sum(h):
            failures.append(f"harmonic-tail h={h}: closed and double-sum forms differ")
    pins = [
        ("alpha_2", exactconst.odd_hook_constant(2), Fraction(3, 4)),
        ("alpha_3", exactconst.odd_hook_constant(3), Fraction(2, 3)),
        ("beta_2", exactconst.distinct_hook_constant(2), exactconst.Log2Number(Fraction(1, 2))),
        ("beta_3", exactconst.distinct_hook_constant(3),
         exactconst.Log2Number(Fraction(-1, 8), Fraction(1))),
    ]
    for name, got, expected in pins:
        checks += 1
        if got != expected:
            failures.append(f"pin {name}: got {got} expected {expected}")
    with mp.workprec(exactconst.DEFAULT_PRECISION):
        references = {
            1: 1 / (2 * mp.log(2)),
            2: mp.mpf(3) / 2,
            3: 2 / (3 * (mp.log(2) - mp.mpf(1) / 8)),
        }
        for h, reference in references.items():
            checks += 1
            got = exactconst.hook_ratio(h)
            if abs(got - reference) > mp.mpf("1e-12"):
                failures.append(f"ratio h={h}: got {mp.nstr(got, 20)} "
                                f"expected {mp.nstr(reference, 20)}")
    return checks, failures


def _suite_balanced(n_max: int) -> tuple[int, list[str]]:
    failures = []
    checks = 0
    for cls in (PartitionClass.ODD, PartitionClass.DISTINCT,
                PartitionClass.SELF_CONJUGATE, PartitionClass.DISTINCT_ODD):
        for n in range(n_max + 1):
            checks += 1
            if not balanced_identity_check(cls, n):
                total = sum(count_hooks(cls, h, n) for h in range(1, n + 1))
                failures.append(f"balanced {cls.value} n={n}: hooks={total} "
                                f"expected={n * class_size(cls, n)}")
    return checks, failures


def _suite_andrews(n_max: int) -> tuple[int, list[str]]:
    failures = []
    ones_odd = qseries.hook_gf_odd(1, n_max).coeffs
    ones_distinct = qseries.hook_gf_distinct(1, n_max).coeffs
    for n in range(n_max + 1):
        if ones_distinct[n] < ones_odd[n]:
            failures.append(f"one-hook inequality n={n}: distinct={ones_distinct[n]} "
                            f"odd={ones_odd[n]}")
    return n_max + 1, failures


def _suite_nekrasov(n_max: int, z_values: list[int]) -> tuple[int, list[str]]:
    failures = []
    for z in z_values:
        if not nekrasov_okounkov_check(n_max, z):
            failures.append(f"hook-product identity fails for z={z}, n<={n_max}")
    return len(z_values), failures


def _cmd_verify(args, out) -> int:
    if args.suite == "gf":
        checks, failures = _suite_gf(args.h_max, args.n_max)
    elif args.suite == "identities":
        checks, failures = _suite_identities(args.order, args.limit, args.euler_order)
    elif args.suite == "constants":
        checks, failures = _suite_constants(args.h_max)
    elif args.suite == "balanced":
        checks, failures = _suite_balanced(args.n_max)
    elif args.suite == "andrews":
        checks, failures = _suite_andrews(args.n_max)
    else:
        checks, failures = _suite_nekrasov(args.n_max, _parse_int_list(args.z))
    for failure in failures:
        out.write(f"FAIL {failure}\n")
    status = "FAIL" if failures else "PASS"
    out.write(f"verify {args.suite}: {status} ({checks} checks, {len(failures)} failures)\n")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


# -- constants / asymptotics / conjectures ------------------------------------

def _cmd_constants(args, out) -> int:
    if args.h_max < 1:
        print("constants: h-max must be positive", file=sys.stderr)
        return EXIT_USAGE
    records = [exactconst.constants_record(h) for h in range(1, args.h_max + 1)]
    if args.format == "json":
        docs = [r.to_json_dict(GAMMA_DIGITS) for r in records]
        out.write(json.dumps(docs, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["h,alpha,beta_r,beta_s,gamma"]
        for r in records:
            d = r.to_json_dict(GAMMA_DIGITS)
            lines.append(f"{r.h},{d['alpha']},{d['beta']['r']},{d['beta']['s']},{d['gamma']}")
        _emit(lines, out)
    if args.plot_dir is not None:
        from . import plotting
        directory = Path(args.plot_dir)
        directory.mkdir(parents=True, exist_ok=True)
        plotting.save_constants_figure(records, directory / "constants.png")
    return EXIT_OK


def _cmd_asymptotics(args, out) -> int:
    cls = PartitionClass.from_tag(args.partition_class)
    h_list = _parse_int_list(args.h)
    n_list = _parse_int_list(args.n)
    if not h_list or not n_list or min(h_list) < 1 or min(n_list) < 1:
        print("asymptotics: h and n must be nonempty lists of positive integers",
              file=sys.stderr)
        return EXIT_USAGE
    if max(n_list) > asymptotics.MAX_SERIES_ORDER:
        print(f"asymptotics: n above series order cap {asymptotics.MAX_SERIES_ORDER}",
              file=sys.stderr)
        return EXIT_USAGE
    if cls not in (PartitionClass.ODD, PartitionClass.DISTINCT):
        print(f"asymptotics: no main term for class {cls.value!r}", file=sys.stderr)
        return EXIT_USAGE
    report = asymptotics.convergence_report(h_list, n_list, cls)
    if args.format == "json":
        doc = {
            "rows": [{"formula": r.formula, "h": r.h, "n_or_z": r.n_or_z,
                      "predicted_log": r.predicted_log, "observed": str(r.observed),
                      "ratio": r.ratio} for r in report.rows],
            "non_monotone": [list(item) for item in report.non_monotone],
        }
        out.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["formula,h,n_or_z,predicted,observed,ratio"]
        for r in report.rows:
            ratio = repr(r.ratio) if r.ratio is not None else ""
            lines.append(f"{r.formula},{r.h},{r.n_or_z},{repr(r.predicted_log)},"
                         f"{r.observed},{ratio}")
        _emit(lines, out)
    if args.plot_dir is not None:
        from . import plotting
        directory = Path(args.plot_dir)
        directory.mkdir(parents=True, exist_ok=True)
        plotting.save_convergence_figure(
            report.rows, directory / f"convergence_{cls.value}.png")
    return EXIT_OK


def _cmd_conjectures(args, out) -> int:
    if args.m_max < 1 or args.n_max < 1:
        print("conjectures: m-max and n-max must be positive", file=sys.stderr)
        return EXIT_USAGE
    scans = [
        conjectures.divisibility_scan(args.m_max, args.n_max),
        conjectures.star_class_bijection_scan(args.n_max),
        conjectures.star_balanced_scan(args.n_max),
    ]
    ratio_scan = None
    if args.ratio_h is not None:
        lo, hi = args.ratio_n
        ratio_scan = conjectures.star_ratio_evidence(args.ratio_h, list(range(lo, hi + 1)))
        scans.append(ratio_scan)
    docs = [scan.to_json_dict() for scan in scans]
    out.write(json.dumps(docs, sort_keys=True, separators=(",", ":")) + "\n")
    if args.plot_dir is not None and ratio_scan is not None:
        from . import plotting
        directory = Path(args.plot_dir)
        directory.mkdir(parents=True, exist_ok=True)
        plotting.save_star_ratio_figure(ratio_scan, directory / "star_ratio.png")
    if any(scan.counterexamples for scan in scans):
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookcensus",
        description="Exact hook-length statistics for restricted partition classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit an exact (h, n) hook-count grid")
    table.add_argument("--class", dest="partition_class", default="odd",
                       choices=[c.value for c in PartitionClass])
    table.add_argument("--h", type=_parse_span, required=True, metavar="A..B")
    table.add_argument("--n", type=_parse_span, required=True, metavar="A..B")
    table.add_argument("--source", choices=["oracle", "series", "both"], default="oracle")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--no-cache", action="store_true",
                       help="compute fresh and do not touch the cache directory")

    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument("suite", choices=["gf", "identities", "constants",
                                          "balanced", "andrews", "nekrasov"])
    verify.add_argument("--h-max", type=int, default=8)
    verify.add_argument("--n-max", type=int, default=40)
    verify.add_argument("--order", type=int, default=40)
    verify.add_argument("--limit", type=int, default=6)
    verify.add_argument("--euler-order", type=int, default=200)
    verify.add_argument("--z", default="0,1,4,9,2")

    constants = sub.add_parser("constants", help="emit exact constants records")
    constants.add_argument("--h-max", type=int, required=True)
    constants.add_argument("--format", choices=["csv", "json"], default="csv")
    constants.add_argument("--plot-dir", default=None)

    asym = sub.add_parser("asymptotics", help="compare exact counts to main terms")
    asym.add_argument("--h", required=True, metavar="H1,H2,...")
    asym.add_argument("--n", required=True, metavar="N1,N2,...")
    asym.add_argument("--class", dest="partition_class", default="odd",
                      choices=[PartitionClass.ODD.value, PartitionClass.DISTINCT.value])
    asym.add_argument("--format", choices=["csv", "json"], default="csv")
    asym.add_argument("--plot-dir", default=None)

    conj = sub.add_parser("conjectures", help="run the starred-class evidence scans")
    conj.add_argument("--m-max", type=int, required=True)
    conj.add_argument("--n-max", type=int, required=True)
    conj.add_argument("--ratio-h", type=int, default=None)
    conj.add_argument("--ratio-n", type=_parse_span, default=(20, 40), metavar="A..B")
    conj.add_argument("--plot-dir", default=None)

    for p in (table, verify, constants, asym, conj):
        p.add_argument("--verbose", action="store_true",
                       help="print run metadata to stderr")
    return parser


_DISPATCH = {
    "table": _cmd_table,
    "verify": _cmd_verify,
    "constants": _cmd_constants,
    "asymptotics": _cmd_asymptotics,
    "conjectures": _cmd_conjectures,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching EXIT_USAGE
        return int(exc.code or 0)
    if getattr(args, "verbose", False):
        print(f"hookcensus {args.command}: {vars(args)}", file=sys.stderr)
    try:
        return _DISPATCH[args.command](args, sys.stdout)
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

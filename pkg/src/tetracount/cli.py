"""Command-line front end (``tetra``).

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 integrity
or overflow failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TextIO

from tetracount import analysis, enumeration, fixtures, svg
from tetracount.cache import HEADER, NullCache, ResultCache, default_path, format_record
from tetracount.closed_forms import (
    diameter_bounds,
    fix_four_cycle,
    fix_three_cycle,
    perimeter_bounds,
    stable_a,
    stable_b,
)
from tetracount.errors import (
    CapacityError,
    CeilingError,
    CountOverflowError,
    IntegrityError,
)
from tetracount.oracle import DEFAULT_CEILING, oracle_count_perimeter
from tetracount.symmetry import FixVector, burnside_full, burnside_rotations

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTEGRITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``N``, ``LO:HI`` or ``LO:HI:STEP``, inclusive of ``HI``."""
    try:
        parts = [int(p) for p in text.split(":")]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if len(parts) == 1:
        parts = [parts[0], parts[0]]
    if len(parts) not in (2, 3) or parts[0] < 1 or parts[1] < parts[0]:
        raise UsageError(f"bad range {text!r}")
    step = parts[2] if len(parts) == 3 else 1
    if step < 1:
        raise UsageError(f"bad range {text!r}")
    return range(parts[0], parts[1] + 1, step)


class Counts:
    """Count lookups that consult the cache first and record what they compute."""

    def __init__(self, cache: ResultCache, workers: int, engine: str = "auto"):
        self.cache = cache
        self.workers = workers
        self.engine = engine

    def cell(self, n: int, d: int) -> int:
        lo, hi = perimeter_bounds(d)
        if not lo <= n <= hi:
            return 0
        hit = self.cache.get("t_nd", n, d)
        if hit is None:
            hit = enumeration.count_joint(n, d, self.workers, self.engine)
            self.cache.put("t_nd", n, d, hit)
        return hit

    def row(self, n: int) -> dict[int, int]:
        out = {d: self.cell(n, d) for d in diameter_bounds(n)}
        if out:
            self.cache.put("t_n", n, None, enumeration.checked_sum(out.values()))
            self.cache.put("mu_n", n, None, max(out.values()))
        return out

    def rows(self, ns: range) -> dict[int, dict[int, int]]:
        """Rows for every ``n`` in ``ns``; contiguous ranges share column walks."""
        missing = [
            n for n in ns
            if any(self.cache.get("t_nd", n, d) is None for d in diameter_bounds(n))
        ]
        if missing and ns.step == 1 and len(missing) > 1:
            table = enumeration.joint_table(min(missing), max(missing), self.workers)
            for n in missing:
                for d in diameter_bounds(n):
                    self.cache.put("t_nd", n, d, table.get(n, d))
        return {n: self.row(n) for n in ns}

    def perimeter(self, n: int) -> int:
        hit = self.cache.get("t_n", n)
        if hit is None:
            hit = enumeration.checked_sum(self.row(n).values())
            self.cache.put("t_n", n, None, hit)
        return hit

    def column(self, d: int) -> dict[int, int]:
        lo, hi = perimeter_bounds(d)
        cached = {n: self.cache.get("t_nd", n, d) for n in range(lo, hi + 1)}
        if any(v is None for v in cached.values()):
            cached = enumeration.column(d, workers=self.workers)
            for n, v in cached.items():
                self.cache.put("t_nd", n, d, v)
        self.cache.put("t_d", None, d, enumeration.checked_sum(cached.values()))
        self.cache.put("mu_d", None, d, max(cached.values()))
        return cached

    def diameter(self, d: int) -> int:
        hit = self.cache.get("t_d", None, d)
        if hit is None:
            hit = enumeration.checked_sum(self.column(d).values())
        return hit

    def fix(self, n: int) -> FixVector:
        got = [self.cache.get("fix", n, k) for k in range(1, 6)]
        if any(v is None for v in got):
            fv = enumeration.fix_counts(n)
            for k, v in enumerate(fv.as_tuple(), start=1):
                self.cache.put("fix", n, k, v)
            return fv
        return FixVector(n, *got)


def _open_out(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="\n")


def _emit(path: Optional[str], lines: Iterable[str]) -> None:
    fh = _open_out(path)
    try:
        for line in lines:
            fh.write(line + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()


# count -------------------------------------------------------------------

def cmd_count(args, counts: Counts) -> int:
    if args.perimeter is None and args.diameter is None:
        raise UsageError("give --perimeter, --diameter or both")
    for v in (args.perimeter, args.diameter):
        if v is not None and v < 1:
            raise UsageError("perimeter and diameter must be positive")
    if args.perimeter is not None and args.diameter is not None:
        value = counts.cell(args.perimeter, args.diameter)
    elif args.perimeter is not None:
        value = counts.perimeter(args.perimeter)
    else:
        value = counts.diameter(args.diameter)
    print(value)
    return EXIT_OK


# table -------------------------------------------------------------------

def table_lines(counts: Counts, n_range: Optional[range], d_range: Optional[range],
                joint: bool) -> list[str]:
    lines = [HEADER]
    if n_range is not None:
        rows = counts.rows(n_range)
        for n in n_range:
            # Joint mode keeps the row total too, so empty rows survive a re-read.
            if joint:
                lines += [format_record("t_nd", n, d, v) for d, v in rows[n].items()]
            lines.append(format_record("t_n", n, None, sum(rows[n].values())))
    else:
        for d in d_range:
            col = counts.column(d)
            if joint:
                lines += [format_record("t_nd", n, d, v) for n, v in col.items()]
            lines.append(format_record("t_d", None, d, sum(col.values())))
    return lines


def _one_range(args) -> tuple[Optional[range], Optional[range]]:
    if (args.n_range is None) == (args.d_range is None):
        raise UsageError("give exactly one of --n-range and --d-range")
    n_range = parse_range(args.n_range) if args.n_range else None
    d_range = parse_range(args.d_range) if args.d_range else None
    return n_range, d_range


def cmd_table(args, counts: Counts) -> int:
    n_range, d_range = _one_range(args)
    _emit(args.out, table_lines(counts, n_range, d_range, args.joint))
    return EXIT_OK


# fix ---------------------------------------------------------------------

FIX_HEADER = "n,fix_id,fix_3cyc,fix_dbl,fix_transp,fix_4cyc,t_n,t_rot_n"


def cmd_fix(args, counts: Counts) -> int:
    lines = [FIX_HEADER]
    for n in parse_range(args.n_range):
        fv = counts.fix(n)
        if fv.fix_3cyc != fix_three_cycle(n) or fv.fix_4cyc != fix_four_cycle(n):
            raise IntegrityError(f"fixed-point counts at n={n} contradict the closed forms")
        t, t_rot = burnside_full(fv), burnside_rotations(fv)
        lines.append(",".join(str(x) for x in (n, *fv.as_tuple(), t, t_rot)))
    _emit(args.out, lines)
    return EXIT_OK


# stats -------------------------------------------------------------------

@dataclass
class _Summary:
    count: int
    mu: Optional[int] = None
    argmax: Optional[int] = None
    mode: str = ""


def _summarise(cells: dict[int, int], mode: str = "exhaustive") -> _Summary:
    if not cells:
        return _Summary(0)
    best = max(cells.values())
    arg = min(k for k, v in cells.items() if v == best)
    return _Summary(enumeration.checked_sum(cells.values()), best, arg, mode)


def _ingest(path: str, by: str) -> dict[int, _Summary]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or ",".join(header) != HEADER:
            raise UsageError(f"{path}: not a count table")
        grid: dict[int, dict[int, int]] = {}
        totals: dict[int, int] = {}
        for kind, n, d, value in reader:
            if kind == "t_nd":
                key, other = (int(n), int(d)) if by == "n" else (int(d), int(n))
                grid.setdefault(key, {})[other] = int(value)
            elif kind == ("t_n" if by == "n" else "t_d"):
                totals[int(n if by == "n" else d)] = int(value)
    out = {k: _summarise(v) for k, v in grid.items()}
    for k, v in totals.items():
        if k in out and out[k].count != v:
            raise IntegrityError(f"{path}: cells for {by}={k} sum to {out[k].count}, total says {v}")
        out.setdefault(k, _Summary(v))
    return dict(sorted(out.items()))


def stats_lines(summaries: dict[int, _Summary], by: str, s_constant: int) -> list[str]:
    items = list(summaries.items())
    triples = [(k, s.count, s.mu) for k, s in items]
    if by == "n":
        rows = analysis.stats_perimeter(triples, s_constant)
        places = analysis.PERIMETER_PLACES
        cols = ("C", "D", "rho", "rho_over_index", "diff", "ratio", "s")
        header = "n,count,mu,argmax,C,D,rho,rho_over_n,diff,ratio,s,mode,flagged"
    else:
        rows = analysis.stats_diameter(triples)
        places = analysis.DIAMETER_PLACES
        cols = ("C", "D", "rho", "rho_over_index", "diff", "ratio")
        header = "d,count,mu,argmax,C,D,rho,rho_over_d,diff,ratio,mode,flagged"
    lines = [header]
    for (k, s), r in zip(items, rows):
        fields = [str(k), str(r.count), "" if r.mu is None else str(r.mu),
                  "" if s.argmax is None else str(s.argmax)]
        fields += [analysis.format_fixed(getattr(r, c), places[c]) for c in cols]
        fields += [s.mode, "1" if r.flagged else "0"]
        lines.append(",".join(fields))
    return lines


def cmd_stats(args, counts: Counts) -> int:
    if args.from_csv:
        by = args.by
        summaries = _ingest(args.from_csv, by)
    else:
        n_range, d_range = _one_range(args)
        by = "n" if n_range is not None else "d"
        summaries = {}
        if by == "n":
            if args.mode == "exhaustive":
                rows = counts.rows(n_range)
                summaries = {n: _summarise(rows[n]) for n in n_range}
            else:
                for n in n_range:
                    total = counts.perimeter(n)
                    if n < 6:
                        summaries[n] = _Summary(total)
                        continue
                    peak = analysis.climb(
                        *_dbounds(n), _hint(n, analysis.PERIMETER_HINT),
                        lambda d, n=n: counts.cell(n, d), n)
                    summaries[n] = _Summary(total, peak.peak_value, peak.argmax, "hinted")
        else:
            for d in d_range:
                col = counts.column(d)
                if args.mode == "exhaustive":
                    summaries[d] = _summarise(col)
                else:
                    lo, hi = perimeter_bounds(d)
                    peak = analysis.climb(lo, hi, _hint(d, analysis.DIAMETER_HINT),
                                           col.__getitem__, d)
                    summaries[d] = _Summary(sum(col.values()), peak.peak_value,
                                            peak.argmax, "hinted")
    _emit(args.out, stats_lines(summaries, by, args.s_constant))
    return EXIT_OK


def _dbounds(n: int) -> tuple[int, int]:
    b = diameter_bounds(n)
    return b.d_min, b.d_max


def _hint(x: int, ratio: tuple[int, int]) -> int:
    num, den = ratio
    return (num * x + den // 2) // den


# plot --------------------------------------------------------------------

def cmd_plot(args, counts: Counts) -> int:
    prefix = Path(args.out)
    if args.kind == "tn-curve":
        ns = parse_range(args.n_range or "1:200")
        rows = counts.rows(ns)
        data = [(n, sum(rows[n].values())) for n in ns]
        lines = ["n,count"] + [f"{n},{t}" for n, t in data]
        picture = svg.polylines({"t_n": data}, "t_n", log=args.log)
    elif args.kind == "joint-heatmap":
        ns = parse_range(args.n_range or "1:50")
        rows = counts.rows(ns)
        lines = [HEADER] + [
            format_record("t_nd", n, d, v) for n in ns for d, v in rows[n].items()
        ]
        from math import log10
        picture = svg.heat_grid(
            {(n, d): log10(v) for n in ns for d, v in rows[n].items() if v}, "log10 t(n,d)"
        )
    elif args.kind == "top-sequences":
        ds = parse_range(args.d_range or "1:100")
        data = analysis.top_sequences(ds.start, ds[-1])
        data = [row for row in data if row[0] in ds]
        lines = ["d,top3,top4,top5"] + [",".join(map(str, row)) for row in data]
        picture = svg.polylines(
            {f"n=3d+{j}": [(row[0], row[j - 2]) for row in data] for j in (3, 4, 5)},
            "top rows",
        )
    else:
        ks = range(0, args.k_max + 1)
        lines = ["k,a_k,b_k"] + [f"{k},{stable_a(k)},{stable_b(k)}" for k in ks]
        picture = svg.polylines(
            {"a_k": [(k, stable_a(k)) for k in ks], "b_k": [(k, stable_b(k)) for k in ks]},
            "stable column",
        )
    _emit(str(prefix.with_suffix(".csv")), lines)
    svg.write(prefix.with_suffix(".svg"), picture)
    return EXIT_OK


# oracle ------------------------------------------------------------------

def cmd_oracle(args, counts: Counts) -> int:
    if (args.perimeter is None) == (args.n_max is None):
        raise UsageError("give exactly one of --perimeter and --n-max")
    ns = [args.perimeter] if args.perimeter is not None else range(1, args.n_max + 1)
    status = EXIT_OK
    lines = []
    for n in ns:
        value = oracle_count_perimeter(n, args.ceiling)
        if args.check and value != counts.perimeter(n):
            status = EXIT_MISMATCH
            print(f"mismatch at n={n}: oracle {value}, engine {counts.perimeter(n)}",
                  file=sys.stderr)
        lines.append(str(value) if args.perimeter is not None else f"{n},{value}")
    _emit(None, lines)
    return status


# verify ------------------------------------------------------------------

@dataclass
class Check:
    table: str
    label: str
    expected: object
    compute: Callable[[], object]


@dataclass
class Report:
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)


class _Memo:
    """Shares one expensive computation between several checks."""

    def __init__(self):
        self._values: dict[str, object] = {}

    def __call__(self, key: str, fn: Callable[[], object]) -> Callable[[], object]:
        def run():
            if key not in self._values:
                self._values[key] = fn()
            return self._values[key]
        return run


def _core_checks(workers: int) -> list[Check]:
    tn = fixtures.perimeter_counts()
    checks: list[Check] = []
    once = _Memo()
    table_200 = once("t200", lambda: enumeration.joint_table(1, 200, workers))
    for n in range(1, 201):
        checks.append(Check("perimeter", f"n={n}", tn[n], lambda n=n: table_200().row_sum(n)))
    for n in (300,):
        checks.append(Check("perimeter-hundreds", f"n={n}", tn[n],
                            lambda n=n: enumeration.count_perimeter(n, workers)))
    joint = fixtures.joint_counts()
    for n in range(6, 51):
        for d in diameter_bounds(n):
            checks.append(Check("joint", f"n={n},d={d}", joint.get((n, d), 0),
                                lambda n=n, d=d: table_200().get(n, d)))
    for n, row in fixtures.fix_rows().items():
        def fix_row(n=n):
            fv = enumeration.fix_counts(n)
            return (*fv.as_tuple(), burnside_full(fv), burnside_rotations(fv))
        checks.append(Check("fix", f"n={n}", row, fix_row))
    d_stats = fixtures.diameter_stats()
    for d in (100,):
        checks.extend(_diameter_checks(d, d_stats[d], workers, once))
    stable = fixtures.stable_column()
    col60 = once("c60", lambda: enumeration.column(60, 360 - 30, 360, workers))
    for k, v in stable.items():
        checks.append(Check("stable", f"k={k}", v, lambda k=k: col60()[360 - k]))
    ratios = fixtures.c_ratios()
    for n in (100, 200, 300):
        checks.append(Check(
            "stats", f"C_{n}", ratios[n][0],
            lambda n=n: analysis.format_fixed(
                analysis.stats_perimeter([(n, enumeration.count_perimeter(n, workers))])[0].C, 3),
        ))
    return checks


def _diameter_checks(d: int, row: fixtures.PrintedStats, workers: int, once) -> list[Check]:
    col = once(f"col{d}", lambda: enumeration.column(d, workers=workers))

    def peak():
        p = analysis.scan(d, col())
        return (p.argmax, p.peak_value)

    def dc():
        r = analysis.stats_diameter([(d, sum(col().values()), max(col().values()))])[0]
        return analysis.format_fixed(r.C, 8)

    return [
        Check("diameter", f"t^{d}", row.count, lambda: sum(col().values())),
        Check("diameter", f"peak d={d}", (row.argmax, row.mu), peak),
        Check("diameter", f"C^{d}", row.C, dc),
    ]


def _extended_checks(workers: int) -> list[Check]:
    tn = fixtures.perimeter_counts()
    once = _Memo()

    checks = [
        Check("perimeter-hundreds", f"n={n}", tn[n],
              lambda n=n: enumeration.count_perimeter(n, workers))
        for n in (400, 500)
    ]
    checks += _diameter_checks(200, fixtures.diameter_stats()[200], workers, once)
    p = fixtures.perimeter_stats()[1000]
    row = once("r1000", lambda: enumeration.perimeter_row(1000, workers))
    checks.append(Check("perimeter-stats", "t_1000", p.count, lambda: sum(row().values())))
    checks.append(Check("perimeter-stats", "peak n=1000", (p.argmax, p.mu),
                        lambda: (analysis.scan(1000, row()).argmax, max(row().values()))))
    return checks


# Reference values that no desk-scale run reaches; reported, never computed.
OUT_OF_REACH = (("diameter", "t^1000", fixtures.diameter_stats, 1000),)


def run_verify(suite: str, tables: Optional[Sequence[str]], workers: int,
               out: TextIO) -> Report:
    checks = _core_checks(workers)
    if suite == "extended":
        checks += _extended_checks(workers)
    if tables:
        checks = [c for c in checks if c.table in tables]
    report = Report()
    for c in checks:
        got = c.compute()
        ok = got == c.expected
        bucket = report.passed if ok else report.failed
        bucket[c.table] = bucket.get(c.table, 0) + 1
        if not ok:
            out.write(f"MISMATCH {c.table} {c.label}: expected {c.expected}, got {got}\n")
    names = list(dict.fromkeys(c.table for c in checks))
    for name in names:
        p, f = report.passed.get(name, 0), report.failed.get(name, 0)
        out.write(f"{name}: {p}/{p + f} pass\n")
    if suite == "extended":
        for table, label, source, key in OUT_OF_REACH:
            if not tables or table in tables:
                out.write(f"{table} {label} = {source()[key].count}: skipped, beyond desk scale\n")
    return report


def cmd_verify(args, counts: Counts) -> int:
    tables = args.table or None
    report = run_verify(args.suite, tables, counts.workers, sys.stdout)
    return EXIT_MISMATCH if report.failed else EXIT_OK


# entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", help=f"cache file (default ${{TETRA_CACHE}} or ./{default_path().name})")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--workers", type=int, default=enumeration.default_workers(),
                        help="worker processes (default: all CPUs)")

    parser = argparse.ArgumentParser(prog="tetra", description="Count integer tetrahedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print one count")
    p.add_argument("--perimeter", "-n", type=int)
    p.add_argument("--diameter", "-d", type=int)
    p.add_argument("--engine", choices=enumeration.ENGINES, default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="write counts as CSV")
    p.add_argument("--n-range")
    p.add_argument("--d-range")
    p.add_argument("--joint", action="store_true", help="emit every (n, d) cell")
    p.add_argument("--out", "-o")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fix", parents=[common], help="fixed-point counts per class")
    p.add_argument("--n-range", required=True)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("verify", parents=[common], help="recompute the reference tables")
    p.add_argument("--suite", choices=("core", "extended"), default="core")
    p.add_argument("--table", action="append",
                   help="restrict to a table (perimeter, perimeter-hundreds, joint, fix, "
                        "diameter, stable, stats, perimeter-stats); repeatable")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common], help="derived statistics as CSV")
    p.add_argument("--n-range")
    p.add_argument("--d-range")
    p.add_argument("--from-csv", help="read counts from a table CSV instead of computing")
    p.add_argument("--by", choices=("n", "d"), default="n", help="grouping for --from-csv")
    p.add_argument("--mode", choices=("exhaustive", "hinted"), default="exhaustive")
    p.add_argument("--s-constant", type=int, default=analysis.S_CONSTANT)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("plot", parents=[common], help="CSV plus SVG for a figure")
    p.add_argument("kind", choices=("tn-curve", "joint-heatmap", "top-sequences", "stable-ab"))
    p.add_argument("--n-range")
    p.add_argument("--d-range")
    p.add_argument("--k-max", type=int, default=23)
    p.add_argument("--log", action="store_true", help="log-log axes (tn-curve)")
    p.add_argument("--out", "-o", required=True, help="output prefix")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference count")
    p.add_argument("--perimeter", "-n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--check", action="store_true", help="compare with the fast engine")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        cache = NullCache() if args.no_cache else ResultCache(args.cache)
        counts = Counts(cache, args.workers, getattr(args, "engine", "auto"))
        return args.func(args, counts)
    except (UsageError, ValueError, CeilingError) as exc:
        print(f"tetra: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrityError, CountOverflowError, CapacityError) as exc:
        print(f"tetra: integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())

"""Derived statistics over computed counts.

Ratios are computed in binary floating point and rounded half-even to a
fixed number of decimals only when formatted. Counts are never derived
from floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Callable, Iterable, Optional, Sequence

from tetracount.closed_forms import diameter_bounds, perimeter_bounds, stable_a
from tetracount.enumeration import column, count_joint, perimeter_row

S_CONSTANT = 229024
PERIMETER_HINT = (238, 1000)  # d*(n) is close to 0.238 n
DIAMETER_HINT = (9, 2)  # n*(d) is close to 4.5 d

# Decimal places used when formatting, per column.
PERIMETER_PLACES = {"C": 3, "D": 5, "rho": 6, "rho_over_index": 9, "diff": 3, "ratio": 3, "s": 3}
DIAMETER_PLACES = {"C": 8, "D": 8, "rho": 6, "rho_over_index": 9, "diff": 3, "ratio": 3, "s": 3}


@dataclass(frozen=True)
class StatRow:
    """Statistics for one perimeter (or one diameter) of the joint table.

    ``flagged`` marks rows whose count is zero; ratios are then absent.
    """

    index: int
    count: int
    mu: Optional[int] = None
    C: Optional[float] = None
    D: Optional[float] = None
    rho: Optional[float] = None
    rho_over_index: Optional[float] = None
    diff: Optional[float] = None
    ratio: Optional[float] = None
    s: Optional[float] = None
    flagged: bool = False


@dataclass(frozen=True)
class PeakLocation:
    index: int
    argmax: int
    peak_value: int
    exhaustive: bool
    tie: bool = False


@dataclass(frozen=True)
class StableCheck:
    k: int
    enumerated: int
    predicted: int
    match: bool


def format_fixed(x: Optional[float], places: int) -> str:
    """Half-even rounding of the exact binary value of ``x``; blank for ``None``."""
    if x is None:
        return ""
    return str(Decimal(x).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def _stats(rows: Iterable[Sequence], with_s: bool, s_constant: int) -> list[StatRow]:
    out: list[StatRow] = []
    prev_c: Optional[float] = None
    prev_diff: Optional[float] = None
    for row in rows:
        index = int(row[0])
        count = int(row[1]) if row[1] is not None else 0
        mu = int(row[2]) if len(row) > 2 and row[2] is not None else None
        s = count - index**5 / s_constant if with_s else None
        if count == 0:
            d_val = index**4 / mu if mu else None
            out.append(StatRow(index, count, mu, D=d_val, s=s, flagged=True))
            prev_c = prev_diff = None
            continue
        c = index**5 / count
        diff = c - prev_c if prev_c is not None else None
        ratio = diff / prev_diff if diff is not None and prev_diff else None
        d_val = rho = rho_i = None
        if mu:
            d_val = index**4 / mu
            rho = count / mu
            rho_i = rho / index
        out.append(StatRow(index, count, mu, c, d_val, rho, rho_i, diff, ratio, s))
        prev_c, prev_diff = c, diff
    return out


def stats_perimeter(rows: Iterable[Sequence], s_constant: int = S_CONSTANT) -> list[StatRow]:
    """StatRows from ``(n, t_n)`` or ``(n, t_n, mu_n)`` tuples.

    ``diff`` and ``ratio`` refer to the previous row in ``rows``. A count of
    ``None`` or 0 yields a flagged row that still carries ``D`` when ``mu``
    is known.
    """
    return _stats(rows, True, s_constant)


def stats_diameter(rows: Iterable[Sequence]) -> list[StatRow]:
    """StatRows from ``(d, t^d)`` or ``(d, t^d, mu^d)`` tuples."""
    return _stats(rows, False, S_CONSTANT)


def climb(lo: int, hi: int, start: int, value: Callable[[int], int], index: int) -> PeakLocation:
    """Hill-climb ``value`` on ``[lo, hi]`` from ``start`` to a strictly bracketed maximum."""
    cache: dict[int, int] = {}

    def f(x: int) -> int:
        if x < lo or x > hi:
            return -1
        if x not in cache:
            cache[x] = value(x)
        return cache[x]

    x = min(max(start, lo), hi)
    while True:
        if f(x + 1) > f(x):
            x += 1
        elif f(x - 1) > f(x):
            x -= 1
        else:
            break
    # Widen across a plateau until both sides drop strictly.
    left, right = x, x
    while f(left - 1) == f(x):
        left -= 1
    while f(right + 1) == f(x):
        right += 1
    return PeakLocation(index, left, f(x), False, tie=right > left)


def scan(index: int, counts: dict[int, int]) -> PeakLocation:
    """Exhaustive maximum of an already computed row or column."""
    best = max(counts.values())
    hits = [k for k, v in sorted(counts.items()) if v == best]
    return PeakLocation(index, hits[0], best, True, tie=len(hits) > 1)


def find_peak(n: int, mode: str = "exhaustive", workers: int = 1) -> PeakLocation:
    """Diameter maximising t(n, d); ties go to the smaller diameter."""
    if n < 6:
        raise ValueError("perimeter must be at least 6")
    if mode == "exhaustive":
        return scan(n, perimeter_row(n, workers))
    if mode != "hinted":
        raise ValueError(f"unknown mode {mode!r}")
    b = diameter_bounds(n)
    num, den = PERIMETER_HINT
    return climb(b.d_min, b.d_max, (num * n + den // 2) // den,
                  lambda d: count_joint(n, d, workers), n)


def find_peak_diameter(d: int, mode: str = "exhaustive", workers: int = 1) -> PeakLocation:
    """Perimeter maximising t(n, d); ties go to the smaller perimeter."""
    if d < 1:
        raise ValueError("diameter must be positive")
    if mode == "exhaustive":
        return scan(d, column(d, workers=workers))
    if mode != "hinted":
        raise ValueError(f"unknown mode {mode!r}")
    lo, hi = perimeter_bounds(d)
    num, den = DIAMETER_HINT
    return climb(lo, hi, (num * d + den // 2) // den,
                  lambda n: count_joint(n, d, workers), d)


def stable_column_check(d: int, k_max: int, workers: int = 1) -> list[StableCheck]:
    """Compare t(6d - k, d) with the stable column formula for 0 <= k <= k_max."""
    if k_max >= d:
        raise ValueError("k_max must be smaller than d")
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    counts = column(d, 6 * d - k_max, 6 * d, workers=workers)
    out = []
    for k in range(k_max + 1):
        got, want = counts[6 * d - k], stable_a(k)
        out.append(StableCheck(k, got, want, got == want))
    return out


def top_sequences(d_lo: int, d_hi: int) -> list[tuple[int, int, int, int]]:
    """Rows ``(d, t(3d+3, d), t(3d+4, d), t(3d+5, d))`` via the storing engine."""
    return [
        (d, *(count_joint(3 * d + j, d, engine="naive") for j in (3, 4, 5)))
        for d in range(d_lo, d_hi + 1)
    ]

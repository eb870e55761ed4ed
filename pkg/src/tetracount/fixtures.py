"""Reference values shipped with the package, loaded from ``data/*.csv``."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional


def _read(name: str) -> list[dict[str, str]]:
    with resources.files("tetracount").joinpath("data", name).open(encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _opt_int(s: str) -> Optional[int]:
    return int(s) if s else None


@lru_cache(maxsize=None)
def perimeter_counts() -> dict[int, int]:
    """t_n for 1 <= n <= 200, and by hundreds up to 10000."""
    return {int(r["n"]): int(r["count"]) for r in _read("perimeter_counts.csv")}


@lru_cache(maxsize=None)
def joint_counts() -> dict[tuple[int, int], int]:
    """Every nonzero t(n, d) with n <= 50."""
    return {(int(r["n"]), int(r["d"])): int(r["count"]) for r in _read("joint_counts.csv")}


@lru_cache(maxsize=None)
def fix_rows() -> dict[int, tuple[int, ...]]:
    """n -> (fix_id, fix_3cyc, fix_dbl, fix_transp, fix_4cyc, t_n, t_rot_n)."""
    cols = ("fix_id", "fix_3cyc", "fix_dbl", "fix_transp", "fix_4cyc", "t_n", "t_rot_n")
    return {int(r["n"]): tuple(int(r[c]) for c in cols) for r in _read("fix_counts.csv")}


@lru_cache(maxsize=None)
def stable_column() -> dict[int, int]:
    return {int(r["k"]): int(r["value"]) for r in _read("stable_column.csv")}


@dataclass(frozen=True)
class PrintedStats:
    """One printed statistics row; numeric columns kept as the printed text."""

    index: int
    argmax: int
    count: Optional[int]
    mu: int
    rho: str
    rho_over_index: str
    D: str
    C: str


def _stats(name: str, key: str) -> dict[int, PrintedStats]:
    out = {}
    for r in _read(name):
        out[int(r[key])] = PrintedStats(
            int(r[key]), int(r["argmax"]), _opt_int(r["count"]), int(r["mu"]),
            r["rho"], r["rho_over_index"], r["D"], r["C"],
        )
    return out


@lru_cache(maxsize=None)
def perimeter_stats() -> dict[int, PrintedStats]:
    return _stats("perimeter_stats.csv", "n")


@lru_cache(maxsize=None)
def diameter_stats() -> dict[int, PrintedStats]:
    return _stats("diameter_stats.csv", "d")


@lru_cache(maxsize=None)
def c_ratios() -> dict[int, tuple[str, str, str]]:
    """n -> printed (C_n, difference, ratio) for n = 100, 200, ..., 10000."""
    return {int(r["n"]): (r["C"], r["diff"], r["ratio"]) for r in _read("c_ratios.csv")}

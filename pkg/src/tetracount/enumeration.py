"""Counting and listing integer tetrahedra by perimeter and diameter.

Two engines produce the joint counts ``t(n, d)``:

* the *walk* visits labelings with ``A = d`` inside pruned loops and counts
  the ones equal to their own canonical form, so memory stays constant;
* the *naive* engine pairs every two faces sharing the diameter edge, stores
  the canonical form of each valid pairing and deduplicates. It is faster on
  sparse cells near ``n = 3d + 3`` and is bounded by ``max_stored``.

Both run on compiled kernels restricted to diameters up to
:data:`~tetracount.geometry.FAST_PATH_MAX_DIAMETER`.
"""

from __future__ import annotations

import multiprocessing
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np

from tetracount import _kernels
from tetracount.closed_forms import diameter_bounds, perimeter_bounds
from tetracount.errors import CapacityError
from tetracount.geometry import FAST_PATH_MAX_DIAMETER, EdgeLabeling
from tetracount.symmetry import FixVector
from tetracount.tables import (  # noqa: F401  re-exported
    COUNT_MAX,
    CountRecord,
    JointTable,
    checked_add,
    checked_sum,
)

DEFAULT_MAX_STORED = 4_000_000
ENGINES = ("walk", "naive", "auto")


def _check_fast_path(d: int) -> None:
    if d > FAST_PATH_MAX_DIAMETER:
        raise ValueError(
            f"diameter {d} is beyond the exact compiled range (<= {FAST_PATH_MAX_DIAMETER})"
        )


def _column_slice(d: int, n_lo: int, n_hi: int, bs: np.ndarray) -> list[int]:
    out = np.zeros(n_hi - n_lo + 1, np.int64)
    _kernels.column_counts(d, n_lo, n_hi, bs, out)
    return [int(x) for x in out]


def _b_partition(d: int, workers: int) -> list[np.ndarray]:
    # Work grows steeply with B, so deal B values round-robin.
    bs = np.arange(d, d // 2, -1, dtype=np.int64)
    return [bs[w::workers] for w in range(workers) if len(bs[w::workers])]


def _pool(workers: int) -> ProcessPoolExecutor:
    if sys.platform.startswith("linux"):
        return ProcessPoolExecutor(workers, mp_context=multiprocessing.get_context("fork"))
    return ProcessPoolExecutor(workers)


def column(d: int, n_lo: Optional[int] = None, n_hi: Optional[int] = None,
           workers: int = 1) -> dict[int, int]:
    """Counts ``t(n, d)`` for every ``n`` in ``[n_lo, n_hi]`` (default: all)."""
    if d < 1:
        raise ValueError("diameter must be positive")
    if workers < 1:
        raise ValueError("workers must be positive")
    _check_fast_path(d)
    lo, hi = perimeter_bounds(d)
    n_lo = lo if n_lo is None else max(lo, n_lo)
    n_hi = hi if n_hi is None else min(hi, n_hi)
    if n_lo > n_hi:
        return {}
    parts = _b_partition(d, workers)
    if workers == 1 or len(parts) == 1:
        slices = [_column_slice(d, n_lo, n_hi, np.concatenate(parts))]
    else:
        with _pool(min(workers, len(parts))) as pool:
            futures = [pool.submit(_column_slice, d, n_lo, n_hi, p) for p in parts]
            slices = [f.result() for f in futures]
    return {n_lo + i: checked_sum(s[i] for s in slices) for i in range(n_hi - n_lo + 1)}


def enumerate_representatives(n: int, d: Optional[int] = None,
                              max_stored: int = DEFAULT_MAX_STORED) -> set[EdgeLabeling]:
    """Canonical forms of all tetrahedra of perimeter ``n`` (and diameter ``d``).

    Raises :class:`CapacityError` when more than ``max_stored`` candidate rows
    would have to be held at once for a single diameter.
    """
    if d is None:
        diameters = list(diameter_bounds(n))
    else:
        bounds = diameter_bounds(n)
        if not bounds.d_min <= d <= bounds.d_max:
            return set()
        diameters = [d]
    reps: set[EdgeLabeling] = set()
    for A in diameters:
        _check_fast_path(A)
        buf = np.empty((min(max_stored, 1 << 16), 6), np.int64)
        while True:
            rows = _kernels.naive_representatives(A, n, buf)
            if rows >= 0:
                break
            if buf.shape[0] >= max_stored:
                raise CapacityError(
                    f"more than {max_stored} stored representatives for n={n}, d={A}"
                )
            buf = np.empty((min(max_stored, 4 * buf.shape[0]), 6), np.int64)
        if rows:
            reps.update(EdgeLabeling(*row) for row in _distinct_rows(buf[:rows], A).tolist())
    return reps


def _distinct_rows(block: np.ndarray, d: int) -> np.ndarray:
    # Rows as base-(d+1) integers sort much faster than row-wise np.unique;
    # (d+1)**6 stays below 2**63 while d < 1400.
    if d < 1400:
        weights = (d + 1) ** np.arange(5, -1, -1, dtype=np.int64)
        _, first = np.unique(block @ weights, return_index=True)
        return block[first]
    return np.unique(block, axis=0)


def choose_engine(n: int, d: int) -> str:
    """Storing engine for sparse cells near the top of a column, walk elsewhere."""
    return "naive" if n <= 3 * d + 10 else "walk"


def count_joint(n: int, d: int, workers: int = 1, engine: str = "walk") -> int:
    """Number of tetrahedra with perimeter ``n`` and diameter ``d``."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if d < 1 or n < 1:
        raise ValueError("perimeter and diameter must be positive")
    lo, hi = perimeter_bounds(d)
    if not lo <= n <= hi:
        return 0
    if engine == "auto":
        engine = choose_engine(n, d)
    if engine == "naive":
        return len(enumerate_representatives(n, d))
    return column(d, n, n, workers=workers).get(n, 0)


def count_joint_parallel(n: int, d: int, workers: int) -> int:
    """:func:`count_joint` with the outer ``B`` loop split over ``workers``."""
    return count_joint(n, d, workers=workers)


def count_perimeter(n: int, workers: int = 1) -> int:
    """Number of tetrahedra of perimeter ``n`` up to congruence."""
    if n < 1:
        raise ValueError("perimeter must be positive")
    return checked_sum(count_joint(n, d, workers) for d in diameter_bounds(n))


def perimeter_row(n: int, workers: int = 1) -> dict[int, int]:
    """``t(n, d)`` for all ``d`` in the admissible range."""
    return {d: count_joint(n, d, workers) for d in diameter_bounds(n)}


def count_diameter(d: int, workers: int = 1) -> int:
    """Number of tetrahedra of diameter ``d`` up to congruence."""
    return checked_sum(column(d, workers=workers).values())


def joint_table(n_lo: int, n_hi: int, workers: int = 1) -> JointTable:
    """All nonzero ``t(n, d)`` with ``n_lo <= n <= n_hi``."""
    d_lo = max(1, diameter_bounds(max(n_lo, 1)).d_min)
    d_hi = max(0, (n_hi - 3) // 3)
    table = JointTable((n_lo, n_hi), (d_lo, d_hi))
    for d in range(d_lo, d_hi + 1):
        for n, v in column(d, n_lo, n_hi, workers=workers).items():
            if v:
                table.cells[(n, d)] = v
    return table


def diameter_table(d_lo: int, d_hi: int, workers: int = 1) -> JointTable:
    """Full columns ``t(., d)`` for ``d_lo <= d <= d_hi``."""
    lo = perimeter_bounds(d_lo)[0]
    hi = perimeter_bounds(d_hi)[1]
    table = JointTable((lo, hi), (d_lo, d_hi))
    for d in range(d_lo, d_hi + 1):
        for n, v in column(d, workers=workers).items():
            if v:
                table.cells[(n, d)] = v
    return table


def valid_labelings(n: int) -> list[EdgeLabeling]:
    """Every valid labeling of perimeter ``n`` (all 24 arrangements, not orbits)."""
    if n < 6:
        return []
    _check_fast_path((n - 3) // 3)
    return [EdgeLabeling(*(int(x) for x in row)) for row in _kernels.valid_labelings(n)]


def fix_counts(n: int) -> FixVector:
    """Fixed-point counts of each class representative at perimeter ``n``."""
    if n < 1:
        raise ValueError("perimeter must be positive")
    if n < 6:
        return FixVector(n, 0, 0, 0, 0, 0)
    _check_fast_path((n - 3) // 3)
    f3, fd, ft, f4 = _kernels.fix_symmetric(n)
    return FixVector(n, int(_kernels.count_all_valid(n)), int(f3), int(fd), int(ft), int(f4))


def sporadic_breakdown(d: int) -> dict[int, int]:
    """Tetrahedra with diameter ``d`` and perimeter ``3d+5``, grouped by ``a``.

    ``a`` is the edge opposite the diameter in the canonical form, i.e. the
    largest such opposite edge when several edges reach the diameter. Only
    1, 2 and 3 can occur.
    """
    reps = enumerate_representatives(3 * d + 5, d)
    return dict(sorted(Counter(g.a for g in reps).items()))


def default_workers() -> int:
    return os.cpu_count() or 1

"""Brute-force reference counts, written independently of the fast engines.

Every composition of ``n`` into six positive parts is tested three ways:

* the two triangle tests on faces sharing ``A`` plus the fold inequality,
* all four triangle tests plus the fold inequality,
* a nested Cayley-Menger test: the face ``(A, B, C)`` has negative bordered
  4x4 determinant and the full 5x5 determinant is positive.

The three verdicts must agree on every tuple. Orbits come from applying the
24 vertex permutations directly, with no precomputed image table.
Everything is vectorised in ``int64``; :data:`HARD_CEILING` keeps every
intermediate product below 2**62.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from tetracount.errors import CeilingError, IntegrityError
from tetracount.tables import JointTable

DEFAULT_CEILING = 60
# The 5x5 expansion has 44 nonzero terms, each at most (n-5)^8 in size.
HARD_CEILING = 120

# Vertices of each position; face (A,B,C) avoids vertex 4, (A,b,c) avoids 1,
# (a,B,c) avoids 2 and (a,b,C) avoids 3.
_EDGES = ({1, 2}, {0, 3}, {0, 2}, {1, 3}, {0, 1}, {2, 3})


@dataclass(frozen=True)
class OracleRun:
    n: int
    visited: int
    valid: int
    orbits: int


def compositions(n: int, parts: int = 6) -> np.ndarray:
    """All ordered ways to write ``n`` as ``parts`` positive integers."""
    rows = np.zeros((1, 0), np.int64)
    left = np.array([n], np.int64)
    for i in range(parts - 1):
        span = np.maximum(left - (parts - 1 - i), 0)
        total = int(span.sum())
        if total == 0:
            return np.zeros((0, parts), np.int64)
        owner = np.repeat(np.arange(len(rows)), span)
        starts = np.cumsum(span) - span
        value = np.arange(total) - np.repeat(starts, span) + 1
        rows = np.column_stack([rows[owner], value])
        left = left[owner] - value
    return np.column_stack([rows, left])


def _tri(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    return (x < y + z) & (y < x + z) & (z < x + y)


def _fold(t: np.ndarray) -> np.ndarray:
    A, a, B, b, C, c = (t[:, i] for i in range(6))
    A2, B2, C2, a2, b2, c2 = A * A, B * B, C * C, a * a, b * b, c * c
    # 2A x1 and 2A x2, then the inequality scaled by 4 A^4.
    p = A2 + B2 - C2
    q = A2 + c2 - b2
    lhs = 2 * A2 * (a2 - B2 - c2) + p * q
    y1 = 4 * A2 * B2 - p * p
    y2 = 4 * A2 * c2 - q * q
    return (y1 > 0) & (y2 > 0) & (lhs * lhs < y1 * y2)


def _leibniz(m: list[list], rows: int) -> np.ndarray:
    # Constant entries are plain ints, so zero terms are skipped and unit
    # factors cost nothing.
    size = len(m)
    total = np.zeros(rows, np.int64)
    for perm in itertools.permutations(range(size)):
        factors = [m[r][col] for r, col in enumerate(perm)]
        if any(isinstance(f, int) and f == 0 for f in factors):
            continue
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = np.ones(rows, np.int64)
        for f in factors:
            if not isinstance(f, int):
                term = term * f
        total = total - term if inversions % 2 else total + term
    return total


def _cayley_menger(t: np.ndarray) -> np.ndarray:
    sq = t * t
    dist: list[list] = [[0] * 4 for _ in range(4)]
    for pos, (i, j) in enumerate(tuple(sorted(e)) for e in _EDGES):
        dist[i][j] = dist[j][i] = sq[:, pos]
    face = [[0, 1, 1, 1]] + [[1] + [dist[i][j] for j in (0, 1, 2)] for i in (0, 1, 2)]
    full = [row + [1] for row in dist] + [[1, 1, 1, 1, 0]]
    return (_leibniz(face, len(t)) < 0) & (_leibniz(full, len(t)) > 0)


def classify(t: np.ndarray) -> np.ndarray:
    """Validity of each row of ``t``; raises if the three routes ever disagree."""
    A, a, B, b, C, c = (t[:, i] for i in range(6))
    faces_abc = _tri(A, B, C) & _tri(A, b, c)
    fold = _fold(t)
    short = faces_abc & fold
    full = faces_abc & _tri(a, B, c) & _tri(a, b, C) & fold
    cm = _cayley_menger(t)
    bad = (short != full) | (short != cm)
    if bad.any():
        row = tuple(int(x) for x in t[np.argmax(bad)])
        raise IntegrityError(f"validity tests disagree on {row}")
    return short


def _vertex_images() -> list[tuple[int, ...]]:
    where = {frozenset(e): p for p, e in enumerate(_EDGES)}
    out = []
    for sigma in itertools.permutations(range(4)):
        inv = [sigma.index(v) for v in range(4)]
        out.append(tuple(where[frozenset(inv[v] for v in e)] for e in _EDGES))
    return out


def _canonical_keys(t: np.ndarray, base: int) -> np.ndarray:
    best = np.zeros(len(t), np.int64)
    for image in _vertex_images():
        key = np.zeros(len(t), np.int64)
        for src in image:
            key = key * base + t[:, src]
        best = np.maximum(best, key)
    return best


def _decode(key: int, base: int) -> tuple[int, ...]:
    out = []
    for _ in range(6):
        key, r = divmod(key, base)
        out.append(r)
    return tuple(reversed(out))


def _check_ceiling(n: int, ceiling: int) -> None:
    if ceiling > HARD_CEILING:
        raise CeilingError(f"ceiling {ceiling} exceeds the int64-safe limit {HARD_CEILING}")
    if n > ceiling:
        raise CeilingError(f"perimeter {n} is above the oracle ceiling {ceiling}")


def oracle_run(n: int, ceiling: int = DEFAULT_CEILING) -> tuple[OracleRun, list[tuple[int, ...]]]:
    """Full brute-force pass at perimeter ``n``: statistics and sorted orbit representatives."""
    _check_ceiling(n, ceiling)
    if n < 6:
        return OracleRun(n, 0, 0, 0), []
    t = compositions(n)
    ok = classify(t)
    base = n
    keys = np.unique(_canonical_keys(t[ok], base))
    reps = [_decode(int(k), base) for k in keys]
    return OracleRun(n, len(t), int(ok.sum()), len(reps)), reps


def oracle_count_perimeter(n: int, ceiling: int = DEFAULT_CEILING) -> int:
    """t_n by exhaustive search; refuses ``n`` above ``ceiling``."""
    return oracle_run(n, ceiling)[0].orbits


def oracle_joint_table(n_max: int, ceiling: int = DEFAULT_CEILING) -> JointTable:
    """Grid of t(n, d) for 6 <= n <= n_max by exhaustive search."""
    _check_ceiling(n_max, ceiling)
    table = JointTable((6, n_max), (1, max(1, (n_max - 3) // 3)))
    for n in range(6, n_max + 1):
        _, reps = oracle_run(n, ceiling)
        for rep in reps:
            key = (n, max(rep))
            table.cells[key] = table.cells.get(key, 0) + 1
    return table

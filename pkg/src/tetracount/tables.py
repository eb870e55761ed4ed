"""Plain containers for joint counts, with overflow-checked sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from tetracount.errors import CountOverflowError

COUNT_MAX = 2**63 - 1


def checked_add(x: int, y: int) -> int:
    """Add two non-negative counts, refusing to leave the 64-bit range."""
    total = int(x) + int(y)
    if total > COUNT_MAX or total < 0:
        raise CountOverflowError(f"count {x} + {y} exceeds the 64-bit range")
    return total


def checked_sum(values: Iterable[int]) -> int:
    total = 0
    for v in values:
        total = checked_add(total, v)
    return total


@dataclass(frozen=True)
class CountRecord:
    n: int
    d: int
    count: int


@dataclass
class JointTable:
    """Sparse grid of ``t(n, d)``; absent cells are zero."""

    n_range: tuple[int, int]
    d_range: tuple[int, int]
    cells: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, n: int, d: int) -> int:
        return self.cells.get((n, d), 0)

    def row(self, n: int) -> dict[int, int]:
        return {d: v for (m, d), v in sorted(self.cells.items()) if m == n and v}

    def column(self, d: int) -> dict[int, int]:
        return {n: v for (n, e), v in sorted(self.cells.items()) if e == d and v}

    def row_sum(self, n: int) -> int:
        return checked_sum(self.row(n).values())

    def column_sum(self, d: int) -> int:
        return checked_sum(self.column(d).values())

    def records(self) -> list[CountRecord]:
        return [CountRecord(n, d, v) for (n, d), v in sorted(self.cells.items())]

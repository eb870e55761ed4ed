"""Append-only CSV store of computed counts.

Each line is ``kind,n,d,value`` with blank fields where ``n`` or ``d`` does
not apply. Kind ``fix`` stores the conjugacy class number (1 to 5) in the
``d`` column. A value that disagrees with an earlier record for the same
key is refused with :class:`IntegrityError`.
"""

from __future__ import annotations

import csv
import os
import threading
from pathlib import Path
from typing import Optional, Union

from tetracount.errors import IntegrityError

HEADER = "kind,n,d,value"
KINDS = ("t_n", "t_d", "t_nd", "fix", "mu_n", "mu_d")
DEFAULT_PATH = "tetra-cache.csv"
ENV_VAR = "TETRA_CACHE"

Key = tuple[str, Optional[int], Optional[int]]


def default_path() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_PATH))


def format_record(kind: str, n: Optional[int], d: Optional[int], value: int) -> str:
    return f"{kind},{'' if n is None else n},{'' if d is None else d},{value}"


def _opt(s: str) -> Optional[int]:
    return int(s) if s != "" else None


class ResultCache:
    """Counts keyed by ``(kind, n, d)``; every write goes straight to disk."""

    schema_version = 1

    def __init__(self, path: Union[str, Path, None] = None):
        self.path = Path(path) if path is not None else default_path()
        self._records: dict[Key, int] = {}
        self._lock = threading.Lock()
        if self.path.exists() and self.path.stat().st_size:
            self._load()

    def _load(self) -> None:
        with self.path.open(encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or ",".join(header) != HEADER:
                raise IntegrityError(f"{self.path}: unexpected cache header {header!r}")
            for line_no, row in enumerate(reader, start=2):
                if len(row) != 4 or row[0] not in KINDS:
                    raise IntegrityError(f"{self.path}:{line_no}: malformed record {row!r}")
                self._remember((row[0], _opt(row[1]), _opt(row[2])), int(row[3]))

    def _remember(self, key: Key, value: int) -> bool:
        old = self._records.get(key)
        if old is not None:
            if old != value:
                raise IntegrityError(f"cache conflict for {key}: stored {old}, new {value}")
            return False
        self._records[key] = value
        return True

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, key: Key) -> bool:
        return key in self._records

    def get(self, kind: str, n: Optional[int] = None, d: Optional[int] = None) -> Optional[int]:
        return self._records.get((kind, n, d))

    def put(self, kind: str, n: Optional[int], d: Optional[int], value: int) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown record kind {kind!r}")
        with self._lock:
            if not self._remember((kind, n, d), int(value)):
                return
            fresh = not self.path.exists() or self.path.stat().st_size == 0
            with self.path.open("a", encoding="utf-8", newline="\n") as fh:
                if fresh:
                    fh.write(HEADER + "\n")
                fh.write(format_record(kind, n, d, int(value)) + "\n")

    def records(self) -> list[tuple[str, Optional[int], Optional[int], int]]:
        return [(k, n, d, v) for (k, n, d), v in self._records.items()]


class NullCache(ResultCache):
    """Stand-in that remembers nothing and never touches the disk."""

    def __init__(self):
        self.path = Path(os.devnull)
        self._records = {}
        self._lock = threading.Lock()

    def put(self, kind: str, n: Optional[int], d: Optional[int], value: int) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown record kind {kind!r}")

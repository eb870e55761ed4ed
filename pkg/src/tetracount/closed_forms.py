"""Closed-form counts and bounds, evaluated in integer arithmetic only.

Floors of expressions involving sqrt(2) or sqrt(3) go through
:func:`math.isqrt`. The irrational arguments never land on an integer, which
is what makes the integer rewrites below exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from tetracount.errors import IntegrityError

# Conjectured linear law for d-t_(3d+5) holds from here on (verified numerically
# far beyond, never proved).
TOP_ROW_CONJECTURE_START = 1111
# Range where d-t_(3d+5) = 3d - 5 is established by enumeration (and tested).
SMALL_TOP_ROW = (5, 41)


@dataclass(frozen=True)
class DiameterBounds:
    n: int
    d_min: int
    d_max: int

    @property
    def empty(self) -> bool:
        return self.d_min > self.d_max

    def __iter__(self):
        return iter(range(self.d_min, self.d_max + 1))


@dataclass(frozen=True)
class FacePerimeterBounds:
    n: int
    M_min: int
    M_max: int


@dataclass(frozen=True)
class Prediction:
    """A predicted cell value; ``conjectural`` marks unproved formulas."""

    value: int
    conjectural: bool = False


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def diameter_bounds(n: int) -> DiameterBounds:
    """Range of diameters a tetrahedron of perimeter ``n`` can have."""
    return DiameterBounds(n, _ceil_div(n, 6), (n - 3) // 3)


def perimeter_bounds(d: int) -> tuple[int, int]:
    """Range ``(3d+3, 6d)`` of perimeters for diameter ``d``."""
    return 3 * d + 3, 6 * d


def face_perimeter_bounds(n: int) -> FacePerimeterBounds:
    return FacePerimeterBounds(n, _ceil_div(n, 2), (2 * n - 3) // 3)


def fix_three_cycle(n: int) -> int:
    """Valid labelings of perimeter ``n`` with ``A=B=C`` and ``a=b=c``.

    Equals floor(n / (3 + sqrt 3)) = floor((3n - sqrt(3 n^2)) / 6) when
    3 divides n. With s = isqrt(3 n^2) the argument lies strictly inside
    ((3n - s - 1)/6, (3n - s)/6), an interval containing no integer.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n % 3:
        return 0
    s = isqrt(3 * n * n)
    return (3 * n - s - 1) // 6


def fix_four_cycle(n: int) -> int:
    """Valid labelings of perimeter ``n`` with ``A=a`` and ``B=C=b=c``.

    1/(4+4 sqrt 2) = (sqrt 2 - 1)/4, so for n = 0 mod 4 the count is
    floor((sqrt(2 n^2) - n)/4), and for n = 2 mod 4 it is
    floor((sqrt(2 n^2) - n + 2)/4). Both reduce to isqrt(2 n^2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return 0
    s = isqrt(2 * n * n)
    if n % 4 == 0:
        return (s - n) // 4
    return (s - n + 2) // 4


def triangle_count_perimeter(n: int) -> int:
    """Integer triangles of perimeter ``n`` up to congruence.

    Nearest integer to m^2/48 with m = n (even) or n + 3 (odd). m^2 is never
    24 mod 48, so no half-way ties arise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = n if n % 2 == 0 else n + 3
    return (m * m + 24) // 48


def triangle_count_diameter(d: int) -> int:
    """Integer triangles with longest side ``d``."""
    if d < 1:
        raise ValueError("d must be positive")
    return (d + 1) ** 2 // 4


_B_BY_RESIDUE = {
    0: 192,
    1: 53, 5: 53, 7: 53, 11: 53,
    2: 104, 10: 104,
    3: 117, 9: 117,
    4: 128, 8: 128,
    6: 168,
}


def stable_b(k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return 96 if k == 0 else _B_BY_RESIDUE[k % 12]


def stable_a(k: int) -> int:
    """k-th term of the stable column sequence, (k^4 + 42 k^2 + b_k) / 96."""
    num = k**4 + 42 * k * k + stable_b(k)
    q, r = divmod(num, 96)
    if r:
        raise IntegrityError(f"stable column numerator {num} not divisible by 96 at k={k}")
    return q


def predicted_top_count(d: int, n: int) -> Optional[Prediction]:
    """Known or conjectured value of the cell (n, d) near the top of column d."""
    if d < 1:
        raise ValueError("d must be positive")
    if n == 3 * d + 3:
        return Prediction(_ceil_div(d, 2))
    if n == 3 * d + 4:
        return Prediction(d - 1)
    if n == 3 * d + 5 and SMALL_TOP_ROW[0] <= d <= SMALL_TOP_ROW[1]:
        return Prediction(3 * d - 5)
    if n == 3 * d + 5 and d >= TOP_ROW_CONJECTURE_START:
        return Prediction(2 * d + 15, conjectural=True)
    return None

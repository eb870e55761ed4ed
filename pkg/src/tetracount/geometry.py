"""Exact validity predicates for integer edge labelings.

An edge labeling is the 6-tuple ``<A, a, B, b, C, c>`` of side lengths of a
tetrahedron. ``(A, a)``, ``(B, b)`` and ``(C, c)`` are pairs of opposite
edges, and the four faces are ``(A, B, C)``, ``(A, b, c)``, ``(a, B, c)`` and
``(a, b, C)``.

Everything here runs on Python integers, so the predicates are exact at any
magnitude. The compiled enumeration kernels use a 64/128-bit version of the
same fold test, valid while the diameter stays at or below
:data:`FAST_PATH_MAX_DIAMETER`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

# With every edge <= d and both faces (A,B,C), (A,b,c) valid:
#   |P_term| <= 8 d^4 and 0 < H1, H2 <= 4 d^4,
# so P_term, H1 and H2 fit a signed 64-bit integer while 8 d^4 < 2^63,
# i.e. d <= 32767, and P_term^2, H1*H2 <= 64 d^8 < 2^127.
FAST_PATH_MAX_DIAMETER = 30_000


class _Labels(NamedTuple):
    A: int
    a: int
    B: int
    b: int
    C: int
    c: int


class EdgeLabeling(_Labels):
    """Side lengths ``<A, a, B, b, C, c>``; compares lexicographically."""

    __slots__ = ()

    def __new__(cls, A: int, a: int, B: int, b: int, C: int, c: int):
        self = super().__new__(cls, A, a, B, b, C, c)
        if min(self) < 1:
            raise ValueError(f"edge lengths must be positive integers, got {tuple(self)}")
        return self

    def perimeter(self) -> int:
        return sum(self)

    def diameter(self) -> int:
        return max(self)

    def scaled(self, k: int) -> "EdgeLabeling":
        return EdgeLabeling(*(k * x for x in self))

    def __repr__(self) -> str:
        return "<{}>".format(",".join(str(x) for x in self))


@dataclass(frozen=True)
class ExactFoldTerms:
    """Denominator-free form of the fold inequality for a labeling.

    With ``x1 = (A^2+B^2-C^2)/(2A)``, ``x2 = (A^2+c^2-b^2)/(2A)``,
    ``Y1 = B^2 - x1^2`` and ``Y2 = c^2 - x2^2``, multiplying
    ``(a^2 - B^2 - c^2 + 2 x1 x2)^2 < 4 Y1 Y2`` through by ``4 A^4`` gives
    ``P_term^2 < H1 * H2``.
    """

    P_term: int
    H1: int
    H2: int

    @classmethod
    def of(cls, g: EdgeLabeling) -> "ExactFoldTerms":
        A, a, B, b, C, c = g
        A2 = A * A
        u = A2 + B * B - C * C
        v = A2 + c * c - b * b
        return cls(
            P_term=2 * A2 * (a * a - B * B - c * c) + u * v,
            H1=4 * A2 * B * B - u * u,
            H2=4 * A2 * c * c - v * v,
        )

    def holds(self) -> bool:
        return self.P_term * self.P_term < self.H1 * self.H2


def is_triangle(x: int, y: int, z: int) -> bool:
    """True iff ``x, y, z`` are the sides of a non-degenerate triangle."""
    return x + y + z > 2 * max(x, y, z)


def satisfies_fold_condition(g: EdgeLabeling) -> bool:
    """Whether the ``(A,B,C)`` and ``(A,b,c)`` faces fold to meet at distance ``a``.

    Only meaningful when both faces are valid triangles. If either is not,
    one of ``H1``, ``H2`` is non-positive and the answer is ``False``.
    """
    terms = ExactFoldTerms.of(g)
    if terms.H1 <= 0 or terms.H2 <= 0:
        return False
    return terms.holds()


def cayley_menger_determinant(g: EdgeLabeling) -> int:
    """The bordered 5x5 Cayley-Menger determinant of the squared lengths.

    Vertices are ordered so that ``d12=A, d13=C, d14=b, d23=B, d24=c, d34=a``.
    For a genuine tetrahedron the value is ``288 V^2``.
    """
    A, a, B, b, C, c = (x * x for x in g)
    m = [
        [0, A, C, b, 1],
        [A, 0, B, c, 1],
        [C, B, 0, a, 1],
        [b, c, a, 0, 1],
        [1, 1, 1, 1, 0],
    ]
    return _det(m)


def _det(m: list[list[int]]) -> int:
    # Fraction-free Bareiss elimination with row pivoting.
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cayley_menger_positive(g: EdgeLabeling) -> bool:
    return cayley_menger_determinant(g) > 0


def is_valid_tetrahedron(g: EdgeLabeling) -> bool:
    """True iff ``g`` is the labeling of a non-degenerate integer tetrahedron.

    The triangle conditions on the two remaining faces are implied by the
    fold condition, so only three tests are needed.
    """
    A, a, B, b, C, c = g
    return is_triangle(A, B, C) and is_triangle(A, b, c) and satisfies_fold_condition(g)


def all_conditions(g: EdgeLabeling) -> bool:
    """All four face triangle tests plus the fold test, with nothing skipped."""
    A, a, B, b, C, c = g
    return (
        is_triangle(A, B, C)
        and is_triangle(A, b, c)
        and is_triangle(a, B, c)
        and is_triangle(a, b, C)
        and satisfies_fold_condition(g)
    )

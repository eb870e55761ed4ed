"""The S4 action on edge labelings.

Vertices 1..4 carry the edges as ``A={2,3}, a={1,4}, B={1,3}, b={2,4},
C={1,2}, c={3,4}``, and a permutation acts by
``(s.G)(i, j) = G(s^-1(i), s^-1(j))``. Every group element then reduces to a
shuffle of the six tuple positions: it permutes the three opposite pairs and
swaps the entries inside an even number of them. The 24 shuffles are listed
in :data:`IMAGE_TABLE`; the test suite rebuilds them from the vertex action.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from tetracount.errors import IntegrityError
from tetracount.geometry import EdgeLabeling

# Vertex pair carrying each tuple position (A, a, B, b, C, c).
EDGE_VERTICES = ((2, 3), (1, 4), (1, 3), (2, 4), (1, 2), (3, 4))


class ConjugacyClass(enum.Enum):
    """Conjugacy classes of S4, with the representative used for fix counts."""

    IDENTITY = ("Identity", 1, ())
    THREE_CYCLE = ("ThreeCycle", 8, ((1, 2, 3),))
    DOUBLE_TRANSPOSITION = ("DoubleTransposition", 3, ((1, 4), (2, 3)))
    TRANSPOSITION = ("Transposition", 6, ((2, 3),))
    FOUR_CYCLE = ("FourCycle", 6, ((1, 2, 4, 3),))

    def __init__(self, tag: str, multiplicity: int, cycles: tuple):
        self.tag = tag
        self.multiplicity = multiplicity
        self.cycles = cycles

    @property
    def is_rotation(self) -> bool:
        return self in (
            ConjugacyClass.IDENTITY,
            ConjugacyClass.THREE_CYCLE,
            ConjugacyClass.DOUBLE_TRANSPOSITION,
        )

    @classmethod
    def of_cycle_type(cls, lengths: tuple[int, ...]) -> "ConjugacyClass":
        key = tuple(sorted((x for x in lengths if x > 1), reverse=True))
        return {
            (): cls.IDENTITY,
            (3,): cls.THREE_CYCLE,
            (2, 2): cls.DOUBLE_TRANSPOSITION,
            (2,): cls.TRANSPOSITION,
            (4,): cls.FOUR_CYCLE,
        }[key]


CLASS_ORDER = (
    ConjugacyClass.IDENTITY,
    ConjugacyClass.THREE_CYCLE,
    ConjugacyClass.DOUBLE_TRANSPOSITION,
    ConjugacyClass.TRANSPOSITION,
    ConjugacyClass.FOUR_CYCLE,
)


@dataclass(frozen=True)
class SignedPermutation:
    """One of the 24 position shuffles.

    ``shuffle[i]`` is the position of the source tuple whose value lands in
    position ``i`` of the image. ``pair_permutation[k]`` is the source pair
    (0 for A/a, 1 for B/b, 2 for C/c) moved into pair slot ``k``, and
    ``flips`` lists the slots whose two entries come out swapped.
    """

    index: int
    shuffle: tuple[int, ...]
    vertex_cycles: tuple[tuple[int, ...], ...]
    is_rotation: bool
    conjugacy_class: ConjugacyClass

    @property
    def pair_permutation(self) -> tuple[int, int, int]:
        return tuple(self.shuffle[2 * k] // 2 for k in range(3))

    @property
    def flips(self) -> frozenset[int]:
        return frozenset(k for k in range(3) if self.shuffle[2 * k] % 2 == 1)

    @property
    def parity(self) -> str:
        return "rotation" if self.is_rotation else "reflection"

    def apply(self, g: EdgeLabeling) -> EdgeLabeling:
        return EdgeLabeling(*(g[i] for i in self.shuffle))


# (shuffle, vertex permutation in cycle notation); order follows the usual
# listing of the orbit of <AaBbCc>, with the rotations in the first 12 rows.
_TABLE = (
    ((0, 1, 2, 3, 4, 5), ()),
    ((0, 1, 3, 2, 5, 4), ((1, 4), (2, 3))),
    ((1, 0, 2, 3, 5, 4), ((1, 3), (2, 4))),
    ((1, 0, 3, 2, 4, 5), ((1, 2), (3, 4))),
    ((4, 5, 0, 1, 2, 3), ((1, 2, 3),)),
    ((5, 4, 0, 1, 3, 2), ((1, 4, 2),)),
    ((5, 4, 1, 0, 2, 3), ((2, 4, 3),)),
    ((4, 5, 1, 0, 3, 2), ((1, 3, 4),)),
    ((2, 3, 4, 5, 0, 1), ((1, 3, 2),)),
    ((3, 2, 5, 4, 0, 1), ((1, 4, 3),)),
    ((2, 3, 5, 4, 1, 0), ((1, 2, 4),)),
    ((3, 2, 4, 5, 1, 0), ((2, 3, 4),)),
    ((0, 1, 4, 5, 2, 3), ((2, 3),)),
    ((0, 1, 5, 4, 3, 2), ((1, 4),)),
    ((1, 0, 5, 4, 2, 3), ((1, 2, 4, 3),)),
    ((1, 0, 4, 5, 3, 2), ((1, 3, 4, 2),)),
    ((2, 3, 0, 1, 4, 5), ((1, 2),)),
    ((3, 2, 0, 1, 5, 4), ((1, 4, 2, 3),)),
    ((2, 3, 1, 0, 5, 4), ((1, 3, 2, 4),)),
    ((3, 2, 1, 0, 4, 5), ((3, 4),)),
    ((4, 5, 2, 3, 0, 1), ((1, 3),)),
    ((5, 4, 3, 2, 0, 1), ((1, 4, 3, 2),)),
    ((5, 4, 2, 3, 1, 0), ((2, 4),)),
    ((4, 5, 3, 2, 1, 0), ((1, 2, 3, 4),)),
)


def _make_permutations() -> tuple[SignedPermutation, ...]:
    out = []
    for index, (shuffle, cycles) in enumerate(_TABLE):
        cls = ConjugacyClass.of_cycle_type(tuple(len(c) for c in cycles))
        out.append(SignedPermutation(index, shuffle, cycles, cls.is_rotation, cls))
    return tuple(out)


PERMUTATIONS: tuple[SignedPermutation, ...] = _make_permutations()
IMAGE_TABLE: tuple[tuple[int, ...], ...] = tuple(p.shuffle for p in PERMUTATIONS)


def cycles_to_map(cycles: Iterable[Iterable[int]]) -> dict[int, int]:
    """Vertex map ``i -> s(i)`` for a permutation in cycle notation."""
    mapping = {i: i for i in range(1, 5)}
    for cyc in cycles:
        cyc = tuple(cyc)
        for i, v in enumerate(cyc):
            mapping[v] = cyc[(i + 1) % len(cyc)]
    return mapping


def act(cycles: Iterable[Iterable[int]], g: EdgeLabeling) -> EdgeLabeling:
    """Apply a vertex permutation directly through the vertex action."""
    s = cycles_to_map(cycles)
    inv = {v: k for k, v in s.items()}
    where = {frozenset(e): i for i, e in enumerate(EDGE_VERTICES)}
    return EdgeLabeling(
        *(g[where[frozenset((inv[i], inv[j]))]] for i, j in EDGE_VERTICES)
    )


def orbit_images(g: EdgeLabeling) -> list[EdgeLabeling]:
    """All 24 images of ``g``, in :data:`IMAGE_TABLE` order, repeats kept."""
    return [EdgeLabeling(*(g[i] for i in shuffle)) for shuffle in IMAGE_TABLE]


def canonical_form(g: EdgeLabeling) -> EdgeLabeling:
    """Lexicographically greatest image, comparing in order (A,a,B,b,C,c)."""
    return EdgeLabeling(*max(tuple(g[i] for i in shuffle) for shuffle in IMAGE_TABLE))


def stabilizer_order(g: EdgeLabeling) -> int:
    return sum(1 for shuffle in IMAGE_TABLE if all(g[i] == g[k] for k, i in enumerate(shuffle)))


def orbit_size(g: EdgeLabeling) -> int:
    return 24 // stabilizer_order(g)


def is_fixed_by(g: EdgeLabeling, cls: ConjugacyClass) -> bool:
    """Whether the class representative leaves ``g`` unchanged."""
    A, a, B, b, C, c = g
    if cls is ConjugacyClass.IDENTITY:
        return True
    if cls is ConjugacyClass.THREE_CYCLE:
        return A == B == C and a == b == c
    if cls is ConjugacyClass.DOUBLE_TRANSPOSITION:
        return B == b and C == c
    if cls is ConjugacyClass.TRANSPOSITION:
        return B == C and b == c
    if cls is ConjugacyClass.FOUR_CYCLE:
        return A == a and B == C == b == c
    raise ValueError(cls)


@dataclass(frozen=True)
class FixVector:
    """Fixed-point counts at perimeter ``n``, one per conjugacy class."""

    n: int
    fix_id: int
    fix_3cyc: int
    fix_dbl: int
    fix_transp: int
    fix_4cyc: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.fix_id, self.fix_3cyc, self.fix_dbl, self.fix_transp, self.fix_4cyc)


def burnside_full(fv: FixVector) -> int:
    """Orbit count under the full group (congruence classes)."""
    total = fv.fix_id + 8 * fv.fix_3cyc + 3 * fv.fix_dbl + 6 * fv.fix_transp + 6 * fv.fix_4cyc
    q, r = divmod(total, 24)
    if r:
        raise IntegrityError(f"Burnside sum {total} for n={fv.n} is not divisible by 24")
    return q


def burnside_rotations(fv: FixVector) -> int:
    """Orbit count under the rotation subgroup (classes up to rotation only)."""
    total = fv.fix_id + 8 * fv.fix_3cyc + 3 * fv.fix_dbl
    q, r = divmod(total, 12)
    if r:
        raise IntegrityError(f"rotation Burnside sum {total} for n={fv.n} is not divisible by 12")
    return q

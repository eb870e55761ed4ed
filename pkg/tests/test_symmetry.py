import itertools

import pytest

from tetracount.enumeration import fix_counts, valid_labelings
from tetracount.errors import IntegrityError
from tetracount.fixtures import fix_rows
from tetracount.geometry import EdgeLabeling
from tetracount.symmetry import (
    CLASS_ORDER,
    EDGE_VERTICES,
    IMAGE_TABLE,
    PERMUTATIONS,
    ConjugacyClass,
    FixVector,
    act,
    burnside_full,
    burnside_rotations,
    canonical_form,
    cycles_to_map,
    is_fixed_by,
    orbit_images,
    orbit_size,
    stabilizer_order,
)

DISTINCT = EdgeLabeling(1, 2, 3, 4, 5, 6)


def _cycles_of(perm: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    seen, out = set(), []
    for start in range(1, 5):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return tuple(out)


class TestTable:
    def test_size_and_parity(self):
        assert len(PERMUTATIONS) == 24
        assert sum(p.is_rotation for p in PERMUTATIONS) == 12
        assert all(p.is_rotation == (p.index < 12) for p in PERMUTATIONS)
        assert {p.parity for p in PERMUTATIONS} == {"rotation", "reflection"}

    def test_flips_even(self):
        for p in PERMUTATIONS:
            assert len(p.flips) in (0, 2)
            assert sorted(p.pair_permutation) == [0, 1, 2]

    def test_shuffles_are_distinct(self):
        assert len(set(IMAGE_TABLE)) == 24

    def test_each_row_matches_the_vertex_action(self):
        for p in PERMUTATIONS:
            assert p.apply(DISTINCT) == act(p.vertex_cycles, DISTINCT), p.index

    def test_every_vertex_permutation_appears_once(self):
        rows = set()
        for images in itertools.permutations(range(1, 5)):
            cycles = _cycles_of(dict(zip(range(1, 5), images)))
            rows.add(act(cycles, DISTINCT))
        assert rows == {p.apply(DISTINCT) for p in PERMUTATIONS}

    def test_class_sizes(self):
        sizes = {cls: 0 for cls in CLASS_ORDER}
        for p in PERMUTATIONS:
            sizes[p.conjugacy_class] += 1
        assert [sizes[c] for c in CLASS_ORDER] == [1, 8, 3, 6, 6]
        assert [c.multiplicity for c in CLASS_ORDER] == [1, 8, 3, 6, 6]
        assert sum(c.multiplicity for c in CLASS_ORDER if c.is_rotation) == 12

    def test_edge_vertices_faces(self):
        faces = [(0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4)]
        for face in faces:
            verts = set().union(*(EDGE_VERTICES[i] for i in face))
            assert len(verts) == 3
        for i in (0, 2, 4):
            assert not set(EDGE_VERTICES[i]) & set(EDGE_VERTICES[i + 1])


def test_cycles_to_map():
    assert cycles_to_map([(1, 2, 4, 3)]) == {1: 2, 2: 4, 4: 3, 3: 1}
    assert cycles_to_map([]) == {1: 1, 2: 2, 3: 3, 4: 4}


class TestOrbits:
    def test_equilateral(self):
        g = EdgeLabeling(1, 1, 1, 1, 1, 1)
        assert orbit_images(g) == [g] * 24
        assert orbit_size(g) == 1

    def test_three_fold_symmetric(self):
        g = EdgeLabeling(275, 365, 275, 365, 275, 365)
        assert len(set(orbit_images(g))) == 4
        assert stabilizer_order(g) == 6

    def test_all_distinct(self):
        g = EdgeLabeling(373, 348, 365, 240, 275, 252)
        assert len(set(orbit_images(g))) == 24

    def test_canonical_examples(self):
        thin = EdgeLabeling(1, 5, 1, 5, 1, 5)
        assert canonical_form(thin) == EdgeLabeling(5, 1, 5, 1, 1, 5)
        # Swapping inside all three pairs is an odd number of flips.
        assert EdgeLabeling(5, 1, 5, 1, 5, 1) not in orbit_images(thin)
        assert canonical_form(EdgeLabeling(1, 1, 1, 1, 1, 1)) == EdgeLabeling(1, 1, 1, 1, 1, 1)

    def test_canonical_is_lex_max_invariant_and_idempotent(self):
        for row in itertools.product(range(1, 4), repeat=6):
            g = EdgeLabeling(*row)
            cf = canonical_form(g)
            images = orbit_images(g)
            assert cf == max(images)
            assert canonical_form(cf) == cf
            assert all(canonical_form(h) == cf for h in images)
            assert 24 % len(set(images)) == 0
            assert len(set(images)) == 24 // stabilizer_order(g)


class TestFixed:
    def test_examples(self):
        one = EdgeLabeling(1, 1, 1, 1, 1, 1)
        assert all(is_fixed_by(one, c) for c in ConjugacyClass)
        g = EdgeLabeling(7, 4, 7, 4, 7, 4)
        # B=C and b=c hold, B=b does not.
        assert not is_fixed_by(g, ConjugacyClass.DOUBLE_TRANSPOSITION)
        assert is_fixed_by(g, ConjugacyClass.TRANSPOSITION)
        assert act(((1, 4), (2, 3)), g) != g and act(((2, 3),), g) == g
        assert is_fixed_by(EdgeLabeling(5, 5, 3, 3, 3, 3), ConjugacyClass.FOUR_CYCLE)

    def test_constraints_match_representative_action(self):
        for row in itertools.product(range(1, 4), repeat=6):
            g = EdgeLabeling(*row)
            for cls in ConjugacyClass:
                assert is_fixed_by(g, cls) == (act(cls.cycles, g) == g)

    def test_fix_is_a_class_function(self):
        for n in range(6, 31):
            labelings = valid_labelings(n)
            for cls in ConjugacyClass:
                members = [p for p in PERMUTATIONS if p.conjugacy_class is cls]
                counts = {sum(1 for g in labelings if act(p.vertex_cycles, g) == g)
                          for p in members}
                assert len(counts) == 1, (n, cls)
                assert counts == {sum(1 for g in labelings if is_fixed_by(g, cls))}

    def test_enumerated_fix_matches_constraint_counts(self):
        for n in (12, 18, 24, 30):
            labelings = valid_labelings(n)
            fv = fix_counts(n)
            got = tuple(sum(1 for g in labelings if is_fixed_by(g, c)) for c in CLASS_ORDER)
            assert got == fv.as_tuple()


class TestBurnside:
    def test_examples(self):
        assert burnside_full(FixVector(30, 2013, 6, 57, 93, 3)) == 117
        assert burnside_full(FixVector(100, 999738, 0, 1674, 3798, 10)) == 42817
        assert burnside_full(FixVector(0, 0, 0, 0, 0, 0)) == 0
        assert burnside_rotations(FixVector(30, 2013, 6, 57, 0, 0)) == 186
        assert burnside_rotations(FixVector(100, 999738, 0, 1674, 0, 0)) == 83730
        assert burnside_rotations(FixVector(0, 24, 0, 0, 0, 0)) == 2

    def test_divisibility_failure(self):
        with pytest.raises(IntegrityError):
            burnside_full(FixVector(1, 1, 0, 0, 0, 0))
        with pytest.raises(IntegrityError):
            burnside_rotations(FixVector(1, 5, 0, 0, 0, 0))

    def test_rotation_classes_bounded_by_twice_congruence(self):
        for n, row in fix_rows().items():
            t, t_rot = row[5], row[6]
            assert t <= t_rot <= 2 * t, n
            fv = FixVector(n, *row[:5])
            assert fv.fix_id >= max(row[1:5])
            assert burnside_full(fv) == t and burnside_rotations(fv) == t_rot

"""Acceptance criteria, one logged PASS/FAIL line each.

Budgets are wall-clock seconds on the machine running the suite. Checks that
take minutes are marked ``extended`` and only run with ``--run-extended``.
"""

import functools

import pytest

import test_properties as props
from acceptance_log import criterion
from tetracount import _kernels
from tetracount.analysis import find_peak_diameter, format_fixed, stable_column_check, stats_diameter, stats_perimeter
from tetracount.closed_forms import diameter_bounds, fix_four_cycle, fix_three_cycle
from tetracount.enumeration import column, count_diameter, count_joint, count_perimeter, fix_counts
from tetracount.fixtures import c_ratios, diameter_stats, fix_rows, joint_counts, perimeter_counts
from tetracount.oracle import oracle_run
from tetracount.symmetry import burnside_full, burnside_rotations


@functools.lru_cache(maxsize=None)
def _column(d):
    return column(d)


def test_perimeter_counts_to_200():
    tn = perimeter_counts()
    with criterion("t_n for 1 <= n <= 200 exact", 60):
        got = {n: count_perimeter(n) for n in range(1, 201)}
        assert (got[30], got[100], got[200]) == (117, 42817, 1382630)
        bad = [n for n in got if got[n] != tn[n]]
        assert not bad, f"mismatch at n={bad}"


def test_perimeter_count_300():
    with criterion("t_300 = 10542791", 600):
        assert count_perimeter(300) == 10542791 == perimeter_counts()[300]


@pytest.mark.extended
def test_perimeter_count_500():
    with criterion("t_500 = 135995968 (extended)", 600):
        assert count_perimeter(500) == 135995968 == perimeter_counts()[500]


def test_joint_grid_to_50():
    ref = joint_counts()
    with criterion("joint grid t(n, d) for 6 <= n <= 50 exact", 10):
        cells = 0
        for n in range(6, 51):
            for d in diameter_bounds(n):
                assert count_joint(n, d) == ref.get((n, d), 0), (n, d)
                cells += 1
        assert cells >= len(ref)
        assert all(d in diameter_bounds(n) for n, d in ref)


def test_fixed_point_table():
    rows = fix_rows()
    with criterion("fix counts and Burnside columns for 1 <= n <= 100; closed forms to 200", 300):
        assert sorted(rows) == list(range(1, 101))
        for n in range(1, 101):
            fv = fix_counts(n)
            assert (*fv.as_tuple(), burnside_full(fv), burnside_rotations(fv)) == rows[n], n
        for n in range(6, 201):
            f3, _, _, f4 = _kernels.fix_symmetric(n)
            assert (f3, f4) == (fix_three_cycle(n), fix_four_cycle(n)), n


def test_diameter_100():
    with criterion("t^100 = 256866619 and peak (450, 2205518)", 1800):
        assert count_diameter(100) == 256866619
        p = find_peak_diameter(100)
        assert (p.argmax, p.peak_value) == (450, 2205518)
        row = diameter_stats()[100]
        assert (row.count, row.argmax, row.mu) == (256866619, 450, 2205518)


@pytest.mark.extended
def test_diameter_200():
    with criterion("t^200 = 8227353208 and peak (900, 35302466) (extended)", 1800):
        col = _column(200)
        assert sum(col.values()) == 8227353208
        assert max(col.items(), key=lambda kv: (kv[1], -kv[0])) == (900, 35302466)


def test_oracle_equivalence():
    with criterion("oracle = engine for 6 <= n <= 40, three validity routes agree", 600):
        visited = 0
        for n in range(6, 41):
            run, _ = oracle_run(n)
            visited += run.visited
            assert run.orbits == count_perimeter(n), n
        assert visited > 0


def test_top_rows_and_stable_column():
    with criterion("top rows to d = 80, stable column (60, 30), 2d+15 at d = 1111, 1112", 60):
        for d in range(1, 81):
            assert count_joint(3 * d + 3, d) == (d + 1) // 2, d
            assert count_joint(3 * d + 4, d) == d - 1, d
        checks = stable_column_check(60, 30)
        assert len(checks) == 31 and all(c.match for c in checks)
        for d in (1111, 1112):
            assert count_joint(3 * d + 5, d, engine="naive") == 2 * d + 15, d


def test_statistics():
    with criterion("C_100, C_200 and C^100 to printed precision", 1800):
        rows = stats_perimeter([(100, count_perimeter(100)), (200, count_perimeter(200))])
        assert format_fixed(rows[0].C, 3) == "233552.094" == c_ratios()[100][0]
        assert format_fixed(rows[1].C, 3) == "231442.975" == c_ratios()[200][0]
        col = _column(100)
        r = stats_diameter([(100, sum(col.values()), max(col.values()))])[0]
        assert format_fixed(r.C, 8) == "38.93071057" == diameter_stats()[100].C


def test_property_suite():
    with criterion("property suite", 300):
        props.test_canonical_form_idempotent_and_orbit_invariant()
        props.test_validity_invariant_under_all_images()
        props.test_near_regular_labelings_are_valid()
        props.test_orbit_stabilizer()
        props.test_scaling_closure()
        props.test_worker_count_determinism()
        props.test_burnside_sums_divide()
        props.test_checked_arithmetic_aborts_instead_of_wrapping()
        props.test_checked_add_at_the_edge()

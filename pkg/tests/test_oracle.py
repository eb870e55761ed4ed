import subprocess
import sys
from math import comb

import numpy as np
import pytest

from tetracount import oracle
from tetracount.enumeration import enumerate_representatives, joint_table
from tetracount.errors import CeilingError, IntegrityError
from tetracount.fixtures import perimeter_counts
from tetracount.oracle import (
    DEFAULT_CEILING,
    HARD_CEILING,
    classify,
    compositions,
    oracle_count_perimeter,
    oracle_joint_table,
    oracle_run,
)


@pytest.fixture(scope="module")
def grid_40():
    return oracle_joint_table(40)


def test_examples():
    assert oracle_count_perimeter(12) == 3
    assert oracle_count_perimeter(25) == 46
    assert oracle_count_perimeter(7) == 0


def test_joint_rows(grid_40):
    assert grid_40.row(18) == {3: 1, 4: 8, 5: 3}
    assert grid_40.row(12) == {2: 1, 3: 2}
    assert grid_40.row(8) == {}


def test_compositions_complete():
    for n in (6, 7, 13):
        rows = compositions(n)
        assert len(rows) == comb(n - 1, 5)
        assert (rows.sum(axis=1) == n).all() and (rows >= 1).all()
        assert len({tuple(r) for r in rows.tolist()}) == len(rows)
    assert compositions(5).shape == (0, 6)


def test_matches_fast_engine_to_40(grid_40):
    fast = joint_table(6, 40)
    tn = perimeter_counts()
    for n in range(6, 41):
        assert grid_40.row(n) == fast.row(n), n
        assert grid_40.row_sum(n) == tn[n], n


def test_representatives_equal_storing_engine():
    for n in range(6, 31):
        _, reps = oracle_run(n)
        assert {tuple(r) for r in enumerate_representatives(n)} == set(reps), n


def test_run_statistics():
    run, reps = oracle_run(20)
    assert run.visited == comb(19, 5)
    assert run.orbits == len(reps) == perimeter_counts()[20]
    assert run.orbits <= run.valid <= 24 * run.orbits


def test_ceiling():
    with pytest.raises(CeilingError):
        oracle_count_perimeter(DEFAULT_CEILING + 1)
    with pytest.raises(CeilingError):
        oracle_joint_table(DEFAULT_CEILING + 1)
    with pytest.raises(CeilingError):
        oracle_count_perimeter(10, ceiling=HARD_CEILING + 1)
    assert oracle_count_perimeter(9, ceiling=9) == 1


def test_route_disagreement_is_an_integrity_error(monkeypatch):
    monkeypatch.setattr(oracle, "_fold", lambda t: np.ones(len(t), bool))
    with pytest.raises(IntegrityError):
        oracle_count_perimeter(20)


def test_classify_rejects_degenerate_and_accepts_regular():
    t = np.array([[1, 1, 1, 1, 1, 1], [7, 4, 7, 4, 7, 4], [2, 1, 1, 1, 1, 1], [8, 4, 6, 6, 1, 1]])
    assert classify(t).tolist() == [True, False, False, False]


def test_import_shares_nothing_with_fast_path():
    code = (
        "import sys, tetracount.oracle; "
        "print(','.join(sorted(m for m in sys.modules if m.startswith(('tetracount', 'numba')))))"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    loaded = set(out.stdout.strip().split(","))
    assert not loaded & {"tetracount._kernels", "tetracount.enumeration",
                         "tetracount.symmetry", "tetracount.closed_forms", "numba"}


@pytest.mark.extended
def test_matches_fast_engine_to_60():
    tn = perimeter_counts()
    for n in range(41, 61):
        assert oracle_count_perimeter(n) == tn[n], n

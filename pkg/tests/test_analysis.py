import pytest

from tetracount.analysis import (
    PERIMETER_HINT,
    S_CONSTANT,
    climb,
    find_peak,
    find_peak_diameter,
    format_fixed,
    scan,
    stable_column_check,
    stats_diameter,
    stats_perimeter,
    top_sequences,
)
from tetracount.closed_forms import diameter_bounds
from tetracount.enumeration import joint_table
from tetracount.fixtures import c_ratios, diameter_stats, perimeter_counts, perimeter_stats

# Printed values that do not follow from the printed counts (see notes).
PRINT_ANOMALIES = {(9000, "rho"), (40000, "D")}


def _places(printed: str) -> int:
    return len(printed.split(".")[1]) if "." in printed else 0


class TestExamples:
    def test_stats_perimeter(self):
        rows = stats_perimeter([(100, 42817), (200, 1382630)])
        assert format_fixed(rows[0].C, 3) == "233552.094"
        assert format_fixed(rows[1].C, 3) == "231442.975"
        r = stats_perimeter([(1000, 4360687860, 61261647)])[0]
        assert format_fixed(r.rho, 6) == "71.181368"
        assert format_fixed(r.rho_over_index, 9) == "0.071181368"

    def test_find_peak(self):
        p = find_peak(6)
        assert (p.argmax, p.peak_value, p.exhaustive) == (1, 1, True)
        p = find_peak(100)
        row = joint_table(100, 100).row(100)
        assert p.peak_value == max(row.values()) and sum(row.values()) == 42817

    def test_find_peak_diameter(self):
        p = find_peak_diameter(1)
        assert (p.argmax, p.peak_value) == (6, 1)
        p = find_peak_diameter(100)
        assert (p.argmax, p.peak_value) == (450, 2205518)

    def test_stable_column_check(self):
        checks = stable_column_check(30, 3)
        assert [(c.k, c.enumerated, c.predicted, c.match) for c in checks] == [
            (0, 1, 1, True), (1, 1, 1, True), (2, 3, 3, True), (3, 6, 6, True)]
        last = stable_column_check(60, 23)[-1]
        assert (last.enumerated, last.predicted) == (3147, 3147)
        with pytest.raises(ValueError):
            stable_column_check(30, 30)

    def test_top_sequences(self):
        assert top_sequences(20, 20) == [(20, 10, 19, 55)]


def test_c_ratio_table_to_printed_precision():
    tn = perimeter_counts()
    printed = c_ratios()
    rows = stats_perimeter([(n, tn[n]) for n in sorted(printed)])
    assert len(rows) == 100
    for r in rows:
        C, diff, ratio = printed[r.index]
        assert format_fixed(r.C, _places(C)) == C, r.index
        if diff:
            assert format_fixed(r.diff, _places(diff)) == diff, r.index
        if ratio:
            assert format_fixed(r.ratio, _places(ratio)) == ratio, r.index


@pytest.mark.parametrize("source, build", [
    (perimeter_stats, stats_perimeter),
    (diameter_stats, stats_diameter),
])
def test_printed_statistics_to_printed_precision(source, build):
    printed = source()
    rows = {r.index: r for r in build([(p.index, p.count, p.mu) for p in printed.values()])}
    compared = 0
    for idx, p in printed.items():
        r = rows[idx]
        for name in ("rho", "rho_over_index", "D", "C"):
            text = getattr(p, name)
            if not text or (idx, name) in PRINT_ANOMALIES:
                continue
            assert format_fixed(getattr(r, name), _places(text)) == text, (idx, name)
            compared += 1
    assert compared > 3 * len(printed) // 2


def test_known_print_anomalies_are_still_anomalous():
    # If these start matching, the exclusion list above is stale.
    p = perimeter_stats()
    r = stats_perimeter([(9000, p[9000].count, p[9000].mu)])[0]
    assert format_fixed(r.rho, 6) == "640.944642" != p[9000].rho
    r = stats_perimeter([(40000, p[40000].count, p[40000].mu)])[0]
    assert format_fixed(r.D, 5) != p[40000].D


def test_peak_hints_match_printed_argmax():
    for n, p in perimeter_stats().items():
        assert abs(p.argmax - PERIMETER_HINT[0] * n // PERIMETER_HINT[1]) <= max(3, n // 200), n


@pytest.fixture(scope="module")
def table_300():
    return joint_table(6, 300)


def _hinted_agrees(table, ns):
    for n in ns:
        row = table.row(n)
        b = diameter_bounds(n)
        exact = scan(n, row)
        hinted = climb(b.d_min, b.d_max, (PERIMETER_HINT[0] * n + 500) // 1000,
                       lambda d: row.get(d, 0), n)
        assert (hinted.argmax, hinted.peak_value) == (exact.argmax, exact.peak_value), n
        assert hinted.tie == exact.tie and not hinted.exhaustive


def test_hinted_and_exhaustive_agree_to_300(table_300):
    _hinted_agrees(table_300, range(9, 301))


@pytest.mark.extended
def test_hinted_and_exhaustive_agree_to_600():
    _hinted_agrees(joint_table(301, 600), range(301, 601))


def test_hinted_modes_on_real_counts():
    for n in (50, 123, 200):
        assert find_peak(n, "hinted").argmax == find_peak(n).argmax
    assert find_peak_diameter(40, "hinted").argmax == find_peak_diameter(40).argmax


def test_climb_widens_plateaus_to_the_smaller_index():
    values = {1: 1, 2: 5, 3: 5, 4: 5, 5: 2}
    p = climb(1, 5, 4, values.__getitem__, 0)
    assert (p.argmax, p.peak_value, p.tie) == (2, 5, True)
    assert scan(0, values).argmax == 2 and scan(0, values).tie


def test_s_relative_magnitude_trend(table_300):
    rel = {}
    for n in range(100, 301, 25):
        t = table_300.row_sum(n)
        rel[n] = abs(stats_perimeter([(n, t)])[0].s) / t
    seq = [rel[n] for n in sorted(rel)]
    assert seq[-1] < seq[0]
    assert sum(b < a for a, b in zip(seq, seq[1:])) >= len(seq) - 2


def test_stat_row_invariants(table_300):
    for n in range(6, 301):
        row = table_300.row(n)
        if not row:
            continue
        mu = max(row.values())
        r = stats_perimeter([(n, sum(row.values()), mu)])[0]
        assert mu <= r.count <= mu * len(row)
        assert r.rho >= 1


def test_zero_count_rows_are_flagged_not_fatal():
    rows = stats_perimeter([(6, 1, 1), (7, 0, None), (8, 0), (9, 1, 1)])
    assert [r.flagged for r in rows] == [False, True, True, False]
    assert rows[1].C is None and rows[3].diff is None
    assert stats_diameter([(1, 1, 1)])[0].rho == 1.0


def test_s_constant_is_configurable():
    a = stats_perimeter([(100, 42817)])[0].s
    b = stats_perimeter([(100, 42817)], s_constant=229028)[0].s
    assert a == 42817 - 100**5 / S_CONSTANT and b > a


def test_format_fixed_half_even():
    assert format_fixed(0.125, 2) == "0.12"
    assert format_fixed(0.375, 2) == "0.38"
    assert format_fixed(2.5, 0) == "2"
    assert format_fixed(None, 3) == ""
    assert format_fixed(-1.0, 3) == "-1.000"

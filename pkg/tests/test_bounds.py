from fractions import Fraction
from math import ceil, comb, factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mincw.bounds import (
    EMBEDDED_G,
    GTable,
    abch_lower,
    agrell_upper,
    best_bounds,
    bounds_table,
    closure_lower,
    format_table,
    graph_cycle_upper,
    labeled_upper_table,
    matroid_discrepancies,
    matroid_upper,
    random_coding_lower,
    random_coding_value,
    recursion_upper_table,
    refined_trivial_upper,
    trivial_upper,
)
from mincw.errors import BadParameter, UnknownG
from mincw.published import G_VALUES, TABLE_M


def test_trivial():
    assert trivial_upper(9, 1) == 1
    assert trivial_upper(7, 5) == 31
    assert trivial_upper(15, 10) == 1023
    with pytest.raises(BadParameter):
        trivial_upper(3, 4)


def test_refined_trivial():
    assert refined_trivial_upper(9, 6) == 62
    assert refined_trivial_upper(7, 3) == 7
    assert refined_trivial_upper(10, 7) == 126
    with pytest.raises(UnknownG):
        refined_trivial_upper(20, 3)
    for n, g in G_VALUES.items():
        for k in range(1, n + 1):
            assert (refined_trivial_upper(n, k) == 2**k - 1) == (k <= g)


def test_gtable_embedded():
    g = GTable.embedded()
    assert [g[n] for n in range(3, 16)] == [2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 6]
    assert all(g[n] <= g[n + 1] for n in range(3, 15))
    assert all(g[n] <= n for n in range(3, 16))
    assert set(g.sources.values()) == {"embedded"}
    h = g.with_computed({3: 2})
    assert h.sources[3] == "computed" and h[3] == 2


def test_matroid():
    assert matroid_upper(9, 1) == 1
    assert matroid_upper(8, 6) == 56
    assert matroid_upper(15, 13) == 455


def test_agrell_against_exact_rational():
    for n in range(1, 40):
        for k in range(1, n + 1):
            a = agrell_upper(n, k)
            x = Fraction(k - 1, n)
            if x <= Fraction(1, 2):
                assert a is None
            else:
                exact = Fraction(2**k) / (4 * n * (x - Fraction(1, 2)) ** 2)
                assert a == exact.numerator // exact.denominator


@pytest.mark.parametrize(
    "n, k, expected",
    [(12, 9, 384), (13, 10, 532), (14, 10, 896), (14, 11, 796), (15, 11, 1228), (15, 12, 1253)],
)
def test_agrell_published_entries(n, k, expected):
    assert agrell_upper(n, k) == expected
    assert TABLE_M[(n, k)][1:] == (expected, "a")


def test_recursion_table_examples():
    u = recursion_upper_table(15, 15)
    assert all(u[(n, 1)] == 1 for n in range(1, 16))
    assert all(u[(n, n)] == n for n in range(1, 16))
    assert u[(7, 5)] == 29  # U(6,4) + C(6,4) = 14 + 15
    assert u[(8, 6)] <= u[(7, 5)] + comb(7, 5)
    assert u[(8, 6)] == 50


def test_recursion_table_dominated_by_each_candidate():
    t = labeled_upper_table(15, 15)
    for (n, k), (v, _) in t.items():
        assert v <= trivial_upper(n, k)
        assert v <= matroid_upper(n, k)
        if n in EMBEDDED_G:
            assert v <= refined_trivial_upper(n, k)
        a = agrell_upper(n, k)
        if a is not None:
            assert v <= a
        if 1 < k < n:
            assert v <= t[(n - 1, k - 1)][0] + comb(n - 1, k - 1)


def _random_coding_float(n, k):
    # independent float evaluation straight from the formula
    r = n - k
    total = sum(
        comb(n, j) * prod(1 - 2.0 ** (-(r - i)) for i in range(0, j - 1)) for j in range(0, r + 2)
    )
    return total / 2**r


def test_random_coding_examples():
    assert float(random_coding_value(8, 4)) == pytest.approx(141.48046875 / 16)
    assert random_coding_lower(8, 4) == 9
    for n in range(3, 16):
        # r = 1: (1 + n + C(n,2)/2) / 2
        assert random_coding_value(n, n - 1) == (1 + n + Fraction(comb(n, 2), 2)) / 2
        assert random_coding_lower(n, n - 1) == min(ceil((1 + n + Fraction(comb(n, 2), 2)) / 2), 2 ** (n - 1) - 1)
    assert random_coding_lower(5, 4) == 6
    with pytest.raises(BadParameter):
        random_coding_lower(5, 5)


def test_random_coding_matches_float_oracle():
    for n in range(2, 20):
        for k in range(1, n):
            assert float(random_coding_value(n, k)) == pytest.approx(_random_coding_float(n, k), rel=1e-12)
            assert random_coding_lower(n, k) <= 2**k - 1


def test_abch_examples():
    assert abch_lower(8, 4, 4) == 5
    assert abch_lower(8, 4, 1) == 4
    for n in range(1, 10):
        for k in range(1, n + 1):
            assert abch_lower(n, k, n) == 2**k - 1
    with pytest.raises(BadParameter):
        abch_lower(8, 4, 0)


def test_abch_brute_force():
    for n in range(1, 12):
        for k in range(1, n + 1):
            for d in range(1, n + 1):
                got = abch_lower(n, k, d)
                ok = lambda m: sum(comb(m, i) for i in range(1, n // d + 1)) >= 2**k - 1
                assert ok(got) and (got == 0 or not ok(got - 1))


def test_abch_monotone():
    for n in range(1, 14):
        for k in range(1, n + 1):
            vals = [abch_lower(n, k, d) for d in range(1, n + 1)]
            assert vals == sorted(vals)
            if k < n:
                assert all(abch_lower(n, k, d) <= abch_lower(n, k + 1, d) for d in range(1, n + 1))


def test_closure_examples():
    cells = {(n, k): 1 for n in range(1, 10) for k in range(1, n + 1)}
    cells[(4, 2)] = 3
    cells[(8, 4)] = 1
    out = closure_lower(cells)
    assert out[(8, 4)] >= 6
    cells[(8, 4)] = 14
    out = closure_lower(cells)
    assert out[(9, 4)] >= 14
    assert all(out[key] >= v for key, v in cells.items())


@given(st.dictionaries(st.tuples(st.integers(1, 7), st.integers(1, 7)).filter(lambda t: t[1] <= t[0]),
                       st.integers(1, 40)))
def test_closure_fixpoint(cells):
    out = closure_lower(cells)
    assert all(out[key] >= v for key, v in cells.items())
    assert closure_lower(out) == out
    for (n, k), v in out.items():
        if (n + 1, k) in out:
            assert out[(n + 1, k)] >= v
        for (m, j), w in out.items():
            if (n + m, k + j) in out:
                assert out[(n + m, k + j)] >= v + w


def _cycles_in_complete(p):
    return sum(comb(p, k) * factorial(k - 1) // 2 for k in range(3, p + 1))


def test_graph_cycle_upper():
    b = graph_cycle_upper(6, 15)
    assert b == (1706, 960)
    assert _cycles_in_complete(6) <= min(b)
    assert graph_cycle_upper(4, 8).new is None
    b = graph_cycle_upper(6, 21)
    assert b.new == 21 * 2**16 // 81 == 16990
    assert b.old == 61440


def test_best_bounds_examples():
    c = best_bounds(7, 4, search_lower=14)
    assert (c.lower, c.upper, c.exact) == (14, 14, True)
    c = best_bounds(6, 4, search_lower=11)
    assert (c.lower, c.upper, c.upper_src) == (11, 14, "refined_trivial")
    c = best_bounds(12, 9, search_lower=95)
    assert (c.lower, c.upper, c.upper_src) == (95, 384, "agrell")
    c = best_bounds(8, 4, d=4)
    assert c.lower >= 5


def test_table_no_crossing_and_labels():
    cells = bounds_table(15, 13)
    assert [(c.n, c.k) for c in cells] == sorted((c.n, c.k) for c in cells)
    for c in cells:
        assert 1 <= c.lower <= c.upper <= 2**c.k - 1
        assert c.exact == (c.lower == c.upper)
    by = {(c.n, c.k): c for c in cells}
    assert by[(9, 6)].upper == 62 and by[(9, 6)].upper_src == "refined_trivial"
    assert by[(12, 9)].upper == 384 and by[(12, 9)].upper_src == "agrell"
    # every published upper is at least ours
    for key, (_, hi, _) in TABLE_M.items():
        assert by[key].upper <= hi


def test_matroid_discrepancies():
    cells = {(n, k) for n, k, _, _ in matroid_discrepancies()}
    assert cells == {(n, n - 2) for n in range(8, 16)}
    text = format_table(bounds_table(15, 13))
    notes = [ln for ln in text.splitlines() if ln.startswith("# note")]
    assert len(notes) == 8


def test_random_coding_below_settled_maxima():
    from mincw.cli import shipped_certificates

    settled = [c for c in shipped_certificates() if c.method == "exhaustive" and c.k < c.n]
    assert len(settled) > 40
    for c in settled:
        assert random_coding_lower(c.n, c.k) <= c.claimed_m

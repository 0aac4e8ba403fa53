from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest

from puro.census import (
    asymptotic_constant, count_chain, decide_many, icp_box, icp_scan, o_sequences, region1_closed_count,
    region_of, socle2_pure_count, socle3_points, socle3_region_census,
)
from puro.purity import Status, decide_pure
from oracles import differentiable_oracle, hvector, monomials, o_sequences_naive, pure_hvectors_dp


def pure_exact(r, e):
    return {h for hs in pure_hvectors_dp(r, e).values() for h in hs if h[1] == r}


@pytest.mark.parametrize("r,e", [(1, 3), (2, 3), (3, 2), (3, 4), (4, 2), (5, 2)])
def test_o_sequences_match_oracle(r, e):
    assert sorted(o_sequences(r, e)) == sorted(o_sequences_naive(r, e))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_chain_counts_socle_degree_three(r):
    c = count_chain(r, 3)
    O = list(o_sequences_naive(r, 3))
    assert c.o_count == len(O)
    assert c.d_count == sum(1 for h in O if differentiable_oracle(h))
    assert c.p_count == len(pure_exact(r, 3))
    assert c.o_prev_count == (len(list(o_sequences_naive(r - 1, 3))) if r > 1 else 0)
    assert c.unresolved == 0
    assert c.chain_holds


def test_chain_counts_values():
    got = [(c.o_count, c.d_count, c.p_count) for c in (count_chain(r, 3) for r in range(1, 6))]
    assert got == [(1, 1, 1), (7, 3, 5), (29, 11, 20), (89, 36, 62), (224, 100, 163)]


def test_socle_degree_two_counts():
    for r in range(1, 9):
        c = count_chain(r, 2)
        assert c.p_count == socle2_pure_count(r) == comb(r + 1, 2) - (r + 1) // 2 + 1
        assert c.chain_holds


def test_asymptotic_constant_formula():
    def oracle(e):
        N = e * (e + 1) // 2
        num = 1
        for i in range(e - 1):
            num *= comb(N - i * (i + 1) // 2 - 1, i)
        return Fraction(num, factorial(N - 1))
    assert asymptotic_constant(2) == Fraction(1, 2)
    assert asymptotic_constant(3) == Fraction(1, 30)
    for e in range(1, 7):
        assert asymptotic_constant(e) == oracle(e)


def test_region_one_closed_count_from_t_seven():
    assert region1_closed_count(7) == 120
    for t in (7, 8):
        census = socle3_region_census(t, exhaustive=True)
        assert not census.unresolved
        assert census.regions["I"] == region1_closed_count(t)
    # the closed form needs t >= 7; below that some Region I points are missing
    for t in range(1, 7):
        census = socle3_region_census(t, exhaustive=True)
        assert census.regions["I"] < region1_closed_count(t)
    closed = socle3_region_census(9)
    assert closed.closed_form and closed.regions == {"I": region1_closed_count(9)}


def test_type_two_socle_degree_three_census_against_pairs():
    want = set()
    for r in range(1, 7):
        for pair in combinations(monomials(r, 3), 2):
            h = hvector(pair)
            if h[1] == r:
                want.add(h)
    census = socle3_region_census(2, exhaustive=True)
    assert set(census.pure_points) == want
    assert all(region_of(h[1], h[2], 2) in census.regions for h in want)


def test_icp_scan_socle_degree_three_slices():
    res = icp_scan((1, 3, None, 4), range(1, 11))
    assert res.pure_values == [4, 5, 6] and res.gaps == [] and res.unresolved == []
    for b in range(1, 11):
        res = icp_scan((1, 3, None, b), range(1, 11))
        assert res.gaps == []
    res = icp_scan((1, None, 5), range(1, 12))
    assert res.pure_values == list(range(3, 11)) and res.gaps == []


def test_icp_scan_reports_gaps_and_unresolved():
    from puro.census import _slice_result
    template = (1, 2, None)
    points = [(1, 2, v) for v in range(1, 5)]
    status = {points[0]: Status.PURE, points[1]: Status.NOT_PURE, points[2]: Status.PURE,
              points[3]: Status.UNKNOWN}
    res = _slice_result(template, 2, points, status)
    assert res.pure_values == [1, 3] and res.gaps == [2] and res.unresolved == [4]


def test_icp_box_socle_degree_three():
    status, violations, unresolved = icp_box(3, 12)
    assert violations == [] and unresolved == 0
    assert len(status) == 12 ** 3
    truth = {r: pure_exact(r, 3) for r in range(1, 5)}
    for p, s in status.items():
        if p[1] <= 4:
            assert (s is Status.PURE) == (p in truth[p[1]]), p
    table = sorted(p for p, s in status.items() if p[1] == 3 and s is Status.PURE)
    assert len(table) == 20


def test_decide_many_is_order_independent_and_threaded():
    pts = list(o_sequences_naive(3, 3))
    a = decide_many(pts)
    b = decide_many(pts[::-1], threads=2)
    assert a == b
    assert a == {h: decide_pure(h).status for h in pts}


def test_socle3_points_cover_box():
    pts = list(socle3_points(3))
    assert len(pts) == sum(9 - r + 1 for r in range(1, 10))
    assert {region_of(p[1], p[2], 3) for p in pts} == {"I", "II", "III"}

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from puro.macaulay import binom, is_o_sequence
from puro.monomials import closure
from puro.sequences import (
    AlphaOutOfRange, brown_colbourn, first_half, growth_bound_check, is_differentiable_seq, is_flawless,
    is_si, maxima_count, parse_sequence, rank2_matroid_pure, runs, satisfies_hibi, shape, socle2_bounds,
    strict_unimodal_wlp_shape, valleys_count,
)
from oracles import macaulay_next

positive_seqs = st.lists(st.integers(1, 30), min_size=1, max_size=10).map(tuple)


def pure_gens(max_n=5, max_e=7, max_t=6):
    def build(ne):
        n, e = ne
        mon = st.lists(st.integers(0, n - 1), min_size=e, max_size=e).map(
            lambda idx: tuple(idx.count(i) for i in range(n)))
        return st.lists(mon, min_size=1, max_size=max_t)
    return st.tuples(st.integers(1, max_n), st.integers(2, max_e)).flatmap(build)


def test_parse_sequence():
    assert parse_sequence("1,49,81,79,81") == (1, 49, 81, 79, 81)
    assert parse_sequence(" (1 3, 6) ") == (1, 3, 6)
    assert parse_sequence("[1,2]") == (1, 2)
    for bad in ["", "1,a", "()"]:
        with pytest.raises(ValueError):
            parse_sequence(bad)


def test_shape_examples():
    s = shape((1, 49, 81, 79, 81))
    assert not s.is_unimodal and s.maxima_count == 2 and s.valleys_count == 1
    assert not shape((1, 505, 2065, 3395, 3325, 3493)).is_unimodal
    s = shape((1, 1, 1, 1))
    assert s.is_unimodal and s.maxima_count == 1 and s.is_flawless
    assert shape((1, 3, 6, 10)).is_differentiable
    assert '"maxima_count": 2' in shape((1, 49, 81, 79, 81)).to_json()


def test_plateau_maxima():
    assert runs((1, 3, 3, 2, 2, 4)) == [1, 3, 2, 4]
    assert maxima_count((1, 3, 3, 2, 2, 4)) == 2
    assert maxima_count((1, 2, 2, 2)) == 1
    assert valleys_count((1, 3, 3, 2, 2, 4)) == 1


@given(positive_seqs)
def test_shape_invariants(h):
    s = shape(h)
    assert s.maxima_count >= 1
    assert s.is_unimodal == (s.maxima_count == 1)
    assert s.valleys_count == s.maxima_count - 1
    if s.is_si:
        assert h == h[::-1]
        assert is_differentiable_seq(first_half(h))


def test_differentiable_examples():
    assert not is_differentiable_seq((1, 8, 16, 24, 36))
    assert not is_differentiable_seq((1, 6, 11, 15, 18, 22))
    assert is_differentiable_seq((1, 3, 6, 10, 15))
    assert not is_differentiable_seq((1, 3, 2))


def test_si():
    assert not is_si((1, 13, 12, 13, 1))
    assert is_si((1, 3, 4, 3, 1))
    assert not is_si((1, 3, 4, 4, 1))


def test_growth_bound_examples():
    assert growth_bound_check((1, 4, 5, 9)) == 3
    assert growth_bound_check((1, 3, 6, 10)) is None


def test_socle2_bounds():
    assert socle2_bounds(4) == (2, 10)
    assert socle2_bounds(1) == (1, 1)
    assert socle2_bounds(7) == (4, 28)
    for r in range(2, 200):
        assert r - 1 >= socle2_bounds(r)[0]


def test_brown_colbourn():
    for r in range(1, 12):
        for h2 in range(0, 3 * r):
            assert brown_colbourn((1, r, h2), 1) == (h2 >= r - 1)
    assert brown_colbourn((1, 0, 0, 0), 1)
    # the best bound on h3 over all alpha is 26; alpha = 2 already rules out 25
    grid = [1 + Fraction(k, 20) for k in range(0, 200)]
    assert all(brown_colbourn((1, 100, 100, 26), a) for a in grid)
    assert brown_colbourn((1, 100, 100, 25), 1)
    assert not brown_colbourn((1, 100, 100, 25), 2)
    assert brown_colbourn((1, 0), 1) and brown_colbourn((1,), 2)
    with pytest.raises(AlphaOutOfRange):
        brown_colbourn((1, 2, 1), Fraction(1, 2))


def test_brown_colbourn_matches_hand_sums():
    h, alpha = (1, 5, 9, 4), Fraction(5, 4)
    sums = [sum((-alpha) ** i * h[i] for i in range(j + 1)) * (-1) ** j for j in range(len(h))]
    assert brown_colbourn(h, alpha) == all(s > 0 for s in sums)


def test_rank2_matroid():
    assert rank2_matroid_pure((1, 5, 4))
    assert rank2_matroid_pure((1, 2, 1))
    assert rank2_matroid_pure((1, 7, 0))
    for r in range(1, 30):
        for h2 in range(0, binom(r + 1, 2) + 1):
            assert rank2_matroid_pure((1, r, h2))


def test_strict_shape():
    assert strict_unimodal_wlp_shape((1, 3, 6, 6, 3, 1))
    assert strict_unimodal_wlp_shape((1, 3, 5, 7, 7, 4))
    assert not strict_unimodal_wlp_shape((1, 3, 3, 4, 2))
    assert not strict_unimodal_wlp_shape((1, 3, 6, 5, 5, 4))
    assert not strict_unimodal_wlp_shape((1, 8, 16, 24, 36, 2))


@given(positive_seqs)
def test_hibi_implies_flawless(h):
    if satisfies_hibi(h):
        assert is_flawless(h)


@given(pure_gens())
def test_pure_witnesses_respect_bounds(gens):
    X = closure(gens)
    h = X.h_vector()
    assert growth_bound_check(h) is None
    assert is_flawless(h) and satisfies_hibi(h)


@given(st.lists(st.integers(1, 40), min_size=2, max_size=6).map(tuple))
def test_differentiable_means_difference_is_o_sequence(h):
    h = (1,) + h
    diff = [1] + [b - a for a, b in zip(h, h[1:])]
    if any(x < 0 for x in diff):
        assert not is_differentiable_seq(h)
        return
    expected = all(diff[i + 1] <= macaulay_next(diff[i], i) for i in range(1, len(diff) - 1))
    assert is_o_sequence(tuple(diff)) == expected
    assert is_differentiable_seq(h) == expected

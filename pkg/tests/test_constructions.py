from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from puro import constructions as C
from puro.macaulay import integrate, is_o_sequence
from puro.monomials import closure
from puro.sequences import is_differentiable_seq, is_nondecreasing, is_unimodal, maxima_count
from oracles import complete_intersection, hvector


def type14_ns(upto=40):
    return [n for n in range(1, upto + 1) if (n % 2 == 0 and n >= 22) or (n % 2 == 1 and n >= 29)]


@pytest.mark.parametrize("n", type14_ns())
def test_type14_family(n):
    gens = C.construct_type14(n)
    assert len(set(gens)) == 14 and all(sum(g) == 4 * n for g in gens)
    X = closure(gens)
    h = X.h_vector()
    assert X.type == 14 and X.codimension == 3 and X.is_pure
    assert h[3 * n:3 * n + 4] == C.type14_middle(n)
    assert not is_unimodal(h)


def test_type14_rejects_small_n():
    for n in (21, 27, 3):
        with pytest.raises(C.ParameterOutOfRange):
            C.construct_type14(n)


@settings(deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_lex_witness_realizes_differentiable_sequences(tail):
    # integrate a random O-sequence g = (1, g1, ...) to get a differentiable h
    g = [1]
    for x in tail:
        g.append(x)
        if not is_o_sequence(tuple(g)):
            g.pop()
            break
    h = integrate(tuple(g))
    assert is_differentiable_seq(h)
    gens = C.lex_witness(h)
    X = closure(gens)
    assert X.is_pure and X.h_vector() == h


def test_lex_witness_rejects():
    with pytest.raises(ValueError):
        C.lex_witness((1, 8, 16, 24, 36))


def test_socle2_witness_all_cells():
    for r in range(1, 11):
        lo, hi = (r + 1) // 2, comb(r + 1, 2)
        for h2 in range(lo, hi + 1):
            X = closure(C.socle2_witness(r, h2))
            assert X.is_pure and X.h_vector() == (1, r, h2)
        for bad in (lo - 1, hi + 1):
            if bad >= 1:
                with pytest.raises(C.ParameterOutOfRange):
                    C.socle2_witness(r, bad)


@given(st.lists(st.integers(2, 5), min_size=1, max_size=4), st.integers(1, 8))
def test_box_h_vector_matches_product(p, e):
    full = complete_intersection(p)
    want = tuple(full[i] if i < len(full) else 0 for i in range(e + 1))
    assert C.box_h_vector(p, e) == want
    gens = C.box_generators(p, e)
    if gens:
        assert hvector(gens) == want


@given(st.lists(st.tuples(st.integers(2, 4), st.integers(2, 4)), min_size=1, max_size=4))
def test_block_decomposition_finds_sums_of_boxes(blocks):
    e = 4
    boxes = [p for p in blocks if sum(a - 1 for a in p) >= e]
    if not boxes:
        return
    h = [1] + [0] * e
    for p in boxes:
        hv = C.box_h_vector(p, e)
        for i in range(1, e + 1):
            h[i] += hv[i]
    gens = C.block_decomposition(tuple(h))
    assert gens is not None
    X = closure(gens)
    assert X.is_pure and X.h_vector() == tuple(h)


def test_block_decomposition_none_for_impossible():
    assert C.block_decomposition((1, 3, 6, 10, 16)) is None


@pytest.mark.parametrize("e", range(4, 9))
def test_nondifferentiable(e):
    X = closure(C.construct_nondifferentiable(e))
    h = X.h_vector()
    assert X.is_pure and is_nondecreasing(h) and not is_differentiable_seq(h)


def test_nondifferentiable_examples_and_errors():
    assert closure(C.construct_nondifferentiable(4)).h_vector() == (1, 8, 16, 24, 36)
    assert closure(C.construct_nondifferentiable(5)).h_vector() == (1, 6, 11, 15, 18, 22)
    with pytest.raises(C.ParameterOutOfRange):
        C.construct_nondifferentiable(3)


def test_nonunimodal_socle4():
    h = closure(C.nonunimodal_socle4()).h_vector()
    assert h == (1, 49, 81, 79, 81) and maxima_count(h) == 2


@pytest.mark.parametrize("t", range(7, 12))
def test_circulant(t):
    X = closure(C.circulant_witness(t))
    assert X.is_pure and X.h_vector() == (1, t, 3 * t, t)


def test_weak_composition_and_latin_square():
    for t in range(1, 6):
        for r in range(t, 3 * t + 1):
            X = closure(C.weak_composition_witness(r, t))
            assert X.is_pure and X.h_vector() == (1, r, r, t)
    for n in range(1, 5):
        X = closure(C.latin_square_witness(n))
        assert X.is_pure and X.h_vector() == (1, 3 * n, 3 * n * n, n * n)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_projective_planes(d):
    q = d * d + d + 1
    h = closure(C.projective_plane_witness(d)).h_vector()
    # every pair of points is on exactly one line
    assert h == (1, q) + tuple(q * comb(d + 1, i) for i in range(2, d + 2))
    assert h[2] == comb(q, 2)


def test_steiner_triples():
    assert closure(C.steiner_triple_witness(7)).h_vector() == (1, 7, 21, 7)
    assert closure(C.steiner_triple_witness(9)).h_vector() == (1, 9, 36, 12)
    assert C.steiner_triple_witness(13) is None

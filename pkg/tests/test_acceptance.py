"""Acceptance suite: one test per criterion, each timed against its limit.

Every test prints a single PASS/FAIL line; the lines are collected again in
the pytest terminal summary.  Run directly with
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from contextlib import contextmanager
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    differentiable_oracle, f_from_h, hvector, o_sequences_naive, partitions_brute, pure_hvectors_dp, rank_fraction,
)
from puro import level as L  # noqa: E402
from puro import constructions as C  # noqa: E402
from puro.census import count_chain, icp_box, region1_closed_count, socle3_points  # noqa: E402
from puro.monomials import closure  # noqa: E402
from puro.purity import Status, decide_pure, enumerate_pure  # noqa: E402
from puro.reproduce import read_fixture, reproduce  # noqa: E402
from puro.search import SearchBudget  # noqa: E402
from puro.sequences import (  # noqa: E402
    growth_bound_check, is_flawless, maxima_count, satisfies_hibi, shape, strict_unimodal_wlp_shape,
)
from puro.simplicial import f_to_h, f_vector_of_facets, h_to_f, pure_f_type2, type2_facets  # noqa: E402

RESULTS: dict = {}
LINES: list = []  # repeated in the terminal summary by conftest.py


def _report(name, ok, seconds, limit):
    RESULTS[name] = ok
    line = f"{'PASS' if ok else 'FAIL'} {name}: {seconds:.1f}s (limit {limit:.0f}s)"
    LINES.append(line)
    print(line, flush=True)


@contextmanager
def criterion(name, limit):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        _report(name, False, time.perf_counter() - t0, limit)
        raise
    dt = time.perf_counter() - t0
    _report(name, dt < limit, dt, limit)
    assert dt < limit, f"{name} took {dt:.1f}s, limit {limit}s"


def seq(text):
    return tuple(int(x) for x in text.split(","))


def pure_exact(r, e):
    return {h for hs in pure_hvectors_dp(r, e).values() for h in hs if h[1] == r}


def random_pure_gens(rng, n, e, t):
    t = min(t, comb(n + e - 1, e))
    gens = set()
    while len(gens) < t:
        cuts = sorted(rng.randint(0, e) for _ in range(n - 1))
        gens.add(tuple(b - a for a, b in zip([0] + cuts, cuts + [e])))
    return sorted(gens)


def random_pair(rng, n, cap=6):
    """Two distinct monomials of equal degree with exponents <= cap."""
    while True:
        a = tuple(rng.randint(0, cap) for _ in range(n))
        b = [rng.randint(0, cap) for _ in range(n)]
        diff = sum(a) - sum(b)
        for i in range(n):
            step = max(-b[i], min(cap - b[i], diff))
            b[i] += step
            diff -= step
        if diff == 0 and tuple(b) != a and sum(a) > 0:
            return a, tuple(b)


# 1

def test_c01_type14_tables():
    with criterion("1 type14 n=22 and n=29 tables", 10):
        for n, middle in ((22, (1519, 1518, 1518, 1519)), (29, (2611, 2610, 2610, 2611))):
            out = reproduce(f"type14-n{n}")
            assert out.ok, out.details
            fx = read_fixture(f"type14-n{n}")
            gens = C.construct_type14(n)
            h = closure(gens).h_vector()
            assert h == seq(fx["hilbert"][0]) == hvector(gens)
            assert len(h) == 4 * n + 1 and len(gens) == 14
            assert h[3 * n:3 * n + 4] == middle
            assert maxima_count(h) >= 2


# 2

def test_c02_soc4_nonunimodal():
    with criterion("2 soc4-nonunimodal (1,49,81,79,81)", 5):
        assert reproduce("soc4-nonunimodal").ok
        gens = C.nonunimodal_socle4()
        h = closure(gens).h_vector()
        assert h == (1, 49, 81, 79, 81) == hvector(gens)
        v = decide_pure(h)
        assert v.status is Status.PURE and closure(v.witness).h_vector() == h
        assert shape(h).maxima_count == 2


# 3

def test_c03_char257():
    with criterion("3 char257 Hilbert function, failing primes {2,5,7}, determinant 70", 10):
        assert reproduce("char257").ok
        ideal = [(10, 0, 0), (0, 7, 0), (0, 0, 7), (4, 3, 0), (4, 0, 5)]
        A = L.from_monomial_ideal(ideal, 3)
        assert A.hilbert == (1, 3, 6, 10, 15, 21, 28, 33, 36, 36, 32, 26, 19, 12, 6, 2)
        rep = L.wlp_report(A, chars=(0, "auto", 2, 3, 5, 7, 11, 13, 257))
        assert rep.wlp_char0 and rep.failing_primes == [2, 5, 7]
        assert rep.char_verdicts == {0: True, 2: False, 3: True, 5: False, 7: False, 11: True, 13: True, 257: True}
        assert abs(L.linkage_determinant(ideal, 9)) == 70


# 4

def test_c04_socle_degree_two():
    with criterion("4 socle degree 2 closed form, r <= 8", 120):
        bad = []
        for r in range(1, 9):
            for h2 in range(1, comb(r + 1, 2) + 3):
                v = decide_pure((1, r, h2))
                if v.is_pure != ((r + 1) // 2 <= h2 <= comb(r + 1, 2)) or v.status is Status.UNKNOWN:
                    bad.append((r, h2))
                # the closed form agrees with a plain search too
                if r <= 5:
                    raw = decide_pure((1, r, h2), theorems=False, fast_paths=False, constructions=False)
                    if raw.status != v.status:
                        bad.append((r, h2, "search"))
        assert bad == []


# 5

def test_c05_icp3():
    with criterion("5 ICP3 20-sequence table, no gaps for entries <= 12", 600):
        fx = read_fixture("icp3-r3-table")
        table = {seq(s) for s in fx["sequence"]}
        assert len(table) == 20
        assert enumerate_pure(3, 3) == table == pure_exact(3, 3)
        status, violations, unresolved = icp_box(3, 12)
        assert violations == [] and unresolved == 0
        assert {p for p, s in status.items() if p[1] == 3 and s is Status.PURE} == table


# 6

def test_c06_type_one_partitions():
    with criterion("6 type-1 count equals partitions into r parts, e <= 12", 60):
        for e in range(1, 13):
            for r in range(1, e + 2):
                assert len(enumerate_pure(r, e, 1)) == partitions_brute(e, r), (r, e)


# 7

def test_c07_chain_region_one_circulant():
    with criterion("7 chain O(r-1) <= D <= P <= O (e=3, r<=5); Region I t=7; circulant", 600):
        for r in range(1, 6):
            c = count_chain(r, 3)
            O = list(o_sequences_naive(r, 3))
            assert c.unresolved == 0 and c.chain_holds
            assert c.o_count == len(O)
            assert c.d_count == sum(1 for h in O if differentiable_oracle(h))
            assert c.p_count == len(pure_exact(r, 3))
        t = 7
        budget = SearchBudget(max_nodes=2_000_000, max_seconds=60)
        verdicts = [decide_pure(p, budget) for p in socle3_points(t, "I")]
        assert not any(v.status is Status.UNKNOWN for v in verdicts)
        assert sum(v.is_pure for v in verdicts) == region1_closed_count(t) == 2 * t * t + 3 * t + 1 == 120
        gens = C.circulant_witness(7)
        assert closure(gens).h_vector() == hvector(gens) == (1, 7, 21, 7)
        assert closure(gens).is_pure
        assert reproduce("region1-t7").ok


# 8

def test_c08_type2_wlp_three_variables():
    with criterion("8 200 random type-2 pairs in 3 variables have the WLP", 300):
        rng = random.Random(20240801)
        for _ in range(200):
            a, b = random_pair(rng, 3, cap=6)
            A = L.from_inverse_system([a, b], 3)
            assert A.type == 2
            rep = L.wlp_report(A, chars=(0,))
            assert rep.wlp_char0, (a, b)
            assert strict_unimodal_wlp_shape(A.hilbert), (a, b)
            # independent rank check of one multiplication map
            d = len(A.hilbert) // 2 - 1
            if d >= 0:
                M = L.mult_matrix(A, 1, d)
                assert rank_fraction(M) == min(A.hilbert[d], A.hilbert[d + 1])


# 9

def test_c09_answernd_and_slp():
    with criterion("9 answernd grid r <= 5, d <= 4; SLP counterexample", 600):
        assert reproduce("answernd-grid").ok
        assert reproduce("slp-counterexample").ok
        want = {(3, 4): (1, 3, 5, 7, 7, 4), (4, 2): (1, 4, 10, 16, 15, 8, 2),
                (4, 3): (1, 4, 10, 18, 25, 26, 20, 10, 3)}
        for r in range(1, 6):
            for d in range(1, 5):
                if L.always_wlp(r, d):
                    assert r <= 2 or d == 1 or (r, d) == (3, 2)
                    continue
                w = L.wlp_witness(r, d)
                assert not w.report().wlp_char0
                assert w.algebra._ideal.codimension == r and w.algebra.type == d
                if (r, d) in want:
                    assert w.algebra.hilbert == want[(r, d)]
        tf = L.failure_family("tensor_factor").algebra
        assert tf.hilbert == (1, 3, 6, 9, 9, 6, 2)
        A = L.from_monomial_ideal([(7, 0, 0), (0, 4, 0), (0, 0, 4), (3, 2, 0), (3, 0, 2)], 3)
        assert A.hilbert == (1, 3, 6, 10, 13, 13, 10, 6, 2)
        assert L.wlp_report(A, chars=(0,)).wlp_char0
        rep = L.lefschetz_report(A, 3, chars=(0,))
        assert rep.first_failure_degree == 3
        _, rank, target = rep.ranks[3]
        assert target == 10 and rank < target
        assert rank_fraction(L.mult_matrix(A, 3, 3)) == rank


# 10

def test_c10_property_suites():
    with criterion("10 property suites (a)-(e)", 900):
        # (a) decide_pure against brute force, every O-sequence with r <= 4, e <= 4
        pure_seen = []
        for r in range(1, 5):
            for e in range(1, 5):
                truth = pure_exact(r, e)
                for h in o_sequences_naive(r, e):
                    v = decide_pure(h)
                    assert v.status is not Status.UNKNOWN, h
                    assert v.is_pure == (h in truth), h
                    if v.is_pure:
                        assert closure(v.witness).h_vector() == h
                        pure_seen.append(h)
        # (b) type-2 Hilbert function against a direct downset count
        rng = random.Random(100)
        for _ in range(100):
            a, b = random_pair(rng, rng.randint(2, 4))
            assert L.type2_hilbert(a, b) == hvector([a, b])
        # (c) injectivity in the first half and flawlessness on random pure ideals
        rng = random.Random(500)
        for _ in range(500):
            n, e, t = rng.randint(1, 5), rng.randint(1, 7), rng.randint(1, 4)
            gens = random_pure_gens(rng, n, e, t)
            h = closure(gens).h_vector()
            assert is_flawless(h) and satisfies_hibi(h)
            A = L.from_inverse_system(gens, n)
            for d in range(0, (e - 1) // 2 + 1):
                assert L.rank_q(L.mult_matrix(A, 1, d)) == h[d]
            pure_seen.append(h)
        # (d) growth bound on every pure witness seen above
        assert all(growth_bound_check(h) is None for h in pure_seen if len(h) > 2)
        # (e) f <-> h round trip; type-2 f-vectors against counted faces
        for e in range(1, 11):
            for k in range(0, e):
                f = pure_f_type2(e, k)
                assert f.entries == hvector(type2_facets(e, k)) == closure(type2_facets(e, k)).h_vector()
                facets = [frozenset(i + 1 for i, x in enumerate(m) if x) for m in type2_facets(e, k)]
                assert f_vector_of_facets(facets).entries == f.entries
                h = f_to_h(f)
                assert h_to_f(h, e).entries == f.entries
                assert tuple(f_from_h(h, e)) == f.entries


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

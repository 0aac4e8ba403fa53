"""Counting pure O-sequences and scanning for interval-property gaps."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .macaulay import binom, macaulay_bound
from .purity import Status, decide_pure
from .search import SearchBudget
from .sequences import is_differentiable_seq


def _decide_status(args):
    h, budget = args
    return decide_pure(h, budget).status


def decide_many(points, budget: SearchBudget | None = None, threads: int = 1) -> dict:
    """Map each sequence to its purity status; order-independent."""
    budget = budget or SearchBudget()
    points = list(points)
    if threads > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            statuses = list(pool.map(_decide_status, [(p, budget) for p in points], chunksize=8))
    else:
        statuses = [_decide_status((p, budget)) for p in points]
    return dict(zip(points, statuses))


# interval property

@dataclass
class SliceResult:
    template: tuple
    pure_values: list[int]
    gaps: list[int]
    unresolved: list[int]


def icp_scan(template, values, budget: SearchBudget | None = None, threads: int = 1) -> SliceResult:
    """Purity along one free coordinate (marked None in template)."""
    free = template.index(None)
    points = [tuple(v if i == free else x for i, x in enumerate(template)) for v in values]
    status = decide_many(points, budget, threads)
    return _slice_result(template, free, points, status)


def _slice_result(template, free, points, status):
    pure = [p[free] for p in points if status[p] is Status.PURE]
    unresolved = [p[free] for p in points if status[p] is Status.UNKNOWN]
    gaps = []
    if pure:
        lo, hi = min(pure), max(pure)
        for p in points:
            v = p[free]
            if lo < v < hi and status[p] is Status.NOT_PURE:
                gaps.append(v)
    return SliceResult(tuple(template), sorted(pure), sorted(gaps), sorted(unresolved))


def icp_box(e: int, bound: int, budget: SearchBudget | None = None, threads: int = 1):
    """Check every axis-parallel slice of (1, h_1..h_e) with 1 <= h_i <= bound.

    Returns (status map, list of SliceResult with gaps, unresolved count).
    """
    points = [(1,) + p for p in product(range(1, bound + 1), repeat=e)]
    status = decide_many(points, budget, threads)
    violations = []
    for axis in range(1, e + 1):
        seen = set()
        for p in points:
            template = p[:axis] + (None,) + p[axis + 1:]
            if template in seen:
                continue
            seen.add(template)
            line = [p[:axis] + (v,) + p[axis + 1:] for v in range(1, bound + 1)]
            res = _slice_result(template, axis, line, status)
            if res.gaps:
                violations.append(res)
    unresolved = sum(1 for s in status.values() if s is Status.UNKNOWN)
    return status, violations, unresolved


# O-sequence counts

def o_sequences(r: int, e: int):
    """All O-sequences (1, r, h_2, ..., h_e) with every entry positive."""
    if e == 0:
        yield (1,)
        return
    if r < 1:
        return

    def rec(prefix):
        if len(prefix) == e + 1:
            yield tuple(prefix)
            return
        d = len(prefix) - 1
        for x in range(1, macaulay_bound(prefix[-1], d) + 1):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([1, r])


@dataclass
class ChainCounts:
    r: int
    e: int
    o_count: int
    d_count: int
    p_count: int
    o_prev_count: int
    unresolved: int = 0

    @property
    def chain_holds(self) -> bool:
        return self.o_prev_count <= self.d_count <= self.p_count <= self.o_count


def count_chain(r: int, e: int, budget: SearchBudget | None = None, threads: int = 1) -> ChainCounts:
    O = list(o_sequences(r, e))
    D = [h for h in O if is_differentiable_seq(h)]
    status = decide_many(O, budget, threads)
    P = [h for h in O if status[h] is Status.PURE]
    unresolved = sum(1 for h in O if status[h] is Status.UNKNOWN)
    prev = sum(1 for _ in o_sequences(r - 1, e)) if r > 1 else 0
    return ChainCounts(r, e, len(O), len(D), len(P), prev, unresolved)


def asymptotic_constant(e: int) -> Fraction:
    """Leading coefficient c_e in P^r(e) ~ c_e r^(C(e+1,2)-1)."""
    N = binom(e + 1, 2)
    num = 1
    for i in range(e - 1):
        num *= binom(N - binom(i + 1, 2) - 1, i)
    return Fraction(num, math.factorial(N - 1))


def socle2_pure_count(r: int) -> int:
    return binom(r + 1, 2) - (r + 1) // 2 + 1


# socle degree 3, fixed type

def region_of(r: int, a: int, t: int) -> str:
    if t <= r:
        return "I"
    if t <= a:
        return "II"
    return "III"


def region1_closed_count(t: int) -> int:
    return 2 * t * t + 3 * t + 1


@dataclass
class Socle3Census:
    t: int
    total: int | None
    regions: dict
    pure_points: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    closed_form: bool = False


def socle3_points(t: int, region: str | None = None):
    for r in range(1, 3 * t + 1):
        for a in range(r, 3 * t + 1):
            if region is None or region_of(r, a, t) == region:
                yield (1, r, a, t)


def socle3_region_census(t: int, budget: SearchBudget | None = None, exhaustive: bool | None = None,
                         threads: int = 1) -> Socle3Census:
    """Pure (1, r, a, t) by region; t >= 7 defaults to the Region I closed form only."""
    if exhaustive is None:
        exhaustive = t <= 5
    if not exhaustive:
        return Socle3Census(t, None, {"I": region1_closed_count(t)}, closed_form=True)
    points = list(socle3_points(t))
    status = decide_many(points, budget, threads)
    regions = {"I": 0, "II": 0, "III": 0}
    pure, unresolved = [], []
    for p in points:
        if status[p] is Status.PURE:
            regions[region_of(p[1], p[2], t)] += 1
            pure.append(p)
        elif status[p] is Status.UNKNOWN:
            unresolved.append(p)
    return Socle3Census(t, len(pure), regions, pure, unresolved)

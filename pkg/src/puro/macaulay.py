"""Binomial expansions, Macaulay bounds and O-sequences."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

IntSeq = tuple[int, ...]


class NegativeDifference(ValueError):
    pass


def binom(n: int, k: int) -> int:
    # zero outside 0 <= k <= n, so shifted expansions can drop terms
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class BinomialExpansion:
    """n = C(tops[0], d) + C(tops[1], d-1) + ... with strictly decreasing tops."""

    d: int
    tops: tuple[int, ...]
    value: int

    @property
    def terms(self) -> list[tuple[int, int]]:
        return [(k, self.d - i) for i, k in enumerate(self.tops)]

    def __str__(self):
        if not self.tops:
            return "0"
        return " + ".join(f"C({k},{i})" for k, i in self.terms)


def _largest_top(n: int, i: int) -> int:
    # largest k with C(k, i) <= n, assuming n >= 1
    lo, hi = i, i + 1
    while math.comb(hi, i) <= n:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= n:
            lo = mid
        else:
            hi = mid
    return lo


def expand(n: int, d: int) -> BinomialExpansion:
    if d < 1:
        raise ValueError("expansion degree must be >= 1")
    if n < 0:
        raise ValueError("cannot expand a negative integer")
    tops = []
    rest = n
    i = d
    while rest > 0:
        k = _largest_top(rest, i)
        tops.append(k)
        rest -= math.comb(k, i)
        i -= 1
    return BinomialExpansion(d, tuple(tops), n)


def shift(exp: BinomialExpansion, a: int, b: int) -> int:
    return sum(binom(k + b, i + a) for k, i in exp.terms)


def macaulay_bound(n: int, d: int) -> int:
    """Largest admissible value in degree d+1 after n in degree d."""
    if d == 0:
        # h_0 = 1 allows any number of variables
        return math.inf if n > 0 else 0
    return shift(expand(n, d), 1, 1)


def canonical(h) -> IntSeq:
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def is_o_sequence(h) -> bool:
    h = tuple(h)
    if not h or h[0] != 1 or any(x < 0 for x in h):
        return False
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_bound(h[d], d):
            return False
    return True


def first_violation(h) -> int | None:
    """Index of the first entry breaking the Macaulay bound, else None."""
    h = tuple(h)
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_bound(h[d], d):
            return d + 1
    return None


def differentiate(h) -> IntSeq:
    h = tuple(h)
    g = (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, len(h)))
    if any(x < 0 for x in g):
        raise NegativeDifference(f"{h} has a negative first difference")
    return g


def integrate(g) -> IntSeq:
    out, s = [], 0
    for x in g:
        s += x
        out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_with_parts(e: int, r: int) -> int:
    """Number of partitions of e into exactly r positive parts."""
    if e == 0 and r == 0:
        return 1
    if e <= 0 or r <= 0 or r > e:
        return 0
    return partitions_with_parts(e - 1, r - 1) + partitions_with_parts(e - r, r)


def gotzmann_bound(n: int, d: int, s: int) -> int:
    return shift(expand(n, d), s, s)


def green_bound(n: int, d: int) -> int:
    return shift(expand(n, d), 0, -1)

"""Shape predicates and necessary conditions for pure O-sequences."""
from __future__ import annotations

import json
import math
import re
from dataclasses import asdict, dataclass
from fractions import Fraction

from .macaulay import NegativeDifference, binom, canonical, differentiate, expand, is_o_sequence, shift


class AlphaOutOfRange(ValueError):
    pass


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse '1,3,6,4' or '1 3 6 4' (brackets and parentheses allowed)."""
    body = text.strip().strip("()[]")
    parts = [p for p in re.split(r"[,\s]+", body) if p]
    if not parts:
        raise ValueError("empty sequence")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not an integer sequence: {text!r}") from None


def runs(h) -> list[int]:
    """Values of the maximal constant runs."""
    out = []
    for x in h:
        if not out or out[-1] != x:
            out.append(x)
    return out


def maxima_count(h) -> int:
    v = runs(h)
    count = 0
    for i, x in enumerate(v):
        left = v[i - 1] if i > 0 else -math.inf
        right = v[i + 1] if i + 1 < len(v) else -math.inf
        if x > left and x > right:
            count += 1
    return count


def valleys_count(h) -> int:
    v = runs(h)
    return sum(1 for i in range(1, len(v) - 1) if v[i] < v[i - 1] and v[i] < v[i + 1])


def is_unimodal(h) -> bool:
    return maxima_count(h) == 1


def is_nondecreasing(h) -> bool:
    return all(a <= b for a, b in zip(h, h[1:]))


def is_flawless(h) -> bool:
    e = len(h) - 1
    return all(h[i] <= h[e - i] for i in range(e // 2 + 1))


def satisfies_hibi(h) -> bool:
    """h_i <= h_j whenever i <= j <= e - i."""
    e = len(h) - 1
    for i in range(e + 1):
        for j in range(i, e - i + 1):
            if h[i] > h[j]:
                return False
    return True


def is_differentiable_seq(h) -> bool:
    h = tuple(h)
    if not is_nondecreasing(h):
        return False
    try:
        return is_o_sequence(differentiate(h))
    except NegativeDifference:
        return False


def nondecreasing_prefix(h) -> tuple[int, ...]:
    k = 1
    while k < len(h) and h[k - 1] <= h[k]:
        k += 1
    return tuple(h[:k])


def first_half(h) -> tuple[int, ...]:
    return tuple(h[: (len(h) - 1) // 2 + 1])


def is_si(h) -> bool:
    h = tuple(h)
    return h == h[::-1] and is_differentiable_seq(first_half(h))


def hausel_prefix(h) -> tuple[int, ...]:
    # entries up to degree floor((e-1)/2) + 1
    e = len(h) - 1
    return tuple(h[: (e - 1) // 2 + 2]) if e >= 1 else tuple(h)


def satisfies_hausel(h) -> bool:
    """First-half differentiability of a pure O-sequence."""
    return is_differentiable_seq(hausel_prefix(h))


def strict_unimodal_wlp_shape(h) -> bool:
    """Strictly increasing and differentiable, then flat, then strictly decreasing."""
    h = tuple(h)
    n = len(h)
    p = 0
    while p + 1 < n and h[p] < h[p + 1]:
        p += 1
    if not is_differentiable_seq(h[: p + 1]):
        return False
    q = p
    while q + 1 < n and h[q] == h[q + 1]:
        q += 1
    return all(h[i] > h[i + 1] for i in range(q, n - 1))


@dataclass(frozen=True)
class ShapeReport:
    is_unimodal: bool
    maxima_count: int
    valleys_count: int
    is_flawless: bool
    is_nondecreasing: bool
    is_differentiable: bool
    is_si: bool
    strict_unimodal_wlp_shape: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def shape(h) -> ShapeReport:
    h = canonical(h)
    return ShapeReport(
        is_unimodal=is_unimodal(h),
        maxima_count=maxima_count(h),
        valleys_count=valleys_count(h),
        is_flawless=is_flawless(h),
        is_nondecreasing=is_nondecreasing(h),
        # differentiability of the longest non-decreasing prefix
        is_differentiable=is_differentiable_seq(nondecreasing_prefix(h)),
        is_si=is_si(h),
        strict_unimodal_wlp_shape=strict_unimodal_wlp_shape(h),
    )


def growth_bound(h, i: int) -> int:
    """Upper bound on h_i - h_{i-1} coming from h_2 - h_1."""
    d = h[2] - h[1]
    if i == 2:
        return d
    if d <= 0:
        return 0
    return shift(expand(d, 2), i - 2, i - 2)


def growth_bound_check(h) -> int | None:
    """First index 2 <= i <= e where the growth bound fails, else None."""
    h = tuple(h)
    for i in range(2, len(h)):
        if h[i] - h[i - 1] > growth_bound(h, i):
            return i
    return None


def socle2_bounds(r: int) -> tuple[int, int]:
    return (r + 1) // 2, binom(r + 1, 2)


def socle2_is_pure(h) -> bool:
    h = canonical(h)
    if len(h) != 3 or h[0] != 1:
        return False
    lo, hi = socle2_bounds(h[1])
    return lo <= h[2] <= hi


def brown_colbourn(h, alpha) -> bool:
    """Check the alternating sums at a rational alpha >= 1."""
    alpha = Fraction(alpha)
    if alpha < 1:
        raise AlphaOutOfRange(f"alpha must be at least 1, got {alpha}")
    if not any(h[1:]):
        # (1,0,...,0) is the trivial complex; the sums carry no information
        return True
    total = Fraction(0)
    for j, x in enumerate(h):
        total += (-alpha) ** j * x
        value = (-1) ** j * total
        if alpha == 1:
            if value < 0:
                return False
        elif value <= 0:
            return False
    return True


def rank2_matroid_pure(h) -> bool:
    """A feasible (1, r, h2) with h2 > 0 lies inside the socle-degree-2 bounds."""
    h = canonical(h)
    if len(h) != 3:
        return True
    r, h2 = h[1], h[2]
    feasible = h2 >= r - 1
    return (not feasible) or socle2_bounds(r)[0] <= h2


def necessary_conditions(h) -> str | None:
    """Name of the first violated necessary condition for purity, else None."""
    h = canonical(h)
    e = len(h) - 1
    if not is_o_sequence(h):
        return "not an O-sequence"
    if e <= 1:
        return None
    r, t = h[1], h[e]
    for i in range(e + 1):
        if h[i] > t * binom(e, i):
            return f"h_{i} exceeds type times C(e,{i})"
    if not satisfies_hibi(h):
        return "violates h_i <= h_j for i <= j <= e-i"
    if not satisfies_hausel(h):
        return "first half is not differentiable"
    i = growth_bound_check(h)
    if i is not None:
        return f"growth bound fails at degree {i}"
    if e <= 3 and is_nondecreasing(h) and not is_differentiable_seq(h):
        return "non-decreasing of socle degree at most 3 but not differentiable"
    if r > t * e:
        return "more variables than type times socle degree"
    return None

"""f-vectors of pure simplicial complexes and their h-vector transforms."""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .macaulay import binom, is_o_sequence


class NotCM(ValueError):
    pass


@dataclass(frozen=True)
class FVector:
    """(f_{-1}=1, f_0, ..., f_{d-1}); the complex has dimension d-1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("an f-vector starts with f_{-1} = 1")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> int:
        # f_i, with i running from -1
        return self.entries[i + 1]


def f_to_h(f) -> tuple[int, ...]:
    """h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}; entries may come out negative."""
    f = tuple(f.entries if isinstance(f, FVector) else f)
    d = len(f) - 1
    return tuple(sum((-1) ** (k - i) * binom(d - i, k - i) * f[i] for i in range(k + 1))
                 for k in range(d + 1))


def h_to_f(h, d: int | None = None) -> FVector:
    """f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i."""
    h = list(h)
    d = len(h) - 1 if d is None else d
    if len(h) > d + 1:
        raise ValueError(f"h has {len(h)} entries, more than d+1 = {d + 1}")
    h += [0] * (d + 1 - len(h))
    return FVector(tuple(sum(binom(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1)))


def is_cm(f) -> bool:
    """Numerical Cohen-Macaulay test: the h-transform is a non-negative O-sequence."""
    h = f_to_h(f)
    if any(x < 0 for x in h):
        return False
    return is_o_sequence(h)


@dataclass
class IntervalCheck:
    slot: int
    low: tuple[int, ...]
    high: tuple[int, ...]
    checked: int
    non_cm: list

    @property
    def holds(self) -> bool:
        return not self.non_cm


def cm_interval_check(f, g) -> IntervalCheck:
    """Every f-vector between two CM f-vectors that differ in one slot is CM."""
    f = tuple(f.entries if isinstance(f, FVector) else f)
    g = tuple(g.entries if isinstance(g, FVector) else g)
    if len(f) != len(g):
        raise ValueError("f-vectors of different dimensions")
    diff = [i for i in range(len(f)) if f[i] != g[i]]
    if len(diff) > 1:
        raise ValueError(f"f-vectors differ in {len(diff)} slots")
    for v in (f, g):
        if not is_cm(v):
            raise NotCM(f"{v} is not Cohen-Macaulay (h = {f_to_h(v)})")
    if not diff:
        return IntervalCheck(-1, f, g, 1, [])
    j = diff[0]
    lo, hi = sorted((f, g), key=lambda v: v[j])
    bad = []
    for x in range(lo[j], hi[j] + 1):
        mid = lo[:j] + (x,) + lo[j + 1:]
        if not is_cm(mid):
            bad.append(mid)
    return IntervalCheck(j - 1, lo, hi, hi[j] - lo[j] + 1, bad)


# type 2

def pure_f_type2(e: int, h: int) -> FVector:
    """Two (e-1)-dimensional facets sharing h vertices: f_i = 2 C(e, i+1) - C(h, i+1)."""
    if e < 1 or not 0 <= h <= e - 1:
        raise ValueError("need e >= 1 and 0 <= h <= e-1")
    return FVector((1,) + tuple(2 * binom(e, i + 1) - binom(h, i + 1) for i in range(e)))


def type2_facets(e: int, h: int):
    """The two squarefree monomials realising pure_f_type2(e, h)."""
    n = 2 * e - h
    a = tuple(1 if i < e else 0 for i in range(n))
    b = tuple(1 if i >= e - h else 0 for i in range(n))
    return [a, b]


def inequality_chain(e: int) -> list[tuple[int, str, int]]:
    """Relations (i, op, j) meaning f_i op f_j, covering every index 0..e-1.

    Strict steps pair f_{floor(e/2)-a-1} with f_{floor((e+1)/2)+a}; the
    weak steps in between are the flawless inequalities.
    """
    m, top = e // 2, (e + 1) // 2
    order = []
    if e % 2:
        order.append(m)
    for a in range(m):
        order += [m - 1 - a, top + a]
    rel = []
    for k in range(len(order) - 1):
        if e % 2:
            op = ">=" if k % 2 == 0 else ">"
        else:
            op = ">" if k % 2 == 0 else ">="
        rel.append((order[k], op, order[k + 1]))
    return rel


def type2_inequality_check(f) -> bool:
    """True when f satisfies the full type-2 chain of inequalities."""
    f = tuple(f.entries if isinstance(f, FVector) else f)
    e = len(f) - 1
    for i, op, j in inequality_chain(e):
        a, b = f[i + 1], f[j + 1]
        if (op == ">" and not a > b) or (op == ">=" and not a >= b):
            return False
    return True


def first_chain_violation(f):
    f = tuple(f.entries if isinstance(f, FVector) else f)
    for i, op, j in inequality_chain(len(f) - 1):
        a, b = f[i + 1], f[j + 1]
        if (op == ">" and not a > b) or (op == ">=" and not a >= b):
            return (i, op, j)
    return None


# extremal sequences

def projective_plane_sequence(d: int) -> tuple[int, ...]:
    """(1, q, q C(d+1,2), ..., q C(d+1,d+1)) with q = d^2+d+1."""
    if d < 2:
        raise ValueError("order must be at least 2")
    q = d * d + d + 1
    return (1, q) + tuple(q * binom(d + 1, i) for i in range(2, d + 2))


@dataclass
class SteinerSequence:
    r: int
    sequence: tuple | None
    integral: bool
    realizable: bool
    note: str


def steiner_extremal(r: int) -> SteinerSequence:
    """(1, r, C(r,2), C(r,2)/3): extremal when every pair lies in exactly one triple."""
    pairs = binom(r, 2)
    integral = pairs % 3 == 0
    realizable = r % 6 in (1, 3)
    if realizable:
        note = "a Steiner triple system exists"
    elif not integral:
        note = "C(r,2)/3 is not an integer"
    else:
        note = "triples covering every pair exactly once need r = 1 or 3 mod 6"
    seq = (1, r, pairs, pairs // 3) if integral else None
    return SteinerSequence(r, seq, integral, realizable, note)


# facet files

_FACET = re.compile(r"^\{\s*([0-9,\s]*)\}$")


def parse_facets(text: str) -> list[frozenset[int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _FACET.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected a facet like {{1,2,4}}, got {raw!r}")
        body = m.group(1).strip()
        verts = [int(v) for v in body.split(",") if v.strip()] if body else []
        if any(v < 1 for v in verts):
            raise ValueError(f"line {lineno}: vertices are numbered from 1")
        out.append(frozenset(verts))
    return out


def load_facets(path) -> list[frozenset[int]]:
    return parse_facets(Path(path).read_text())


def facets_to_monomials(facets, n: int | None = None):
    if any(v < 1 for F in facets for v in F):
        raise ValueError("vertices are numbered from 1")
    n = max((max(F) for F in facets if F), default=0) if n is None else n
    return [tuple(1 if v + 1 in F else 0 for v in range(n)) for F in facets]


def format_facets(facets) -> str:
    return "".join("{" + ",".join(str(v) for v in sorted(F)) + "}\n" for F in facets)


def f_vector_of_facets(facets) -> FVector:
    from .monomials import closure

    return FVector(closure(facets_to_monomials(facets)).h_vector())

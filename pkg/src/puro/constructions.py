"""Explicit pure order ideals: named families and constructive witnesses."""
from __future__ import annotations

import time
from itertools import combinations

from .macaulay import binom, differentiate, is_o_sequence
from .monomials import Monomial, disjoint_union, monomials_of_degree


class ParameterOutOfRange(ValueError):
    pass


def _unit(n: int, *pairs) -> Monomial:
    m = [0] * n
    for i, a in pairs:
        m[i] += a
    return tuple(m)


def monomials_increasing(n: int, d: int):
    """Degree-d monomials in n variables, increasing lex (x1 most significant)."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d + 1):
        for rest in monomials_increasing(n - 1, d - a):
            yield (a,) + rest


def lex_witness(h) -> list[Monomial]:
    """Generators for a non-decreasing h whose first difference g is an O-sequence.

    The g_d lex-smallest degree-d monomials in x1..x_{r-1} form an order ideal;
    multiplying each by the matching power of x_r lands every member in degree e.
    """
    h = tuple(h)
    g = differentiate(h)
    if not is_o_sequence(g):
        raise ValueError(f"{h} is not differentiable")
    e, r = len(h) - 1, h[1] if len(h) > 1 else 0
    if e == 0:
        return [()]
    gens = []
    for d, count in enumerate(g):
        if count == 0:
            continue
        taken = 0
        for m in monomials_increasing(r - 1, d):
            gens.append(m + (e - d,))
            taken += 1
            if taken == count:
                break
    return gens


def socle2_witness(r: int, h2: int) -> list[Monomial]:
    """Generators for (1, r, h2) with ceil(r/2) <= h2 <= C(r+1, 2)."""
    lo, hi = (r + 1) // 2, binom(r + 1, 2)
    if not lo <= h2 <= hi:
        raise ParameterOutOfRange(f"(1,{r},{h2}) is not pure")
    gens = []
    for i in range(0, r - 1, 2):
        gens.append(_unit(r, (i, 1), (i + 1, 1)))
    if r % 2:
        gens.append(_unit(r, (r - 1, 2)))
    chosen = set(gens)
    for m in monomials_of_degree(r, 2):
        if len(gens) == h2:
            break
        if m not in chosen:
            gens.append(m)
            chosen.add(m)
    return gens


# boxes: all degree-e monomials with exponent a_i < p_i

def box_h_vector(p, e: int) -> tuple[int, ...]:
    poly = [1]
    for a in p:
        new = [0] * min(len(poly) + a - 1, e + 1)
        for i, c in enumerate(poly):
            for j in range(a):
                if i + j <= e:
                    new[i + j] += c
        poly = new
    return tuple(poly + [0] * (e + 1 - len(poly)))


def box_generators(p, e: int) -> list[Monomial]:
    return [m for m in monomials_of_degree(len(p), e) if all(a < b for a, b in zip(m, p))]


def _boxes(e: int, max_vars: int, cap):
    # non-increasing bounds in [2, e+1]; the box must reach degree e
    out = []

    def rec(prefix, top):
        if prefix and sum(x - 1 for x in prefix) >= e:
            hv = box_h_vector(prefix, e)
            if all(a <= b for a, b in zip(hv, cap)):
                out.append((tuple(prefix), hv))
        if len(prefix) == max_vars:
            return
        for x in range(top, 1, -1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], e + 1)
    return out


def block_decomposition(h, max_nodes: int = 200_000, max_seconds: float = 10.0, max_vars: int = 10):
    """Try to write h as 1 + sum of (box h-vector - 1) over disjoint variable blocks.

    Returns a generator list or None.  Every box block is itself pure, and
    disjoint blocks add their h-vectors.
    """
    h = tuple(h)
    e = len(h) - 1
    if e < 1:
        return None
    blocks = _boxes(e, min(h[1], max_vars), h)
    blocks.sort(key=lambda b: (-b[1][e], -b[1][1], b[0]))
    vecs = [hv[1:] for _, hv in blocks]
    # suffix ranges of b_i / b_e: the remainder must lie in the cone of what is left
    lo = [[0.0] * e for _ in range(len(vecs) + 1)]
    hi = [[0.0] * e for _ in range(len(vecs) + 1)]
    lo[-1] = [float("inf")] * e
    hi[-1] = [float("-inf")] * e
    for idx in range(len(vecs) - 1, -1, -1):
        v = vecs[idx]
        for i in range(e):
            ratio = v[i] / v[e - 1]
            lo[idx][i] = min(lo[idx + 1][i], ratio)
            hi[idx][i] = max(hi[idx + 1][i], ratio)
    need = tuple(h[1:])
    failed = set()
    nodes = [0]
    deadline = time.monotonic() + max_seconds

    def dfs(rest, j, picked):
        top = rest[e - 1]
        if top == 0:
            return not any(rest)
        if min(rest) == 0 or j >= len(vecs):
            return False
        for i in range(e - 1):
            ratio = rest[i] / top
            if ratio < lo[j][i] - 1e-12 or ratio > hi[j][i] + 1e-12:
                return False
        if (rest, j) in failed:
            return False
        nodes[0] += 1
        if nodes[0] > max_nodes or time.monotonic() > deadline:
            raise TimeoutError
        for idx in range(j, len(vecs)):
            v = vecs[idx]
            if all(v[i] <= rest[i] for i in range(e)):
                picked.append(blocks[idx][0])
                if dfs(tuple(rest[i] - v[i] for i in range(e)), idx, picked):
                    return True
                picked.pop()
        failed.add((rest, j))
        return False

    picked: list = []
    try:
        ok = dfs(need, 0, picked)
    except TimeoutError:
        return None
    if not ok:
        return None
    return disjoint_union([box_generators(p, e) for p in picked])


# named families

def construct_nondifferentiable(e: int) -> list[Monomial]:
    """Pure, non-decreasing, not differentiable, socle degree e >= 4."""
    if e <= 3:
        raise ParameterOutOfRange("non-differentiable pure sequences need socle degree >= 4")
    if e == 4:
        return disjoint_union([list(monomials_of_degree(4, 4)), [(1, 1, 1, 1)]])
    if e == 5:
        return disjoint_union([list(monomials_of_degree(3, 5)), [(1, 2, 2)]])
    trunc = [m for m in monomials_of_degree(3, e) if m[0] <= 2]
    return disjoint_union([trunc, [(2, 2, e - 4)]])


def construct_type14(n: int) -> list[Monomial]:
    """Fourteen monomials in three variables of degree 4n with a non-unimodal h-vector."""
    m = n // 2
    if n % 2 == 0:
        if m < 11:
            raise ParameterOutOfRange("even n needs n >= 22")
        gens = [(2 * m, 2 * m, 4 * m)]
        gens += [((i + 1) * (m - 1) - 1, (6 - i) * m + i + 3, m - 1) for i in range(7)]
        gens += [((i + 1) * (m - 1) - 1, (5 - i) * m + i + 3, 2 * m - 1) for i in range(6)]
    else:
        if m < 14:
            raise ParameterOutOfRange("odd n needs n >= 29")
        gens = [(n, n, 2 * n)]
        gens += [((i + 1) * (m - 1) - 1, (6 - i) * m + i + 6, m) for i in range(7)]
        gens += [((i + 1) * m - 1, (5 - i) * m + 5, 2 * m) for i in range(6)]
    return gens


def type14_middle(n: int) -> tuple[int, int, int, int]:
    """Values in degrees 3n..3n+3: C(n+2-k, 2) from z^n plus the rest of degree 3n+k."""
    a = 3 * n * n + 3 * n
    return (a + 1, a, a, a + 1)


def nonunimodal_socle4() -> list[Monomial]:
    """(1,49,81,79,81): a full degree-4 block in 5 variables plus 11 disjoint squarefree quartics."""
    return disjoint_union([list(monomials_of_degree(5, 4))] + [[(1, 1, 1, 1)]] * 11)


def circulant_witness(t: int) -> list[Monomial]:
    """y_i y_{i+1} y_{i+3} (indices mod t): pure with h-vector (1, t, 3t, t) for t >= 7."""
    if t < 7:
        raise ParameterOutOfRange("circulant triples need t >= 7")
    return [_unit(t, (i, 1), ((i + 1) % t, 1), ((i + 3) % t, 1)) for i in range(t)]


def weak_composition_witness(r: int, t: int) -> list[Monomial]:
    """(1, r, r, t) for t <= r <= 3t from disjoint y_u y_v y_w, y_u y_v^2 and y_u^3."""
    if not t <= r <= 3 * t:
        raise ParameterOutOfRange("need t <= r <= 3t")
    if r < 2 * t:
        i, j, k = 0, r - t, 2 * t - r
    else:
        i, j, k = r - 2 * t, 3 * t - r, 0
    shapes = [(1, 1, 1)] * i + [(1, 2)] * j + [(3,)] * k
    return disjoint_union([[s] for s in shapes])


def latin_square_witness(n: int) -> list[Monomial]:
    """x_{1+i} x_{n+1+j} x_{2n+1+(i+j mod n)}: h-vector (1, 3n, 3n^2, n^2)."""
    return [_unit(3 * n, (i, 1), (n + j, 1), (2 * n + (i + j) % n, 1))
            for i in range(n) for j in range(n)]


def region1_witness(r: int, a: int, t: int) -> list[Monomial] | None:
    """Closed-form witnesses on the boundary of the socle-degree-3 region t <= r <= a <= 3t."""
    if r == a:
        return weak_composition_witness(r, t)
    if r == t and a == 3 * t and t >= 7:
        return circulant_witness(t)
    return None


_DIFFERENCE_SETS = {2: (0, 1, 3), 3: (0, 1, 3, 9), 4: (0, 1, 4, 14, 16)}


def projective_plane_witness(d: int) -> list[Monomial]:
    """Lines of the projective plane of order d as squarefree monomials (d = 2, 3, 4)."""
    if d not in _DIFFERENCE_SETS:
        raise ParameterOutOfRange("difference sets are tabulated for d = 2, 3, 4")
    q = d * d + d + 1
    base = _DIFFERENCE_SETS[d]
    return [_unit(q, *[((b + s) % q, 1) for b in base]) for s in range(q)]


def steiner_triple_witness(r: int) -> list[Monomial] | None:
    """Squarefree cubics from a Steiner triple system when one is tabulated (r = 7, 9)."""
    if r == 7:
        return projective_plane_witness(2)
    if r == 9:
        # affine plane of order 3: lines of Z_3 x Z_3
        pts = [(x, y) for x in range(3) for y in range(3)]
        idx = {p: i for i, p in enumerate(pts)}
        lines = set()
        for p, q in combinations(pts, 2):
            s = ((-p[0] - q[0]) % 3, (-p[1] - q[1]) % 3)
            lines.add(frozenset((idx[p], idx[q], idx[s])))
        return [_unit(9, *[(i, 1) for i in sorted(L)]) for L in sorted(lines, key=sorted)]
    return None

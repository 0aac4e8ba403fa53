"""Exact integer linear algebra: ranks over Q and F_p, Smith invariants."""
from __future__ import annotations

import numpy as np
from sympy import factorint

BIG_PRIME = 2147483647  # 2^31 - 1, keeps int64 products exact


def _shape(M):
    m = len(M)
    return m, (len(M[0]) if m else 0)


def rank_mod_p(M, p: int) -> int:
    m, n = _shape(M)
    if m == 0 or n == 0:
        return 0
    if p >= 2**31:
        A = np.array([[int(x) % p for x in row] for row in M], dtype=object)
    else:
        A = np.array([[int(x) % p for x in row] for row in M], dtype=np.int64)
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            A[[rank, i]] = A[[i, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank] = (A[rank] * inv) % p
        rows = np.nonzero(A[:, c])[0]
        rows = rows[rows != rank]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[rank])) % p
        rank += 1
    return rank


def rank_bareiss(M) -> int:
    """Fraction-free elimination over the integers."""
    A = [[int(x) for x in row] for row in M]
    m, n = _shape(A)
    rank, prev = 0, 1
    for c in range(n):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        pc = pr[c]
        for i in range(rank + 1, m):
            row = A[i]
            f = row[c]
            if f == 0:
                if pc != prev:
                    for j in range(c + 1, n):
                        row[j] = row[j] * pc // prev
                continue
            for j in range(c + 1, n):
                row[j] = (row[j] * pc - f * pr[j]) // prev
            row[c] = 0
        prev = pc
        rank += 1
    return rank


def rank_q(M) -> int:
    """Rank over Q.  A full rank modulo a prime certifies full rank over Q."""
    m, n = _shape(M)
    if m == 0 or n == 0:
        return 0
    r = rank_mod_p(M, BIG_PRIME)
    if r == min(m, n):
        return r
    return rank_bareiss(M)


def det(M) -> int:
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_invariants(M) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    A = [[int(x) for x in row] for row in M]
    m, n = _shape(A)
    out = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                f = A[i][t]
                if f:
                    q = f // p
                    rt, ri = A[t], A[i]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        clean = False
            for j in range(t + 1, n):
                f = A[t][j]
                if f:
                    q = f // p
                    for row in A[t:]:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t to the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    A[t], A[i] = A[i], A[t]
                else:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            i, _ = bad
            A[t] = [a + b for a, b in zip(A[t], A[i])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def prime_factors(n: int) -> list[int]:
    n = abs(int(n))
    if n <= 1:
        return []
    return sorted(factorint(n))


def failing_primes(M) -> list[int]:
    """Primes p with rank over F_p below the rank over Q.

    They are the prime divisors of the largest invariant factor; each is
    confirmed by elimination mod p.
    """
    inv = smith_invariants(M)
    if not inv:
        return []
    cands = prime_factors(inv[-1])
    r = len(inv)
    return [p for p in cands if rank_mod_p(M, p) < r]

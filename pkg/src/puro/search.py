"""Backtracking search over sets of degree-e monomials.

Generators are added in strictly decreasing lex order (x1 most significant).
Symmetry under permuting variables is broken by a column-class rule: two
variables whose exponent columns agree on every generator chosen so far must
receive non-increasing exponents in the next generator.  The lex-largest
representative of every orbit survives this rule, so the search is exhaustive
up to symmetry.

Subtrees are cached by (degree e-1 part of the order ideal, last generator,
generators still to place, column classes): everything below a node depends
only on these, so a subtree that failed once is never searched again.
"""
from __future__ import annotations

import bisect
import heapq
import time
from dataclasses import dataclass
from itertools import product

from .macaulay import binom
from .monomials import Monomial, monomials_of_degree


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 5_000_000
    max_seconds: float = 120.0
    max_ambient_vars: int = 64


class BudgetHit(Exception):
    pass


def single_generator_caps(r: int, e: int) -> list[int]:
    """Max number of degree-i divisors of one degree-e monomial in r variables."""
    caps = [0] * (e + 1)

    def parts(n, k, top):
        if n == 0:
            yield ()
            return
        if k == 0:
            return
        for a in range(min(n, top), 0, -1):
            for rest in parts(n - a, k - 1, a):
                yield (a,) + rest

    for p in parts(e, r, e):
        poly = [1]
        for a in p:
            new = [0] * (len(poly) + a)
            for i, c in enumerate(poly):
                for j in range(a + 1):
                    new[i + j] += c
            poly = new
        for i in range(e + 1):
            caps[i] = max(caps[i], poly[i])
    return caps


class GeneratorSearch:
    """DFS over canonical sets of t distinct degree-e monomials in r variables.

    With a target h-vector the counts of the growing order ideal are pruned
    against it; without one every canonical set of size t using all r
    variables is reported through the visit callback.
    """

    MEMO_LIMIT = 4_000_000

    def __init__(self, r: int, e: int, t: int, target=None, budget: SearchBudget | None = None,
                 symmetry: bool = True, lookahead: bool = True, memo: bool = True):
        self.r, self.e, self.t = r, e, t
        self.lookahead = lookahead
        self.target = tuple(target) if target is not None else None
        self.budget = budget or SearchBudget()
        self.symmetry = symmetry
        self.nodes = 0
        self.deadline = None
        self.caps = single_generator_caps(r, e)
        self.ids: list[dict] = [dict() for _ in range(e + 1)]
        self.refs: list[list[int]] = [[] for _ in range(e + 1)]
        self.count = [0] * (e + 1)
        self.count[0] = 1
        self.info: dict = {}
        self.lists: dict = {}
        self.cls = list(range(r)) if not symmetry else [0] * r
        self.chosen: list[Monomial] = []
        self.memo = memo
        self.mask = 0  # members of degree e-1 as bits of their ids
        self.dead: set = set()

    # candidate lists

    def _candidate_list(self, m: int):
        # degree-e monomials supported on the first m variables, decreasing lex
        if m not in self.lists:
            pad = (0,) * (self.r - m)
            mons = [c + pad for c in monomials_of_degree(m, self.e)]
            keys = [tuple(-a for a in c) for c in mons]
            self.lists[m] = (mons, keys)
        return self.lists[m]

    def _info(self, c: Monomial):
        got = self.info.get(c)
        if got is None:
            supp = [j for j, a in enumerate(c) if a]
            by_deg: list[list[int]] = [[] for _ in range(self.e + 1)]
            for d in product(*(range(c[j] + 1) for j in supp)):
                s = sum(d)
                if 0 < s < self.e:
                    key = tuple(zip(supp, d))
                    key = tuple(p for p in key if p[1])
                    ids, refs = self.ids[s], self.refs[s]
                    k = ids.get(key)
                    if k is None:
                        k = ids[key] = len(refs)
                        refs.append(0)
                    by_deg[s].append(k)
            got = (supp, by_deg)
            self.info[c] = got
        return got

    # state updates

    def _push(self, c: Monomial) -> bool:
        """Add c; return False (state unchanged) if an upper count bound breaks."""
        supp, by_deg = self._info(c)
        target = self.target
        if target is not None:
            for s in range(1, self.e):
                refs = self.refs[s]
                new = sum(1 for k in by_deg[s] if refs[k] == 0)
                if self.count[s] + new > target[s]:
                    return False
        top = self.e - 1
        for s in range(1, self.e):
            refs = self.refs[s]
            for k in by_deg[s]:
                if refs[k] == 0:
                    self.count[s] += 1
                    if s == top:
                        self.mask |= 1 << k
                refs[k] += 1
        self.count[self.e] += 1
        self.chosen.append(c)
        return True

    def _pop(self):
        c = self.chosen.pop()
        _, by_deg = self.info[c]
        top = self.e - 1
        for s in range(1, self.e):
            refs = self.refs[s]
            for k in by_deg[s]:
                refs[k] -= 1
                if refs[k] == 0:
                    self.count[s] -= 1
                    if s == top:
                        self.mask &= ~(1 << k)
        self.count[self.e] -= 1

    def _used_vars(self) -> int:
        # the symmetry rule keeps used variables a prefix
        if self.e == 1:
            return len(self.chosen)
        return self.count[1]

    def _class_ok(self, c: Monomial, supp) -> bool:
        cls = self.cls
        for j in supp:
            if j and cls[j] == cls[j - 1] and c[j - 1] < c[j]:
                return False
        return True

    def _refine(self, c: Monomial):
        old = self.cls
        new, labels = [], {}
        for j in range(self.r):
            key = (old[j], c[j])
            if key not in labels:
                labels[key] = len(labels)
            new.append(labels[key])
        self.cls = new
        return old

    def _feasible(self) -> bool:
        target = self.target
        rem = self.t - len(self.chosen)
        if target is None:
            return self._used_vars() + rem * self.caps[1] >= self.r if self.e > 1 else True
        short = [s for s in range(1, self.e) if self.count[s] + rem * self.caps[s] < target[s]]
        if short:
            return False
        if self.lookahead:
            return self._lookahead(rem)
        return True

    def _lookahead(self, rem: int) -> bool:
        # every later generator is lex-smaller than the last one and can add
        # at most its current number of missing divisors in each degree
        # fresh variables are interchangeable, so rem generators never need
        # more than e * rem of them
        m = self.r if not self.symmetry else min(self.r, self._used_vars() + self.e * rem)
        mons, keys = self._candidate_list(m)
        start = bisect.bisect_right(keys, tuple(-a for a in self.chosen[-1]))
        if len(mons) - start < rem:
            return False
        deficits = [(s, self.target[s] - self.count[s]) for s in range(1, self.e)]
        deficits = [(s, d) for s, d in deficits if d > 0]
        if not deficits:
            return True
        gains = {s: [] for s, _ in deficits}
        for idx in range(start, len(mons)):
            _, by_deg = self._info(mons[idx])
            for s, _ in deficits:
                refs = self.refs[s]
                gains[s].append(sum(1 for k in by_deg[s] if refs[k] == 0))
        for s, d in deficits:
            g = gains[s]
            if len(g) > rem:
                g = heapq.nlargest(rem, g)
            if sum(g) < d:
                return False
        return True

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetHit
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetHit

    # driver

    def candidates(self):
        if self.symmetry:
            m = min(self.r, self._used_vars() + self.e)
        else:
            m = self.r
        mons, keys = self._candidate_list(m)
        start = 0
        if self.chosen:
            last = self.chosen[-1]
            start = bisect.bisect_right(keys, tuple(-a for a in last))
        for idx in range(start, len(mons)):
            c = mons[idx]
            supp, _ = self._info(c)
            if self.symmetry and not self._class_ok(c, supp):
                continue
            yield c

    def _complete(self) -> bool:
        if self._used_vars() != self.r:
            return False
        if self.target is None:
            return True
        return all(self.count[s] == self.target[s] for s in range(self.e + 1))

    def run(self, visit, roots=None):
        """Depth-first search; visit(chosen) returns True to stop early."""
        self.deadline = time.monotonic() + self.budget.max_seconds
        if self.t == 0:
            return False
        return self._dfs(visit, roots)

    def _dfs(self, visit, roots=None):
        source = roots if roots is not None else self.candidates()
        for c in source:
            self._tick()
            if not self._push(c):
                continue
            old = self._refine(c) if self.symmetry else None
            try:
                if len(self.chosen) == self.t:
                    if self._complete() and visit(self.chosen):
                        return True
                elif self.memo:
                    key = (self.mask, c, self.t - len(self.chosen), tuple(self.cls))
                    if key not in self.dead and self._feasible():
                        if self._dfs(visit):
                            return True
                        if len(self.dead) < self.MEMO_LIMIT:
                            self.dead.add(key)
                elif self._feasible():
                    if self._dfs(visit):
                        return True
            finally:
                if old is not None:
                    self.cls = old
                self._pop()
        return False

    def h_vector(self) -> tuple[int, ...]:
        return tuple(self.count)


def find_witness(h, budget: SearchBudget | None = None, symmetry: bool = True):
    """Search for generators realising h; returns (witness or None, nodes, budget_hit)."""
    h = tuple(h)
    e = len(h) - 1
    r, t = h[1], h[e]
    if any(h[i] > binom(r + i - 1, i) for i in range(e + 1)):
        return None, 0, False
    search = GeneratorSearch(r, e, t, target=h, budget=budget, symmetry=symmetry)
    found = []

    def visit(chosen):
        found.append(tuple(chosen))
        return True

    try:
        search.run(visit)
    except BudgetHit:
        return None, search.nodes, True
    return (found[0] if found else None), search.nodes, False


def enumerate_sets(r: int, e: int, t: int, budget: SearchBudget | None = None,
                   symmetry: bool = True, visit=None):
    """Distinct h-vectors of canonical t-sets of degree-e monomials using all r variables.

    With a visit callback every canonical set is reported, so subtree caching is off.
    """
    search = GeneratorSearch(r, e, t, budget=budget, symmetry=symmetry, memo=visit is None)
    seen = set()

    def record(chosen):
        seen.add(search.h_vector())
        if visit is not None:
            visit(chosen)
        return False

    search.run(record)
    return seen, search.nodes

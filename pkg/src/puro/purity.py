"""Deciding and enumerating pure O-sequences."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from enum import Enum

from .constructions import block_decomposition, lex_witness, socle2_witness
from .fileio import Checkpoint
from .macaulay import binom, canonical
from .monomials import Monomial, closure, format_monomial, hilbert_from_generators
from .search import BudgetHit, GeneratorSearch, SearchBudget, find_witness
from .sequences import is_differentiable_seq, necessary_conditions, socle2_is_pure


class MalformedSequence(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial
        self.complete = False


class Status(str, Enum):
    PURE = "Pure"
    NOT_PURE = "NotPure"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PurityVerdict:
    status: Status
    witness: tuple[Monomial, ...] | None
    nodes_explored: int
    budget_hit: bool
    reason: str = ""

    @property
    def is_pure(self) -> bool:
        return self.status is Status.PURE

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": [format_monomial(m) for m in self.witness] if self.witness else None,
            "nodes": self.nodes_explored,
            "budget_hit": self.budget_hit,
            "reason": self.reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate(h) -> tuple[int, ...]:
    h = tuple(int(x) for x in h)
    if not h:
        raise MalformedSequence("empty sequence")
    h = canonical(h)
    if h[0] != 1:
        raise MalformedSequence(f"h_0 must be 1, got {h[0]}")
    if any(x <= 0 for x in h):
        raise MalformedSequence(f"{h} has a zero or negative entry before its last degree")
    return h


def _pure(h, gens, nodes=0, reason=""):
    gens = tuple(sorted(gens))
    X = closure(gens)
    if X.h_vector() != h or X.codimension != (h[1] if len(h) > 1 else 0) or not X.is_pure:
        raise AssertionError(f"witness for {h} closes to {X.h_vector()}")
    return PurityVerdict(Status.PURE, gens, nodes, False, reason)


def _not_pure(reason, nodes=0):
    return PurityVerdict(Status.NOT_PURE, None, nodes, False, reason)


def decide_pure(h, budget: SearchBudget | None = None, *, theorems: bool = True,
                fast_paths: bool = True, constructions: bool = True) -> PurityVerdict:
    """Is h the h-vector of a pure monomial order ideal in exactly h_1 variables?

    theorems: refute with necessary conditions before searching.
    fast_paths: closed forms for socle degree 2 and differentiable sequences.
    constructions: try disjoint block decompositions before searching.
    The final backtracking search is exact; Unknown only when the budget runs out.
    """
    h = validate(h)
    budget = budget or SearchBudget()
    e = len(h) - 1
    if e == 0:
        return _pure(h, [()], reason="unit")
    r, t = h[1], h[e]
    if e == 1:
        return _pure(h, [tuple(int(i == j) for j in range(r)) for i in range(r)], reason="variables")
    if any(h[i] > binom(r + i - 1, i) for i in range(e + 1)):
        return _not_pure("exceeds the number of monomials")
    if theorems:
        why = necessary_conditions(h)
        if why:
            return _not_pure(why)
    if fast_paths:
        if e == 2:
            if socle2_is_pure(h):
                return _pure(h, socle2_witness(r, h[2]), reason="socle degree 2 closed form")
            return _not_pure("socle degree 2 closed form")
        if is_differentiable_seq(h):
            return _pure(h, lex_witness(h), reason="differentiable")
    if constructions:
        gens = block_decomposition(h, max_seconds=min(10.0, budget.max_seconds / 4))
        if gens is not None:
            return _pure(h, gens, reason="disjoint blocks")
    if r > budget.max_ambient_vars:
        return PurityVerdict(Status.UNKNOWN, None, 0, True, "too many variables for search")
    sub = SearchBudget(budget.max_nodes, budget.max_seconds, budget.max_ambient_vars)
    gens, nodes, hit = find_witness(h, sub)
    if hit:
        return PurityVerdict(Status.UNKNOWN, None, nodes, True, "budget exhausted")
    if gens is None:
        return _not_pure("exhaustive search", nodes)
    return _pure(h, gens, nodes, "search")


def is_pure(h, **kw) -> bool:
    return decide_pure(h, **kw).is_pure


# enumeration

def partitions(e: int, r: int, top: int | None = None):
    """Partitions of e into exactly r positive parts, non-increasing."""
    top = e if top is None else top
    if r == 0:
        if e == 0:
            yield ()
        return
    for a in range(min(e - (r - 1), top), 0, -1):
        for rest in partitions(e - a, r - 1, a):
            yield (a,) + rest


def _enumerate_type(r, e, t, budget, checkpoint=None):
    if t < 1 or r > t * e or t > binom(r + e - 1, e):
        return set()
    if t == 1:
        # canonical single generators are exactly the partitions of e into r parts
        return {hilbert_from_generators([p], r) for p in partitions(e, r)}
    search = GeneratorSearch(r, e, t, budget=budget)
    found: set = set()

    def record(chosen):
        found.add(search.h_vector())
        return False

    search.deadline = time.monotonic() + budget.max_seconds
    try:
        if checkpoint is None:
            search._dfs(record)
        else:
            ck = Checkpoint(checkpoint, r, e, t)
            found |= ck.found
            for c in list(search.candidates()):
                if ((c,)) in ck.done:
                    continue
                before = set(found)
                search._dfs(record, roots=[c])
                ck.finish_branch([c], found - before)
    except BudgetHit:
        raise BudgetExceeded(f"budget exhausted enumerating r={r} e={e} t={t}", found) from None
    return found


def enumerate_pure(r: int, e: int, t: int | None = None, budget: SearchBudget | None = None,
                   checkpoint=None) -> set:
    """All pure O-sequences of codimension r and socle degree e (of type t if given)."""
    budget = budget or SearchBudget()
    if e == 0:
        return {(1,)} if r == 0 and t in (None, 1) else set()
    types = [t] if t is not None else range(1, binom(r + e - 1, e) + 1)
    out: set = set()
    for tt in types:
        path = None if checkpoint is None else f"{checkpoint}.t{tt}"
        try:
            out |= _enumerate_type(r, e, tt, budget, path)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), out | exc.partial) from None
    return out

"""Regenerate each named example and diff it against its fixture file."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import constructions as C
from . import level as L
from .census import icp_box, socle3_points
from .monomials import closure, parse_monomial
from .purity import Status, decide_pure, enumerate_pure
from .search import SearchBudget
from .sequences import maxima_count, parse_sequence
from .simplicial import first_chain_violation


class UnknownExampleId(KeyError):
    def __init__(self, name, available):
        super().__init__(name)
        self.name = name
        self.available = available

    def __str__(self):
        return f"unknown example {self.name!r}; available: {', '.join(self.available)}"


def fixture_dir() -> Path:
    env = os.environ.get("PURO_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("puro") / "fixtures"))


def read_fixture(name: str) -> dict[str, list[str]]:
    """key: value lines; repeated keys accumulate.  '#' starts a comment."""
    out: dict[str, list[str]] = {}
    path = fixture_dir() / f"{name}.txt"
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        out.setdefault(key.strip(), []).append(value.strip())
    return out


def _seq(text: str) -> tuple[int, ...]:
    return parse_sequence(text)


@dataclass
class Outcome:
    id: str
    ok: bool
    seconds: float = 0.0
    details: list[str] = field(default_factory=list)

    def check(self, label: str, got, want) -> bool:
        good = got == want
        self.details.append(f"{'ok  ' if good else 'FAIL'} {label}: got {got}" + ("" if good else f", want {want}"))
        self.ok = self.ok and good
        return good


def _ideal(text: str, n: int):
    return [parse_monomial(tok, n) for tok in text.split()]


def _type14(n: int):
    def run(out: Outcome):
        fx = read_fixture(f"type14-n{n}")
        X = closure(C.construct_type14(n))
        h = X.h_vector()
        out.check("codimension", X.codimension, 3)
        out.check("type", X.type, 14)
        out.check("hilbert", h, _seq(fx["hilbert"][0]))
        out.check("middle", h[3 * n:3 * n + 4], _seq(fx["middle"][0]))
        out.check("middle formula", h[3 * n:3 * n + 4], C.type14_middle(n))
    return run


def _soc4(out: Outcome):
    fx = read_fixture("soc4-nonunimodal")
    gens = C.nonunimodal_socle4()
    h = closure(gens).h_vector()
    want = _seq(fx["hilbert"][0])
    out.check("tensor construction", h, want)
    out.check("decide_pure", decide_pure(want).status.value, fx["status"][0])
    out.check("maxima", maxima_count(h), int(fx["maxima"][0]))


def _char257(out: Outcome):
    fx = read_fixture("char257")
    ideal = _ideal(fx["ideal"][0], 3)
    A = L.from_monomial_ideal(ideal, 3)
    rep = L.wlp_report(A, chars=(0, "auto"))
    out.check("hilbert", A.hilbert, _seq(fx["hilbert"][0]))
    out.check("wlp char 0", rep.wlp_char0, fx["wlp_char0"][0] == "true")
    out.check("failing primes", rep.failing_primes, list(_seq(fx["failing_primes"][0])))
    out.check("|linkage determinant|", abs(L.linkage_determinant(ideal, 9)), int(fx["determinant"][0]))


def _icp3(out: Outcome):
    fx = read_fixture("icp3-r3-table")
    want = sorted(_seq(s) for s in fx["sequence"])
    got = sorted(enumerate_pure(3, 3))
    out.check("pure (1,3,*,*)", got, want)
    _, violations, unresolved = icp_box(3, 12)
    out.check("slices with gaps (entries <= 12)", len(violations), 0)
    out.check("unresolved points", unresolved, 0)


def _answernd(out: Outcome):
    fx = read_fixture("answernd-grid")
    for cell in fx["always"][0].split():
        r, d = map(int, cell.split(","))
        out.check(f"always-WLP ({r},{d})", L.always_wlp(r, d), True)
    for line in fx["witness"]:
        cell, _, hs = line.partition(" ")
        r, d = map(int, cell.split(","))
        w = L.wlp_witness(r, d)
        rep = w.report()
        out.check(f"({r},{d}) {w.name} fails WLP", rep.wlp_char0, False)
        out.check(f"({r},{d}) codimension/type", (w.algebra._ideal.codimension, w.algebra.type), (r, d))
        if hs.strip() != "*":
            out.check(f"({r},{d}) hilbert", w.algebra.hilbert, _seq(hs))
    tf = L.failure_family("tensor_factor").algebra
    out.check("tensor factor hilbert", tf.hilbert, _seq(fx["tensor_factor"][0]))
    out.check("surjectivity family r=4 first failure",
              L.failure_family("surjectivity", r=4).report().first_failure_degree, 4)


def _slp(out: Outcome):
    fx = read_fixture("slp-counterexample")
    A = L.from_monomial_ideal(_ideal(fx["ideal"][0], 3), 3)
    out.check("hilbert", A.hilbert, _seq(fx["hilbert"][0]))
    out.check("wlp char 0", L.wlp_report(A, chars=(0,)).wlp_char0, fx["wlp_char0"][0] == "true")
    s, d = int(fx["power"][0]), int(fx["failure_degree"][0])
    rep = L.lefschetz_report(A, s, chars=(0,))
    out.check(f"first failure of x L^{s}", rep.first_failure_degree, d)
    _, rank, target = rep.ranks[d]
    out.check(f"rank deficit {d}->{d + s}", rank < target, True)


def _nondiff(out: Outcome):
    fx = read_fixture("nondiff")
    for e in (4, 5, 6):
        h = closure(C.construct_nondifferentiable(e)).h_vector()
        out.check(f"e={e}", h, _seq(fx[f"e{e}"][0]))


def _fano(out: Outcome):
    fx = read_fixture("fano")
    out.check("lines", closure(C.projective_plane_witness(2)).h_vector(), _seq(fx["hilbert"][0]))


def _region1(out: Outcome):
    fx = read_fixture("region1-t7")
    t = int(fx["t"][0])
    pts = list(socle3_points(t, "I"))
    budget = SearchBudget(max_nodes=2_000_000, max_seconds=60)
    pure = sum(1 for p in pts if decide_pure(p, budget).status is Status.PURE)
    out.check("pure Region I points", pure, int(fx["count"][0]))
    out.check("2t^2+3t+1", 2 * t * t + 3 * t + 1, int(fx["count"][0]))
    out.check("circulant witness", closure(C.circulant_witness(t)).h_vector(), _seq(fx["circulant"][0]))


def _regression(out: Outcome):
    fx = read_fixture("regression-1-13-13-14")
    out.check("decide_pure", decide_pure(_seq(fx["sequence"][0])).status.value, fx["status"][0])


def _chain(out: Outcome):
    fx = read_fixture("type2-chain-counterexamples")
    for s in fx["sequence"]:
        h = _seq(s)
        v = decide_pure(h)
        out.check(f"{s} pure", v.status.value, "Pure")
        out.check(f"{s} type", closure(v.witness).type, 2)
        out.check(f"{s} breaks the chain", first_chain_violation(h) is not None, True)


EXAMPLES = {
    "type14-n22": _type14(22),
    "type14-n29": _type14(29),
    "soc4-nonunimodal": _soc4,
    "char257": _char257,
    "icp3-r3-table": _icp3,
    "answernd-grid": _answernd,
    "slp-counterexample": _slp,
    "nondiff": _nondiff,
    "fano": _fano,
    "region1-t7": _region1,
    "regression-1-13-13-14": _regression,
    "type2-chain-counterexamples": _chain,
}


def reproduce(name: str) -> Outcome:
    if name not in EXAMPLES:
        raise UnknownExampleId(name, sorted(EXAMPLES))
    out = Outcome(name, True)
    t0 = time.perf_counter()
    try:
        EXAMPLES[name](out)
    except FileNotFoundError as exc:
        out.ok = False
        out.details.append(f"FAIL missing fixture: {exc.filename}")
    out.seconds = time.perf_counter() - t0
    return out


def reproduce_all():
    return [reproduce(name) for name in EXAMPLES]

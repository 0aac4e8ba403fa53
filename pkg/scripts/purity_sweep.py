"""Decide purity of every O-sequence with fixed codimension and socle degree."""
import time
from collections import Counter
from dataclasses import dataclass

from _config import parse_config
from puro.census import o_sequences
from puro.purity import decide_pure
from puro.search import SearchBudget


@dataclass
class SweepConfig:
    """Decide every (1, r, h_2, ..., h_e) and report counts and the slowest cases."""
    r: int = 4
    e: int = 3
    raw: bool = False  # skip necessary conditions, closed forms and block constructions
    max_nodes: int = 5_000_000
    max_seconds: float = 120.0
    show_slowest: int = 5


def main(cfg: SweepConfig):
    budget = SearchBudget(cfg.max_nodes, cfg.max_seconds)
    kw = dict(theorems=False, fast_paths=False, constructions=False) if cfg.raw else {}
    statuses, timings = Counter(), []
    t0 = time.perf_counter()
    for h in o_sequences(cfg.r, cfg.e):
        t = time.perf_counter()
        v = decide_pure(h, budget, **kw)
        timings.append((time.perf_counter() - t, h, v.status.value, v.nodes_explored))
        statuses[v.status.value] += 1
    print(f"r={cfg.r} e={cfg.e} raw={cfg.raw}: {dict(statuses)} in {time.perf_counter() - t0:.1f}s")
    for dt, h, status, nodes in sorted(timings, reverse=True)[:cfg.show_slowest]:
        print(f"  {dt:7.2f}s {status:8} nodes={nodes:<9} {h}")


if __name__ == "__main__":
    main(parse_config(SweepConfig))

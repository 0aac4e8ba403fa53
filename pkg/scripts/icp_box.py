"""Look for interval-property gaps among small sequences of a given socle degree."""
import time
from dataclasses import dataclass

from _config import parse_config
from puro.census import icp_box
from puro.purity import Status
from puro.search import SearchBudget


@dataclass
class BoxConfig:
    """Every axis-parallel line through {1} x [1, bound]^e."""
    e: int = 3
    bound: int = 12
    max_seconds: float = 60.0
    threads: int = 1


def main(cfg: BoxConfig):
    t0 = time.perf_counter()
    status, violations, unresolved = icp_box(cfg.e, cfg.bound, SearchBudget(max_seconds=cfg.max_seconds),
                                             cfg.threads)
    pure = sum(1 for s in status.values() if s is Status.PURE)
    print(f"{len(status)} points, {pure} pure, {unresolved} unresolved, "
          f"{len(violations)} slices with gaps ({time.perf_counter() - t0:.1f}s)")
    for v in violations:
        print(f"  {v.template}: pure {v.pure_values}, gaps {v.gaps}")


if __name__ == "__main__":
    main(parse_config(BoxConfig))

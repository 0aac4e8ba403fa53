"""Counts of O-, differentiable and pure sequences of socle degree 3."""
from dataclasses import dataclass

from _config import parse_config
from puro.census import count_chain, region1_closed_count, socle3_region_census


@dataclass
class CensusConfig:
    """Chain counts for r <= max_r and the fixed-type region census for t <= max_t."""
    max_r: int = 5
    max_t: int = 8
    threads: int = 1


def main(cfg: CensusConfig):
    print("r   #O(r-1)  #D   #P   #O   chain")
    for r in range(1, cfg.max_r + 1):
        c = count_chain(r, 3, threads=cfg.threads)
        print(f"{r:<3} {c.o_prev_count:<8} {c.d_count:<4} {c.p_count:<4} {c.o_count:<4} {c.chain_holds}")
    print("t   I    II   III  total  2t^2+3t+1")
    for t in range(1, cfg.max_t + 1):
        c = socle3_region_census(t, exhaustive=True, threads=cfg.threads)
        reg = c.regions
        print(f"{t:<3} {reg['I']:<4} {reg['II']:<4} {reg['III']:<4} {c.total:<6} {region1_closed_count(t)}")


if __name__ == "__main__":
    main(parse_config(CensusConfig))

"""Sample type-2 monomial level algebras and test the WLP."""
import random
from dataclasses import dataclass

from _config import parse_config
from puro import level as L
from puro.sequences import strict_unimodal_wlp_shape


@dataclass
class SampleConfig:
    """Random pairs of equal-degree monomials with exponents <= max_exp."""
    variables: int = 3
    samples: int = 200
    max_exp: int = 6
    seed: int = 0


def random_pair(rng, n, cap):
    while True:
        a = tuple(rng.randint(0, cap) for _ in range(n))
        b = tuple(rng.randint(0, cap) for _ in range(n))
        if sum(a) == sum(b) and a != b and sum(a) > 0:
            return a, b


def main(cfg: SampleConfig):
    rng = random.Random(cfg.seed)
    fails, bad_shape = [], 0
    for _ in range(cfg.samples):
        a, b = random_pair(rng, cfg.variables, cfg.max_exp)
        A = L.from_inverse_system([a, b], cfg.variables)
        rep = L.wlp_report(A, chars=(0,))
        if not rep.wlp_char0:
            fails.append((a, b, rep.first_failure_degree, rep.mode))
        elif not strict_unimodal_wlp_shape(A.hilbert):
            bad_shape += 1
    print(f"{cfg.samples} pairs in {cfg.variables} variables: {len(fails)} fail the WLP, "
          f"{bad_shape} with the WLP but not the strict shape")
    for a, b, d, mode in fails[:10]:
        print(f"  {a} {b}: first failure in degree {d} ({mode})")


if __name__ == "__main__":
    main(parse_config(SampleConfig))

"""Monomials as exponent tuples, finite order ideals and their h-vectors."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

Monomial = tuple[int, ...]


class EmptyGenerators(ValueError):
    pass


class ParseError(ValueError):
    pass


def degree(m: Monomial) -> int:
    return sum(m)


def mono_key(m: Monomial):
    # degree first, then lex with x1 most significant
    return (sum(m), m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def times(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def contract(i: int, m: Monomial) -> Monomial | None:
    """Apply the contraction x_i o m; None when x_i does not divide m."""
    if i < 0 or i >= len(m):
        raise IndexError(f"variable index {i} out of range for {len(m)} variables")
    if m[i] == 0:
        return None
    return m[:i] + (m[i] - 1,) + m[i + 1:]


def divisors(m: Monomial):
    return product(*(range(a + 1) for a in m))


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of degree d in n variables, decreasing lex."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            yield (a,) + rest


# text formats

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, a in enumerate(m):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) if parts else "1"


def format_vector(m: Monomial) -> str:
    return "[" + ",".join(str(a) for a in m) + "]"


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty monomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"unbalanced bracket in {text!r}")
        body = s[1:-1]
        try:
            exps = tuple(int(x) for x in body.split(",")) if body else ()
        except ValueError:
            raise ParseError(f"bad exponent vector {text!r}") from None
        if any(a < 0 for a in exps):
            raise ParseError(f"negative exponent in {text!r}")
        if n is not None and len(exps) != n:
            raise ParseError(f"{text!r} has {len(exps)} entries, expected {n}")
        return exps
    powers: dict[int, int] = {}
    if s != "1":
        for factor in s.split("*"):
            match = _FACTOR.match(factor)
            if not match:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            i = int(match.group(1))
            if i < 1:
                raise ParseError(f"variables are numbered from 1: {text!r}")
            powers[i] = powers.get(i, 0) + int(match.group(2) or 1)
    size = max(powers, default=0)
    if n is None:
        n = size
    elif size > n:
        raise ParseError(f"{text!r} uses x{size} but only {n} variables")
    return tuple(powers.get(i + 1, 0) for i in range(n))


def parse_generator_lines(lines, n: int | None = None) -> list[Monomial]:
    raw = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            raw.append(line)
    gens = [parse_monomial(s) for s in raw]
    if n is None:
        n = max((len(g) for g in gens), default=0)
    out = []
    for g, s in zip(gens, raw):
        if len(g) > n or (s.lstrip().startswith("[") and len(g) != n):
            raise ParseError(f"{s!r} does not fit {n} variables")
        out.append(g + (0,) * (n - len(g)))
    return out


def load_generators(path, n: int | None = None) -> list[Monomial]:
    with open(path) as fh:
        return parse_generator_lines(fh, n)


def dump_generators(gens, style: str = "product") -> str:
    fmt = format_monomial if style == "product" else format_vector
    return "".join(fmt(g) + "\n" for g in gens)


# order ideals

def antichain(gens) -> tuple[Monomial, ...]:
    """Drop generators that divide another one; sorted and deduplicated."""
    uniq = sorted(set(gens), key=mono_key, reverse=True)
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(g, k) for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=mono_key))


def hilbert_from_generators(gens, n: int) -> tuple[int, ...]:
    """h-vector of the order ideal generated by gens.

    Enumerates divisors in the first n-1 coordinates only and keeps, for each
    such prefix, the largest admissible last exponent.
    """
    gens = list(gens)
    if not gens:
        return ()
    if n == 0:
        return (1,)
    best: dict[Monomial, int] = {}
    for g in gens:
        head, last = g[:-1], g[-1]
        for d in product(*(range(a + 1) for a in head)):
            if best.get(d, -1) < last:
                best[d] = last
    top = max(sum(g) for g in gens)
    diff = [0] * (top + 2)
    for d, k in best.items():
        s = sum(d)
        diff[s] += 1
        diff[s + k + 1] -= 1
    h, run = [], 0
    for x in diff[:top + 1]:
        run += x
        h.append(run)
    return tuple(h)


@dataclass(frozen=True)
class OrderIdeal:
    ambient: int
    generators: tuple[Monomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def socle_degree(self) -> int:
        return max(sum(g) for g in self.generators)

    @property
    def is_pure(self) -> bool:
        return len({sum(g) for g in self.generators}) == 1

    @property
    def type(self) -> int:
        return len(self.generators)

    @property
    def codimension(self) -> int:
        return sum(1 for i in range(self.ambient) if any(g[i] for g in self.generators))

    def h_vector(self) -> tuple[int, ...]:
        if "h" not in self._cache:
            self._cache["h"] = hilbert_from_generators(self.generators, self.ambient)
        return self._cache["h"]

    @cached_property
    def members_by_degree(self) -> list[list[Monomial]]:
        levels: list[set] = [set() for _ in range(self.socle_degree + 1)]
        for g in self.generators:
            for d in divisors(g):
                levels[sum(d)].add(d)
        return [sorted(s, key=mono_key) for s in levels]

    def members(self):
        for level in self.members_by_degree:
            yield from level

    def contains(self, m: Monomial) -> bool:
        return any(divides(m, g) for g in self.generators)

    def __len__(self):
        return sum(self.h_vector())


def closure(gens, ambient: int | None = None) -> OrderIdeal:
    gens = [tuple(g) for g in gens]
    if not gens:
        raise EmptyGenerators("an order ideal needs at least one generator")
    n = len(gens[0]) if ambient is None else ambient
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have {n} exponents")
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
    return OrderIdeal(n, antichain(gens))


def h_vector(gens, ambient: int | None = None) -> tuple[int, ...]:
    return closure(gens, ambient).h_vector()


def codimension(X: OrderIdeal) -> int:
    return X.codimension


def tensor_generators(A, B) -> list[Monomial]:
    """Generators of the tensor product; B lives in fresh variables."""
    return [tuple(a) + tuple(b) for a in A for b in B]


def union_generators(A, B) -> list[Monomial]:
    return list(antichain(list(A) + list(B)))


def disjoint_union(blocks) -> list[Monomial]:
    """Union of generator lists placed on disjoint blocks of variables.

    The h-vector is 1 + sum of (block h-vector minus its unit).
    """
    blocks = [list(b) for b in blocks]
    sizes = [len(b[0]) for b in blocks]
    total = sum(sizes)
    out, offset = [], 0
    for b, size in zip(blocks, sizes):
        for g in b:
            out.append((0,) * offset + tuple(g) + (0,) * (total - offset - size))
        offset += size
    return out


def standard_monomials(ideal_gens, n: int, max_degree: int | None = None) -> list[set]:
    """Monomials outside a monomial ideal, grouped by degree.

    Without max_degree the ideal must contain a power of every variable.
    """
    ideal_gens = [tuple(g) for g in ideal_gens]
    if max_degree is None:
        for i in range(n):
            if not any(g[i] > 0 and sum(g) == g[i] for g in ideal_gens):
                raise ValueError(f"ideal has no pure power of x{i + 1}")
    levels = [{(0,) * n}] if not any(sum(g) == 0 for g in ideal_gens) else []
    while levels and levels[-1] and (max_degree is None or len(levels) <= max_degree):
        nxt = set()
        for m in levels[-1]:
            for i in range(n):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if c not in nxt and not any(divides(g, c) for g in ideal_gens):
                    nxt.add(c)
        if not nxt:
            break
        levels.append(nxt)
    return levels


def inverse_system(ideal_gens, n: int) -> list[Monomial]:
    """Maximal standard monomials (socle) of an Artinian monomial ideal."""
    levels = standard_monomials(ideal_gens, n)
    members = set().union(*levels)
    out = []
    for m in members:
        if not any(m[:i] + (m[i] + 1,) + m[i + 1:] in members for i in range(n)):
            out.append(m)
    return sorted(out, key=mono_key)


def annihilator(gens, n: int | None = None) -> list[Monomial]:
    """Minimal generators of the monomial ideal of everything outside the downset."""
    X = closure(gens, n)
    n = X.ambient
    members = set(X.members())
    cands = set()
    for m in members:
        for i in range(n):
            c = m[:i] + (m[i] + 1,) + m[i + 1:]
            if c not in members:
                cands.add(c)
    # minimal ones: every contraction lies in the downset
    out = [c for c in cands
           if all(c[i] == 0 or c[:i] + (c[i] - 1,) + c[i + 1:] in members for i in range(n))]
    return sorted(out, key=mono_key)

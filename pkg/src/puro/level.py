"""Artinian monomial level algebras and Lefschetz rank checks.

The Lefschetz element is always L = x_1 + ... + x_n.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import product
from math import factorial

from .linalg import det, failing_primes, rank_mod_p, rank_q
from .monomials import Monomial, closure, inverse_system, mono_key, monomials_of_degree, standard_monomials
from .sequences import strict_unimodal_wlp_shape


class MixedDegrees(ValueError):
    pass


class DegreeOutOfRange(ValueError):
    pass


class InsufficientTable(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class LevelAlgebra:
    """R/Ann(M) for a set M of monomials of one degree (the inverse system)."""

    n: int
    generators: tuple[Monomial, ...]

    @cached_property
    def _ideal(self):
        return closure(self.generators, self.n)

    @property
    def socle_degree(self) -> int:
        return sum(self.generators[0])

    @property
    def type(self) -> int:
        return len(self.generators)

    @cached_property
    def hilbert(self) -> tuple[int, ...]:
        return self._ideal.h_vector()

    def basis(self, d: int) -> list[Monomial]:
        if d < 0 or d > self.socle_degree:
            return []
        return self._ideal.members_by_degree[d]

    @cached_property
    def _index(self):
        return [{m: i for i, m in enumerate(level)} for level in self._ideal.members_by_degree]


def from_inverse_system(gens, n: int | None = None) -> LevelAlgebra:
    X = closure(gens, n)
    if not X.is_pure:
        raise MixedDegrees("inverse system generators have different degrees")
    return LevelAlgebra(X.ambient, X.generators)


def from_monomial_ideal(ideal_gens, n: int) -> LevelAlgebra:
    socle = inverse_system(ideal_gens, n)
    if len({sum(m) for m in socle}) != 1:
        raise MixedDegrees(f"socle degrees {sorted({sum(m) for m in socle})}: not level")
    return LevelAlgebra(n, tuple(sorted(socle, key=mono_key)))


def multinomial(alpha) -> int:
    out = factorial(sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


def mult_matrix(A: LevelAlgebra, s: int, d: int) -> list[list[int]]:
    """Matrix of x L^s from degree d to degree d+s; rows index the target basis."""
    if s < 1 or d < 0 or d + s > A.socle_degree:
        raise DegreeOutOfRange(f"no map of degree {s} from degree {d} (socle degree {A.socle_degree})")
    src, dst = A.basis(d), A._index[d + s]
    M = [[0] * len(src) for _ in range(len(dst))]
    powers = [(alpha, multinomial(alpha)) for alpha in monomials_of_degree(A.n, s)]
    for j, m in enumerate(src):
        for alpha, c in powers:
            i = dst.get(tuple(a + b for a, b in zip(m, alpha)))
            if i is not None:
                M[i][j] += c
    return M


@dataclass
class WlpReport:
    hilbert: tuple[int, ...]
    ranks: list[tuple[int, int, int]]
    wlp_char0: bool
    failing_primes: list[int] | None
    first_failure_degree: int | None
    mode: str | None
    power: int = 1
    char_verdicts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ranks"] = [list(x) for x in self.ranks]
        d["char_verdicts"] = {str(k): v for k, v in self.char_verdicts.items()}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _parse_chars(chars):
    out = []
    for c in chars:
        if isinstance(c, str) and c.strip().lower() == "auto":
            out.append("auto")
        else:
            out.append(int(c))
    return out


def lefschetz_report(A: LevelAlgebra, s: int = 1, chars=(0, "auto")) -> WlpReport:
    """Maximal-rank check for x L^s in every degree."""
    chars = _parse_chars(chars)
    h = A.hilbert
    e = A.socle_degree
    ranks, mats = [], []
    first, mode = None, None
    for d in range(0, e - s + 1):
        M = mult_matrix(A, s, d)
        target = min(h[d], h[d + s])
        r = rank_q(M)
        ranks.append((d, r, target))
        mats.append(M)
        if r < target and first is None:
            first = d
            if h[d] == h[d + s]:
                mode = "isomorphism"
            else:
                mode = "injectivity" if h[d] < h[d + s] else "surjectivity"
    ok = first is None
    primes = None
    if "auto" in chars:
        if ok:
            found = set()
            for M, (_, r, target) in zip(mats, ranks):
                if target:
                    found.update(failing_primes(M))
            primes = sorted(found)
        else:
            primes = None  # every characteristic fails
    verdicts = {}
    for c in chars:
        if c == "auto":
            continue
        if c == 0:
            verdicts[0] = ok
        else:
            verdicts[c] = all(rank_mod_p(M, c) == target for M, (_, _, target) in zip(mats, ranks))
    return WlpReport(h, ranks, ok, primes, first, mode, s, verdicts)


def wlp_report(A: LevelAlgebra, chars=(0, "auto")) -> WlpReport:
    return lefschetz_report(A, 1, chars)


@dataclass
class SlpReport:
    hilbert: tuple[int, ...]
    by_power: list[WlpReport]

    @property
    def slp_char0(self) -> bool:
        return all(r.wlp_char0 for r in self.by_power)

    @property
    def first_failure(self):
        for r in self.by_power:
            if not r.wlp_char0:
                return r.power, r.first_failure_degree
        return None

    def to_dict(self) -> dict:
        return {"hilbert": list(self.hilbert), "slp_char0": self.slp_char0,
                "first_failure": self.first_failure,
                "by_power": [r.to_dict() for r in self.by_power]}


def slp_report(A: LevelAlgebra, chars=(0,)) -> SlpReport:
    return SlpReport(A.hilbert, [lefschetz_report(A, s, chars) for s in range(1, A.socle_degree + 1)])


# Hilbert functions of monomial complete intersections and type 2 algebras

def ci_hilbert(degrees) -> tuple[int, ...]:
    """Coefficients of prod (1 + t + ... + t^(a-1))."""
    poly = [1]
    for a in degrees:
        if a < 1:
            raise ValueError("complete intersection degrees must be positive")
        new = [0] * (len(poly) + a - 1)
        for i, c in enumerate(poly):
            for j in range(a):
                new[i + j] += c
        poly = new
    return tuple(poly)


def _add(*seqs):
    n = max(len(s) for s in seqs)
    out = [0] * n
    for s in seqs:
        for i, x in enumerate(s):
            out[i] += x
    return out


def _sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(h):
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def shifted(h, k: int):
    return [0] * k + list(h)


def type2_hilbert(a, b) -> tuple[int, ...]:
    """Hilbert function of R/Ann(x^a, x^b) by inclusion-exclusion of the two boxes."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("monomials live in different rings")
    if sum(a) != sum(b):
        raise DegreeMismatch("type 2 level algebras need equal degrees")
    meet = tuple(min(x, y) for x, y in zip(a, b))
    return _trim(_sub(_add(ci_hilbert([x + 1 for x in a]), ci_hilbert([x + 1 for x in b])),
                      ci_hilbert([x + 1 for x in meet])))


def two_var_ci(a: int, b: int, j: int) -> int:
    """dim of k[x,y]/(x^(a+1), y^(b+1)) in degree j."""
    return max(0, min(j + 1, a + 1, b + 1, a + b + 1 - j))


def H3(a, b, c):
    return ci_hilbert([a, b, c])


@dataclass(frozen=True)
class Type2Class:
    case: str  # "equal" (one shared exponent) or "distinct"
    perm: tuple[int, int, int]
    first: Monomial
    second: Monomial
    params: dict

    def hilbert(self) -> tuple[int, ...]:
        p = self.params
        if self.case == "equal":
            a, b, c, beta, gamma = p["a"], p["b"], p["c"], p["beta"], p["gamma"]
            return _trim(_add(shifted(H3(a, b - beta, gamma), beta), H3(a, beta, c)))
        a, b, c, alpha, beta, gamma = p["a"], p["b"], p["c"], p["alpha"], p["beta"], p["gamma"]
        return _trim(_add(shifted(H3(a - alpha, beta, gamma), alpha), H3(alpha, b, c)))

    def ideal(self):
        """Minimal generators of the annihilator in the permuted variables."""
        p = self.params
        if self.case == "equal":
            a, b, c, beta, gamma = p["a"], p["b"], p["c"], p["beta"], p["gamma"]
            return [(a, 0, 0), (0, b, 0), (0, 0, c), (0, beta, gamma)]
        a, b, c, alpha, beta, gamma = p["a"], p["b"], p["c"], p["alpha"], p["beta"], p["gamma"]
        return [(a, 0, 0), (0, b, 0), (0, 0, c), (alpha, beta, 0), (alpha, 0, gamma)]


def classify_type2_3vars(m1, m2) -> Type2Class:
    """Put a pair of distinct degree-e monomials in three variables into normal form.

    equal: after permuting, a1 = b1, a2 < b2, a3 > b3, and
      I = (x^{a1+1}, y^{b2+1}, z^{a3+1}, y^{a2+1} z^{b3+1}).
    distinct: after permuting and swapping, a1 < b1, a2 > b2, a3 > b3, and
      I = (x^{b1+1}, y^{a2+1}, z^{a3+1}, x^{a1+1} y^{b2+1}, x^{a1+1} z^{b3+1}).
    """
    m1, m2 = tuple(m1), tuple(m2)
    if len(m1) != 3 or len(m2) != 3:
        raise ValueError("expected monomials in three variables")
    if sum(m1) != sum(m2):
        raise DegreeMismatch("type 2 level algebras need equal degrees")
    if m1 == m2:
        raise ValueError("the two monomials coincide")
    same = [i for i in range(3) if m1[i] == m2[i]]
    if same:
        i = same[0]
        rest = [j for j in range(3) if j != i]
        perm = (i, rest[0], rest[1])
        a, b = [m1[k] for k in perm], [m2[k] for k in perm]
        if a[1] > b[1]:
            a, b = b, a
            perm = (i, rest[0], rest[1])
        params = dict(a=a[0] + 1, b=b[1] + 1, c=a[2] + 1, beta=a[1] + 1, gamma=b[2] + 1)
        return Type2Class("equal", perm, tuple(a), tuple(b), params)
    # two coordinates go one way, the third the other way
    bigger = [i for i in range(3) if m1[i] > m2[i]]
    if len(bigger) == 1:
        m1, m2 = m2, m1
        bigger = [i for i in range(3) if m1[i] > m2[i]]
    odd = next(i for i in range(3) if i not in bigger)
    perm = (odd, bigger[0], bigger[1])
    a, b = [m1[k] for k in perm], [m2[k] for k in perm]
    params = dict(a=b[0] + 1, b=a[1] + 1, c=a[2] + 1, alpha=a[0] + 1, beta=b[1] + 1, gamma=b[2] + 1)
    return Type2Class("distinct", perm, tuple(a), tuple(b), params)


def hilbert_table(ideal_gens, n: int, upto: int) -> tuple[int, ...]:
    """Hilbert function of R/I in degrees 0..upto for any monomial ideal."""
    levels = standard_monomials(ideal_gens, n, max_degree=upto)
    out = [len(level) for level in levels]
    return tuple(out + [0] * (upto + 1 - len(out)))


def basic_double_link_hf(hI, hJ, d: int, upto: int | None = None) -> tuple[int, ...]:
    """h(j) = hI(j-d) + hJ(j) - hJ(j-d) for I' = f I + J with deg f = d.

    hI is a finite table (zero beyond); hJ is a callable or a table that must
    cover every degree requested.
    """
    if upto is None:
        upto = len(hI) - 1 + d

    def J(j):
        if j < 0:
            return 0
        if callable(hJ):
            return hJ(j)
        if j >= len(hJ):
            raise InsufficientTable(f"table for J stops at degree {len(hJ) - 1}, need {j}")
        return hJ[j]

    out = []
    for j in range(upto + 1):
        i = j - d
        out.append((hI[i] if 0 <= i < len(hI) else 0) + J(j) - J(j - d))
    return _trim(out)


# families of algebras failing a Lefschetz property

@dataclass
class FailureWitness:
    name: str
    algebra: LevelAlgebra
    power: int = 1
    degree: int | None = None
    mode: str | None = None

    def report(self) -> WlpReport:
        return lefschetz_report(self.algebra, self.power, chars=(0,))


def _var_power(n, i, a):
    m = [0] * n
    m[i] = a
    return tuple(m)


def brenner_kaid_ideal():
    return [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]


def type_d_ideal(d: int):
    """Monomial ideal in three variables whose level quotient has type d and fails WLP."""
    if d < 3:
        raise ValueError("type at least 3")
    if d == 3:
        return brenner_kaid_ideal()
    if d == 4:
        return [(0, 0, 2), (0, 3, 1), (3, 0, 1), (5, 0, 0), (3, 2, 0), (0, 5, 0), (2, 4, 0)]
    # x * (x^{1+2n}, y^{1+2n}, z^{1+2n}, xyz) + (y^a, z^b) + (x,y,z)^{4n+2}
    n = 1
    while 4 * n + 5 < d:
        n += 1
    while True:
        for a in range(1 + 2 * n, 4 * n + 3):
            for b in range(a, 4 * n + 3):
                # the two-variable complete intersection (a, b) must be
                # non-decreasing at 2n+1 and have value d-3 in degree 4n+1
                h = lambda j: max(0, min(j + 1, a, b, a + b - 1 - j))
                if h(2 * n + 1) <= h(2 * n + 2) and h(4 * n + 1) == d - 3:
                    gens = [(2 * n + 2, 0, 0), (1, 2 * n + 1, 0), (1, 0, 2 * n + 1), (2, 1, 1),
                            (0, a, 0), (0, 0, b)]
                    gens += list(monomials_of_degree(3, 4 * n + 2))
                    try:
                        A = from_monomial_ideal(gens, 3)
                    except MixedDegrees:
                        continue
                    if A.type == d:
                        return gens
        n += 1
        if n > d:
            raise ValueError(f"no construction found for type {d}")


def failure_family(kind: str, **params) -> FailureWitness:
    """Named algebras on which multiplication by L drops rank."""
    if kind == "surjectivity":
        # r >= 4 variables, type 2, fails surjectivity from degree r to r+1
        r = params.get("r", 4)
        if r < 4:
            raise ValueError("needs at least 4 variables")
        m1 = (1,) + (2,) * (r - 2) + (3,)
        m2 = (3,) + (2,) * (r - 2) + (1,)
        return FailureWitness(f"surjectivity-r{r}", from_inverse_system([m1, m2]), 1, r, "surjectivity")
    if kind == "injectivity":
        r, N = params.get("r", 4), params.get("N", 5)
        if r % 2 or r < 2 or N < 5:
            raise ValueError("needs an even number of variables and N >= 5")
        m1 = (N - 3, N - 1) + (N - 2,) * (r - 2)
        m2 = (N - 1, N - 3) + (N - 2,) * (r - 2)
        deg = r * N // 2 - r
        return FailureWitness(f"injectivity-r{r}-N{N}", from_inverse_system([m1, m2]), 1, deg, "injectivity")
    if kind == "type_d":
        d = params.get("d", 3)
        A = from_monomial_ideal(type_d_ideal(d), 3)
        return FailureWitness(f"type{d}-3vars", A)
    if kind == "tensor_factor":
        # k[x,y]/(x^4, x^2y^2, y^4) tensor k[z]/(z^3); the building block of the
        # surjectivity family, which itself still has the WLP (type 2, three variables)
        return FailureWitness("tensor-factor", from_monomial_ideal(
            [(4, 0, 0), (2, 2, 0), (0, 4, 0), (0, 0, 3)], 3))
    if kind == "type2_4vars":
        A = from_inverse_system([(2, 2, 1, 1), (1, 1, 2, 2)])
        return FailureWitness("type2-4vars", A, 1, 3, "surjectivity")
    if kind == "type3_4vars":
        A = from_inverse_system([(1, 2, 2, 3), (3, 2, 2, 1), (2, 2, 2, 2)])
        return FailureWitness("type3-4vars", A, 1, 4, "injectivity")
    if kind == "lift":
        base = params["base"]
        B = base.algebra
        e = B.socle_degree
        gens = [g + (0,) for g in B.generators] + [(0,) * B.n + (e,)]
        return FailureWitness(f"{base.name}+1", from_inverse_system(gens), base.power, base.degree, base.mode)
    if kind == "slp_cube":
        A = from_monomial_ideal([(4, 0, 0), (0, 3, 0), (0, 0, 4), (2, 0, 2)], 3)
        return FailureWitness("slp-cube", A, 3, 2, "surjectivity")
    if kind == "slp_type2":
        A = from_monomial_ideal([(7, 0, 0), (0, 4, 0), (0, 0, 4), (3, 2, 0), (3, 0, 2)], 3)
        return FailureWitness("slp-type2", A, 3, 3, "injectivity")
    if kind == "char257":
        A = from_monomial_ideal(CHAR257_IDEAL, 3)
        return FailureWitness("char257", A)
    raise ValueError(f"unknown family {kind!r}")


CHAR257_IDEAL = [(10, 0, 0), (0, 7, 0), (0, 0, 7), (4, 3, 0), (4, 0, 5)]


def always_wlp(r: int, d: int) -> bool:
    """(codimension, type) pairs where every monomial level algebra has the WLP in char 0."""
    return r <= 2 or d == 1 or (r, d) == (3, 2)


def always_slp(r: int, d: int) -> bool:
    return r <= 2 or d == 1


def wlp_witness(r: int, d: int) -> FailureWitness:
    """A level algebra of codimension r and type d failing the WLP."""
    if always_wlp(r, d):
        raise ValueError(f"every algebra with r={r}, d={d} has the WLP")
    if r == 3:
        return failure_family("type_d", d=d)
    if (r, d) == (4, 2):
        return failure_family("type2_4vars")
    if d == 2:
        return failure_family("surjectivity", r=r)
    if (r, d) == (4, 3):
        return failure_family("type3_4vars")
    return failure_family("lift", base=wlp_witness(r - 1, d - 1))


def slp_witness(r: int, d: int) -> FailureWitness:
    if always_slp(r, d):
        raise ValueError(f"every algebra with r={r}, d={d} has the SLP")
    if (r, d) == (3, 2):
        return failure_family("slp_type2")
    return wlp_witness(r, d)


def random_level_algebra(rng: random.Random, r: int, d: int, max_exp: int = 4) -> LevelAlgebra:
    """d distinct monomials of one random degree using all r variables."""
    while True:
        deg = rng.randint(r, r * max_exp)
        gens = set()
        tries = 0
        while len(gens) < d and tries < 200:
            tries += 1
            m = _random_composition(rng, deg, r, max_exp)
            if m is not None:
                gens.add(m)
        if len(gens) < d:
            continue
        A = from_inverse_system(sorted(gens))
        if A._ideal.codimension == r and A.type == d:
            return A


def _random_composition(rng, deg, r, cap):
    for _ in range(50):
        cuts = sorted(rng.randint(0, deg) for _ in range(r - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [deg])]
        if all(p <= cap for p in parts):
            return tuple(parts)
    return None


@dataclass
class AnswerCell:
    r: int
    d: int
    always: bool
    witness: str | None = None
    hilbert: tuple | None = None
    fails: bool | None = None
    samples: int = 0
    sample_failures: int = 0


def answernd_check(r: int, d: int, samples: int = 10, seed: int = 0, slp: bool = False) -> AnswerCell:
    """Witness outside the always-region, random sampling inside it."""
    always = always_slp(r, d) if slp else always_wlp(r, d)
    cell = AnswerCell(r, d, always)
    if not always:
        w = slp_witness(r, d) if slp else wlp_witness(r, d)
        cell.witness = w.name
        cell.hilbert = w.algebra.hilbert
        if slp:
            cell.fails = not slp_report(w.algebra).slp_char0
        else:
            cell.fails = not wlp_report(w.algebra, chars=(0,)).wlp_char0
        return cell
    if r == 1 and d > 1:
        return cell  # one variable has a single monomial per degree: nothing to sample
    rng = random.Random(seed * 1000 + r * 10 + d)
    for _ in range(samples):
        A = random_level_algebra(rng, r, d)
        ok = slp_report(A).slp_char0 if slp else wlp_report(A, chars=(0,)).wlp_char0
        cell.samples += 1
        cell.sample_failures += 0 if ok else 1
    return cell


# linkage reduction for the characteristic-dependent example

def _poly_mul(p, q):
    out = {}
    for (a, b), c in p.items():
        for (x, y), d in q.items():
            k = (a + x, b + y)
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _substitute_z(m):
    # z = -(x + y) on the hyperplane x + y + z = 0
    a, b, c = m
    out = {}
    for k in range(c + 1):
        coef = (-1) ** c * _binom(c, k)
        key = (a + k, b + c - k)
        out[key] = out.get(key, 0) + coef
    return out


def _binom(n, k):
    return factorial(n) // (factorial(k) * factorial(n - k))


def linkage_matrix(ideal_gens, target_degree: int):
    """Conditions on F of degree D with F*J inside (x^p, y^q) in k[x,y].

    J is the image of I modulo L = x+y+z; (x^p, y^q) are the pure powers of x and y
    in I, and D = p + q - 2 - target_degree.  The quotient by (I, L) is nonzero in
    target_degree exactly when this system has a nonzero solution.
    """
    p = next(g[0] for g in ideal_gens if g[1] == g[2] == 0 and g[0])
    q = next(g[1] for g in ideal_gens if g[0] == g[2] == 0 and g[1])
    D = p + q - 2 - target_degree
    rows = []
    for g in ideal_gens:
        if g in ((p, 0, 0), (0, q, 0)):
            continue
        image = _substitute_z(g)
        deg = sum(g) + D
        for i in range(deg + 1):
            j = deg - i
            if i < p and j < q:
                row = []
                for k in range(D + 1):
                    # F = sum c_k x^{D-k} y^k
                    row.append(image.get((i - (D - k), j - k), 0))
                if any(row):
                    rows.append(row)
    return rows


def linkage_determinant(ideal_gens=None, target_degree: int = 9) -> int:
    M = linkage_matrix(ideal_gens or CHAR257_IDEAL, target_degree)
    if len(M) != len(M[0]):
        raise ValueError(f"linkage system is {len(M)} x {len(M[0])}, not square")
    return det(M)

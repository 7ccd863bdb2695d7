"""Word enumeration and pigeonhole search for near-identity commutators.

Words are strings over ``a`` (alpha) and ``b`` (beta).  For a bound n,

    S_n  = { U + "ba" : U positive, |U| <= n }
    S'_n = { U + "ba" in S_n : U contains exactly floor(n/2) letters a }

A word acts as the composition of its letters read left to right, so
``U + "ba"`` applies alpha first.  The search evaluates every ``g W`` for
g in S'_n on the grid i/N (0 < i < N), keeps the pairs whose grid values
agree within the condition-(i) threshold, and reports
``h = (g1 W)^-1 (g2 W)`` for the chosen pair with its exact C0 distance to
the identity.

All threshold tests involving 1.9**(1/(2N)) are decided by raising both
sides to the power 2N and comparing rationals; no root is ever taken.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .arith import iroot_floor, rat, rat_str
from .group import abelianization, invert_word
from .pl import (
    PLHomeo,
    c0_distance_to_identity,
    compose,
    evaluate,
    fixed_point_census,
    inverse,
    slope_range,
)

__all__ = [
    "SearchParams",
    "WordSetEntry",
    "SearchResult",
    "ResourceError",
    "enumerate_Sn",
    "enumerate_Sn_prime",
    "count_Sn",
    "count_Sn_prime",
    "check_growth",
    "growth_threshold",
    "theta_bound_holds",
    "condition_i_holds",
    "condition_ii_holds",
    "validate_params",
    "word_maps",
    "pigeonhole_search",
    "contraction_audit",
    "commutator_membership_audit",
]

ENUMERATION_CAP = 20
SUFFIX = "ba"
GROWTH = Fraction(19, 10)


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchParams:
    epsilon: Fraction = Fraction(1, 100)
    grid_N: int = 4
    delta: Fraction = Fraction(1, 16)
    M: Fraction = Fraction(2)
    theta_N: Fraction = Fraction(101, 100)
    lam: Fraction = Fraction(1, 2)
    n: int = 12
    m: int = 1

    def __post_init__(self):
        for name in ("epsilon", "delta", "M", "theta_N", "lam"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.grid_N < 1:
            raise ValueError("grid_N must be positive")

    @classmethod
    def from_json(cls, obj: dict) -> "SearchParams":
        kw = {}
        for key, val in obj.items():
            key = {"lambda": "lam", "N": "grid_N"}.get(key, key)
            if key in ("grid_N", "n", "m"):
                kw[key] = int(val)
            else:
                kw[key] = rat(str(val))
        return cls(**kw)

    def to_json(self) -> dict:
        return {
            "epsilon": rat_str(self.epsilon),
            "grid_N": self.grid_N,
            "delta": rat_str(self.delta),
            "M": rat_str(self.M),
            "theta_N": rat_str(self.theta_N),
            "lambda": rat_str(self.lam),
            "n": self.n,
            "m": self.m,
        }


@dataclass(frozen=True)
class WordSetEntry:
    word: str
    element: PLHomeo
    alpha_sum: int
    beta_sum: int


# --- enumeration and counting -------------------------------------------------


def _prefixes(n: int, alpha_count: int | None = None):
    """Positive words U with |U| <= n (and a prescribed number of a's)."""
    for length in range(n + 1):
        if alpha_count is not None and alpha_count > length:
            continue
        for tup in product("ab", repeat=length):
            if alpha_count is None or tup.count("a") == alpha_count:
                yield "".join(tup)


def enumerate_Sn(n: int, cap: int = ENUMERATION_CAP) -> list[str]:
    if n > cap:
        raise ResourceError(f"n = {n} exceeds enumeration cap {cap}")
    return [u + SUFFIX for u in _prefixes(n)]


def enumerate_Sn_prime(n: int, cap: int = ENUMERATION_CAP) -> list[str]:
    if n > cap:
        raise ResourceError(f"n = {n} exceeds enumeration cap {cap}")
    return [u + SUFFIX for u in _prefixes(n, n // 2)]


def count_Sn(n: int) -> int:
    return 2 ** (n + 1) - 1


def count_Sn_prime(n: int) -> int:
    """sum_{l=k}^{n} C(l, k) = C(n+1, k+1) with k = floor(n/2)."""
    k = n // 2
    return comb(n + 1, k + 1)


def check_growth(n: int) -> bool:
    """|S'_n| >= 1.9**n, decided as count * 10**n >= 19**n."""
    return count_Sn_prime(n) * 10**n >= 19**n


def growth_threshold(max_n: int = 200) -> int | None:
    """Smallest n0 such that the growth bound holds for all n0 <= n <= max_n."""
    n0 = None
    for n in range(max_n, -1, -1):
        if check_growth(n):
            n0 = n
        else:
            break
    return n0


# --- exact parameter checks -----------------------------------------------------


def theta_bound_holds(theta, N: int) -> bool:
    """1 < theta < 1.9**(1/(8N))."""
    theta = rat(theta)
    return theta > 1 and theta ** (8 * N) < GROWTH


def condition_i_holds(diff, N: int, n: int) -> bool:
    """|diff| < 1 / (1.9**(1/(2N)))**n, i.e. |diff|**(2N) * 1.9**n < 1."""
    diff = abs(rat(diff))
    return diff ** (2 * N) * GROWTH**n < 1


def condition_ii_holds(p: SearchParams, n: int | None = None) -> bool:
    """M**(2m+4) * theta**(4n) / (1.9**(1/(2N)))**n < epsilon."""
    n = p.n if n is None else n
    N = p.grid_N
    lhs = p.M ** (2 * p.m + 4) * p.theta_N ** (4 * n)
    return lhs ** (2 * N) < p.epsilon ** (2 * N) * GROWTH**n


def threshold_upper_bound(N: int, n: int, bits: int = 64) -> Fraction:
    """A dyadic rational >= (10/19)**(n/(2N))."""
    k = 2 * N
    scale = bits * k
    num = 10**n << scale
    r = iroot_floor(num // 19**n, k)
    while Fraction(r, 1 << bits) ** k * 19**n < 10**n:
        r += 1
    return Fraction(r, 1 << bits)


def _moves_up_near_one(f: PLHomeo, delta: Fraction) -> bool:
    """f(x) > x on [1 - delta, 1)."""
    lo = 1 - delta
    if not evaluate(f, lo) > lo:
        return False
    census = fixed_point_census(f, (lo, 1))
    if census.isolated or census.intervals:
        return False
    return evaluate(f, 1) >= 1


def _right_slope(f: PLHomeo, x: Fraction) -> Fraction:
    i = 0
    while i < len(f.xs) and f.xs[i] <= x:
        i += 1
    return f.slopes()[i]


def validate_params(p: SearchParams, alpha: PLHomeo, beta: PLHomeo) -> dict:
    """Exact pass/fail for each parameter condition; failures are content."""
    J = (1 - p.delta, Fraction(1))
    checks = {}
    checks["theta_bound"] = theta_bound_holds(p.theta_N, p.grid_N)
    checks["lambda_in_(0,1)"] = 0 < p.lam < 1
    checks["slope_at_0_equals_lambda"] = (
        _right_slope(alpha, Fraction(0)) == p.lam and _right_slope(beta, Fraction(0)) == p.lam
    )
    ratios = {}
    ok = True
    for name, phi in (
        ("alpha", alpha),
        ("beta", beta),
        ("alpha^-1", inverse(alpha)),
        ("beta^-1", inverse(beta)),
    ):
        lo, hi = slope_range(phi, J)
        r8 = (hi / lo) ** 8
        ratios[name] = rat_str(r8)
        ok = ok and r8 < p.theta_N
    checks["slope_ratio"] = ok
    checks["moves_up_near_1"] = _moves_up_near_one(alpha, p.delta) and _moves_up_near_one(
        beta, p.delta
    )
    checks["condition_ii"] = condition_ii_holds(p)
    return {
        "params": p.to_json(),
        "checks": checks,
        "slope_ratio_pow8": ratios,
        "all_pass": all(checks.values()),
    }


# --- word maps -------------------------------------------------------------------


def word_maps(words: list[str], alpha: PLHomeo, beta: PLHomeo) -> dict[str, PLHomeo]:
    """Maps of all ``words``, sharing work across common prefixes."""
    gens = {"a": alpha, "b": beta, "A": inverse(alpha), "B": inverse(beta)}
    cache: dict[str, PLHomeo] = {"": PLHomeo.identity()}

    def get(w: str) -> PLHomeo:
        m = cache.get(w)
        if m is None:
            m = compose(get(w[:-1]), gens[w[-1]])
            cache[w] = m
        return m

    return {w: get(w) for w in words}


def entries(words: list[str], alpha: PLHomeo, beta: PLHomeo) -> list[WordSetEntry]:
    maps = word_maps(words, alpha, beta)
    out = []
    for w in words:
        ab = abelianization(w, "ab")
        out.append(WordSetEntry(w, maps[w], ab["a"], ab["b"]))
    return out


# --- pigeonhole search -----------------------------------------------------------


@dataclass
class SearchResult:
    n: int
    grid_N: int
    explored: int
    collision: bool
    words: tuple[str, str] | None = None
    grid_discrepancy: Fraction | None = None
    condition_i: bool = False
    h: PLHomeo | None = None
    c0_distance: Fraction | None = None
    audit: dict = field(default_factory=dict)
    threshold_upper: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "grid_N": self.grid_N,
            "explored": self.explored,
            "collision": self.collision,
            "words": list(self.words) if self.words else None,
            "grid_discrepancy": None
            if self.grid_discrepancy is None
            else rat_str(self.grid_discrepancy),
            "condition_i": self.condition_i,
            "threshold_upper_bound": None
            if self.threshold_upper is None
            else rat_str(self.threshold_upper),
            "h": None if self.h is None else self.h.to_json(),
            "c0_distance": None if self.c0_distance is None else rat_str(self.c0_distance),
            "commutator_audit": self.audit,
        }


def _linf(u, v) -> Fraction:
    return max(abs(a - b) for a, b in zip(u, v))


def _closest_pair(vectors: list[tuple]) -> tuple[int, int, Fraction] | None:
    """Closest pair in the sup norm; ties go to the pair that appears first
    in enumeration order (smallest later index, then smallest earlier)."""
    if len(vectors) < 2:
        return None
    order = sorted(range(len(vectors)), key=lambda i: (vectors[i][0], i))
    best = None
    best_rank = None
    for jj, j in enumerate(order):
        vj = vectors[j]
        for ii in range(jj - 1, -1, -1):
            i = order[ii]
            vi = vectors[i]
            if best is not None and vj[0] - vi[0] > best:
                break
            d = _linf(vi, vj)
            rank = (max(i, j), min(i, j))
            if best is None or d < best or (d == best and rank < best_rank):
                best, best_rank = d, rank
    lo, hi = best_rank[1], best_rank[0]
    return lo, hi, best


def _first_collision(vectors: list[tuple], N: int, n: int, cell: Fraction):
    """First pair (in enumeration order) meeting condition (i), via buckets
    of width ``cell`` >= threshold on the first coordinate."""
    buckets: dict[int, list[int]] = {}
    for j, v in enumerate(vectors):
        key = v[0] // cell
        for k in (key - 1, key, key + 1):
            for i in buckets.get(k, ()):
                d = _linf(vectors[i], v)
                if condition_i_holds(d, N, n):
                    return i, j, d
        buckets.setdefault(key, []).append(j)
    return None


def _sup_distance(f: PLHomeo, g: PLHomeo) -> Fraction:
    """Exact sup of |f - g| on [0, 1]."""
    cand = {Fraction(0), Fraction(1), *(x for x in f.xs if 0 < x < 1), *(x for x in g.xs if 0 < x < 1)}
    return max(abs(evaluate(f, y) - evaluate(g, y)) for y in cand)


def _best_pair(inverses: list[PLHomeo], vectors: list[tuple], grid: list, N: int, n: int):
    """Pair meeting condition (i) that minimizes the C0 distance of
    ``h = P1^-1 P2``, computed as sup |P1^-1 - P2^-1| on [0, 1].

    Values of the inverses on the grid give a lower bound that prunes a
    sweep sorted by the first grid value.  Ties go to the pair appearing
    first in enumeration order.
    """
    lower = [tuple(evaluate(q, y) for y in grid) for q in inverses]
    order = sorted(range(len(lower)), key=lambda i: (lower[i][0], i))
    best = None
    best_rank = None
    for jj, j in enumerate(order):
        for ii in range(jj - 1, -1, -1):
            i = order[ii]
            if best is not None and lower[j][0] - lower[i][0] > best:
                break
            if best is not None and _linf(lower[i], lower[j]) > best:
                continue
            if not condition_i_holds(_linf(vectors[i], vectors[j]), N, n):
                continue
            d = _sup_distance(inverses[i], inverses[j])
            rank = (max(i, j), min(i, j))
            if best is None or d < best or (d == best and rank < best_rank):
                best, best_rank = d, rank
    if best is None:
        return None
    lo, hi = best_rank[1], best_rank[0]
    return lo, hi, _linf(vectors[lo], vectors[hi])


def pigeonhole_search(
    alpha: PLHomeo,
    beta: PLHomeo,
    W: PLHomeo | None = None,
    n: int = 12,
    grid_N: int = 4,
    mode: str = "best",
    cap: int = ENUMERATION_CAP,
) -> SearchResult:
    """Search S'_n for two words whose images of the grid nearly agree.

    ``mode="best"`` returns, among pairs meeting condition (i), the one
    whose ``h`` is closest to the identity in C0 (``W`` must fix 0 and 1);
    ``mode="closest"`` returns the pair with the smallest grid discrepancy;
    ``mode="first"`` returns the first pair meeting condition (i).
    ``condition_i`` records whether the returned pair meets the threshold.
    """
    if W is None:
        W = PLHomeo.identity()
    if mode == "best" and (evaluate(W, Fraction(0)) != 0 or evaluate(W, Fraction(1)) != 1):
        raise ValueError("mode 'best' needs W to fix 0 and 1")
    words = enumerate_Sn_prime(n, cap)
    maps = word_maps(words, alpha, beta)
    grid = [Fraction(i, grid_N) for i in range(1, grid_N)] or [Fraction(1, 2)]
    wgrid = [evaluate(W, x) for x in grid]
    vectors = [tuple(evaluate(maps[w], y) for y in wgrid) for w in words]
    upper = threshold_upper_bound(grid_N, n)
    if mode == "best":
        inverses = [inverse(compose(maps[w], W)) for w in words]
        found = _best_pair(inverses, vectors, grid, grid_N, n)
    elif mode == "closest":
        found = _closest_pair(vectors)
    elif mode == "first":
        found = _first_collision(vectors, grid_N, n, upper)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    result = SearchResult(n, grid_N, len(words), False, threshold_upper=upper)
    if found is None:
        return result
    i, j, d = found
    w1, w2 = words[i], words[j]
    h1, h2 = compose(maps[w1], W), compose(maps[w2], W)
    h = compose(inverse(h1), h2)
    result.words = (w1, w2)
    result.grid_discrepancy = d
    result.condition_i = condition_i_holds(d, grid_N, n)
    result.collision = result.condition_i
    result.h = h
    result.c0_distance = c0_distance_to_identity(h, (0, 1))
    result.audit = commutator_membership_audit(w1, w2)
    return result


def contraction_audit(
    alpha: PLHomeo, beta: PLHomeo, n: int, J, lam, theta, cap: int = ENUMERATION_CAP
) -> dict:
    """Check |g(J)| < lam**n * theta**(n/8) for every g in S'_n, exactly
    (as |g(J)|**8 < lam**(8n) * theta**n)."""
    a, b = rat(J[0]), rat(J[1])
    lam, theta = rat(lam), rat(theta)
    bound8 = lam ** (8 * n) * theta**n
    words = enumerate_Sn_prime(n, cap)
    maps = word_maps(words, alpha, beta)
    failures = []
    worst = Fraction(0)
    for w in words:
        length = evaluate(maps[w], b) - evaluate(maps[w], a)
        worst = max(worst, length)
        if not length**8 < bound8:
            failures.append(w)
    return {
        "n": n,
        "words": len(words),
        "max_image_length": rat_str(worst),
        "failures": failures,
        "holds": not failures,
    }


def commutator_membership_audit(w1: str, w2: str) -> dict:
    """Abelianization of w1^-1 w2 over {a, b}; zero certifies membership
    in the commutator subgroup."""
    vec = abelianization(invert_word(w1) + w2, "ab")
    return {
        "vector": vec,
        "certified": all(v == 0 for v in vec.values()),
    }

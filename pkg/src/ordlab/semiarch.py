"""Archimedean-type properties of left-ordered groups.

Two checkers live here:

* ``check_P1_affine`` decides a single (P_1) instance in Aff+(R) exactly,
  using closed forms for powers of affine maps.
* ``check_PN_horizon`` evaluates a (P_N) instance in any group given by
  exact multiplication and comparison, up to a finite horizon.  Its
  "bounded" verdicts are semi-decisions.

In the affine order ``f < g`` iff ``f(0) < g(0)``, or ``f(0) = g(0)`` and
``f(1) < g(1)``, so a sequence of maps is bounded above exactly when its
offsets ``f_n(0)`` are.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .affine import AffineMap, affine_orbit_bounded, affine_power
from .arith import Cmp, cmp, rat_str
from .group import GENERATORS, GAMMA_LETTERS, IDENTITY, GroupElement, from_word, inverse, multiply
from .orders import compare_affine, compare_extension

__all__ = [
    "P1Verdict",
    "p1_hypotheses",
    "check_P1_affine",
    "random_p1_instance",
    "GroupAlgebra",
    "GAMMA",
    "INTEGERS",
    "AFFINE",
    "ALGEBRAS",
    "PNInstance",
    "PNVerdict",
    "check_PN_horizon",
    "HORIZON_CAP",
]

HORIZON_CAP = 100_000


class ResourceError(RuntimeError):
    pass


# --- (P_1) in Aff+(R) -------------------------------------------------------


def p1_hypotheses(g: AffineMap, delta: AffineMap, M: int) -> dict:
    """Exact check of the (P_1) hypotheses for (g, delta, M).

    (g^n) is increasing iff g > id; it is bounded iff the offsets g^n(0)
    are, which for a positive g happens exactly when a < 1 (limit c) or
    b = 0 (constant 0).  ``delta g^k > g^m`` for all k, m > M reduces to
    ``delta(g^(M+1)(0)) >= c`` in the first case and to ``delta(0) > 0``
    in the second.
    """
    increasing = compare_affine(g, AffineMap.IDENTITY) == Cmp.GREATER
    bounded = increasing and (g.a < 1 or g.b == 0)
    if not increasing:
        dominates = False
    elif g.b == 0:
        dominates = g.a > 1 and delta.b > 0
    elif g.a < 1:
        c = g.fixed_point()
        dominates = delta(affine_power(g, M + 1)(0)) >= c
    else:
        # g^m(0) is unbounded, so nothing dominates every g^m
        dominates = False
    return {
        "M_positive": M >= 1,
        "powers_increasing": increasing,
        "powers_bounded": bounded,
        "delta_dominates": dominates,
        "holds": M >= 1 and increasing and bounded and dominates,
    }


@dataclass(frozen=True)
class P1Verdict:
    """``status`` is "witnessed", "refuted" or "precondition_failed".

    For "witnessed", ``epsilon`` is the sign whose sequence
    ``g^(epsilon n) delta g^k`` is increasing and unbounded, and
    ``witness`` describes its offsets exactly.
    """

    status: str
    epsilon: int | None = None
    witness: dict = field(default_factory=dict)
    branches: dict = field(default_factory=dict)
    hypotheses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "epsilon": self.epsilon,
            "witness": self.witness,
            "branches": self.branches,
            "hypotheses": self.hypotheses,
        }


def _branch(g: AffineMap, x: AffineMap, eps: int) -> dict:
    step = g if eps == 1 else g.inverse()
    increasing = compare_affine(step * x, x) == Cmp.GREATER
    orbit = affine_orbit_bounded(step, x(0))
    return {
        "epsilon": eps,
        "increasing": increasing,
        "offset_start": rat_str(x(0)),
        "step": step.to_json(),
        **orbit.to_json(),
        "increasing_and_unbounded": increasing and not orbit.bounded,
    }


def check_P1_affine(g: AffineMap, delta: AffineMap, k: int, M: int) -> P1Verdict:
    """Decide whether ``g^n delta g^k`` or ``g^-n delta g^k`` (n >= 1) is
    increasing and unbounded, after checking the hypotheses for k >= M."""
    hyp = p1_hypotheses(g, delta, M)
    hyp["k_at_least_M"] = k >= M
    if not (hyp["holds"] and k >= M):
        return P1Verdict("precondition_failed", hypotheses=hyp)
    x = delta * affine_power(g, k)
    branches = {str(eps): _branch(g, x, eps) for eps in (1, -1)}
    for eps in (1, -1):
        br = branches[str(eps)]
        if br["increasing_and_unbounded"]:
            step = g if eps == 1 else g.inverse()
            terms = []
            y = x(0)
            for _ in range(3):
                y = step(y)
                terms.append(rat_str(y))
            witness = {
                "offset_formula": affine_power(step, 1).to_json(),
                "offset_start": rat_str(x(0)),
                "fixed_point": None if step.fixed_point() is None else rat_str(step.fixed_point()),
                "first_offsets": terms,
            }
            return P1Verdict("witnessed", eps, witness, branches, hyp)
    return P1Verdict("refuted", branches=branches, hypotheses=hyp)


def _rand_rat(rng: random.Random, lo: int, hi: int, den: int = 16) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_p1_instance(rng: random.Random) -> tuple[AffineMap, AffineMap, int, int]:
    """A random (g, delta, k, M) satisfying the (P_1) hypotheses, k >= M.

    Equality cases (``delta(g^(M+1)(0)) = c``) are produced on purpose.
    """
    M = rng.randint(1, 4)
    k = M + rng.choice([0, 0, 1, 1, 2, 5])
    a_delta = Fraction(rng.randint(1, 8), rng.randint(1, 8))
    if rng.random() < 0.5:
        g = AffineMap(Fraction(rng.randint(1, 7), 8), Fraction(rng.randint(1, 16), 8))
        c = g.fixed_point()
        base = affine_power(g, M + 1)(0)
        slack = Fraction(0) if rng.random() < 0.3 else _rand_rat(rng, 0, 4)
        delta = AffineMap(a_delta, c - a_delta * base + slack)
    else:
        g = AffineMap(Fraction(rng.randint(9, 40), 8), 0)
        delta = AffineMap(a_delta, Fraction(rng.randint(1, 32), 8))
    return g, delta, k, M


# --- (P_N) over a finite horizon ------------------------------------------------


@dataclass(frozen=True)
class GroupAlgebra:
    name: str
    multiply: Callable[[Any, Any], Any]
    inverse: Callable[[Any], Any]
    identity: Any
    compare: Callable[[Any, Any], Cmp]
    decode: Callable[[Any], Any]
    encode: Callable[[Any], Any]
    generators: tuple = ()

    def power(self, x, n: int):
        base = x if n >= 0 else self.inverse(x)
        out = self.identity
        for _ in range(abs(n)):
            out = self.multiply(out, base)
        return out

    def maximum(self, xs):
        best = None
        for x in xs:
            if best is None or self.compare(x, best) == Cmp.GREATER:
                best = x
        return best

    def ball(self, gens: Sequence, radius: int) -> list:
        gens = list(gens) + [self.inverse(x) for x in gens]
        seen = {self.identity}
        layer = [self.identity]
        out = [self.identity]
        for _ in range(radius):
            nxt = []
            for x in layer:
                for s in gens:
                    y = self.multiply(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            out.extend(nxt)
            layer = nxt
        return out


def _decode_gamma(obj):
    if isinstance(obj, str):
        return from_word(obj)
    return GroupElement.from_json(obj)


GAMMA = GroupAlgebra(
    "gamma",
    multiply,
    inverse,
    IDENTITY,
    lambda x, y: compare_extension(x, y, "t"),
    _decode_gamma,
    lambda x: x.to_json(),
    tuple(GENERATORS[c] for c in GAMMA_LETTERS if c.islower()),
)

INTEGERS = GroupAlgebra(
    "integers",
    lambda x, y: x + y,
    lambda x: -x,
    0,
    cmp,
    int,
    int,
    (1,),
)

AFFINE = GroupAlgebra(
    "affine",
    lambda f, g: f * g,
    lambda f: f.inverse(),
    AffineMap.IDENTITY,
    compare_affine,
    AffineMap.from_json,
    lambda f: f.to_json(),
)

ALGEBRAS = {alg.name: alg for alg in (GAMMA, INTEGERS, AFFINE)}


@dataclass
class PNInstance:
    """One concrete (P_N) instance.

    ``deltas``, ``signs`` and ``exponents`` have length ``max(N - 1, 0)``.
    ``candidates`` is the set an unbounded sequence must eventually
    exceed; when empty, the ball of radius ``bound_radius`` over the
    algebra's generators (or over g and the deltas) is used.
    """

    algebra: GroupAlgebra
    N: int
    g: Any
    deltas: list = field(default_factory=list)
    signs: list = field(default_factory=list)
    exponents: list = field(default_factory=list)
    M: int = 1
    horizon: int = 100
    bound_radius: int = 3
    candidates: list = field(default_factory=list)

    def __post_init__(self):
        need = max(self.N - 1, 0)
        if self.N < 0:
            raise ValueError("N must be >= 0")
        if not (len(self.deltas) == len(self.signs) == len(self.exponents) == need):
            raise ValueError(f"deltas, signs and exponents must each have length {need}")
        if any(e not in (-1, 1) for e in self.signs):
            raise ValueError("signs must be -1 or 1")
        if self.M < 1 or self.horizon < self.M:
            raise ValueError("need horizon >= M >= 1")

    @classmethod
    def from_json(cls, obj: dict) -> "PNInstance":
        alg = ALGEBRAS[obj.get("group", "gamma")]
        return cls(
            algebra=alg,
            N=int(obj["N"]),
            g=alg.decode(obj["g"]),
            deltas=[alg.decode(x) for x in obj.get("deltas", [])],
            signs=[int(e) for e in obj.get("signs", [])],
            exponents=[int(k) for k in obj.get("exponents", [])],
            M=int(obj.get("M", 1)),
            horizon=int(obj.get("horizon", 100)),
            bound_radius=int(obj.get("bound_radius", 3)),
            candidates=[alg.decode(x) for x in obj.get("candidates", [])],
        )

    def to_json(self) -> dict:
        enc = self.algebra.encode
        return {
            "group": self.algebra.name,
            "N": self.N,
            "g": enc(self.g),
            "deltas": [enc(x) for x in self.deltas],
            "signs": list(self.signs),
            "exponents": list(self.exponents),
            "M": self.M,
            "horizon": self.horizon,
            "bound_radius": self.bound_radius,
            "candidates": [enc(x) for x in self.candidates],
        }


@dataclass(frozen=True)
class PNVerdict:
    """``status`` is "unbounded_witness" (exact) or "bounded_at_horizon"
    (semi-decision: only the first ``horizon`` terms were seen)."""

    status: str
    epsilon: int | None
    n: int | None
    semi_decision: bool
    bound: Any
    hypotheses: dict
    encode: Callable = field(repr=False, compare=False, default=str)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "epsilon_N": self.epsilon,
            "n": self.n,
            "semi_decision": self.semi_decision,
            "bound": self.encode(self.bound),
            "hypotheses": self.hypotheses,
        }


def _first_exceeding(alg: GroupAlgebra, g, tail, eps: int, bound, horizon: int) -> int | None:
    step = g if eps == 1 else alg.inverse(g)
    x = tail
    for n in range(1, horizon + 1):
        x = alg.multiply(step, x)
        if alg.compare(x, bound) == Cmp.GREATER:
            return n
    return None


def check_PN_horizon(inst: PNInstance) -> PNVerdict:
    """Evaluate the instance's sequences ``g^(eps n) delta_{i-1} ... g^(eps_1 k_1)``
    for n = 1..horizon against the largest candidate bound."""
    if inst.horizon > HORIZON_CAP:
        raise ResourceError(f"horizon {inst.horizon} exceeds cap {HORIZON_CAP}")
    alg = inst.algebra
    cands = list(inst.candidates)
    if not cands:
        gens = alg.generators or (inst.g, *inst.deltas)
        cands = alg.ball(gens, inst.bound_radius)
    bound = alg.maximum(cands)

    # tails[i] = delta_i g^(eps_i k_i) ... delta_1 g^(eps_1 k_1)
    tails = [alg.identity]
    cond_i, cond_ii = [], []
    for i in range(1, max(inst.N - 1, 0) + 1):
        eps, k, delta = inst.signs[i - 1], inst.exponents[i - 1], inst.deltas[i - 1]
        prev = tails[-1]
        exceeded = _first_exceeding(alg, inst.g, prev, eps, bound, inst.horizon)
        cond_i.append({"i": i, "bounded_at_horizon": exceeded is None, "exceeded_at": exceeded})
        pushed = alg.multiply(alg.power(inst.g, eps * k), prev)
        nxt = alg.multiply(delta, pushed)
        cond_ii.append({"i": i, "holds": alg.compare(nxt, pushed) == Cmp.GREATER})
        tails.append(nxt)
    hyp = {
        "exponents_at_least_M": all(k >= inst.M for k in inst.exponents),
        "condition_i": cond_i,
        "condition_ii": cond_ii,
    }
    tail = tails[-1]
    signs = (1,) if inst.N == 0 else (1, -1)
    for eps in signs:
        n = _first_exceeding(alg, inst.g, tail, eps, bound, inst.horizon)
        if n is not None:
            return PNVerdict("unbounded_witness", eps, n, False, bound, hyp, alg.encode)
    return PNVerdict("bounded_at_horizon", None, None, True, bound, hyp, alg.encode)

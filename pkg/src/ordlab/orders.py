"""Left orders and randomized audits of the order axioms.

Orders implemented:

* ``dyadic``      natural order on (Z[1/2], +)
* ``zlex``        lexicographic order on Z^2, t-exponent dominant
* ``zlex-s``      lexicographic order on Z^2, s-exponent dominant
* ``extension``   the extension order on Gamma = Z^2 x| Z[1/2]: compare the
                  dyadic part first, break ties with ``zlex``
* ``extension-s`` same with ``zlex-s`` as tie-breaker
* ``affine``      on Aff+(R): compare values at 0, then at 1
* ``germ``        on PL maps fixing 0: sign of f - g just right of 0
* ``corrupt``     deliberately broken (compares |d|); used to test the audit
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .affine import AffineMap
from .arith import Cmp, Dyadic, cmp
from .group import GroupElement, IDENTITY, multiply
from .pl import PLHomeo, compose, evaluate

__all__ = [
    "OrderSpec",
    "ORDERS",
    "get_order",
    "compare_dyadic",
    "compare_zlex",
    "compare_extension",
    "compare_affine",
    "compare_germ",
    "audit_left_invariance",
    "audit_order_axioms",
    "audit_extension_lemma",
    "audit_action_preserves_order",
]


def compare_dyadic(a: Dyadic, b: Dyadic) -> Cmp:
    return cmp(a, b)


def compare_zlex(v1: tuple[int, int], v2: tuple[int, int], dominant: str = "t") -> Cmp:
    if dominant == "s":
        v1, v2 = (v1[1], v1[0]), (v2[1], v2[0])
    elif dominant != "t":
        raise ValueError("dominant must be 't' or 's'")
    return cmp(v1, v2)


def compare_extension(x: GroupElement, y: GroupElement, dominant: str = "t") -> Cmp:
    """(v1, d1) < (v2, d2) iff d1 < d2, or d1 == d2 and v1 <lex v2."""
    c = x.d._key_cmp(y.d)
    if c:
        return Cmp(c)
    return compare_zlex(x.v, y.v, dominant)


def extension_key(x: GroupElement, dominant: str = "t"):
    """Sort key realizing ``compare_extension``."""
    v = x.v if dominant == "t" else (x.s, x.t)
    return (x.d.to_fraction(), v)


def compare_affine(f: AffineMap, g: AffineMap) -> Cmp:
    c = cmp(f(0), g(0))
    if c:
        return c
    return cmp(f(1), g(1))


class DomainError(ValueError):
    pass


def compare_germ(f: PLHomeo, g: PLHomeo) -> Cmp:
    """Germ order at 0 on PL maps fixing 0, totalized by first difference.

    Maps that agree on a right neighbourhood of 0 are compared just right
    of the first point where they start to differ; if they agree on all of
    [0, inf), the same is done on the left, walking down from 0.  The
    result is ``EQUAL`` only for identical maps.
    """
    if evaluate(f, 0) != 0 or evaluate(g, 0) != 0:
        raise DomainError("germ order needs maps fixing 0")
    if f == g:
        return Cmp.EQUAL
    right = sorted({x for x in (*f.xs, *g.xs) if x > 0})
    for x in right:
        c = cmp(evaluate(f, x), evaluate(g, x))
        if c:
            return c
    c = cmp(f.rtail, g.rtail)
    if c:
        return c
    # f == g on [0, inf); compare on the way down
    left = sorted({x for x in (*f.xs, *g.xs) if x < 0}, reverse=True)
    for x in left:
        c = cmp(evaluate(f, x), evaluate(g, x))
        if c:
            return c
    # equal at every breakpoint <= 0: left tails differ; just left of the
    # last common point f - g has the sign of g.ltail - f.ltail
    return cmp(g.ltail, f.ltail)


# --- random samplers --------------------------------------------------------


def random_dyadic(rng: random.Random, bits: int = 20, spread: int = 12) -> Dyadic:
    return Dyadic(rng.randint(-(1 << bits), 1 << bits), rng.randint(-spread, spread))


def random_element(rng: random.Random, exp: int = 8, bits: int = 20) -> GroupElement:
    return GroupElement(rng.randint(-exp, exp), rng.randint(-exp, exp), random_dyadic(rng, bits))


def random_affine(rng: random.Random) -> AffineMap:
    a = Fraction(rng.randint(1, 12), rng.randint(1, 12))
    b = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
    return AffineMap(a, b)


_GERM_SLOPES = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
_GERM_RIGHT = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
_GERM_LEFT = [Fraction(-1, 2), Fraction(-1)]


def random_germ_map(rng: random.Random) -> PLHomeo:
    """Random PL map fixing 0, drawn from a coarse grid so that germs
    frequently coincide and the first-difference rule gets exercised."""
    right = sorted(rng.sample(_GERM_RIGHT, rng.randint(0, 3)))
    left = sorted(rng.sample(_GERM_LEFT, rng.randint(0, 2)), reverse=True)
    pts = [(Fraction(0), Fraction(0))]
    y = Fraction(0)
    prev = Fraction(0)
    for x in right:
        y += rng.choice(_GERM_SLOPES) * (x - prev)
        pts.append((x, y))
        prev = x
    y, prev = Fraction(0), Fraction(0)
    for x in left:
        y += rng.choice(_GERM_SLOPES) * (x - prev)
        pts.insert(0, (x, y))
        prev = x
    return PLHomeo(pts, rng.choice(_GERM_SLOPES), rng.choice(_GERM_SLOPES))


@dataclass(frozen=True)
class OrderSpec:
    """An order together with the group it lives on."""

    name: str
    compare: Callable[[Any, Any], Cmp]
    multiply: Callable[[Any, Any], Any]
    sample: Callable[[random.Random], Any]
    identity: Any
    encode: Callable[[Any], Any] = str
    bi_order: bool = False


def _corrupt_compare(x: GroupElement, y: GroupElement) -> Cmp:
    c = cmp(abs(x.d.to_fraction()), abs(y.d.to_fraction()))
    if c:
        return c
    c = cmp(x.d, y.d)
    if c:
        return c
    return compare_zlex(x.v, y.v)


def _add(a, b):
    return a + b


def _vadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _sample_v(rng):
    return (rng.randint(-50, 50), rng.randint(-50, 50))


ORDERS: dict[str, OrderSpec] = {
    "dyadic": OrderSpec("dyadic", compare_dyadic, _add, random_dyadic, Dyadic(0)),
    "zlex": OrderSpec("zlex", lambda u, v: compare_zlex(u, v, "t"), _vadd, _sample_v, (0, 0), list),
    "zlex-s": OrderSpec(
        "zlex-s", lambda u, v: compare_zlex(u, v, "s"), _vadd, _sample_v, (0, 0), list
    ),
    "extension": OrderSpec(
        "extension",
        lambda x, y: compare_extension(x, y, "t"),
        multiply,
        random_element,
        IDENTITY,
        GroupElement.to_json,
    ),
    "extension-s": OrderSpec(
        "extension-s",
        lambda x, y: compare_extension(x, y, "s"),
        multiply,
        random_element,
        IDENTITY,
        GroupElement.to_json,
    ),
    "affine": OrderSpec(
        "affine", compare_affine, AffineMap.__mul__, random_affine, AffineMap(1, 0), AffineMap.to_json
    ),
    "germ": OrderSpec(
        "germ",
        compare_germ,
        compose,
        random_germ_map,
        PLHomeo.identity(),
        PLHomeo.to_json,
        bi_order=True,
    ),
    "corrupt": OrderSpec(
        "corrupt", _corrupt_compare, multiply, random_element, IDENTITY, GroupElement.to_json
    ),
}


def get_order(name: str) -> OrderSpec:
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown order {name!r}; choose from {sorted(ORDERS)}") from None


# --- audits ------------------------------------------------------------------


def audit_left_invariance(
    spec: OrderSpec | str,
    samples: int,
    seed: int = 0,
    right: bool = False,
    max_report: int = 20,
) -> dict:
    """Check ``x < y  =>  a*x < a*y`` on random triples.

    With ``right=True`` right invariance ``x*a < y*a`` is audited as well
    (meaningful for bi-orders).  Returns a JSON-ready report; violations
    are report content, not exceptions.
    """
    if isinstance(spec, str):
        spec = get_order(spec)
    rng = random.Random(seed)
    violations = []
    n_violations = 0
    checked = 0
    for _ in range(samples):
        a, x, y = spec.sample(rng), spec.sample(rng), spec.sample(rng)
        c = spec.compare(x, y)
        if c == Cmp.EQUAL:
            continue
        if c == Cmp.GREATER:
            x, y = y, x
        checked += 1
        bad = []
        if spec.compare(spec.multiply(a, x), spec.multiply(a, y)) != Cmp.LESS:
            bad.append("left")
        if right and spec.compare(spec.multiply(x, a), spec.multiply(y, a)) != Cmp.LESS:
            bad.append("right")
        if bad:
            n_violations += 1
            if len(violations) < max_report:
                violations.append(
                    {"side": bad, "a": spec.encode(a), "x": spec.encode(x), "y": spec.encode(y)}
                )
    return {
        "order": spec.name,
        "samples": samples,
        "checked": checked,
        "seed": seed,
        "violation_count": n_violations,
        "violations": violations,
    }


def audit_order_axioms(spec: OrderSpec | str, samples: int, seed: int = 0) -> dict:
    """Antisymmetry, reflexivity and transitivity on random triples."""
    if isinstance(spec, str):
        spec = get_order(spec)
    rng = random.Random(seed)
    failures = {"reflexive": 0, "antisymmetric": 0, "transitive": 0}
    for _ in range(samples):
        x, y, z = spec.sample(rng), spec.sample(rng), spec.sample(rng)
        if spec.compare(x, x) != Cmp.EQUAL:
            failures["reflexive"] += 1
        cxy, cyx = spec.compare(x, y), spec.compare(y, x)
        if cxy != -cyx or ((cxy == Cmp.EQUAL) != (x == y)):
            failures["antisymmetric"] += 1
        cyz = spec.compare(y, z)
        if cxy == cyz and cxy != Cmp.EQUAL and spec.compare(x, z) != cxy:
            failures["transitive"] += 1
    return {"order": spec.name, "samples": samples, "seed": seed, "failures": failures}


def audit_extension_lemma(samples: int, seed: int = 0, dominant: str = "t") -> dict:
    """Conditions 1)-3) for the extension of zlex and the dyadic order.

    1) factor Z^2 embeds as an ordered subgroup,
    2) factor Z[1/2] embeds as an ordered subgroup,
    3) every (g1, 1) with g1 != 1 lies below every (1, g2) with g2 > 0.
    """
    rng = random.Random(seed)
    counts = {"cond1": 0, "cond2": 0, "cond3": 0}
    for _ in range(samples):
        u, w = _sample_v(rng), _sample_v(rng)
        if compare_extension(GroupElement(*u), GroupElement(*w), dominant) != compare_zlex(
            u, w, dominant
        ):
            counts["cond1"] += 1
        d1, d2 = random_dyadic(rng), random_dyadic(rng)
        if compare_extension(GroupElement(0, 0, d1), GroupElement(0, 0, d2), dominant) != cmp(
            d1, d2
        ):
            counts["cond2"] += 1
        if u != (0, 0):
            pos = Dyadic(abs(d1.mantissa) or 1, d1.exponent)
            if compare_extension(GroupElement(*u), GroupElement(0, 0, pos), dominant) != Cmp.LESS:
                counts["cond3"] += 1
    return {"samples": samples, "seed": seed, "violations": counts}


def audit_action_preserves_order(samples: int, seed: int = 0) -> int:
    """Doubling by 2**(i+j) preserves the order on Z[1/2]; returns violations."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        d1, d2 = random_dyadic(rng), random_dyadic(rng)
        if d1 == d2:
            continue
        if d2 < d1:
            d1, d2 = d2, d1
        k = rng.randint(-40, 40)
        if not d1.shift(k) < d2.shift(k):
            bad += 1
    return bad

"""Crossed pairs of interval homeomorphisms and free-semigroup evidence.

A pair (f, g) is crossed on (a, b) if one map fixes a and b and nothing in
between, while the other maps a or b into (a, b).  Such a pair generates a
group containing a free semigroup of rank two; this module finds and
builds such pairs and checks positive-word distinctness up to a length.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .arith import rat_str
from .pl import PLHomeo, compose, evaluate, fixed_point_census, inverse

__all__ = [
    "CrossedPairWitness",
    "Inconclusive",
    "fixed_set",
    "gaps",
    "detect_crossed",
    "verify_witness",
    "construct_crossed",
    "positive_word_distinctness",
    "DEFAULT_CONJUGATION_CAP",
    "WORD_LENGTH_CAP",
]

DEFAULT_CONJUGATION_CAP = 64
WORD_LENGTH_CAP = 16

_ZERO, _ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class CrossedPairWitness:
    """``pair[fixer]`` fixes a and b only; ``pair[mover]`` maps
    ``endpoint`` ('a' or 'b') into (a, b)."""

    pair: tuple[PLHomeo, PLHomeo]
    interval: tuple[Fraction, Fraction]
    fixer: int
    mover: int
    endpoint: str
    labels: tuple[str, str] = ("f", "g")
    notes: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        a, b = self.interval
        return {
            "pair": [self.pair[0].to_json(), self.pair[1].to_json()],
            "labels": list(self.labels),
            "interval": [rat_str(a), rat_str(b)],
            "fixer": self.labels[self.fixer],
            "mover": self.labels[self.mover],
            "moved_endpoint": self.endpoint,
            **self.notes,
        }


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"inconclusive": self.reason, **self.details}


def fixed_set(f: PLHomeo, lo=_ZERO, hi=_ONE):
    """Fixed points and fixed intervals of ``f`` inside the closed ``[lo, hi]``."""
    c = fixed_point_census(f, (lo, hi))
    pts = list(c.isolated)
    for p in (lo, hi):
        if evaluate(f, p) == p and not any(a <= p <= b for a, b in c.intervals):
            pts.append(p)
    return sorted(pts), list(c.intervals)


def gaps(f: PLHomeo, lo=_ZERO, hi=_ONE) -> list[tuple[Fraction, Fraction]]:
    """Components (a, b) of ``[lo, hi] \\ Fix(f)`` whose closure lies in [lo, hi]
    with ``a`` and ``b`` both fixed."""
    pts, ivs = fixed_set(f, lo, hi)
    marks = sorted([(p, p) for p in pts] + [(a, b) for a, b in ivs])
    out = []
    for (_, right), (left, _) in zip(marks, marks[1:]):
        if right < left:
            out.append((right, left))
    return out


def _check(fixer: PLHomeo, mover: PLHomeo, a, b) -> str | None:
    ga, gb = evaluate(mover, a), evaluate(mover, b)
    if a < ga < b:
        return "a"
    if a < gb < b:
        return "b"
    return None


def detect_crossed(f: PLHomeo, g: PLHomeo, labels=("f", "g")) -> CrossedPairWitness | None:
    """Exhaustive scan over the gaps of Fix(f) and Fix(g) in [0, 1]."""
    pair = (f, g)
    for fixer, mover in ((0, 1), (1, 0)):
        for a, b in gaps(pair[fixer]):
            end = _check(pair[fixer], pair[mover], a, b)
            if end is not None:
                return CrossedPairWitness(pair, (a, b), fixer, mover, end, tuple(labels))
    return None


def verify_witness(w: CrossedPairWitness) -> bool:
    a, b = w.interval
    fixer, mover = w.pair[w.fixer], w.pair[w.mover]
    if evaluate(fixer, a) != a or evaluate(fixer, b) != b:
        return False
    census = fixed_point_census(fixer, (a, b))
    if census.isolated or census.intervals:
        return False
    x = a if w.endpoint == "a" else b
    return a < evaluate(mover, x) < b


def _find_base_point(f: PLHomeo, g: PLHomeo):
    """A point of (0, 1) fixed by f and moved by g, or None."""
    pts, ivs = fixed_set(f)
    for p in pts:
        if _ZERO < p < _ONE and evaluate(g, p) != p:
            return p
    for a, b in ivs:
        a, b = max(a, _ZERO), min(b, _ONE)
        inner = sorted({a, b, *(x for x in g.xs if a < x < b)})
        cand = list(inner) + [(u + v) / 2 for u, v in zip(inner, inner[1:])]
        for p in sorted(cand):
            if _ZERO < p < _ONE and evaluate(g, p) != p:
                return p
    return None


def construct_crossed(
    f: PLHomeo, g: PLHomeo, cap: int = DEFAULT_CONJUGATION_CAP
) -> CrossedPairWitness | Inconclusive:
    """Build a crossed pair inside <f, g> following the classical argument.

    1. pick p in (0, 1) with f(p) = p != g(p);
    2. let lo < p < hi be the nearest fixed points of g around p;
    3. if f moves lo or hi, (f, g) or (f^-1, g) is crossed on (lo, hi);
    4. otherwise orient g upward on (lo, hi), let q_lo (q_hi) be the
       smallest (largest) fixed point of f above lo (below hi), find n with
       g^n(q_lo) > q_hi, and one of (g^n f g^-n, f), (g^n f^-1 g^-n, f) is
       crossed on (q_hi, hi).
    """
    p = _find_base_point(f, g)
    if p is None:
        return Inconclusive("no point of (0,1) fixed by f and moved by g")
    gpts, givs = fixed_set(g)
    below = [x for x in gpts if x < p] + [b for a, b in givs if b < p]
    above = [x for x in gpts if x > p] + [a for a, b in givs if a > p]
    if not below or not above:
        return Inconclusive("g has no fixed points bracketing p", {"p": rat_str(p)})
    lo, hi = max(below), min(above)
    notes = {"p": rat_str(p), "lo": rat_str(lo), "hi": rat_str(hi)}
    finv = inverse(f)

    if evaluate(f, lo) != lo or evaluate(f, hi) != hi:
        notes["branch"] = "direct"
        for cand, lab in ((f, "f"), (finv, "f^-1")):
            end = _check(g, cand, lo, hi)
            if end is not None:
                return CrossedPairWitness((cand, g), (lo, hi), 1, 0, end, (lab, "g"), notes)
        for cand, lab in ((f, "f"), (finv, "f^-1")):
            w = detect_crossed(cand, g, (lab, "g"))
            if w is not None:
                return _with_notes(w, notes)
        return Inconclusive("direct branch failed to verify", notes)

    mid = (lo + hi) / 2
    gg = g if evaluate(g, mid) > mid else inverse(g)
    g_label = "g" if gg is g else "g^-1"
    fpts, fivs = fixed_set(f, lo, hi)
    marks = sorted([(x, x) for x in fpts] + [(a, b) for a, b in fivs])
    # a fixed interval starting at lo (ending at hi) counts by its far end
    q_lo = min(right for left, right in marks if right > lo)
    q_hi = max(left for left, right in marks if left < hi)
    notes.update({"q_lo": rat_str(q_lo), "q_hi": rat_str(q_hi), "g_oriented": g_label})
    ginv = inverse(gg)
    gn, gn_inv = PLHomeo.identity(), PLHomeo.identity()
    for n in range(1, cap + 1):
        gn, gn_inv = compose(gg, gn), compose(gn_inv, ginv)
        if not evaluate(gn, q_lo) > q_hi:
            continue
        info = {**notes, "branch": "conjugation", "n": n}
        conjugates = []
        for inner, lab in ((f, "f"), (finv, "f^-1")):
            conj = compose(gn, compose(inner, gn_inv))
            conjugates.append((conj, f"{g_label}^{n} {lab} {g_label}^-{n}"))
        if q_hi < hi and not any(a <= q_hi < b for a, b in fivs):
            for conj, label in conjugates:
                end = _check(f, conj, q_hi, hi)
                if end is not None:
                    return CrossedPairWitness((conj, f), (q_hi, hi), 1, 0, end, (label, "f"), info)
        for conj, label in conjugates:
            w = detect_crossed(conj, f, (label, "f"))
            if w is not None:
                return _with_notes(w, info)
    return Inconclusive(f"no crossed conjugate found for n <= {cap}", notes)


def _with_notes(w: CrossedPairWitness, notes: dict) -> CrossedPairWitness:
    return CrossedPairWitness(w.pair, w.interval, w.fixer, w.mover, w.endpoint, w.labels, notes)


def positive_word_distinctness(
    f: PLHomeo, g: PLHomeo, max_len: int, cap: int = WORD_LENGTH_CAP, letters=("a", "b")
) -> dict:
    """Compose every positive word of length 1..max_len in f, g and test
    pairwise distinctness exactly.

    Words are read left to right as compositions (``"ab"`` is f o g).
    ``distinct_up_to`` is the largest length L such that all words of
    length <= L are distinct maps.
    """
    if max_len > cap:
        raise ValueError(f"max_len {max_len} exceeds cap {cap}")
    gens = {letters[0]: f, letters[1]: g}
    seen: dict[PLHomeo, str] = {}
    layer = [("", PLHomeo.identity())]
    total = 0
    for length in range(1, max_len + 1):
        nxt = []
        for word, m in layer:
            for c in letters:
                w = word + c
                mm = compose(m, gens[c])
                total += 1
                prev = seen.get(mm)
                if prev is not None:
                    return {
                        "distinct": False,
                        "max_len": max_len,
                        "distinct_up_to": length - 1,
                        "words_checked": total,
                        "counterexample": [prev, w],
                    }
                seen[mm] = w
                nxt.append((w, mm))
        layer = nxt
    return {
        "distinct": True,
        "max_len": max_len,
        "distinct_up_to": max_len,
        "words_checked": total,
        "counterexample": None,
    }


def positive_words(max_len: int, letters=("a", "b")):
    """All positive words of length 1..max_len in shortlex order."""
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            yield "".join(tup)

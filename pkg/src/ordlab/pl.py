"""Exact piecewise-linear orientation-preserving homeomorphisms of the line.

A map is a finite list of points ``(x_i, y_i)`` with both coordinates
strictly increasing, linear interpolation between consecutive points and
affine tails of positive slope outside ``[x_0, x_k]``.  Maps of ``[0, 1]``
are maps of the line that fix 0 and 1 and have slope-1 tails.

The canonical form drops every point where the incoming and outgoing
slopes agree (an affine map keeps the single point over ``x = 0``), so two
maps are equal as functions iff their canonical data are equal.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import rat, rat_str

__all__ = [
    "PLHomeo",
    "FixedPointCensus",
    "evaluate",
    "compose",
    "inverse",
    "power",
    "c0_distance_to_identity",
    "fixed_point_census",
    "slope_range",
    "interval_map",
    "compose_word",
    "points_from_pairs",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PLHomeo:
    __slots__ = ("xs", "ys", "ltail", "rtail", "_key")

    def __init__(self, points: Iterable[tuple], ltail=1, rtail=1, *, _trusted: bool = False):
        if _trusted:
            xs, ys = points
        else:
            pts = [(rat(x), rat(y)) for x, y in points]
            xs = [p[0] for p in pts]
            ys = [p[1] for p in pts]
            ltail, rtail = rat(ltail), rat(rtail)
            if ltail <= 0 or rtail <= 0:
                raise ValueError("tail slopes must be positive")
            for i in range(1, len(xs)):
                if not xs[i - 1] < xs[i]:
                    raise ValueError("breakpoints must be strictly increasing")
                if not ys[i - 1] < ys[i]:
                    raise ValueError("values must be strictly increasing")
            if not xs:
                if ltail != rtail:
                    raise ValueError("a map without points must be affine")
                xs, ys = [_ZERO], [_ZERO]
        xs, ys, ltail, rtail = _canonical(list(xs), list(ys), ltail, rtail)
        object.__setattr__(self, "xs", tuple(xs))
        object.__setattr__(self, "ys", tuple(ys))
        object.__setattr__(self, "ltail", ltail)
        object.__setattr__(self, "rtail", rtail)
        object.__setattr__(self, "_key", (self.xs, self.ys, ltail, rtail))

    def __setattr__(self, name, value):
        raise AttributeError("PLHomeo is immutable")

    def __reduce__(self):
        return (_rebuild, (self.xs, self.ys, self.ltail, self.rtail))

    @classmethod
    def identity(cls) -> "PLHomeo":
        return cls([(0, 0)])

    @classmethod
    def affine(cls, slope, offset) -> "PLHomeo":
        slope = rat(slope)
        return cls([(0, rat(offset))], slope, slope)

    def __eq__(self, other):
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        pts = ", ".join(f"({rat_str(x)}, {rat_str(y)})" for x, y in zip(self.xs, self.ys))
        return f"PLHomeo([{pts}], ltail={rat_str(self.ltail)}, rtail={rat_str(self.rtail)})"

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __matmul__(self, other: "PLHomeo") -> "PLHomeo":
        return compose(self, other)

    @property
    def points(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.xs, self.ys))

    def slopes(self) -> list[Fraction]:
        """Slopes of all pieces, left tail first and right tail last."""
        inner = [
            (self.ys[i + 1] - self.ys[i]) / (self.xs[i + 1] - self.xs[i])
            for i in range(len(self.xs) - 1)
        ]
        return [self.ltail, *inner, self.rtail]

    def is_identity(self) -> bool:
        return self._key == _IDENTITY_KEY

    def inverse(self) -> "PLHomeo":
        return inverse(self)

    def to_json(self) -> dict:
        return {
            "breaks": [[rat_str(x), rat_str(y)] for x, y in zip(self.xs, self.ys)],
            "ltail": rat_str(self.ltail),
            "rtail": rat_str(self.rtail),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PLHomeo":
        return cls(
            [(str(x), str(y)) for x, y in obj["breaks"]],
            str(obj.get("ltail", "1")),
            str(obj.get("rtail", "1")),
        )


def _rebuild(xs, ys, ltail, rtail) -> PLHomeo:
    return PLHomeo((list(xs), list(ys)), ltail, rtail, _trusted=True)


def _canonical(xs, ys, ltail, rtail):
    n = len(xs)
    if n == 1:
        if ltail == rtail and xs[0] != 0:
            y0 = ys[0] - ltail * xs[0]
            return [_ZERO], [y0], ltail, rtail
        return xs, ys, ltail, rtail
    slopes = [ltail]
    for i in range(n - 1):
        slopes.append((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]))
    slopes.append(rtail)
    keep_x, keep_y = [], []
    for i in range(n):
        if slopes[i] != slopes[i + 1]:
            keep_x.append(xs[i])
            keep_y.append(ys[i])
    if not keep_x:
        return _canonical([xs[0]], [ys[0]], ltail, rtail)
    return keep_x, keep_y, ltail, rtail


_IDENTITY_KEY = ((_ZERO,), (_ZERO,), _ONE, _ONE)


def interval_map(points: Iterable[tuple]) -> PLHomeo:
    """A homeomorphism of [0, 1] given by its breakpoints.

    0 -> 0 and 1 -> 1 are added if missing; tails have slope 1.
    """
    pts = [(rat(x), rat(y)) for x, y in points]
    if not pts or pts[0][0] != 0:
        pts.insert(0, (_ZERO, _ZERO))
    if pts[-1][0] != 1:
        pts.append((_ONE, _ONE))
    if pts[0][1] != 0 or pts[-1][1] != 1:
        raise ValueError("an interval map must fix 0 and 1")
    return PLHomeo(pts, 1, 1)


def evaluate(f: PLHomeo, x) -> Fraction:
    x = rat(x)
    xs, ys = f.xs, f.ys
    if x <= xs[0]:
        return ys[0] + f.ltail * (x - xs[0])
    if x >= xs[-1]:
        return ys[-1] + f.rtail * (x - xs[-1])
    i = bisect.bisect_right(xs, x) - 1
    if xs[i] == x:
        return ys[i]
    return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i])


def inverse(f: PLHomeo) -> PLHomeo:
    return PLHomeo((f.ys, f.xs), 1 / f.ltail, 1 / f.rtail, _trusted=True)


def compose(f: PLHomeo, g: PLHomeo) -> PLHomeo:
    """The map ``x -> f(g(x))``."""
    ginv = inverse(g)
    cand = set(g.xs)
    cand.update(evaluate(ginv, y) for y in f.xs)
    xs = sorted(cand)
    ys = [evaluate(f, evaluate(g, x)) for x in xs]
    return PLHomeo((xs, ys), f.ltail * g.ltail, f.rtail * g.rtail, _trusted=True)


def power(f: PLHomeo, n: int) -> PLHomeo:
    if n < 0:
        f, n = inverse(f), -n
    result = PLHomeo.identity()
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def compose_word(word: str, maps: dict[str, PLHomeo]) -> PLHomeo:
    """Compose a word left to right: ``"ab"`` is ``a o b`` (b acts first).

    Upper-case letters denote inverses of the lower-case maps.
    """
    result = PLHomeo.identity()
    for c in word:
        if c in maps:
            m = maps[c]
        else:
            m = inverse(maps[c.lower()])
        result = compose(result, m)
    return result


def c0_distance_to_identity(f: PLHomeo, domain=(0, 1)) -> Fraction:
    """Exact ``sup |f(x) - x|`` over the closed interval ``domain``.

    ``f - id`` is piecewise linear, so the sup is attained at a breakpoint
    inside the domain or at a domain endpoint.
    """
    lo, hi = rat(domain[0]), rat(domain[1])
    if lo > hi:
        raise ValueError("empty domain")
    cand = [lo, hi, *(x for x in f.xs if lo < x < hi)]
    return max(abs(evaluate(f, x) - x) for x in cand)


@dataclass(frozen=True)
class FixedPointCensus:
    """Fixed points of a PL map restricted to an open domain ``(lo, hi)``.

    ``intervals`` are maximal pointwise-fixed closed intervals clipped to
    the closure of the domain; ``None`` endpoints stand for +-infinity.
    """

    isolated: tuple[Fraction, ...]
    intervals: tuple[tuple[Fraction | None, Fraction | None], ...]
    domain: tuple[Fraction | None, Fraction | None] = (None, None)

    def count_in(self, a=None, b=None) -> int:
        a = None if a is None else rat(a)
        b = None if b is None else rat(b)
        return sum(1 for p in self.isolated if (a is None or a < p) and (b is None or p < b))

    @property
    def finite(self) -> bool:
        return not self.intervals

    def to_json(self) -> dict:
        def end(v):
            return None if v is None else rat_str(v)

        return {
            "isolated": [rat_str(p) for p in self.isolated],
            "intervals": [[end(a), end(b)] for a, b in self.intervals],
        }


def _lt(a, b) -> bool:
    """a < b where None on the left means -inf and on the right +inf."""
    return a is None or b is None or a < b


def fixed_point_census(f: PLHomeo, domain=(None, None)) -> FixedPointCensus:
    xs, ys = f.xs, f.ys
    disp = [y - x for x, y in zip(xs, ys)]
    points: list[Fraction] = []
    intervals: list[list] = []

    # left tail: D(x) = disp0 + (ltail - 1)(x - x0) on (-inf, x0]
    if f.ltail == 1:
        if disp[0] == 0:
            intervals.append([None, xs[0]])
    else:
        r = xs[0] - disp[0] / (f.ltail - 1)
        if r < xs[0]:
            points.append(r)
    for i in range(len(xs)):
        if disp[i] == 0:
            points.append(xs[i])
        if i + 1 < len(xs):
            d0, d1 = disp[i], disp[i + 1]
            if d0 == 0 and d1 == 0:
                intervals.append([xs[i], xs[i + 1]])
            elif (d0 < 0 < d1) or (d1 < 0 < d0):
                points.append(xs[i] + d0 * (xs[i + 1] - xs[i]) / (d0 - d1))
    if f.rtail == 1:
        if disp[-1] == 0:
            intervals.append([xs[-1], None])
    else:
        r = xs[-1] - disp[-1] / (f.rtail - 1)
        if r > xs[-1]:
            points.append(r)

    merged: list[list] = []
    for iv in intervals:
        if merged and merged[-1][1] is not None and iv[0] is not None and merged[-1][1] >= iv[0]:
            merged[-1][1] = iv[1]
        else:
            merged.append(list(iv))

    def in_interval(p):
        return any((a is None or a <= p) and (b is None or p <= b) for a, b in merged)

    lo = None if domain[0] is None else rat(domain[0])
    hi = None if domain[1] is None else rat(domain[1])
    iso = sorted({p for p in points if not in_interval(p)})
    iso = [p for p in iso if (lo is None or lo < p) and (hi is None or p < hi)]
    clipped = []
    for a, b in merged:
        ca = lo if a is None or (lo is not None and a < lo) else a
        cb = hi if b is None or (hi is not None and b > hi) else b
        if _lt(ca, cb):
            clipped.append((ca, cb))
    return FixedPointCensus(tuple(iso), tuple(clipped), (lo, hi))


def slope_range(f: PLHomeo, J) -> tuple[Fraction, Fraction]:
    """Min and max slope over the pieces of ``f`` meeting ``J = [lo, hi]``.

    For a degenerate ``J`` the pieces on both sides of the point count.
    """
    lo, hi = rat(J[0]), rat(J[1])
    if lo > hi:
        raise ValueError("empty interval")
    xs = f.xs
    slopes = f.slopes()
    # piece k spans (bounds[k], bounds[k+1]) with bounds = (-inf, *xs, +inf)
    picked = []
    for k, m in enumerate(slopes):
        left = xs[k - 1] if k >= 1 else None
        right = xs[k] if k < len(xs) else None
        if lo < hi:
            meets = (left is None or left < hi) and (right is None or lo < right)
        else:
            meets = (left is None or left <= lo) and (right is None or lo <= right)
        if meets:
            picked.append(m)
    return min(picked), max(picked)


def points_from_pairs(pairs: Sequence[tuple]) -> PLHomeo:
    """Interpolating PL map through ``pairs`` with slope-1 tails."""
    pts = sorted((rat(x), rat(y)) for x, y in pairs)
    return PLHomeo(pts, 1, 1)

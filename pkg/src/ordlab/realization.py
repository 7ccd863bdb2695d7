"""Dynamical realization of a left-ordered group from a finite ball.

Elements are enumerated in shortlex order and placed on the line one at a
time: a new maximum goes to ``max + 1``, a new minimum to ``min - 1``, and
anything else to the midpoint of its two order-neighbours among the
already placed elements.  Each group element ``g`` is then realized as the
PL map through the points ``(coord(h), coord(g*h))``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .arith import Cmp, rat_str
from .group import GAMMA_LETTERS, GENERATORS, IDENTITY, GroupElement, multiply
from .orders import compare_extension
from .pl import PLHomeo, fixed_point_census

__all__ = [
    "BallSpec",
    "RealizationState",
    "ResourceError",
    "InsufficientData",
    "enumerate_ball",
    "assign_coordinates",
    "assign_cyclic_coordinates",
    "realize_element",
    "fixed_point_survey",
    "realize_gamma",
]

BALL_CAP = 12


class ResourceError(RuntimeError):
    pass


class InsufficientData(ValueError):
    pass


@dataclass(frozen=True)
class BallSpec:
    radius: int
    letters: str = GAMMA_LETTERS
    cap: int = BALL_CAP

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        bad = set(self.letters) - set(GENERATORS)
        if bad:
            raise ValueError(f"unknown generators {sorted(bad)}")


def enumerate_ball(spec: BallSpec | int) -> list[GroupElement]:
    """Distinct elements of word length <= radius, in shortlex order of
    their minimal words (letters ordered as in ``spec.letters``)."""
    if isinstance(spec, int):
        spec = BallSpec(spec)
    if spec.radius > spec.cap:
        raise ResourceError(f"ball radius {spec.radius} exceeds cap {spec.cap}")
    gens = [GENERATORS[c] for c in spec.letters]
    seen = {IDENTITY}
    out = [IDENTITY]
    layer = [IDENTITY]
    for _ in range(spec.radius):
        nxt = []
        for x in layer:
            for gen in gens:
                y = multiply(x, gen)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        out.extend(nxt)
        layer = nxt
    return out


@dataclass
class RealizationState:
    elements: list
    coord: dict
    order: str = "extension"
    # elements sorted by the group order, and their (increasing) coordinates
    sorted_elements: list = field(default_factory=list, repr=False)
    sorted_coords: list = field(default_factory=list, repr=False)
    multiply: Callable = field(default=multiply, repr=False)

    def hull(self) -> tuple[Fraction, Fraction]:
        return self.sorted_coords[0], self.sorted_coords[-1]

    def coverage(self) -> dict:
        """Summary of how the finite orbit fills its hull."""
        cs = self.sorted_coords
        gaps = [b - a for a, b in zip(cs, cs[1:])]
        return {
            "points": len(cs),
            "hull": [rat_str(cs[0]), rat_str(cs[-1])],
            "max_gap": rat_str(max(gaps)) if gaps else "0",
            "min_gap": rat_str(min(gaps)) if gaps else "0",
        }


def assign_coordinates(
    elements: Sequence,
    compare: Callable[[object, object], Cmp] | None = None,
    order: str = "extension",
    mul: Callable = multiply,
) -> RealizationState:
    """Place ``elements`` (first one the identity) on the line.

    Coordinates depend only on the input sequence and the order.
    """
    if compare is None:
        dominant = "s" if order.endswith("-s") else "t"
        compare = lambda x, y: compare_extension(x, y, dominant)  # noqa: E731
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate elements in input")
    if not elements:
        raise ValueError("need at least the identity")
    placed = [elements[0]]
    coords = [Fraction(0)]
    coord = {elements[0]: Fraction(0)}
    for g in elements[1:]:
        lo, hi = 0, len(placed)
        while lo < hi:
            mid = (lo + hi) // 2
            if compare(placed[mid], g) == Cmp.LESS:
                lo = mid + 1
            else:
                hi = mid
        i = lo
        if i == len(placed):
            c = coords[-1] + 1
        elif i == 0:
            c = coords[0] - 1
        else:
            c = (coords[i - 1] + coords[i]) / 2
        placed.insert(i, g)
        coords.insert(i, c)
        coord[g] = c
    return RealizationState(list(elements), coord, order, placed, coords, mul)


def assign_cyclic_coordinates(exponents: Sequence[int]) -> dict[int, Fraction]:
    """Cyclic case: a least positive element exists and ``g**n`` sits at n."""
    return {n: Fraction(n) for n in exponents}


def realize_element(state: RealizationState, g) -> PLHomeo:
    """PL map through ``(coord(h), coord(g h))`` for all enumerated h with
    g h enumerated; slope-1 tails outside."""
    coord = state.coord
    mul = state.multiply
    pairs = []
    for h, x in zip(state.sorted_elements, state.sorted_coords):
        y = coord.get(mul(g, h))
        if y is not None:
            pairs.append((x, y))
    if len(pairs) < 2:
        raise InsufficientData(f"only {len(pairs)} interpolation point(s) for {g!r}")
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    for a, b in zip(ys, ys[1:]):
        if not a.numerator * b.denominator < b.numerator * a.denominator:
            raise AssertionError("realized map not monotone: order is not left-invariant")
    return PLHomeo((xs, ys), Fraction(1), Fraction(1), _trusted=True)


_WORKER_STATE: RealizationState | None = None


def _init_worker(state: RealizationState) -> None:
    global _WORKER_STATE
    _WORKER_STATE = state


def _census_one(g, state: RealizationState | None = None):
    state = _WORKER_STATE if state is None else state
    lo, hi = state.hull()
    try:
        f = realize_element(state, g)
    except InsufficientData:
        return None
    return fixed_point_census(f, (lo, hi))


def fixed_point_survey(
    state: RealizationState,
    elements: Sequence | None = None,
    workers: int = 1,
) -> dict:
    """Interior fixed points of realized maps, restricted to the open hull.

    ``elements`` defaults to every enumerated non-identity element.  The
    report is independent of ``workers``.
    """
    if elements is None:
        elements = state.elements
    elements = [g for g in elements if g != IDENTITY]
    if workers > 1 and len(elements) > 1:
        chunk = max(1, len(elements) // (4 * workers))
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(state,)) as ex:
            results = list(ex.map(_census_one, elements, chunksize=chunk))
    else:
        results = [_census_one(g, state) for g in elements]
    max_count = 0
    argmax = None
    histogram: dict[int, int] = {}
    fixed_intervals = []
    skipped = 0
    for g, census in zip(elements, results):
        if census is None:
            skipped += 1
            continue
        n = len(census.isolated)
        histogram[n] = histogram.get(n, 0) + 1
        if census.intervals:
            fixed_intervals.append({"element": _encode(g), "intervals": census.to_json()["intervals"]})
        if n > max_count or argmax is None:
            max_count, argmax = n, g
    return {
        "surveyed": len(elements) - skipped,
        "skipped_insufficient_data": skipped,
        "max_isolated": max_count if argmax is not None else None,
        "argmax": None if argmax is None else _encode(argmax),
        "histogram": {str(k): histogram[k] for k in sorted(histogram)},
        "fixed_intervals": fixed_intervals,
        "coverage": state.coverage(),
    }


def _encode(g):
    return g.to_json() if isinstance(g, GroupElement) else str(g)


def realize_gamma(radius: int, order: str = "extension") -> RealizationState:
    return assign_coordinates(enumerate_ball(radius), order=order)

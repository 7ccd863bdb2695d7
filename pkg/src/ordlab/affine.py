"""Orientation-preserving affine maps ``x -> a*x + b`` with exact closed forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import rat, rat_str

__all__ = ["AffineMap", "affine_power", "Boundedness", "affine_orbit_bounded"]


@dataclass(frozen=True)
class AffineMap:
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if self.a <= 0:
            raise ValueError("slope must be positive")

    def __call__(self, x) -> Fraction:
        return self.a * rat(x) + self.b

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        # (f * g)(x) = f(g(x))
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> "AffineMap":
        return AffineMap(1 / self.a, -self.b / self.a)

    def fixed_point(self) -> Fraction | None:
        if self.a == 1:
            return None
        return self.b / (1 - self.a)

    def to_json(self) -> dict:
        return {"a": rat_str(self.a), "b": rat_str(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineMap":
        return cls(rat(str(obj["a"])), rat(str(obj.get("b", "0"))))


AffineMap.IDENTITY = AffineMap(1, 0)


def affine_power(f: AffineMap, n: int) -> AffineMap:
    """``f**n`` in closed form; negative ``n`` allowed."""
    an = f.a**n
    if f.a == 1:
        return AffineMap(1, n * f.b)
    return AffineMap(an, f.b * (an - 1) / (f.a - 1))


@dataclass(frozen=True)
class Boundedness:
    """Verdict for the real sequence ``f**n(x0)``, ``n >= 1``.

    When bounded above, ``bound`` is the exact supremum.
    """

    bounded: bool
    bound: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "bounded_above": self.bounded,
            "sup": None if self.bound is None else rat_str(self.bound),
        }


def affine_orbit_bounded(f: AffineMap, x0) -> Boundedness:
    x0 = rat(x0)
    a, b = f.a, f.b
    first = f(x0)
    if a == 1:
        return Boundedness(True, first) if b <= 0 else Boundedness(False)
    c = b / (1 - a)
    if x0 == c:
        return Boundedness(True, c)
    if a < 1:
        # monotone convergence to c
        return Boundedness(True, first if x0 > c else c)
    # a > 1: repelled from c
    return Boundedness(False) if x0 > c else Boundedness(True, first)

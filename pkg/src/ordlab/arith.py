"""Exact scalars: rationals (``fractions.Fraction``) and dyadic rationals.

Nothing in the core pipelines touches floating point.  Rationals are the
stdlib ``Fraction`` (always reduced, positive denominator); dyadic
rationals ``m * 2**e`` are kept with an odd mantissa so that equality and
hashing are structural.
"""
from __future__ import annotations

import enum
from fractions import Fraction

__all__ = [
    "Cmp",
    "Dyadic",
    "cmp",
    "rat_compare",
    "rat",
    "rat_str",
    "parse_rat",
    "dy_add",
    "dy_scale_pow2",
    "dyadic_add_shifted",
    "iroot_floor",
]


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def cmp(a, b) -> Cmp:
    """Three-way comparison of any two totally ordered values."""
    if a < b:
        return Cmp.LESS
    if b < a:
        return Cmp.GREATER
    return Cmp.EQUAL


def rat_compare(a: Fraction, b: Fraction) -> Cmp:
    return cmp(Fraction(a), Fraction(b))


def rat(x) -> Fraction:
    """Coerce ints, ``Fraction``, ``Dyadic`` or "p/q" strings to ``Fraction``.

    Floats are rejected on purpose.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Dyadic):
        return x.to_fraction()
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_str(q: Fraction) -> str:
    """Serialize as "p/q" (or "p" for integers)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if "*2^" in s:
        return Dyadic.parse(s).to_fraction()
    if any(c in s for c in ".eE"):
        raise ValueError(f"decimal/float literal not accepted: {s!r}")
    return Fraction(s)


def _trailing_zeros(m: int) -> int:
    return (m & -m).bit_length() - 1


class Dyadic:
    """The dyadic rational ``mantissa * 2**exponent``.

    Canonical form: the mantissa is odd, or the value is zero and then
    ``exponent == 0``.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int = 0, exponent: int = 0):
        if mantissa == 0:
            exponent = 0
        else:
            tz = _trailing_zeros(mantissa)
            if tz:
                mantissa >>= tz
                exponent += tz
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.mantissa, self.exponent))

    @classmethod
    def from_fraction(cls, q) -> "Dyadic":
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, -(den.bit_length() - 1))

    @classmethod
    def parse(cls, s: str) -> "Dyadic":
        s = s.strip()
        if "*2^" in s:
            m, e = s.split("*2^")
            return cls(int(m), int(e))
        return cls.from_fraction(Fraction(s))

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __str__(self):
        return f"{self.mantissa}*2^{self.exponent}"

    def __repr__(self):
        return f"Dyadic({self.mantissa}, {self.exponent})"

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        return NotImplemented

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __bool__(self):
        return self.mantissa != 0

    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def __neg__(self):
        return Dyadic(-self.mantissa, self.exponent)

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        if not self.mantissa:
            return other
        if not other.mantissa:
            return self
        e = min(self.exponent, other.exponent)
        m = (self.mantissa << (self.exponent - e)) + (other.mantissa << (other.exponent - e))
        return Dyadic(m, e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        return self + (-other)

    def shift(self, k: int) -> "Dyadic":
        """Multiply by ``2**k``."""
        if not self.mantissa or not k:
            return self
        return _canonical_dyadic(self.mantissa, self.exponent + k)

    def _key_cmp(self, other: "Dyadic") -> int:
        sa, sb = self.sign(), other.sign()
        if sa != sb:
            return (sa > sb) - (sa < sb)
        e = min(self.exponent, other.exponent)
        a = self.mantissa << (self.exponent - e)
        b = other.mantissa << (other.exponent - e)
        return (a > b) - (a < b)

    def __lt__(self, other):
        if not isinstance(other, Dyadic):
            return self.to_fraction() < other
        return self._key_cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, Dyadic):
            return self.to_fraction() <= other
        return self._key_cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, Dyadic):
            return self.to_fraction() > other
        return self._key_cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, Dyadic):
            return self.to_fraction() >= other
        return self._key_cmp(other) >= 0


def dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def dy_scale_pow2(a: Dyadic, k: int) -> Dyadic:
    return a.shift(k)


def iroot_floor(n: int, k: int) -> int:
    """Largest integer r >= 0 with r**k <= n (n >= 0, k >= 1)."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n < 2:
        return n
    hi = 1 << (n.bit_length() // k + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


_set_mantissa = Dyadic.mantissa.__set__
_set_exponent = Dyadic.exponent.__set__


def _canonical_dyadic(mantissa: int, exponent: int) -> Dyadic:
    # caller guarantees an odd mantissa
    d = object.__new__(Dyadic)
    _set_mantissa(d, mantissa)
    _set_exponent(d, exponent)
    return d


def dyadic_add_shifted(x: Dyadic, y: Dyadic, k: int) -> Dyadic:
    """``x + y * 2**k``."""
    ym = y.mantissa
    if not ym:
        return x
    ye = y.exponent + k
    xm = x.mantissa
    if not xm:
        return _canonical_dyadic(ym, ye)
    xe = x.exponent
    if xe < ye:
        m, e = xm + (ym << (ye - xe)), xe
    elif ye < xe:
        m, e = (xm << (xe - ye)) + ym, ye
    else:
        m, e = xm + ym, xe
    if not m:
        return _ZERO_DYADIC
    tz = (m & -m).bit_length() - 1
    return _canonical_dyadic(m >> tz, e + tz) if tz else _canonical_dyadic(m, e)


_ZERO_DYADIC = Dyadic(0)

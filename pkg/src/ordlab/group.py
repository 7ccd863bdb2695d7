"""Normal forms for Gamma = <t, s, b | t b t^-1 = b^2, s b s^-1 = b^2, [t, s] = 1>.

Gamma is the semidirect product Z^2 x| Z[1/2], with both t and s acting on
the dyadic rationals by doubling.  An element is stored as ``(t, s, d)``:
the exponents of t and s plus the dyadic coordinate ``d``.  Multiplication
is

    (v1, d1) * (v2, d2) = (v1 + v2, d1 + 2**(t1 + s1) * d2)

so ``b = (0, 0, 1)`` and ``t = (1, 0, 0)``.

Words over Gamma are strings in the letters ``t s b T S B`` (upper case is
the inverse).  The same word helpers handle the two-letter alphabet
``a b A B`` used by the smallness search.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable

from .arith import Dyadic, dyadic_add_shifted

__all__ = [
    "GroupElement",
    "IDENTITY",
    "GENERATORS",
    "GAMMA_LETTERS",
    "AlphabetError",
    "multiply",
    "inverse",
    "from_word",
    "power",
    "abelianization",
    "invert_word",
]


class AlphabetError(ValueError):
    """A word contains a letter outside its declared alphabet."""


class GroupElement:
    __slots__ = ("t", "s", "d", "_hash")

    def __init__(self, t: int = 0, s: int = 0, d: Dyadic | int = Dyadic(0)):
        if type(d) is not Dyadic:
            d = Dyadic(d)
        _set_t(self, t)
        _set_s(self, s)
        _set_d(self, d)
        _set_hash(self, hash((t, s, d.mantissa, d.exponent)))

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def __reduce__(self):
        return (GroupElement, (self.t, self.s, self.d))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.t == other.t and self.s == other.s and self.d == other.d

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroupElement(t={self.t}, s={self.s}, d={self.d})"

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    @property
    def v(self) -> tuple[int, int]:
        return (self.t, self.s)

    def is_identity(self) -> bool:
        return self.t == 0 and self.s == 0 and not self.d

    def to_json(self) -> dict:
        return {"t": self.t, "s": self.s, "d": str(self.d)}

    @classmethod
    def from_json(cls, obj: dict) -> "GroupElement":
        return cls(int(obj["t"]), int(obj["s"]), Dyadic.parse(str(obj["d"])))


_set_t = GroupElement.t.__set__
_set_s = GroupElement.s.__set__
_set_d = GroupElement.d.__set__
_set_hash = GroupElement._hash.__set__

IDENTITY = GroupElement()

GENERATORS = {
    "t": GroupElement(1, 0, 0),
    "s": GroupElement(0, 1, 0),
    "b": GroupElement(0, 0, 1),
    "T": GroupElement(-1, 0, 0),
    "S": GroupElement(0, -1, 0),
    "B": GroupElement(0, 0, -1),
}

GAMMA_LETTERS = "tsbTSB"


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    return GroupElement(x.t + y.t, x.s + y.s, dyadic_add_shifted(x.d, y.d, x.t + x.s))


def inverse(x: GroupElement) -> GroupElement:
    return GroupElement(-x.t, -x.s, -x.d.shift(-(x.t + x.s)))


def power(x: GroupElement, n: int) -> GroupElement:
    if n < 0:
        x, n = inverse(x), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = multiply(result, x)
        x = multiply(x, x)
        n >>= 1
    return result


def from_word(word: str) -> GroupElement:
    """Evaluate a word over ``t s b T S B`` left to right.

    Whitespace is ignored; the Unicode superscript form ``⁻¹`` after a
    letter is accepted as an inverse marker.
    """
    g = IDENTITY
    for letter in _letters(word):
        try:
            gen = GENERATORS[letter]
        except KeyError:
            raise AlphabetError(f"letter {letter!r} not in alphabet {GAMMA_LETTERS!r}") from None
        g = multiply(g, gen)
    return g


def _letters(word: str) -> list[str]:
    word = word.replace(" ", "")
    out: list[str] = []
    i = 0
    while i < len(word):
        c = word[i]
        if word.startswith("⁻¹", i + 1):
            out.append(c.swapcase())
            i += 3
        else:
            out.append(c)
            i += 1
    return out


def invert_word(word: str) -> str:
    return "".join(c.swapcase() for c in reversed(_letters(word)))


def abelianization(word: str, generators: Iterable[str] | None = None) -> dict[str, int]:
    """Signed exponent sum of each generator in ``word``.

    Lower-case letters count +1, upper-case -1.  ``generators`` fixes the
    keys of the result (so that absent generators show up as 0).
    """
    counts: Counter[str] = Counter()
    for c in _letters(word):
        if c.islower():
            counts[c] += 1
        else:
            counts[c.lower()] -= 1
    keys = list(generators) if generators is not None else sorted(counts)
    extra = set(counts) - set(keys)
    if extra:
        raise AlphabetError(f"letters {sorted(extra)} not among generators {keys}")
    return {k: counts.get(k, 0) for k in keys}

"""Independent reference implementations used to cross-check the package.

Nothing here imports the code under test except for plain data types.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb


# --- group: faithful enough model as (t, s, affine map x -> 2**(t+s) x + d) ----


def gamma_word_oracle(word: str) -> tuple[int, int, Fraction]:
    """Multiply generator images as affine maps of R (t, s: x -> 2x, b: x -> x+1),
    tracking the t and s exponents separately."""
    t = s = 0
    scale, shift = Fraction(1), Fraction(0)
    images = {
        "t": (1, 0, Fraction(2), Fraction(0)),
        "s": (0, 1, Fraction(2), Fraction(0)),
        "b": (0, 0, Fraction(1), Fraction(1)),
        "T": (-1, 0, Fraction(1, 2), Fraction(0)),
        "S": (0, -1, Fraction(1, 2), Fraction(0)),
        "B": (0, 0, Fraction(1), Fraction(-1)),
    }
    for c in word:
        dt, ds, a, b = images[c]
        # (scale, shift) o (a, b): x -> scale*(a x + b) + shift
        shift = scale * b + shift
        scale = scale * a
        t, s = t + dt, s + ds
    assert scale == Fraction(2) ** (t + s)
    return t, s, shift


def gamma_mul_oracle(x, y):
    """(t, s, d) triples multiplied as affine maps."""
    t1, s1, d1 = x
    t2, s2, d2 = y
    return t1 + t2, s1 + s2, d1 + Fraction(2) ** (t1 + s1) * d2


def extension_key_oracle(t: int, s: int, d: Fraction, dominant: str = "t"):
    return (d, t, s) if dominant == "t" else (d, s, t)


# --- PL maps --------------------------------------------------------------------


def pl_eval_oracle(points, ltail, rtail, x: Fraction) -> Fraction:
    """Linear interpolation by scanning the raw point list."""
    pts = sorted(points)
    if x <= pts[0][0]:
        return pts[0][1] + ltail * (x - pts[0][0])
    if x >= pts[-1][0]:
        return pts[-1][1] + rtail * (x - pts[-1][0])
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("unreachable")


def fixed_point_counts_oracle(points, ltail, rtail, lo: Fraction, hi: Fraction):
    """Sign scan of f(x) - x over the breakpoints in (lo, hi).

    Returns (isolated_count, has_fixed_interval) for the open interval
    (lo, hi), assuming lo < hi are finite.
    """
    xs = sorted({lo, hi, *(x for x, _ in points if lo < x < hi)})
    D = [pl_eval_oracle(points, ltail, rtail, x) - x for x in xs]
    isolated = 0
    interval = False
    for i in range(len(xs) - 1):
        a, b = D[i], D[i + 1]
        if a == 0 and b == 0:
            interval = True
        elif (a < 0 < b) or (b < 0 < a):
            isolated += 1
    # zeros at interior breakpoints not inside a fixed segment
    for i in range(1, len(xs) - 1):
        if D[i] == 0 and D[i - 1] != 0 and D[i + 1] != 0:
            isolated += 1
    return isolated, interval


def c0_grid_oracle(f_eval, lo: Fraction, hi: Fraction, steps: int) -> Fraction:
    return max(abs(f_eval(lo + (hi - lo) * Fraction(i, steps)) - (lo + (hi - lo) * Fraction(i, steps))) for i in range(steps + 1))


# --- word sets --------------------------------------------------------------------


def sn_prime_bruteforce(n: int) -> list[str]:
    out = []
    for length in range(n + 1):
        for tup in product("ab", repeat=length):
            if tup.count("a") == n // 2:
                out.append("".join(tup) + "ba")
    return out


def sn_prime_count_oracle(n: int) -> int:
    k = n // 2
    return sum(comb(m, k) for m in range(k, n + 1))


def word_eval_oracle(word: str, maps: dict, x: Fraction) -> Fraction:
    """Apply the letters right to left (the word is a left-to-right composition)."""
    for c in reversed(word):
        x = maps[c](x)
    return x


# --- affine iteration ---------------------------------------------------------------


def iterate_offsets(a: Fraction, b: Fraction, y0: Fraction, steps: int) -> list[Fraction]:
    """y_{n} = a * y_{n-1} + b for n = 1..steps."""
    out = []
    y = y0
    for _ in range(steps):
        y = a * y + b
        out.append(y)
    return out


def p1_iteration_verdict(g, delta, k: int, steps: int = 1000):
    """Which branch eps in (1, -1) looks increasing and unbounded after
    ``steps`` iterations of the maps themselves (no closed forms).

    Returns a dict eps -> (increasing, looks_unbounded, values) where
    ``increasing`` compares consecutive maps in the affine order exactly.
    """
    # X = delta o g^k by repeated composition
    xa, xb = Fraction(1), Fraction(0)
    for _ in range(k):
        xa, xb = xa * g.a, xa * g.b + xb
    xa, xb = delta.a * xa, delta.a * xb + delta.b
    out = {}
    for eps in (1, -1):
        sa, sb = (g.a, g.b) if eps == 1 else (1 / g.a, -g.b / g.a)
        ca, cb = xa, xb
        prev = (cb, ca + cb)  # (f(0), f(1)) of the current map
        increasing = True
        offsets = []
        for _ in range(steps):
            ca, cb = sa * ca, sa * cb + sb
            cur = (cb, ca + cb)
            if not cur > prev:
                increasing = False
            prev = cur
            offsets.append(cb)
        out[eps] = (increasing, offsets)
    return out

"""Bundled PL maps of [0, 1] used by the CLI defaults, tests and scripts."""
from __future__ import annotations

from fractions import Fraction as F

from .pl import PLHomeo, interval_map


def contracting_pair() -> tuple[PLHomeo, PLHomeo]:
    """(alpha, beta): slope 1/2 at 0, slope 1/4 on [3/4, 1], each with one
    interior fixed point (9/20 and 7/24).  beta fixes 0 and 7/24 only on
    [0, 7/24] while alpha(7/24) = 37/192, so the pair is crossed."""
    alpha = interval_map([(F(1, 4), F(1, 8)), (F(3, 4), F(15, 16))])
    beta = interval_map([(F(1, 8), F(1, 16)), (F(5, 8), F(3, 4)), (F(3, 4), F(15, 16))])
    return alpha, beta


def thompson_pair() -> tuple[PLHomeo, PLHomeo]:
    """The standard generators x0, x1 of Thompson's group F."""
    x0 = interval_map([(F(1, 2), F(1, 4)), (F(3, 4), F(1, 2))])
    x1 = interval_map([(F(1, 2), F(1, 2)), (F(3, 4), F(5, 8)), (F(7, 8), F(3, 4))])
    return x0, x1


def direct_branch_pair() -> tuple[PLHomeo, PLHomeo]:
    """f fixes 0, 1/2, 1; g fixes 0, 1/4, 3/4, 1 and f moves 1/4 and 3/4."""
    f = interval_map([(F(1, 4), F(3, 8)), (F(1, 2), F(1, 2)), (F(3, 4), F(5, 8))])
    g = interval_map(
        [(F(1, 8), F(3, 16)), (F(1, 4), F(1, 4)), (F(1, 2), F(5, 8)), (F(3, 4), F(3, 4)), (F(7, 8), F(13, 16))]
    )
    return f, g


def conjugation_branch_pair() -> tuple[PLHomeo, PLHomeo]:
    """f fixes 0, 1/8, 1/2, 7/8, 1; g has no interior fixed point and
    g^n(1/8) = 3/8, 3/4, 15/16 for n = 1, 2, 3, so n = 3 is the first
    exponent with g^n(1/8) > 7/8."""
    f = interval_map(
        [
            (F(1, 16), F(1, 32)),
            (F(1, 8), F(1, 8)),
            (F(1, 4), F(3, 8)),
            (F(1, 2), F(1, 2)),
            (F(3, 4), F(5, 8)),
            (F(7, 8), F(7, 8)),
            (F(15, 16), F(31, 32)),
        ]
    )
    g = interval_map([(F(1, 8), F(3, 8)), (F(3, 8), F(3, 4)), (F(3, 4), F(15, 16))])
    return f, g


def commuting_pair() -> tuple[PLHomeo, PLHomeo]:
    """h and h^2 for h with fixed points 0, 1/2, 1."""
    h = interval_map([(F(1, 4), F(3, 8)), (F(1, 2), F(1, 2)), (F(3, 4), F(7, 8))])
    return h, h @ h


FIXTURES = {
    "contracting": contracting_pair,
    "thompson": thompson_pair,
    "direct": direct_branch_pair,
    "conjugation": conjugation_branch_pair,
    "commuting": commuting_pair,
}

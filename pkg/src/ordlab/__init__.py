"""Exact computations with left-ordered groups acting on the line."""
from .affine import AffineMap, affine_orbit_bounded, affine_power
from .arith import Cmp, Dyadic, dy_add, dy_scale_pow2, rat_compare
from .group import GroupElement, abelianization, from_word, inverse, multiply
from .pl import PLHomeo, c0_distance_to_identity, compose, evaluate, fixed_point_census, slope_range

__version__ = "0.1.0"

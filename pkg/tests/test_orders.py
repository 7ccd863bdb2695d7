import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordlab.affine import AffineMap
from ordlab.arith import Cmp, Dyadic
from ordlab.group import GroupElement
from ordlab.orders import (
    ORDERS,
    DomainError,
    audit_action_preserves_order,
    audit_extension_lemma,
    audit_left_invariance,
    audit_order_axioms,
    compare_affine,
    compare_extension,
    compare_germ,
    compare_zlex,
)
from ordlab.pl import PLHomeo

from oracles import extension_key_oracle

elements = st.builds(
    GroupElement,
    st.integers(-9, 9),
    st.integers(-9, 9),
    st.builds(Dyadic, st.integers(-64, 64), st.integers(-6, 6)),
)


def test_extension_examples():
    t = GroupElement(1, 0, 0)
    assert compare_extension(t, GroupElement(0, 0, Dyadic(1, -1))) == Cmp.LESS
    assert compare_extension(GroupElement(1, 0, 0), GroupElement(2, 0, 0)) == Cmp.LESS
    x = GroupElement(3, -2, Dyadic(5, -2))
    assert compare_extension(x, x) == Cmp.EQUAL


def test_zlex_variants_differ():
    assert compare_zlex((1, 0), (0, 5), "t") == Cmp.GREATER
    assert compare_zlex((1, 0), (0, 5), "s") == Cmp.LESS


def test_affine_examples():
    assert compare_affine(AffineMap(1, 1), AffineMap(1, 2)) == Cmp.LESS
    assert compare_affine(AffineMap(2, 0), AffineMap(3, 0)) == Cmp.LESS
    assert compare_affine(AffineMap(F(1, 3), 2), AffineMap(F(1, 3), 2)) == Cmp.EQUAL


def test_germ_examples():
    f = PLHomeo([(0, 0), (1, F(1, 2))], 1, F(1, 2))
    g = PLHomeo([(0, 0), (1, 2)], 1, 2)
    assert compare_germ(f, g) == Cmp.LESS
    assert compare_germ(f, f) == Cmp.EQUAL
    # equal on [0, 1/4], then f below g on (1/4, 1/2)
    f2 = PLHomeo([(0, 0), (F(1, 4), F(1, 4)), (F(1, 2), F(3, 8))], 1, 1)
    g2 = PLHomeo([(0, 0), (F(1, 4), F(1, 4)), (F(1, 2), F(1, 2))], 1, 1)
    assert compare_germ(f2, g2) == Cmp.LESS
    assert compare_germ(g2, f2) == Cmp.GREATER
    with pytest.raises(DomainError):
        compare_germ(PLHomeo.affine(1, 1), f)


@given(elements, elements)
def test_extension_matches_key_oracle(x, y):
    for dom in ("t", "s"):
        kx = extension_key_oracle(x.t, x.s, x.d.to_fraction(), dom)
        ky = extension_key_oracle(y.t, y.s, y.d.to_fraction(), dom)
        expected = Cmp.LESS if kx < ky else Cmp.GREATER if kx > ky else Cmp.EQUAL
        assert compare_extension(x, y, dom) == expected


@pytest.mark.parametrize("name", ["dyadic", "zlex", "zlex-s", "extension", "extension-s", "affine", "germ"])
def test_left_invariance_audit_clean(name):
    samples = 10_000 if name != "germ" else 3_000
    report = audit_left_invariance(name, samples, seed=1, right=ORDERS[name].bi_order)
    assert report["violation_count"] == 0 and report["checked"] > samples // 2


@pytest.mark.parametrize("name", ["dyadic", "zlex", "extension", "extension-s", "affine", "germ"])
def test_order_axioms(name):
    samples = 10_000 if name != "germ" else 3_000
    assert audit_order_axioms(name, samples, seed=2)["failures"] == {
        "reflexive": 0,
        "antisymmetric": 0,
        "transitive": 0,
    }


def test_corrupted_order_is_caught():
    report = audit_left_invariance("corrupt", 10_000, seed=0)
    assert report["violation_count"] >= 1 and report["violations"]


def test_extension_lemma_and_action():
    for dom in ("t", "s"):
        lemma = audit_extension_lemma(10_000, seed=5, dominant=dom)
        assert lemma["violations"] == {"cond1": 0, "cond2": 0, "cond3": 0}
    assert audit_action_preserves_order(10_000, seed=5) == 0


def test_germ_is_bi_invariant_on_fixed_samples():
    rng = random.Random(9)
    spec = ORDERS["germ"]
    for _ in range(500):
        a, x, y = (spec.sample(rng) for _ in range(3))
        c = compare_germ(x, y)
        assert compare_germ(spec.multiply(a, x), spec.multiply(a, y)) == c
        assert compare_germ(spec.multiply(x, a), spec.multiply(y, a)) == c

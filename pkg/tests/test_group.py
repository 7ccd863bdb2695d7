import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordlab.arith import Dyadic
from ordlab.group import (
    GENERATORS,
    IDENTITY,
    AlphabetError,
    GroupElement,
    abelianization,
    from_word,
    inverse,
    invert_word,
    multiply,
    power,
)

from oracles import gamma_mul_oracle, gamma_word_oracle

words = st.text(alphabet="tsbTSB", max_size=12)
elements = st.builds(
    GroupElement,
    st.integers(-20, 20),
    st.integers(-20, 20),
    st.builds(Dyadic, st.integers(-(2**40), 2**40), st.integers(-30, 30)),
)


def triple(g):
    return g.t, g.s, g.d.to_fraction()


def test_relators_are_trivial():
    assert from_word("tbTBB") == IDENTITY
    assert from_word("sbSBB") == IDENTITY
    assert from_word("tsTS") == IDENTITY
    assert from_word("tbt⁻¹b⁻¹b⁻¹") == IDENTITY


def test_multiply_examples():
    assert from_word("tbT") == GroupElement(0, 0, 2)
    x = GroupElement(3, -1, Dyadic(5, -3))
    assert multiply(x, IDENTITY) == x and multiply(IDENTITY, x) == x
    assert from_word("ts") * GENERATORS["b"] == GroupElement(1, 1, 4)


def test_inverse_examples():
    assert inverse(GENERATORS["b"]) == GroupElement(0, 0, -1)
    assert inverse(GENERATORS["t"]) == GroupElement(-1, 0, 0)
    x = GroupElement(1, 1, Dyadic(3, -2))
    assert multiply(x, inverse(x)) == IDENTITY


def test_empty_and_bad_words():
    assert from_word("") == IDENTITY
    with pytest.raises(AlphabetError):
        from_word("tx")


def test_abelianization_examples():
    assert abelianization("ααβα⁻¹", "αβ") == {"α": 1, "β": 1}
    assert abelianization("tbTBB", "tsb") == {"t": 0, "s": 0, "b": -1}
    assert abelianization("", "ab") == {"a": 0, "b": 0}


@given(words)
def test_from_word_matches_affine_model(w):
    assert triple(from_word(w)) == gamma_word_oracle(w)


@given(elements, elements)
def test_multiply_matches_oracle(x, y):
    assert triple(multiply(x, y)) == gamma_mul_oracle(triple(x), triple(y))


@given(elements, elements, elements)
def test_associativity(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(words, words)
def test_from_word_is_homomorphism(u, v):
    assert from_word(u + v) == multiply(from_word(u), from_word(v))
    assert from_word(invert_word(u)) == inverse(from_word(u))


@given(words, words)
def test_abelianization_additive(u, v):
    a, b, ab = abelianization(u, "tsb"), abelianization(v, "tsb"), abelianization(u + v, "tsb")
    assert all(ab[k] == a[k] + b[k] for k in "tsb")


def test_inverse_bulk():
    rng = random.Random(3)
    for _ in range(10_000):
        x = GroupElement(rng.randint(-30, 30), rng.randint(-30, 30), Dyadic(rng.randint(-(2**30), 2**30), rng.randint(-20, 20)))
        assert multiply(x, inverse(x)) == IDENTITY
        assert inverse(inverse(x)) == x


def test_power():
    b = GENERATORS["b"]
    assert power(b, 5) == GroupElement(0, 0, 5)
    assert power(GENERATORS["t"], -3) == GroupElement(-3, 0, 0)
    assert triple(power(from_word("tb"), 3)) == gamma_word_oracle("tbtbtb")
    assert Fraction(1) == triple(GENERATORS["b"])[2]


def test_json_round_trip():
    x = GroupElement(2, -1, Dyadic(3, -5))
    assert x.to_json() == {"t": 2, "s": -1, "d": "3*2^-5"}
    assert GroupElement.from_json(x.to_json()) == x

from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from ordlab.fixtures import FIXTURES, commuting_pair, conjugation_branch_pair, direct_branch_pair
from ordlab.pl import PLHomeo, evaluate, interval_map
from ordlab.semigroup import (
    CrossedPairWitness,
    Inconclusive,
    construct_crossed,
    detect_crossed,
    gaps,
    positive_word_distinctness,
    positive_words,
    verify_witness,
)

from strategies import interval_maps


def test_detect_example():
    # f fixes 0, 1/2, 1 and moves up on (0, 1/2); g sends 1/2 to 3/8
    f = interval_map([(F(1, 4), F(3, 8)), (F(1, 2), F(1, 2))])
    g = interval_map([(F(1, 2), F(3, 8))])
    w = detect_crossed(f, g)
    assert w is not None and verify_witness(w)
    assert w.interval == (0, F(1, 2)) and w.fixer == 0 and w.endpoint == "b"


def test_detect_not_found():
    ident = PLHomeo.identity()
    assert detect_crossed(ident, ident) is None
    assert detect_crossed(*commuting_pair()) is None


def test_gaps():
    f, _ = conjugation_branch_pair()
    assert gaps(f) == [(0, F(1, 8)), (F(1, 8), F(1, 2)), (F(1, 2), F(7, 8)), (F(7, 8), 1)]


def test_construct_direct_branch():
    w = construct_crossed(*direct_branch_pair())
    assert isinstance(w, CrossedPairWitness) and verify_witness(w)
    assert w.notes["branch"] == "direct"
    assert w.interval == (F(1, 4), F(3, 4))


def test_construct_conjugation_branch():
    f, g = conjugation_branch_pair()
    w = construct_crossed(f, g)
    assert isinstance(w, CrossedPairWitness) and verify_witness(w)
    assert w.notes["branch"] == "conjugation" and w.notes["n"] == 3
    assert w.interval == (F(7, 8), 1)
    assert evaluate(g, evaluate(g, evaluate(g, F(1, 8)))) > F(7, 8)


def test_construct_inconclusive_for_commuting_pair():
    assert isinstance(construct_crossed(*commuting_pair()), Inconclusive)


def test_distinctness_examples():
    h, _ = commuting_pair()
    rep = positive_word_distinctness(h, h, 4)
    assert not rep["distinct"] and rep["distinct_up_to"] == 0
    rep = positive_word_distinctness(*commuting_pair(), 6)
    assert not rep["distinct"] and rep["counterexample"] == ["b", "aa"]
    with pytest.raises(ValueError):
        positive_word_distinctness(h, h, 17)


def test_distinctness_monotone():
    f, g = commuting_pair()
    fails = [not positive_word_distinctness(f, g, L)["distinct"] for L in range(1, 6)]
    first = fails.index(True)
    assert all(fails[first:])


def test_positive_words_count():
    assert len(list(positive_words(12))) == 2**13 - 2


@settings(max_examples=60)
@given(interval_maps(), interval_maps())
def test_detect_symmetric_and_verified(f, g):
    w1, w2 = detect_crossed(f, g), detect_crossed(g, f)
    assert (w1 is None) == (w2 is None)
    for w in (w1, w2):
        if w is not None:
            assert verify_witness(w)


@settings(max_examples=40)
@given(interval_maps(), interval_maps())
def test_constructed_witnesses_verify(f, g):
    w = construct_crossed(f, g, cap=16)
    if isinstance(w, CrossedPairWitness):
        assert verify_witness(w)
        assert positive_word_distinctness(*w.pair, 6)["distinct"]


def test_fixture_witnesses_distinct_words():
    for name in ("direct", "conjugation", "contracting"):
        w = construct_crossed(*FIXTURES[name]())
        assert positive_word_distinctness(*w.pair, 8)["distinct"]

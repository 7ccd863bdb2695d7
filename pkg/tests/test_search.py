from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordlab.fixtures import FIXTURES
from ordlab.pl import PLHomeo, c0_distance_to_identity, compose, evaluate, interval_map, inverse
from ordlab.search import (
    ResourceError,
    SearchParams,
    check_growth,
    commutator_membership_audit,
    condition_i_holds,
    condition_ii_holds,
    contraction_audit,
    count_Sn,
    count_Sn_prime,
    entries,
    enumerate_Sn,
    enumerate_Sn_prime,
    growth_threshold,
    pigeonhole_search,
    theta_bound_holds,
    threshold_upper_bound,
    validate_params,
    word_maps,
)

from oracles import sn_prime_bruteforce, sn_prime_count_oracle, word_eval_oracle

# measured by exhaustive exact scans
GROWTH_THRESHOLD = 23


def test_small_word_sets():
    assert sorted(enumerate_Sn(1)) == sorted(["ba", "aba", "bba"])
    assert sorted(enumerate_Sn_prime(1)) == sorted(["ba", "bba"])
    assert len(enumerate_Sn_prime(4)) == 10 == count_Sn_prime(4)


def test_counts_match_enumeration():
    for n in range(16):
        words = enumerate_Sn_prime(n)
        assert len(words) == len(set(words)) == count_Sn_prime(n) == sn_prime_count_oracle(n)
        assert sorted(words) == sorted(sn_prime_bruteforce(n))
    for n in range(21):
        assert len(enumerate_Sn(n)) == count_Sn(n) == 2 ** (n + 1) - 1 >= 2**n


def test_enumeration_cap():
    with pytest.raises(ResourceError):
        enumerate_Sn_prime(21)


def test_growth_examples():
    assert not check_growth(4)
    assert count_Sn_prime(30) == 300540195 and check_growth(30)
    assert growth_threshold(200) == GROWTH_THRESHOLD


@given(st.integers(0, 200))
def test_growth_is_exact(n):
    assert check_growth(n) == (count_Sn_prime(n) * 10**n >= 19**n)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 6))
def test_theta_bound_integer_oracle(p, q, N):
    expected = p > q and 10 * p ** (8 * N) < 19 * q ** (8 * N)
    assert theta_bound_holds(F(p, q), N) == expected


@given(st.integers(1, 6), st.integers(0, 40))
def test_threshold_upper_bound(N, n):
    ub = threshold_upper_bound(N, n)
    assert ub ** (2 * N) * 19**n >= 10**n
    assert not condition_i_holds(ub, N, n)


def test_condition_ii():
    assert not condition_ii_holds(SearchParams(M=F(10**6), n=2))
    assert condition_ii_holds(SearchParams(M=F(1), theta_N=F(1001, 1000), n=400, grid_N=1, epsilon=F(1, 2)))


def test_params_json():
    p = SearchParams.from_json({"epsilon": "1/50", "N": 3, "lambda": "1/3", "n": 8})
    assert p.grid_N == 3 and p.lam == F(1, 3) and p.epsilon == F(1, 50)
    assert SearchParams.from_json(p.to_json()) == p


def test_validate_params_report():
    alpha, beta = FIXTURES["contracting"]()
    rep = validate_params(SearchParams(n=12), alpha, beta)
    c = rep["checks"]
    assert c["theta_bound"] and c["slope_ratio"] and c["moves_up_near_1"]
    assert c["slope_at_0_equals_lambda"] and c["lambda_in_(0,1)"]
    assert rep["slope_ratio_pow8"]["alpha"] == "1"
    # M = 2 is too large for n = 12: a reported failure, not an error
    assert not c["condition_ii"] and not rep["all_pass"]
    ident = PLHomeo.identity()
    rep = validate_params(SearchParams(), ident, ident)
    assert rep["checks"]["slope_ratio"] and not rep["checks"]["moves_up_near_1"]


def test_word_maps_match_letterwise_evaluation():
    alpha, beta = FIXTURES["contracting"]()
    words = enumerate_Sn_prime(5)
    maps = word_maps(words, alpha, beta)
    for w in words:
        for x in (F(1, 7), F(1, 2), F(5, 6)):
            assert evaluate(maps[w], x) == word_eval_oracle(w, {"a": alpha, "b": beta}, x)
    e = entries(["aabba"], alpha, beta)[0]
    assert (e.alpha_sum, e.beta_sum) == (3, 2)


def test_commutator_audit_examples():
    assert commutator_membership_audit("abbaba", "babaab")["certified"]
    rep = commutator_membership_audit("ba", "bba")
    assert not rep["certified"] and rep["vector"] == {"a": 0, "b": 1}
    assert commutator_membership_audit("abba", "abba")["certified"]


def _check_result(res, alpha, beta, W=None):
    W = W or PLHomeo.identity()
    w1, w2 = res.words
    maps = word_maps([w1, w2], alpha, beta)
    h = compose(inverse(compose(maps[w1], W)), compose(maps[w2], W))
    assert h == res.h
    assert res.c0_distance == c0_distance_to_identity(h, (0, 1))
    grid = [F(i, res.grid_N) for i in range(1, res.grid_N)]
    disc = max(abs(evaluate(maps[w1], evaluate(W, x)) - evaluate(maps[w2], evaluate(W, x))) for x in grid)
    assert disc == res.grid_discrepancy and condition_i_holds(disc, res.grid_N, res.n)


def test_degenerate_equal_generators():
    a = interval_map([(F(1, 2), F(1, 4))])
    res = pigeonhole_search(a, a, n=6)
    assert res.collision and res.c0_distance == 0 and res.h.is_identity()


@pytest.mark.parametrize("mode", ["best", "closest", "first"])
def test_search_result_invariants(mode):
    alpha, beta = FIXTURES["contracting"]()
    res = pigeonhole_search(alpha, beta, n=8, grid_N=4, mode=mode)
    assert res.collision
    _check_result(res, alpha, beta)


def test_search_with_nontrivial_W():
    alpha, beta = FIXTURES["contracting"]()
    W = interval_map([(F(1, 2), F(5, 8))])
    res = pigeonhole_search(alpha, beta, W, n=6)
    _check_result(res, alpha, beta, W)
    with pytest.raises(ValueError):
        pigeonhole_search(alpha, beta, PLHomeo.affine(1, 1), n=4)


def test_thompson_trend():
    # measured: 1/4096 at n = 8 and 1/16384 at n = 10
    x0, x1 = FIXTURES["thompson"]()
    d8 = pigeonhole_search(x0, x1, n=8).c0_distance
    d10 = pigeonhole_search(x0, x1, n=10).c0_distance
    assert (d8, d10) == (F(1, 4096), F(1, 16384))


def test_contraction_audit():
    alpha, beta = FIXTURES["contracting"]()
    rep = contraction_audit(alpha, beta, 8, (F(31, 32), F(63, 64)), F(1, 2), F(101, 100))
    assert rep["holds"] and rep["words"] == count_Sn_prime(8)
    bad = contraction_audit(alpha, beta, 8, (F(0), F(1)), F(1, 2), F(101, 100))
    assert not bad["holds"]

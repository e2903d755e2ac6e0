import random

import pytest

from latpath.bipoly import ONE, X, Y
from latpath.errors import ContractError, OracleScaleError
from latpath.matroid import (
    bases,
    build,
    build_from_word,
    catalan,
    count_bases,
    direct_sum,
    dual,
    generalized_catalan,
    kl_catalan,
    loopless_k_catalan,
    nkk,
    uniform,
)
from latpath.paths import all_paths, random_path_pair
from latpath.tutte import (
    activities,
    activities_by_definition,
    beta,
    char_poly,
    free_extension_tutte,
    tutte_activity,
    tutte_corank_nullity,
    tutte_dp,
    tutte_from_word,
)

from conftest import exhaustive_matroids

ENGINES = [tutte_dp, tutte_activity, tutte_corank_nullity]


@pytest.mark.parametrize("engine", ENGINES)
def test_small_known_polynomials(engine):
    assert engine(catalan(2)) == X**2 * Y + X * Y**2
    assert engine(catalan(0)) == ONE
    assert engine(uniform(1, 1)) == X
    assert engine(uniform(0, 1)) == Y
    # U_{1,3}: x + y + y^2, U_{2,4}: x^2 + 2x + 2y + y^2
    assert engine(uniform(1, 3)) == X + Y + Y**2
    assert engine(uniform(2, 4)) == X**2 + 2 * X + 2 * Y + Y**2


def test_rank_three_circuit():
    assert tutte_dp(build(("ENN", "NNE"))) == X**2 + X + Y


def test_engines_agree_on_sizes_up_to_eight():
    for M in exhaustive_matroids(8):
        t = tutte_dp(M)
        assert t == tutte_activity(M) == tutte_corank_nullity(M), str(M)


def test_engines_agree_on_random_pairs():
    rng = random.Random(11)
    for _ in range(40):
        M = build(random_path_pair(rng.randint(10, 14), rng))
        assert tutte_dp(M) == tutte_activity(M) == tutte_corank_nullity(M), str(M)


def test_geometric_activities_match_definition():
    for M in exhaustive_matroids(7):
        basis_set = set(bases(M))
        for B in basis_set:
            assert activities(M, B) == activities_by_definition(M, B, basis_set), (str(M), B)


def test_activities_reject_non_bases():
    with pytest.raises(ContractError):
        activities(catalan(3), {1, 2, 3})


def test_evaluation_counts_bases():
    for M in exhaustive_matroids(9):
        assert tutte_dp(M).eval_at(1, 1) == count_bases(M)


def test_duality_swaps_variables():
    for M in exhaustive_matroids(8):
        assert tutte_dp(dual(M)) == tutte_dp(M).swap()


def test_direct_sum_multiplies():
    rng = random.Random(5)
    for _ in range(60):
        M1 = build(random_path_pair(rng.randint(0, 7), rng))
        M2 = build(random_path_pair(rng.randint(0, 7), rng))
        assert tutte_dp(direct_sum(M1, M2)) == tutte_dp(M1) * tutte_dp(M2)


def test_symmetric_kl_catalan():
    for k in (1, 2, 3):
        for n in range(0, 6):
            t = tutte_dp(kl_catalan(k, k, n))
            assert t == t.swap()


def test_word_fold_matches_dp():
    for n in range(0, 11):
        for Q in all_paths(n):
            assert tutte_from_word(Q) == tutte_dp(build_from_word(Q))
    rng = random.Random(2)
    for n in range(11, 15):
        for _ in range(60):
            Q = "".join(rng.choice("EN") for _ in range(n))
            assert tutte_from_word(Q) == tutte_dp(generalized_catalan(Q))


def test_free_extension_of_single_isthmus():
    # U_{1,1} + e = U_{1,2}
    assert free_extension_tutte(X) == X + Y


def test_guards():
    with pytest.raises(OracleScaleError):
        tutte_corank_nullity(catalan(9))
    with pytest.raises(OracleScaleError):
        tutte_activity(catalan(12), limit=1000)
    assert tutte_corank_nullity(catalan(9), limit=None).eval_at(1, 1) == 4862


def test_beta_values():
    assert beta(nkk(2, 2)) == 10
    assert beta(uniform(1, 1)) == 1
    assert beta(uniform(0, 1)) == 0
    assert beta(catalan(3)) == 0  # has a loop
    assert beta(uniform(2, 4)) == 2


def test_beta_vanishes_exactly_when_disconnected():
    from latpath.matroid import is_connected

    for M in exhaustive_matroids(8):
        if M.size >= 2:
            assert (beta(M) != 0) == is_connected(M), str(M)


def test_char_poly():
    assert char_poly(loopless_k_catalan(1, 2)) == [1, -2, 1]
    assert char_poly(uniform(2, 3)) == [2, -3, 1]
    assert char_poly(catalan(0)) == [1]


def test_dp_scales():
    t = tutte_dp(catalan(60))
    from latpath.closedforms import catalan as catalan_number

    assert t.eval_at(1, 1) == catalan_number(60)

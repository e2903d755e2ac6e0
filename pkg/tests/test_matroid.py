import itertools
import random

import numpy as np
import pytest

from latpath import oracle
from latpath.closedforms import k_catalan as k_catalan_number
from latpath.errors import ContractError, ParsePathError
from latpath.matroid import (
    bases,
    build,
    build_from_word,
    catalan,
    circuits,
    components,
    count_bases,
    direct_sum,
    dual,
    from_spec,
    gc_circuit_test,
    gc_independence_test,
    generalized_catalan,
    is_basis,
    is_connected,
    is_independent,
    isthmuses,
    k_catalan,
    kl_catalan,
    loops,
    meeting_points,
    rank,
    uniform,
)
from latpath.paths import LatticePath, all_paths

from conftest import exhaustive_matroids


def _basis_masks(M):
    ranks = oracle.rank_table(list(M.intervals), M.size)
    return np.nonzero((ranks == M.r) & (oracle.popcounts(M.size) == M.r))[0]


def test_catalan_three_presentation():
    M = catalan(3)
    assert M.intervals == ((2, 4), (4, 5), (6, 6))
    assert [sorted(B) for B in bases(M)][:3] == [[4, 5, 6], [3, 5, 6], [3, 4, 6]]
    assert count_bases(M) == 5
    assert loops(M) == {1} and isthmuses(M) == {6}


def test_is_basis():
    M = catalan(3)
    assert is_basis(M, {2, 4, 6})
    assert not is_basis(M, {1, 2, 3})
    with pytest.raises(ContractError):
        is_basis(M, {1, 2})


def test_rank_examples():
    M = catalan(3)
    assert rank(M, []) == 0
    assert rank(M, {1}) == 0
    assert rank(M, {2, 3, 4}) == 2
    assert rank(M, range(1, 7)) == 3
    with pytest.raises(ContractError):
        rank(M, {7})


def test_uniform():
    M = uniform(2, 4)
    assert count_bases(M) == 6
    assert all(is_basis(M, c) for c in itertools.combinations(range(1, 5), 2))
    assert count_bases(uniform(0, 3)) == 1 and count_bases(uniform(3, 3)) == 1


def test_family_specs():
    assert from_spec("catalan:2") == catalan(2)
    assert from_spec("kcatalan:2,3") == k_catalan(2, 3)
    assert from_spec("klcatalan:2,2,3") == kl_catalan(2, 2, 3)
    assert from_spec("uniform:2,5") == uniform(2, 5)
    assert from_spec("word:ENEN") == generalized_catalan("ENEN")
    assert from_spec("pair:EENN,NENE").upper.steps == "NENE"
    assert str(from_spec("loopless:1,2")) == "M[ENN,NEN]"
    for bad in ["catalan", "nope:1", "kcatalan:1", "kcatalan:a,b", "pair:EN"]:
        with pytest.raises(ParsePathError):
            from_spec(bad)
    with pytest.raises(ContractError):
        from_spec("pair:NE,EN")


def test_rank_matches_subset_table():
    for M in exhaustive_matroids(7):
        table = oracle.rank_table(list(M.intervals), M.size)
        for mask in range(1 << M.size):
            assert rank(M, oracle.from_mask(mask)) == table[mask]


def test_rank_table_against_brute_force_matching():
    # maximum partial transversal by trying every injection
    for M in exhaustive_matroids(6):
        table = oracle.rank_table(list(M.intervals), M.size)
        for mask in range(1 << M.size):
            subset = sorted(oracle.from_mask(mask))
            best = 0
            for k in range(len(subset), 0, -1):
                for chosen in itertools.combinations(subset, k):
                    for perm in itertools.permutations(range(M.r), k):
                        if all(M.intervals[i][0] <= e <= M.intervals[i][1] for e, i in zip(chosen, perm)):
                            best = k
                            break
                    if best:
                        break
                if best:
                    break
            assert table[mask] == best


def test_bases_generator_matches_rank_table():
    for M in exhaustive_matroids(8):
        from_paths = sorted(oracle.to_mask(B) for B in bases(M))
        assert from_paths == sorted(_basis_masks(M).tolist())


def _exchange_holds(masks: np.ndarray, n: int) -> bool:
    """Basis exchange for a family of equal-size subsets given as bitmasks."""
    if n == 0 or len(masks) == 0:
        return True
    full = (1 << n) - 1
    member = np.zeros(1 << n, dtype=bool)
    member[masks] = True
    bits = np.int64(1) << np.arange(n, dtype=np.int64)

    # works[b, e]: bitmask of the f with b - e + f in the family (e in b, f not in b)
    has = (masks[:, None] & bits[None, :]) != 0
    swapped = masks[:, None, None] ^ bits[None, :, None] ^ bits[None, None, :]
    ok = has[:, :, None] & ~has[:, None, :] & member[swapped & full]
    works = (ok * bits[None, None, :]).sum(axis=2)

    # for every pair (b1, b2) and every e in b1 - b2 some f in b2 - b1 must work
    needs = has[:, None, :] & ~has[None, :, :]
    fresh = masks[None, :] & ~masks[:, None]
    satisfied = (works[:, None, :] & fresh[:, :, None]) != 0
    return not np.any(needs & ~satisfied)


def test_exchange_check_detects_non_matroids():
    assert not _exchange_holds(np.array([0b0011, 0b1100], dtype=np.int64), 4)
    assert _exchange_holds(np.array([0b0011, 0b0101, 0b0110], dtype=np.int64), 3)


def test_basis_exchange_and_dual_complements():
    """Exchange axiom over all pairs of bases, and bases of the dual are the complements."""
    for M in exhaustive_matroids(10):
        full = (1 << M.size) - 1
        masks = _basis_masks(M)
        assert np.array_equal(np.sort(full ^ masks), np.sort(_basis_masks(dual(M))))
        assert _exchange_holds(masks, M.size), str(M)


def test_loops_and_isthmuses_by_definition():
    for M in exhaustive_matroids(8):
        all_bases = list(bases(M))
        in_every = frozenset.intersection(*all_bases)
        in_some = frozenset.union(*all_bases) if all_bases else frozenset()
        assert isthmuses(M) == in_every
        assert loops(M) == frozenset(M.ground_set) - in_some


def test_connectivity_and_components():
    for M in exhaustive_matroids(9):
        cuts = meeting_points(M)
        interior = [t for t in cuts if 0 < t < M.size]
        assert is_connected(M) == (not interior)
        parts = components(M)
        assert len(parts) == max(1, len(cuts) - 1) or M.size == 0
        assert sum(p.size for p in parts) == M.size
        product = 1
        for p in parts:
            product *= count_bases(p)
        assert product == count_bases(M)


def test_direct_sum_bases():
    M1, M2 = catalan(2), uniform(1, 2)
    S = direct_sum(M1, M2)
    assert count_bases(S) == count_bases(M1) * count_bases(M2)
    assert not is_connected(S)


def test_dual_of_kl_catalan_is_lk_catalan():
    # isomorphic via reversal of the ground set
    for k, l, n in [(1, 2, 3), (2, 3, 2), (2, 1, 4)]:
        D = dual(kl_catalan(k, l, n))
        target = kl_catalan(l, k, n)
        assert sorted(sorted(B) for B in bases(D)) == sorted(
            sorted(n * (k + l) + 1 - e for e in B) for B in bases(target)
        )


def test_k_catalan_basis_counts():
    for k in range(1, 4):
        for n in range(0, 8):
            assert count_bases(k_catalan(k, n)) == k_catalan_number(k, n)


def test_build_from_word():
    for n in range(0, 9):
        for Q in all_paths(n):
            assert build_from_word(Q) == generalized_catalan(Q)


def _gc_agreement(Q):
    M = generalized_catalan(Q)
    n = M.size
    table = oracle.rank_table(list(M.intervals), n)
    independent = table == oracle.popcounts(n)
    circ = set(oracle.circuit_masks(table, n, ordered=False))
    for mask in range(1 << n):
        subset = oracle.from_mask(mask)
        assert gc_independence_test(M, subset) == bool(independent[mask]), (Q, subset)
        assert gc_circuit_test(M, subset) == (mask in circ), (Q, subset)


def test_gc_tests_agree_with_rank_exhaustive():
    for n in range(0, 10):
        for Q in all_paths(n):
            _gc_agreement(Q)


@pytest.mark.parametrize("n", [10, 11, 12])
def test_gc_tests_agree_with_rank_sampled(n):
    rng = random.Random(n)
    for _ in range(40):
        _gc_agreement(LatticePath("".join(rng.choice("EN") for _ in range(n))))


def test_gc_circuit_example():
    M = catalan(3)
    assert {frozenset({1}), frozenset({2, 3})} <= set(circuits(M))
    assert gc_circuit_test(M, {1}) and gc_circuit_test(M, {2, 3})
    assert not gc_circuit_test(M, {2, 4}) and not gc_circuit_test(M, {2, 3, 4})


def test_gc_tests_reject_other_matroids():
    with pytest.raises(ContractError):
        gc_independence_test(build(("NE", "NE")), {1})


def test_is_independent():
    M = catalan(3)
    assert is_independent(M, {2, 4, 6}) and not is_independent(M, {1})

import itertools

import pytest

from latpath import closedforms as cf
from latpath.errors import ConsistencyError, DomainError
from latpath.matroid import k_catalan, loopless_k_catalan, nkk
from latpath.nbc import nbc_size_counts
from latpath.series import catalan_series
from latpath.tutte import beta, tutte_dp


def _paths_below(k, m, n):
    """Brute-force count of E/N words to (m, n) never above y = x/k."""
    total = 0
    for north in itertools.combinations(range(m + n), n):
        x = y = 0
        ok = True
        for t in range(m + n):
            if t in north:
                y += 1
            else:
                x += 1
            if k * y > x:
                ok = False
                break
        total += ok
    return total


def test_binom_convention():
    assert cf.binom(5, 2) == 10
    assert cf.binom(2, 5) == 0 and cf.binom(3, -1) == 0


def test_exact_div():
    assert cf.exact_div(12, 4) == 3
    with pytest.raises(ConsistencyError):
        cf.exact_div(7, 2)


def test_known_values():
    assert [cf.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [cf.k_catalan(2, n) for n in range(6)] == [1, 1, 3, 12, 55, 273]
    assert cf.ballot(1, 2, 1) == 2
    assert cf.dyck_prefix_count(3) == 3
    assert cf.catalan_power_coeff(1, 2, 2) == 5
    assert cf.s_count(3, 2, 2) == 2
    assert cf.nbc_count_formula(1, 2, 1) == 2
    assert cf.connected_count_formula(3) == 4
    assert cf.beta_formula(2, 2) == 10


def test_k_catalan_and_ballot_against_enumeration():
    for k in range(1, 4):
        for n in range(0, 5):
            assert cf.k_catalan(k, n) == _paths_below(k, k * n, n)
            for m in range(k * n, k * n + 4):
                assert cf.ballot(k, m, n) == _paths_below(k, m, n)


def test_ballot_domain():
    with pytest.raises(DomainError):
        cf.ballot(2, 3, 2)
    with pytest.raises(DomainError):
        cf.k_catalan(0, 3)


def test_dyck_prefix_against_enumeration():
    for n in range(0, 13):
        count = 0
        for steps in itertools.product((1, -1), repeat=n):
            h = 0
            for s in steps:
                h += s
                if h < 0:
                    break
            else:
                count += 1
        assert cf.dyck_prefix_count(n) == count


def test_catalan_power_coeff_against_series():
    for k in (1, 2, 3):
        C = catalan_series(k, 7)
        for j in range(0, 5):
            P = C**j
            for t in range(8):
                assert cf.catalan_power_coeff(k, j, t) == P[t].eval_at(0, 0)


def test_s_count_against_enumeration():
    for k in range(1, 4):
        for s in range(0, 5):
            for m in range(0, 10):
                brute = sum(1 for ls in itertools.product(range(1, k + 1), repeat=s) if sum(ls) == m)
                assert cf.s_count(m, s, k) == brute


def test_tutte_coefficients_match_dp():
    for k in range(1, 4):
        for n in range(0, 7):
            t = tutte_dp(k_catalan(k, n))
            for i in range(0, n + 2):
                for j in range(0, k * n + 2):
                    assert cf.tutte_coeff_kcatalan(k, n, i, j) == t.coefficient(i, j), (k, n, i, j)
                    assert cf.kcatalan_tutte_path_count(k, n, i, j) == t.coefficient(i, j), (k, n, i, j)


def test_degenerate_denominator_uses_path_count():
    # n - s - i = 0 for k=1, n=2, i=1, j=2
    assert cf.tutte_coeff_kcatalan(1, 2, 1, 2) == 1


def test_catalan_coefficients():
    for n in range(2, 8):
        t = tutte_dp(k_catalan(1, n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert cf.tutte_coeff_catalan(n, i, j) == t.coefficient(i, j)
    with pytest.raises(DomainError):
        cf.tutte_coeff_catalan(1, 1, 1)


def test_nbc_count_formula_against_enumeration():
    for k in (1, 2):
        for n in range(1, 6):
            counts = nbc_size_counts(loopless_k_catalan(k, n))
            assert counts == [cf.nbc_count_formula(k, n, i) for i in range(n + 1)]


def test_beta_formula():
    for k in range(1, 4):
        for n in range(1, 8 // k + 1):
            if k * n <= 7:
                assert cf.beta_formula(k, n) == beta(nkk(k, n))


def test_formula_table_is_complete():
    assert set(cf.FORMULAS) >= {"catalan", "k_catalan", "ballot", "beta_formula", "connected_count_formula"}

import pytest

from latpath.bipoly import ONE, X, Y, ZERO
from latpath.closedforms import k_catalan as k_catalan_number
from latpath.errors import DomainError
from latpath.matroid import k_catalan
from latpath.series import DEFAULT_ORDER, ZSeries, catalan_series, tutte_gf_rhs
from latpath.tutte import tutte_dp


def test_arithmetic_truncates():
    z = ZSeries.z(3)
    assert (z * z * z * z).coeffs == (ZERO,) * 4
    assert (1 + z).inverse().coeffs == (ONE, -ONE, ONE, -ONE)
    assert ((1 + z) ** -1) * (1 + z) == ZSeries.constant(1, 3)
    assert (z * X + Y)[1] == X


def test_inverse_needs_unit_constant():
    with pytest.raises(DomainError):
        ZSeries.of([2, 1], 3).inverse()


def test_catalan_series_functional_equation():
    # C = 1 + z C^(k+1)
    for k in (1, 2, 3):
        C = catalan_series(k, 9)
        assert C == 1 + (C ** (k + 1)).times_z()


def test_generating_function_matches_dp():
    for k in (1, 2, 3):
        series = tutte_gf_rhs(k, 6)
        for n in range(7):
            assert series[n] == tutte_dp(k_catalan(k, n)), (k, n)


def test_generating_function_counts_bases():
    for k in (1, 2, 3):
        series = tutte_gf_rhs(k)
        assert series.order == DEFAULT_ORDER
        assert [series[n].eval_at(1, 1) for n in range(DEFAULT_ORDER + 1)] == [
            k_catalan_number(k, n) for n in range(DEFAULT_ORDER + 1)
        ]


def test_negative_order():
    with pytest.raises(DomainError):
        tutte_gf_rhs(1, -1)

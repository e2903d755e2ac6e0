"""One line per acceptance criterion, printed as PASS/FAIL with timing.

All comparisons are exact integer or polynomial equality; criteria with a
runtime budget also fail when the budget is exceeded.
"""

import pytest

from latpath.verify import Suite, run_check

BUDGETS = {
    "1 oracle triple agreement": 120.0,
    "5 generating function": 30.0,
}


@pytest.fixture(scope="module")
def suite():
    return Suite(max_size=10, random_pairs=200, random_max_size=14)


CRITERIA = [name for name, _ in Suite().checks()]


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(suite, name, capsys):
    func = dict(suite.checks())[name]
    result = run_check(name, func)
    budget = BUDGETS.get(name)
    if budget is not None and result.seconds > budget:
        result.passed = False
        result.detail += f"; over the {budget:.0f}s budget"
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()

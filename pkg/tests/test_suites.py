from fractions import Fraction

import pytest

from permfix.exact import Polynomial
from permfix.identities import EXTRA_IDENTITY_IDS, IDENTITY_IDS
from permfix.suites import SUITES, SweepPlan


@pytest.fixture
def plan(default_xs: list) -> SweepPlan:
    return SweepPlan(n_max=5, k_max=4, xs=default_xs, cap=10)


def test_every_identity_has_a_suite() -> None:
    assert set(SUITES) == set(IDENTITY_IDS) | set(EXTRA_IDENTITY_IDS)


def test_suites_are_described() -> None:
    assert all(suite.description for suite in SUITES.values())


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name: str, plan: SweepPlan) -> None:
    checks = list(SUITES[name].sweep(plan))
    assert checks
    assert all(chk.identity_id == name for chk in checks)
    assert all(chk.passed for chk in checks)


def test_method_switches_at_cap() -> None:
    plan = SweepPlan(n_max=12, k_max=1, xs=[Fraction(2)], cap=10)
    assert plan.method(10) == "bruteforce"
    assert plan.method(11) == "cycleclass"


def test_determinant_beyond_cap() -> None:
    plan = SweepPlan(n_max=5, k_max=1, xs=[Fraction(2)], cap=3)
    checks = list(SUITES["det"].sweep(plan))
    assert [chk.params["n"] for chk in checks] == [1, 2, 3, 4, 5]
    assert all(chk.passed for chk in checks)
    assert all(len(chk.others) == 1 for chk in checks)


def test_trivial_derivative_sweep() -> None:
    plan = SweepPlan(n_max=1, k_max=0, xs=[Fraction(2)], cap=10)
    checks = list(SUITES["thm1"].sweep(plan))
    assert len(checks) == 1
    assert checks[0].params == {"n": 1, "k": 0}
    assert checks[0].lhs == checks[0].rhs == Polynomial.x()


def test_derivative_sweep_includes_order_n() -> None:
    plan = SweepPlan(n_max=3, k_max=5, xs=[Fraction(2)], cap=10)
    checks = list(SUITES["thm1"].sweep(plan))
    top = [chk for chk in checks if chk.params == {"n": 3, "k": 3}]
    assert len(top) == 1
    assert top[0].rhs == Polynomial.constant(6)
    assert top[0].passed


def test_zero_k_max_skips_integrals() -> None:
    plan = SweepPlan(n_max=3, k_max=0, xs=[Fraction(2)], cap=10)
    assert list(SUITES["thm2"].sweep(plan)) == []
    assert list(SUITES["st_chain"].sweep(plan)) == []

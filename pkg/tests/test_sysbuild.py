"""Radix independence, linear dependence over Q(x), and the first-order system."""

import pytest
from hypothesis import given, strategies as st

from conftest import ratfuncs
from mahlerkit import (
    LaurentTrunc,
    MahlerEquation,
    MahlerSystem,
    PrecisionError,
    RatFunc,
    SeedInconsistentError,
    SystemBuildError,
    build_system,
    check_consistency,
    lift_dependence_check,
    lin_dep_test,
    mult_independent,
)
from mahlerkit.exactnum import laurent_expand
from mahlerkit.sysbuild import mat_det, mat_mul, mat_substitute

X = RatFunc.x()


@pytest.mark.parametrize(
    "p,q,expected",
    [(2, 3, True), (2, 4, False), (4, 8, False), (6, 36, False), (6, 12, True), (12, 18, True), (9, 27, False)],
)
def test_mult_independent(p, q, expected):
    assert mult_independent(p, q) is expected


def test_mult_independent_brute_force():
    for p in range(2, 40):
        for q in range(2, 40):
            dependent = any(p**a == q**b for a in range(1, 7) for b in range(1, 7))
            assert mult_independent(p, q) is (not dependent)


def test_dependence_found_for_rational_multiples():
    f = laurent_expand(1 / (1 - X), 80)
    g = laurent_expand((1 + X) / (1 - X), 80)
    res = lin_dep_test([f, g], 2)
    assert res.dependent
    a, b = res.relation
    total = LaurentTrunc.from_poly(a, 80) * f + LaurentTrunc.from_poly(b, 80) * g
    assert total.truncate(80).is_zero()


def test_independence_up_to_bounds():
    tm = [(-1) ** bin(k).count("1") for k in range(120)]
    f = LaurentTrunc(0, tm, 120)
    g = laurent_expand(1 / (1 - X), 120)
    res = lin_dep_test([f, g], 6)
    assert not res.dependent
    assert res.verdict == "independent_up_to_bounds"


def test_precision_guard():
    f = laurent_expand(1 / (1 - X), 20)
    with pytest.raises(PrecisionError):
        lin_dep_test([f, f], 8)


def test_zero_series_is_dependent():
    z = LaurentTrunc(0, [0] * 30, 30)
    f = laurent_expand(1 / (1 - X), 30)
    assert lin_dep_test([f, z], 3).dependent


@given(st.lists(ratfuncs(3, regular_at_zero=True), min_size=1, max_size=3), st.integers(2, 4), st.integers(0, 3))
def test_lift_preserves_verdict_on_rationals(rs, m, d):
    series = [laurent_expand(r, 4 * (d + 1) * len(rs) * m + 60) for r in rs]
    assert lift_dependence_check(series, m, d)


def _pair(r, p, q):
    e1 = MahlerEquation(p, (-r.substitute_power(p) / r,))
    e2 = MahlerEquation(q, (-r.substitute_power(q) / r,))
    s = laurent_expand(r, 64)
    return e1, e2, [s.coeff(k) for k in range(64)]


def test_build_system_geometric_series():
    e1, e2, seed = _pair(1 / (1 - X), 2, 3)
    sys_ = build_system(e1, e2, seed)
    assert sys_.n == 1
    assert sys_.A == [[1 / (1 + X)]]
    assert sys_.B == [[1 / (1 + X + X**2)]]
    assert check_consistency(sys_)


def test_build_system_order_two_basis():
    # an order-two 2-equation annihilating r: r(x^4) + r(x^2) + b0 r = 0
    r = (1 + X) / (1 - 2 * X)
    b1 = RatFunc(1)
    b0 = -(r.substitute_power(4) + b1 * r.substitute_power(2)) / r
    e1 = MahlerEquation(2, (b0, b1))
    e2 = MahlerEquation(3, (-r.substitute_power(3) / r,))
    s = laurent_expand(r, 300)
    sys_ = build_system(e1, e2, [s.coeff(k) for k in range(300)], N=300)
    assert 1 <= sys_.n <= 2
    assert check_consistency(sys_)
    assert not mat_det(sys_.A).is_zero()


def test_build_system_rejects_conflicting_seed():
    e1, e2, seed = _pair(1 / (1 - X), 2, 3)
    e2_bad = MahlerEquation(3, (RatFunc(-1),))
    with pytest.raises(SeedInconsistentError):
        build_system(e1, e2_bad, seed)


def test_consistency_detects_mismatch():
    good = MahlerSystem(2, 3, [[1 / (1 + X)]], [[1 / (1 + X + X**2)]])
    bad = MahlerSystem(2, 3, [[1 / (1 + X)]], [[1 / (1 - X)]])
    assert check_consistency(good)
    assert not check_consistency(bad)
    with pytest.raises(SystemBuildError):
        bad.validate()


def test_matrix_helpers():
    a = [[X, RatFunc(1)], [RatFunc(0), RatFunc(2)]]
    assert mat_det(a) == 2 * X
    assert mat_mul(a, [[RatFunc(1), RatFunc(0)], [RatFunc(0), RatFunc(1)]]) == a
    assert mat_substitute(a, 3)[0][0] == X**3

"""Numeric probe: radius estimates, outward continuation and growth bounds."""

import cmath
import math

import pytest

from mahlerkit import LaurentTrunc, MahlerEquation, PoleProximityError, PrecisionError, RatFunc, growth_check
from mahlerkit.exactnum import laurent_expand
from mahlerkit.probe import (
    Big,
    Pt,
    base_evaluator,
    choose_r0,
    continue_outward,
    eval_ratfunc,
    locate,
    pole_moduli,
    radius_estimate,
    sample_points,
)

X = RatFunc.x()


def _direct(r, z):
    """Plain complex evaluation of num/den, independent of the log-scaled path."""
    num = sum(complex(c) * z**k for k, c in enumerate(r.num.coeffs))
    den = sum(complex(c) * z**k for k, c in enumerate(r.den.coeffs))
    return num / den


@pytest.mark.parametrize("r,rho", [(1 / (1 - 2 * X), 0.5), (1 / (1 - X), 1.0), (1 / (2 - X), 2.0)])
def test_radius_estimate(r, rho):
    est = radius_estimate(laurent_expand(r, 128))
    assert abs(est - rho) <= 0.25 * rho


def test_radius_of_polynomial_is_infinite():
    assert radius_estimate(laurent_expand(1 + X, 64)) == math.inf


def test_radius_needs_terms():
    with pytest.raises(PrecisionError):
        radius_estimate(laurent_expand(1 / (1 - X), 8))


def test_big_arithmetic_round_trip():
    a, b = Big.of(3 + 4j), Big.of(-1 + 2j)
    assert cmath.isclose((a * b).to_complex(), (3 + 4j) * (-1 + 2j))
    assert cmath.isclose((a + b).to_complex(), 2 + 6j)
    assert cmath.isclose((a / b).to_complex(), (3 + 4j) / (-1 + 2j))


def test_eval_ratfunc_handles_huge_points():
    r = (1 + X) / (1 - X)
    pt = Pt(s=5000.0, theta=0.3)  # |x| = e^5000 overflows a double
    v = eval_ratfunc(r, pt)
    assert math.isclose(abs(v.to_complex()), 1.0, rel_tol=1e-9)


def test_eval_ratfunc_pole_detected():
    with pytest.raises(PoleProximityError):
        eval_ratfunc(1 / (1 - X), Pt.of(1.0))


def test_locate():
    j, xi = locate(Pt.of(16.0), 2.0, 2)
    assert j == 2
    assert math.isclose(abs(xi.to_complex()), 2.0)
    with pytest.raises(ValueError):
        locate(Pt.of(1.5), 2.0, 2)


@pytest.mark.parametrize("x", [16, 256, 3 - 40j, 1000 * cmath.exp(0.7j)])
def test_continuation_matches_direct_evaluation(x):
    r = 1 / (1 - X)
    eq = MahlerEquation(2, (-1 / (1 + X),))
    got = continue_outward(eq, r, x, 2.0)
    want = _direct(r, x)
    assert abs(got - want) <= 1e-9 * abs(want)


def test_series_base_uses_rational_form():
    r = (1 + X) / (1 - 2 * X + 3 * X**2)
    ev = base_evaluator(laurent_expand(r, 80))
    z = 2.5 + 0.5j
    assert cmath.isclose(ev(Pt.of(z)).to_complex(), _direct(r, z), rel_tol=1e-10)


def test_series_base_outside_disk_refused():
    tm = [(-1) ** bin(k).count("1") for k in range(64)]
    ev = base_evaluator(LaurentTrunc(0, tm, 64))
    with pytest.raises(PrecisionError):
        ev(Pt.of(2.0))
    assert abs(ev(Pt.of(0.3)).to_complex()) > 0


def test_sample_points_cover_annuli():
    # annuli j = 0, 1, 2
    pts = sample_points(2.0, 3, 2, 8)
    assert len(pts) == 24
    for pt in pts:
        assert math.log(2.0) <= pt.s < 27 * math.log(2.0)


@pytest.mark.parametrize("r,p", [(1 / (1 - X), 2), ((1 + X) / (1 - 2 * X + 3 * X**2), 3), ((2 - X**3) / (1 + X), 5)])
def test_growth_within_bound(r, p):
    eq = MahlerEquation(p, (-r.substitute_power(p) / r,))
    rep = growth_check(eq, r, 2.0, 3, 32)
    assert rep.all_within_bound
    assert len(rep.samples) + rep.skipped == 4 * 32
    assert rep.K >= 1


def test_pole_helpers():
    assert sorted(round(m, 9) for m in pole_moduli(1 / ((1 - 2 * X) * (3 + X)))) == [0.5, 3.0]
    eq = MahlerEquation(2, (-1 / (1 + X),))
    assert choose_r0(eq, 1 / (1 - X)) == 2.1

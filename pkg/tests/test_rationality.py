"""Pade reconstruction and certification of rational common solutions."""

import time

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ratfuncs
from mahlerkit import (
    NO_SOLUTION,
    CertifyFailure,
    LaurentTrunc,
    MahlerEquation,
    NoSolution,
    PrecisionError,
    RatFunc,
    RationalityCertificate,
    certify_rational,
    format_ratfunc,
    pade_reconstruct,
    verify_certificate,
)
from mahlerkit.exactnum import laurent_expand
from oracles import thue_morse

X = RatFunc.x()
THUE_MORSE = MahlerEquation(2, (-1 / (1 - X),))


def _pair(r, p, q):
    e1 = MahlerEquation(p, (-r.substitute_power(p) / r,))
    e2 = MahlerEquation(q, (-r.substitute_power(q) / r,))
    s = laurent_expand(r, 64)
    return e1, e2, [s.coeff(k) for k in range(64)]


def test_geometric_pair_certified():
    e1, e2, _ = _pair(1 / (1 - X), 2, 3)
    cert = certify_rational(e1, e2, [1])
    assert isinstance(cert, RationalityCertificate)
    assert format_ratfunc(cert.value) == "1/(1 - x)"
    assert cert.verified == (True, True)
    assert cert.prefix_matched >= 64


@settings(max_examples=25)
@given(ratfuncs(4, regular_at_zero=True), st.sampled_from([(2, 3), (2, 5), (3, 5), (3, 4)]))
def test_round_trip(r, pq):
    if r.is_zero():
        return
    e1, e2, seed = _pair(r, *pq)
    cert = certify_rational(e1, e2, seed)
    assert isinstance(cert, RationalityCertificate)
    assert cert.value == r


def test_pade_exact_rational():
    r = (2 - X**3) / (1 - X - X**2)
    assert pade_reconstruct(laurent_expand(r, 40), 3, 2) == r


def test_pade_negative_valuation():
    r = 1 / (X**2 * (1 + 3 * X))
    assert pade_reconstruct(laurent_expand(r, 40), 1, 2) == r


def test_pade_degree_too_small():
    r = 1 / (1 - X - X**2)
    assert pade_reconstruct(laurent_expand(r, 40), 1, 1) is NO_SOLUTION


def test_pade_precision_guard():
    with pytest.raises(PrecisionError):
        pade_reconstruct(laurent_expand(1 / (1 - X), 10), 4, 4)


def test_pade_zero_series():
    assert pade_reconstruct(LaurentTrunc(0, [0] * 30, 30), 2, 2) == RatFunc()


def test_no_solution_is_falsy():
    assert not NO_SOLUTION
    assert isinstance(NO_SOLUTION, NoSolution)


def test_thue_morse_not_rational_to_degree_ten():
    f = LaurentTrunc(0, thue_morse(60), 60)
    for d in range(11):
        assert pade_reconstruct(f, d, d) is NO_SOLUTION


def test_verify_certificate_exact():
    e1, _, _ = _pair(1 / (1 - X), 2, 3)
    assert verify_certificate(e1, 1 / (1 - X))
    assert not verify_certificate(e1, 1 / (1 + X))


def test_dependent_radices_refused():
    e2 = MahlerEquation(4, (-1 / ((1 - X) * (1 - X**2)),))
    res = certify_rational(THUE_MORSE, e2, [1])
    assert res == CertifyFailure("hypothesis_violated", res.details)


def test_conflicting_equations_refused():
    res = certify_rational(THUE_MORSE, MahlerEquation(3, (RatFunc(-1),)), [1])
    assert isinstance(res, CertifyFailure)
    assert res.reason == "seed_inconsistent"


def test_seed_violating_first_equation():
    e1, e2, seed = _pair(1 / (1 - X), 2, 3)
    seed[5] += 1
    res = certify_rational(e1, e2, seed)
    assert res.reason == "seed_inconsistent"


def test_caps_exhausted_reported():
    # the solution has degree 6 but the cap is 4
    r = 1 / (1 - X) ** 6
    e1, e2, seed = _pair(r, 2, 3)
    res = certify_rational(e1, e2, seed, n_max=64, d_max=4)
    assert res.reason == "caps_exhausted"


def test_failure_reason_validated():
    with pytest.raises(ValueError):
        CertifyFailure("gave_up")


def test_certify_is_fast_for_small_inputs():
    e1, e2, seed = _pair((1 + X) / (1 - 2 * X + 3 * X**2), 2, 5)
    t0 = time.perf_counter()
    assert isinstance(certify_rational(e1, e2, seed), RationalityCertificate)
    assert time.perf_counter() - t0 < 5

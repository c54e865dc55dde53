"""Rational reconstruction of common solutions and exact certification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PrecisionError
from .exactnum import LaurentTrunc, Poly, RatFunc, laurent_expand
from .linalg import nullspace, trivial_nullspace_mod
from .mahler import (
    Inconsistent,
    MahlerEquation,
    Underdetermined,
    apply_operator,
    normalize_equation,
    solve_series,
)
from .sysbuild import mult_independent

PADE_MARGIN = 16
LADDER_START = (64, 4)
MIN_PREFIX = 64


class NoSolution:
    """No rational function of the requested degrees matches the series."""

    def __repr__(self):
        return "NoSolution"

    def __bool__(self):
        return False


NO_SOLUTION = NoSolution()


@dataclass(frozen=True)
class RationalityCertificate:
    value: RatFunc
    eq1: MahlerEquation
    eq2: MahlerEquation
    terms_used: int
    degree_bounds: tuple[int, int]
    verified: tuple[bool, bool]
    prefix_matched: int


@dataclass(frozen=True)
class CertifyFailure:
    reason: str
    details: str = ""

    REASONS = ("hypothesis_violated", "seed_inconsistent", "caps_exhausted")

    def __post_init__(self):
        if self.reason not in self.REASONS:
            raise ValueError(f"unknown failure reason {self.reason!r}")


def pade_reconstruct(
    f: LaurentTrunc, dnum: int, dden: int, *, margin: int = PADE_MARGIN
) -> RatFunc | NoSolution:
    """P/Q with deg P <= dnum, deg Q <= dden and Q f - P = 0 to the full order of f."""
    v = f.true_valuation()
    if v is None:
        return RatFunc()
    g = [f.coeff(k) for k in range(v, f.order)]
    n = len(g)
    if n < dnum + dden + 2 + margin:
        raise PrecisionError(
            f"{n} terms cannot support degrees ({dnum}, {dden}); need {dnum + dden + 2 + margin}"
        )
    # rows past dnum only involve Q
    rows = [[g[e - t] if e - t >= 0 else Fraction(0) for t in range(dden + 1)] for e in range(dnum + 1, n)]
    if trivial_nullspace_mod(rows, dden + 1):
        return NO_SOLUTION
    xv = RatFunc(Poly.monomial(v), _reduced=True) if v >= 0 else RatFunc(1, Poly.monomial(-v))
    for qvec in sorted(nullspace(rows, dden + 1), key=lambda c: Poly(c).deg):
        q = Poly(qvec)
        pcoef = [sum((q[t] * g[e - t] for t in range(min(e, dden) + 1)), Fraction(0)) for e in range(dnum + 1)]
        cand = RatFunc(Poly(pcoef), q) * xv
        if laurent_expand(cand, f.order).agrees_with(f):
            return cand
    return NO_SOLUTION


def verify_certificate(eq: MahlerEquation, r: RatFunc) -> bool:
    """Exact test of S(r) = 0."""
    total = RatFunc()
    for i in range(eq.order + 1):
        b = eq.coefficient(i)
        if b:
            total = total + b * r.substitute_power(eq.p**i)
    return total.is_zero()


def _ladder(n_max: int, d_max: int):
    n, d = min(LADDER_START[0], n_max), min(LADDER_START[1], d_max)
    while True:
        yield n, d
        if n >= n_max and d >= d_max:
            return
        n, d = min(2 * n, n_max), min(2 * d, d_max)


def _extend(eqs: Sequence[MahlerEquation], seed, start: int, N: int):
    """Solve under the first equation, cross-check the rest; Inconsistent/Underdetermined pass through."""
    f = solve_series(eqs[0], seed, N, start)
    if isinstance(f, (Inconsistent, Underdetermined)):
        return f
    for other in eqs[1:]:
        res = apply_operator(other, f)
        if not res.is_zero():
            return Inconsistent(res.true_valuation(), f"residual under {other} is nonzero")
    return f


def certify_rational(
    eq1: MahlerEquation,
    eq2: MahlerEquation,
    seed,
    *,
    start: int = 0,
    n_max: int = 1024,
    d_max: int = 64,
) -> RationalityCertificate | CertifyFailure:
    """Reconstruct and certify the rational common solution determined by ``seed``."""
    p, q = eq1.p, eq2.p
    if not mult_independent(p, q):
        return CertifyFailure("hypothesis_violated", f"{p} and {q} are multiplicatively dependent")
    seed = list(seed)
    norm1, norm2 = normalize_equation(eq1), normalize_equation(eq2)
    for eqs, name in ((norm1 + norm2, "first"), (norm2 + norm1, "second")):
        base = _extend(eqs, seed, start, max(MIN_PREFIX, start + len(seed)))
        if isinstance(base, Underdetermined):
            return CertifyFailure(
                "seed_inconsistent",
                f"seed too short for the {name} equation: need {base.required}, got {base.given}",
            )
        if isinstance(base, Inconsistent):
            return CertifyFailure("seed_inconsistent", f"{name} equation: index {base.index}: {base.detail}")
        seed = [base.coeff(k) for k in range(start, base.order)]

    for n_terms, d in _ladder(n_max, d_max):
        f = _extend(norm1, seed, start, max(n_terms, start + len(seed)))
        try:
            cand = pade_reconstruct(f, d, d)
        except PrecisionError:
            continue
        if isinstance(cand, NoSolution):
            continue
        ok1, ok2 = verify_certificate(eq1, cand), verify_certificate(eq2, cand)
        if not (ok1 and ok2):
            continue
        prefix = max(f.order, MIN_PREFIX)
        ref = _extend(norm1, seed, start, prefix)
        if not laurent_expand(cand, prefix).agrees_with(ref):
            continue
        return RationalityCertificate(
            value=cand,
            eq1=eq1,
            eq2=eq2,
            terms_used=f.order,
            degree_bounds=(d, d),
            verified=(ok1, ok2),
            prefix_matched=prefix,
        )
    return CertifyFailure(
        "caps_exhausted", f"no certified rational function with N <= {n_max}, degree <= {d_max}"
    )

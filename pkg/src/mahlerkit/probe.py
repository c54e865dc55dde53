"""Floating-point probes: radius of convergence, outward continuation, growth bounds.

Values far outside the unit disk overflow doubles quickly (x^(p^j) with
j = 3 already reaches 2^625 for p = 5), so points are carried as
(log|x|, arg x) and function values as unit phase times exp(log-modulus).
All mantissas are ordinary doubles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import PoleProximityError, PrecisionError
from .exactnum import LaurentTrunc, Poly, RatFunc
from .mahler import MahlerEquation

POLE_TOL = 1e-9
_GOLDEN = (math.sqrt(5) - 1) / 2


class Pt(NamedTuple):
    """The complex number exp(s + i*theta)."""

    s: float
    theta: float

    @classmethod
    def of(cls, x: complex) -> "Pt":
        if x == 0:
            raise ValueError("the origin has no logarithm")
        return cls(math.log(abs(x)), cmath.phase(x))

    def power(self, k: float) -> "Pt":
        return Pt(self.s * k, self.theta * k)

    def to_complex(self) -> complex:
        try:
            return cmath.exp(complex(self.s, self.theta))
        except OverflowError:
            return complex(math.inf, math.inf)


@dataclass(frozen=True)
class Big:
    """phase * exp(logmod); phase has modulus 1, or is 0 for zero."""

    phase: complex
    logmod: float

    @classmethod
    def of(cls, z: complex) -> "Big":
        a = abs(z)
        if a == 0:
            return ZERO
        return cls(z / a, math.log(a))

    def __mul__(self, other: "Big") -> "Big":
        if not self.phase or not other.phase:
            return ZERO
        ph = self.phase * other.phase
        return Big(ph / abs(ph), self.logmod + other.logmod)

    def __truediv__(self, other: "Big") -> "Big":
        if not other.phase:
            raise ZeroDivisionError("division by zero")
        if not self.phase:
            return ZERO
        ph = self.phase / other.phase
        return Big(ph / abs(ph), self.logmod - other.logmod)

    def __neg__(self) -> "Big":
        return Big(-self.phase, self.logmod)

    def __add__(self, other: "Big") -> "Big":
        if not other.phase:
            return self
        if not self.phase:
            return other
        hi, lo = (self, other) if self.logmod >= other.logmod else (other, self)
        z = hi.phase + lo.phase * math.exp(lo.logmod - hi.logmod)
        a = abs(z)
        if a == 0:
            return ZERO
        return Big(z / a, hi.logmod + math.log(a))

    def __sub__(self, other: "Big") -> "Big":
        return self + (-other)

    def to_complex(self) -> complex:
        if not self.phase:
            return 0j
        try:
            return self.phase * math.exp(self.logmod)
        except OverflowError:
            return complex(math.copysign(math.inf, self.phase.real), math.copysign(math.inf, self.phase.imag))

    @property
    def log_abs(self) -> float:
        return self.logmod if self.phase else -math.inf


ZERO = Big(0j, -math.inf)


def eval_poly(p: Poly, pt: Pt) -> Big:
    return _eval_poly(p, pt)[0]


def _eval_poly(p: Poly, pt: Pt) -> tuple[Big, float]:
    """p at ``pt`` and log of sum |c_k| |x|^k (the scale cancellation is measured against)."""
    if p.is_zero():
        return ZERO, -math.inf
    if pt.s <= 0:
        z = pt.to_complex()
        r = abs(z)
        return Big.of(p.eval_complex(z)), math.log(sum(abs(float(c)) * r**k for k, c in enumerate(p.coeffs)))
    # Horner in 1/x, then restore x^deg in log form
    y = cmath.exp(complex(-pt.s, -pt.theta))
    ay = abs(y)
    acc = 0j
    mag = 0.0
    for c in p.coeffs:
        acc = acc * y + float(c)
        mag = mag * ay + abs(float(c))
    top = Big(cmath.exp(1j * (p.deg * pt.theta)), p.deg * pt.s)
    return Big.of(acc) * top, math.log(mag) + p.deg * pt.s


def eval_ratfunc(r: RatFunc, pt: Pt) -> Big:
    """r at ``pt``.

    Raises PoleProximityError when the denominator cancels to below 1e-9 of
    the size of its terms at ``pt``.
    """
    num = eval_poly(r.num, pt)
    den, den_scale = _eval_poly(r.den, pt)
    if den.log_abs < math.log(POLE_TOL) + den_scale:
        raise PoleProximityError(f"evaluation point {pt.to_complex()} is within tolerance of a pole")
    return num / den


# -- radius -------------------------------------------------------------------


def radius_estimate(f: LaurentTrunc) -> float:
    """Cauchy-Hadamard estimate from the top half of the known positive indices.

    Returns ``math.inf`` when no nonzero coefficient lies in that window.
    """
    if f.order - max(f.val, 0) < 16:
        raise PrecisionError("radius_estimate needs at least 16 known coefficients")
    lo = max(1, f.val, (f.order + 1) // 2)
    best = -math.inf
    for n in range(lo, f.order):
        c = f.coeff(n)
        if c:
            best = max(best, (math.log(abs(c.numerator)) - math.log(c.denominator)) / n)
    return math.inf if best == -math.inf else math.exp(-best)


# -- base evaluation ------------------------------------------------------------


def _series_evaluator(f: LaurentTrunc) -> Callable[[Pt], Big]:
    radius = radius_estimate(f)
    coeffs = [(k, float(f.coeff(k))) for k in range(f.val, f.order) if f.coeff(k)]

    def ev(pt: Pt) -> Big:
        if math.exp(pt.s) >= radius / 1.5:
            raise PrecisionError(
                "insufficient base precision: point lies outside the series' disk of convergence"
            )
        z = pt.to_complex()
        return Big.of(sum(c * z**k for k, c in coeffs))

    return ev


def base_evaluator(f_base: RatFunc | LaurentTrunc) -> Callable[[Pt], Big]:
    """Evaluator for g on the base annulus.

    A rational function is evaluated directly.  A series is first passed
    through exact Pade reconstruction; if that finds a rational function the
    series equals it to full order and the rational form is used, otherwise
    evaluation falls back to summing the series inside its disk.
    """
    if isinstance(f_base, RatFunc):
        return lambda pt: eval_ratfunc(f_base, pt)
    from .rationality import NoSolution, pade_reconstruct

    v = f_base.true_valuation()
    terms = 0 if v is None else f_base.order - v
    d = 1
    while 2 * d + 2 + 16 <= terms:
        cand = pade_reconstruct(f_base, d, d)
        if not isinstance(cand, NoSolution):
            return lambda pt: eval_ratfunc(cand, pt)
        d *= 2
    return _series_evaluator(f_base)


# -- continuation ------------------------------------------------------------------


def locate(pt: Pt, r0: float, p: int) -> tuple[int, Pt]:
    """j and xi with x = xi^(p^j), r0 <= |xi| < r0^p (principal branch)."""
    if r0 <= 1:
        raise ValueError("r0 must exceed 1")
    lr = math.log(r0)
    ratio = pt.s / lr
    if ratio < 1 - 1e-12:
        raise ValueError("|x| must be at least r0")
    j = max(0, math.floor(math.log(max(ratio, 1.0)) / math.log(p) + 1e-12))
    if p ** j > ratio * (1 + 1e-12):
        j -= 1
    return j, pt.power(1 / p**j)


def _norm_log(vals: Sequence[Big]) -> float:
    return max(v.log_abs for v in vals)


class _Chain(NamedTuple):
    value: Big
    base_log_norm: float
    step_logs: list[tuple[float, float]]  # (log||A(y)||, log|y|) per step


def _continue(eq: MahlerEquation, base: Callable[[Pt], Big], xi: Pt, j: int) -> _Chain:
    p, m = eq.p, eq.order
    if m == 0:
        return _Chain(ZERO, -math.inf, [])
    state = [base(xi.power(p**i)) for i in range(m)]
    base_norm = _norm_log(state)
    steps = []
    y = xi
    for _ in range(j):
        bs = [eval_ratfunc(b, y) if b else ZERO for b in eq.coeffs]
        new = ZERO
        for b, v in zip(bs, state):
            new = new - b * v
        a_norm = max(0.0, _logsumexp([b.log_abs for b in bs]))
        steps.append((a_norm, y.s))
        state = state[1:] + [new]
        y = y.power(p)
    return _Chain(state[0], base_norm, steps)


def _logsumexp(xs: Sequence[float]) -> float:
    xs = [x for x in xs if x != -math.inf]
    if not xs:
        return -math.inf
    top = max(xs)
    return top + math.log(sum(math.exp(x - top) for x in xs))


def continue_outward(
    eq: MahlerEquation, f_base: RatFunc | LaurentTrunc, x: complex, r0: float
) -> complex:
    """g(x) for |x| >= r0 by iterating the equation outward from the base annulus."""
    return continue_outward_big(eq, base_evaluator(f_base), Pt.of(x), r0).to_complex()


def continue_outward_big(eq: MahlerEquation, base: Callable[[Pt], Big], pt: Pt, r0: float) -> Big:
    j, xi = locate(pt, r0, eq.p)
    return _continue(eq, base, xi, j).value


# -- growth ------------------------------------------------------------------------


class GrowthSample(NamedTuple):
    x: complex
    abs_g: float
    bound: float
    log_abs_g: float
    log_bound: float


@dataclass
class GrowthReport:
    r0: float
    K: float
    M: int
    L: float
    d: float
    samples: list[GrowthSample] = field(default_factory=list)
    all_within_bound: bool = True
    skipped: int = 0
    log_L: float = 0.0


def _growth_degree(eq: MahlerEquation) -> int:
    degs = [b.deg_at_infinity() for b in eq.coeffs if b]
    return max([0, *degs])


def sample_points(r0: float, p: int, j_max: int, per_annulus: int) -> list[Pt]:
    """Deterministic points spread over the annuli A_0, ..., A_{j_max}."""
    lr = math.log(r0)
    pts = []
    for j in range(j_max + 1):
        for k in range(per_annulus):
            u = (k + 0.5) / per_annulus
            theta = 2 * math.pi * ((k * _GOLDEN) % 1.0) - math.pi
            pts.append(Pt(lr * p ** (j + u), theta))
    return pts


def growth_check(
    eq: MahlerEquation,
    f_base: RatFunc | LaurentTrunc,
    r0: float,
    j_max: int,
    samples_per_annulus: int,
    *,
    circle_points: int = 256,
    grid: tuple[int, int] = (8, 64),
) -> GrowthReport:
    """Empirical check of |g(x)| <= L (log|x|)^d |x|^(M/(p-1)) on the annuli.

    M is the growth degree of the companion matrix at infinity.  K and the
    base maximum G0 are suprema estimated on sample grids (circle |x| = r0
    for K, where the maximum modulus principle puts the sup of |A|/|x|^M;
    the base annulus for G0), enlarged by every point the continuation
    actually visits.
    """
    if eq.order == 0:
        raise ValueError("the zero equation has no growth to check")
    p = eq.p
    lr = math.log(r0)
    base = base_evaluator(f_base)
    M = _growth_degree(eq)

    log_k = 0.0
    for t in range(circle_points):
        pt = Pt(lr, 2 * math.pi * t / circle_points - math.pi)
        try:
            bs = [eval_ratfunc(b, pt) for b in eq.coeffs if b]
        except PoleProximityError:
            continue
        log_k = max(log_k, _logsumexp([b.log_abs for b in bs]) - M * pt.s)

    log_g0 = -math.inf
    nr, na = grid
    for a in range(nr):
        s = lr * p ** (a / max(nr - 1, 1) * (1 - 1e-9))
        for t in range(na):
            pt = Pt(s, 2 * math.pi * (t + 0.5 * (a % 2)) / na - math.pi)
            try:
                log_g0 = max(log_g0, _norm_log([base(pt.power(p**i)) for i in range(eq.order)]))
            except PoleProximityError:
                continue

    chains = []
    skipped = 0
    for pt in sample_points(r0, p, j_max, samples_per_annulus):
        j, xi = locate(pt, r0, p)
        try:
            ch = _continue(eq, base, xi, j)
        except PoleProximityError:
            skipped += 1
            continue
        chains.append((pt, ch))
        log_g0 = max(log_g0, ch.base_log_norm)
        for a_norm, ys in ch.step_logs:
            log_k = max(log_k, a_norm - M * ys)

    d = log_k / math.log(p)
    log_L = log_g0 - d * math.log(lr)
    report = GrowthReport(
        r0=r0, K=math.exp(log_k), M=M, L=_safe_exp(log_L), d=d, skipped=skipped, log_L=log_L
    )
    ok = True
    for pt, ch in chains:
        log_bound = log_L + d * math.log(pt.s) + M / (p - 1) * pt.s
        lg = ch.value.log_abs
        within = lg <= log_bound + 1e-9 * max(1.0, abs(log_bound))
        ok = ok and within
        report.samples.append(
            GrowthSample(pt.to_complex(), _safe_exp(lg), _safe_exp(log_bound), lg, log_bound)
        )
    report.all_within_bound = ok
    return report


def _safe_exp(v: float) -> float:
    if v == -math.inf:
        return 0.0
    try:
        return math.exp(v)
    except OverflowError:
        return math.inf


def pole_moduli(r: RatFunc) -> list[float]:
    if r.den.deg < 1:
        return []
    coeffs = [float(c) for c in reversed(r.den.coeffs)]
    return [float(abs(z)) for z in np.roots(coeffs)]


def choose_r0(eq: MahlerEquation, value: RatFunc | None = None) -> float:
    """Smallest convenient r0 (at least 2) with g and the coefficients holomorphic on |x| > r0/2."""
    rho = 0.0
    for b in eq.coeffs:
        rho = max([rho, *pole_moduli(b)])
    if value is not None:
        rho = max([rho, *pole_moduli(value)])
    return max(2.0, 2.1 * rho)

"""Linear dependence over Q(x) and the consistent first-order pair (A, B)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PrecisionError, SeedInconsistentError, SystemBuildError
from .exactnum import LaurentTrunc, Poly, RatFunc
from .linalg import nullspace, trivial_nullspace_mod
from .mahler import Inconsistent, MahlerEquation, Underdetermined, apply_operator, solve_series

DEFAULT_MARGIN = 16

Matrix = list[list[RatFunc]]


# -- radices ----------------------------------------------------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mult_independent(p: int, q: int) -> bool:
    """True iff p^a = q^b has no solution in positive integers."""
    if p < 2 or q < 2:
        raise ValueError("radices must be at least 2")
    fp, fq = _factor(p), _factor(q)
    if fp.keys() != fq.keys():
        return True
    primes = sorted(fp)
    # parallel exponent vectors <=> all cross products vanish
    a0, b0 = fp[primes[0]], fq[primes[0]]
    return any(fp[r] * b0 != fq[r] * a0 for r in primes[1:])


# -- dependence ---------------------------------------------------------------


@dataclass(frozen=True)
class DependenceResult:
    dependent: bool
    relation: tuple[Poly, ...] | None = None
    order: int = 0
    degree: int = 0

    @property
    def verdict(self) -> str:
        return "dependent" if self.dependent else "independent_up_to_bounds"


def _common_window(series: Sequence[LaurentTrunc]) -> tuple[int, int]:
    order = min(w.order for w in series)
    vals = [w.true_valuation() for w in series]
    known = [v for v in vals if v is not None and v < order]
    lo = min(known) if known else order
    return lo, order


def _relation_rows(series: Sequence[LaurentTrunc], d: int, lo: int, order: int):
    cols = len(series) * (d + 1)
    rows = []
    for e in range(lo, order):
        row = [Fraction(0)] * cols
        for k, w in enumerate(series):
            base = k * (d + 1)
            for t in range(d + 1):
                c = w.coeff(e - t) if e - t >= w.val else 0
                if c:
                    row[base + t] = c
        rows.append(row)
    return rows, cols


def _split(vec: Sequence[Fraction], ell: int, d: int) -> tuple[Poly, ...]:
    return tuple(Poly(vec[k * (d + 1):(k + 1) * (d + 1)]) for k in range(ell))


def lin_dep_test(
    series: Sequence[LaurentTrunc], d: int, *, margin: int = DEFAULT_MARGIN
) -> DependenceResult:
    """Search for polynomials a_k of degree <= d with sum a_k w_k = 0 mod x^N.

    ``N`` is the common truncation order.  Independence is only claimed up to
    (N, d); a relation, when found, holds to the full order by construction.
    """
    ell = len(series)
    if ell == 0:
        raise ValueError("empty family")
    lo, order = _common_window(series)
    for k, w in enumerate(series):
        if w.is_zero():
            rel = [Poly()] * ell
            rel[k] = Poly([1])
            return DependenceResult(True, tuple(rel), order, d)
    need = (d + 1) * ell + margin
    if order - lo < need:
        raise PrecisionError(
            f"{order - lo} known terms cannot support degree {d} for {ell} series (need {need})"
        )
    rows, cols = _relation_rows(series, d, lo, order)
    if trivial_nullspace_mod(rows, cols):
        return DependenceResult(False, None, order, d)
    basis = nullspace(rows, cols)
    if not basis:
        return DependenceResult(False, None, order, d)
    # several basis vectors are usually x-multiples of one relation; keep the lowest
    rel = min((_split(v, ell, d) for v in basis), key=lambda r: max(p.deg for p in r))
    _verify_relation(series, rel, order)
    return DependenceResult(True, rel, order, d)


def _verify_relation(series: Sequence[LaurentTrunc], rel: Sequence[Poly], order: int) -> None:
    total = None
    for a, w in zip(rel, series):
        if a.is_zero():
            continue
        term = LaurentTrunc.from_poly(a, order - min(0, w.val) + 1) * w
        total = term if total is None else total + term
    if total is not None and not total.truncate(min(order, total.order)).is_zero():
        raise AssertionError("nullspace vector does not annihilate the series")


def lift_dependence_check(
    series: Sequence[LaurentTrunc], m: int, d: int, *, margin: int = DEFAULT_MARGIN
) -> bool:
    """Do {w_k} and {w_k(x^m)} receive the same dependence verdict?

    Relations of degree <= d for w_k correspond to relations of degree <= m*d
    for the substituted family, so the lifted test uses that degree bound.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    base = lin_dep_test(series, d, margin=margin)
    lifted = lin_dep_test([w.substitute_power(m) for w in series], m * d, margin=margin)
    return base.dependent == lifted.dependent


# -- matrices over Q(x) ---------------------------------------------------------


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = RatFunc()
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_substitute(a: Matrix, k: int) -> Matrix:
    return [[e.substitute_power(k) for e in row] for row in a]


def mat_det(a: Matrix) -> RatFunc:
    m = [list(row) for row in a]
    n = len(m)
    det = RatFunc.coerce(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return RatFunc()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [m[r][j] - f * m[c][j] for j in range(n)]
    return det


def identity(n: int) -> Matrix:
    return [[RatFunc.coerce(1 if i == j else 0) for j in range(n)] for i in range(n)]


# -- the system --------------------------------------------------------------


@dataclass
class MahlerSystem:
    """sigma_1(g) = A g and sigma_2(g) = B g with sigma_1: x -> x^p, sigma_2: x -> x^q."""

    p: int
    q: int
    A: Matrix
    B: Matrix
    basis_tags: list[tuple[int, int]] = field(default_factory=list)
    basis: list[LaurentTrunc] = field(default_factory=list, repr=False)

    @property
    def n(self) -> int:
        return len(self.A)

    def validate(self) -> None:
        if mat_det(self.A).is_zero() or mat_det(self.B).is_zero():
            raise SystemBuildError("singular system matrix")
        if not check_consistency(self):
            raise SystemBuildError("A(x^q) B(x) != B(x^p) A(x)")


def check_consistency(sys: MahlerSystem) -> bool:
    """Exact test of A(x^q) B(x) = B(x^p) A(x)."""
    lhs = mat_mul(mat_substitute(sys.A, sys.q), sys.B)
    rhs = mat_mul(mat_substitute(sys.B, sys.p), sys.A)
    return lhs == rhs


def _common_solution(eq1: MahlerEquation, eq2: MahlerEquation, seed, start: int, N: int) -> LaurentTrunc:
    f = solve_series(eq1, seed, N, start)
    if isinstance(f, (Inconsistent, Underdetermined)):
        raise SeedInconsistentError(f, f"seed under the first equation: {f}")
    residual = apply_operator(eq2, f)
    if not residual.is_zero():
        bad = residual.true_valuation()
        raise SeedInconsistentError(
            Inconsistent(bad, "second equation residual is nonzero"),
            f"seed violates the second equation at x^{bad}",
        )
    return f


def _express(target: LaurentTrunc, basis: Sequence[LaurentTrunc], d_cap: int, margin: int) -> list[RatFunc]:
    """Coefficients c_l in Q(x) with target = sum c_l basis_l, found by degree escalation."""
    family = [target, *basis]
    d = 1
    while True:
        d = min(d, d_cap)
        res = lin_dep_test(family, d, margin=margin)
        if res.dependent and not res.relation[0].is_zero():
            a0 = RatFunc.coerce(res.relation[0])
            return [-RatFunc.coerce(a) / a0 for a in res.relation[1:]]
        if d == d_cap:
            raise PrecisionError(f"no representation with degree <= {d_cap}")
        d *= 2


def _residual_zero(target: LaurentTrunc, coeffs: Sequence[RatFunc], basis: Sequence[LaurentTrunc]) -> bool:
    from .exactnum import laurent_expand

    order = min(w.order for w in [target, *basis])
    total = target
    for c, w in zip(coeffs, basis):
        if c.is_zero():
            continue
        tv = w.true_valuation()
        if tv is None:
            continue
        total = total - laurent_expand(c, order + (c.valuation() or 0) - tv) * w
    top = min(order, total.order)
    return total.truncate(top).is_zero()


def build_system(
    eq1: MahlerEquation,
    eq2: MahlerEquation,
    seed,
    *,
    N: int = 256,
    d: int = 32,
    start: int = 0,
    margin: int = DEFAULT_MARGIN,
) -> MahlerSystem:
    """Construct the consistent pair on a basis of W = span sigma_1^m sigma_2^r f."""
    p, q = eq1.p, eq2.p
    m1, m2 = max(eq1.order, 1), max(eq2.order, 1)
    f = _common_solution(eq1, eq2, seed, start, N)
    g2 = _common_solution(eq2, eq1, [f.coeff(k) for k in range(start, f.order)], start, N)
    if not g2.agrees_with(f):
        raise SeedInconsistentError(Inconsistent(start, "solutions differ"), "the two equations extend the seed differently")
    lo = f.true_valuation()
    if lo is None:
        raise SeedInconsistentError(Inconsistent(start, "zero seed"), "the seed determines the zero series")
    need = 2 * (d + 1) * (m1 * m2 + 1) + margin
    if f.order - lo < need:
        raise PrecisionError(f"series order {f.order - lo} below the policy minimum {need} for d={d}")

    basis: list[LaurentTrunc] = []
    tags: list[tuple[int, int]] = []
    for m in range(m1):
        for r in range(m2):
            h = f.substitute_power(p**m * q**r) if (m or r) else f
            if basis:
                res = lin_dep_test([*basis, h], d, margin=margin)
                if res.dependent:
                    continue
            basis.append(h)
            tags.append((m, r))

    rows_a, rows_b = [], []
    for g in basis:
        for rows, k in ((rows_a, p), (rows_b, q)):
            target = g.substitute_power(k)
            coeffs = _express(target, basis, d, margin)
            if not _residual_zero(target, coeffs, basis):
                raise SystemBuildError("reconstructed row fails the series residual check")
            rows.append(coeffs)

    system = MahlerSystem(p, q, rows_a, rows_b, tags, basis)
    system.validate()
    return system

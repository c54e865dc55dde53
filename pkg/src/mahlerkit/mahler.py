"""Scalar Mahler equations: application, normalization and exact series solving.

An equation of radix p and order m is stored monic,

    f(x^(p^m)) + b_{m-1}(x) f(x^(p^(m-1))) + ... + b_0(x) f(x) = 0,

with ``coeffs = (b_0, ..., b_{m-1})``.  Order 0 is allowed and means f = 0;
it arises when normalization proves that only the zero series is a solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PrecisionError
from .exactnum import LaurentTrunc, Poly, RatFunc, laurent_expand, section_ratfunc, to_rational
from .exactnum.poly import poly_lcm


@dataclass(frozen=True)
class MahlerEquation:
    p: int
    coeffs: tuple[RatFunc, ...]

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 2:
            raise ValueError(f"radix must be an integer >= 2, got {self.p!r}")
        object.__setattr__(self, "coeffs", tuple(RatFunc.coerce(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, i: int) -> RatFunc:
        """b_i, with the leading b_m = 1."""
        if i == self.order:
            return RatFunc.coerce(1)
        return self.coeffs[i]

    def is_normalized(self) -> bool:
        return self.order == 0 or not self.coeffs[0].is_zero()

    def __str__(self):
        from .exprparse import format_ratfunc

        terms = [f"f(x^{self.p ** self.order})"] if self.order else ["f(x)"]
        for i in range(self.order - 1, -1, -1):
            b = self.coeffs[i]
            if b:
                arg = "x" if i == 0 else f"x^{self.p ** i}"
                terms.append(f"({format_ratfunc(b)})*f({arg})")
        return " + ".join(terms) + " = 0"


@dataclass(frozen=True)
class SolveBound:
    threshold: int
    polys: tuple[Poly, ...]


@dataclass(frozen=True)
class Inconsistent:
    """The seed violates the equation; ``index`` is the first offending coefficient index of f."""

    index: int
    detail: str = ""


@dataclass(frozen=True)
class Underdetermined:
    required: int
    given: int


def apply_operator(eq: MahlerEquation, f: LaurentTrunc) -> LaurentTrunc:
    """S(f) truncated to the order guaranteed by every term."""
    total: LaurentTrunc | None = None
    for i in range(eq.order + 1):
        b = eq.coefficient(i)
        if b.is_zero():
            continue
        fi = f.substitute_power(eq.p**i) if i else f
        vb = b.valuation()
        tv = fi.true_valuation()
        if tv is None:
            order = fi.order + vb
            term = LaurentTrunc(order, [], order)
        else:
            term = laurent_expand(b, fi.order + vb - tv) * fi
        total = term if total is None else total + term
    if total is None or total.order <= f.val:
        raise PrecisionError("insufficient precision: the residual carries no coefficients")
    return total


def _all_zero(eq: MahlerEquation) -> bool:
    return all(b.is_zero() for b in eq.coeffs)


def normalize_equation(eq: MahlerEquation) -> list[MahlerEquation]:
    """Equations with b_0 != 0 annihilating every solution of ``eq``.

    When b_0 = ... = b_{k-1} = 0 the equation only involves f at powers
    y = x^(p^k); sectioning each coefficient with radix p^k splits it into
    equations in y, each of lower order.
    """
    if eq.is_normalized():
        return [eq]
    if _all_zero(eq):
        # f(x^(p^m)) = 0 forces f = 0
        return [MahlerEquation(eq.p, ())]
    k = next(i for i, b in enumerate(eq.coeffs) if b)
    radix = eq.p**k
    secs = [section_ratfunc(eq.coefficient(i), radix) for i in range(k, eq.order + 1)]
    out: list[MahlerEquation] = []
    for j in range(radix):
        column = [secs[i][j] for i in range(len(secs))]
        top = max((i for i, c in enumerate(column) if c), default=None)
        if top is None:
            continue
        lead = column[top]
        new = MahlerEquation(eq.p, tuple(c / lead for c in column[:top]))
        for sub in normalize_equation(new):
            if sub not in out:
                out.append(sub)
    assert out, "every section vanished although the leading coefficient is 1"
    return out


def solve_bound(eq: MahlerEquation) -> SolveBound:
    """Clear denominators to sum P_i(x) f(x^(p^i)) = 0 and compute the recurrence threshold."""
    if not eq.is_normalized() or eq.order == 0:
        raise ValueError("solve_bound needs a normalized equation of positive order")
    lcm_den = Poly([1])
    for b in eq.coeffs:
        lcm_den = poly_lcm(lcm_den, b.den)
    polys = [
        (b.num * lcm_den.exact_div(b.den)) for b in (eq.coefficient(i) for i in range(eq.order + 1))
    ]
    den = 1
    for p in polys:
        for c in p.coeffs:
            den = math.lcm(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for p in polys for c in p.coeffs]
    scale = Fraction(den, math.gcd(*ints))
    polys = tuple(p * scale for p in polys)
    v0 = polys[0].ord0()
    n_star = 0
    for i in range(1, eq.order + 1):
        pi = polys[i]
        if pi:
            n_star = max(n_star, -((v0 - pi.ord0()) // -(eq.p**i - 1)))
    return SolveBound(n_star, polys)


class _Recurrence:
    """Coefficient extraction for sum_i P_i(x) f(x^(p^i))."""

    def __init__(self, p: int, polys: Sequence[Poly], start: int):
        self.start = start
        self.terms = []
        for i, poly in enumerate(polys):
            support = [(t, c) for t, c in enumerate(poly.coeffs) if c]
            if support:
                self.terms.append((p**i, support))
        self.v0 = polys[0].ord0()
        self.lead = polys[0][self.v0]

    def coefficient(self, e: int, f: dict[int, Fraction], skip: int | None = None) -> Fraction:
        acc = Fraction(0)
        for step, support in self.terms:
            for t, c in support:
                q, r = divmod(e - t, step)
                if r or q < self.start or q == skip and step == 1:
                    continue
                val = f.get(q)
                if val:
                    acc += c * val
        return acc

    def involved(self, e: int) -> int:
        """Largest index of f entering the coefficient of x^e."""
        top = self.start
        for step, support in self.terms:
            for t, _ in support:
                q, r = divmod(e - t, step)
                if not r and q >= self.start:
                    top = max(top, q)
        return top


def solve_series(
    eq: MahlerEquation, seed: Sequence, N: int, start: int = 0
) -> LaurentTrunc | Inconsistent | Underdetermined:
    """Extend ``seed`` (coefficients of x^start, x^(start+1), ...) to a solution mod x^N."""
    seed = [to_rational(s) for s in seed]
    if eq.order == 0:
        for i, s in enumerate(seed):
            if s:
                return Inconsistent(start + i, "the equation only admits f = 0")
        return LaurentTrunc(start, [0] * max(0, N - start), max(N, start))
    bound = solve_bound(eq)
    n_star = bound.threshold
    required = n_star - start + 1
    if len(seed) < required:
        return Underdetermined(required, len(seed))
    rec = _Recurrence(eq.p, bound.polys, start)
    f: dict[int, Fraction] = {}
    for i in range(max(0, required)):
        f[start + i] = seed[i]
    # low-index constraints only involve indices <= n_star
    e_min = min(step * start + support[0][0] for step, support in rec.terms)
    for e in range(e_min, n_star + rec.v0 + 1):
        if rec.coefficient(e, f):
            return Inconsistent(rec.involved(e), f"coefficient of x^{e} in the equation is nonzero")
    top = max(N, start + len(seed))
    for n in range(max(start, n_star + 1), top):
        rest = rec.coefficient(n + rec.v0, f, skip=n)
        value = -rest / rec.lead
        k = n - start
        if k < len(seed) and seed[k] != value:
            return Inconsistent(n, f"seed value {seed[k]} differs from the forced value {value}")
        if value:
            f[n] = value
    length = max(0, N - start)
    return LaurentTrunc(start, [f.get(start + i, 0) for i in range(length)], max(N, start))

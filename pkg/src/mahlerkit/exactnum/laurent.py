"""Truncated Laurent series with explicit precision bookkeeping."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..errors import PrecisionError
from .poly import Poly, to_rational
from .ratfunc import RatFunc

_ZERO = Fraction(0)


class LaurentTrunc:
    """Series sum_{k=val}^{order-1} c_k x^k + O(x^order).

    ``coeffs[i]`` is the coefficient of x^(val + i).  A series with
    ``order <= val`` carries no coefficient knowledge at all.
    """

    __slots__ = ("val", "coeffs", "order")

    def __init__(self, val: int, coeffs: Iterable, order: int | None = None):
        cs = tuple(to_rational(c) for c in coeffs)
        if order is None:
            order = val + len(cs)
        if len(cs) != max(0, order - val):
            raise ValueError(
                f"{len(cs)} coefficients do not cover exponents {val}..{order - 1}"
            )
        self.val = val
        self.coeffs = cs
        self.order = order

    @classmethod
    def _raw(cls, val: int, cs: tuple, order: int) -> "LaurentTrunc":
        obj = object.__new__(cls)
        obj.val, obj.coeffs, obj.order = val, cs, order
        return obj

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "LaurentTrunc":
        return cls(0, [p[k] for k in range(max(0, order))], max(0, order))

    # -- queries -------------------------------------------------------
    def __len__(self):
        return len(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        if k >= self.order:
            raise PrecisionError(f"coefficient of x^{k} is beyond the truncation order {self.order}")
        if k < self.val:
            return _ZERO
        return self.coeffs[k - self.val]

    def true_valuation(self) -> int | None:
        """First exponent with a nonzero coefficient, or None if none is known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.val + i
        return None

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not any(self.coeffs)

    def _known_val(self) -> int:
        # valuation lower bound usable for precision arithmetic
        tv = self.true_valuation()
        return self.order if tv is None else tv

    def __eq__(self, other):
        if not isinstance(other, LaurentTrunc):
            return NotImplemented
        if self.order != other.order:
            return False
        lo = min(self.val, other.val)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, self.order))

    def __hash__(self):
        tv = self.true_valuation()
        cs = () if tv is None else self.coeffs[tv - self.val:]
        return hash((self.order, tv, cs))

    def agrees_with(self, other: "LaurentTrunc", upto: int | None = None) -> bool:
        """Coefficientwise equality on the common known range."""
        top = min(self.order, other.order)
        if upto is not None:
            top = min(top, upto)
        lo = min(self.val, other.val)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, top))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"LaurentTrunc(val={self.val}, [{shown}{more}], order={self.order})"

    # -- precision handling --------------------------------------------
    def truncate(self, order: int) -> "LaurentTrunc":
        if order > self.order:
            raise PrecisionError(f"cannot extend order {self.order} to {order}")
        if order <= self.val:
            return LaurentTrunc._raw(order, (), order)
        return LaurentTrunc._raw(self.val, self.coeffs[: order - self.val], order)

    def with_val(self, val: int) -> "LaurentTrunc":
        """Same series stored from exponent ``val`` (zero padding or dropping known zeros)."""
        if val <= self.val:
            pad = (_ZERO,) * (self.val - val)
            return LaurentTrunc._raw(val, pad + self.coeffs, self.order)
        if any(self.coeffs[: val - self.val]):
            raise ValueError("dropping nonzero leading coefficients")
        return LaurentTrunc._raw(min(val, self.order), self.coeffs[val - self.val:], self.order)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "LaurentTrunc") -> "LaurentTrunc":
        if not isinstance(other, LaurentTrunc):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.val, other.val)
        if order <= lo:
            return LaurentTrunc._raw(order, (), order)
        cs = [_ZERO] * (order - lo)
        for i, c in enumerate(self.coeffs[: order - self.val]):
            cs[self.val - lo + i] = c
        for i, c in enumerate(other.coeffs[: order - other.val]):
            cs[other.val - lo + i] += c
        return LaurentTrunc._raw(lo, tuple(cs), order)

    def __neg__(self):
        return LaurentTrunc._raw(self.val, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentTrunc":
        c = to_rational(c)
        return LaurentTrunc._raw(self.val, tuple(c * a for a in self.coeffs), self.order)

    def shift(self, k: int) -> "LaurentTrunc":
        """Multiply by x^k."""
        return LaurentTrunc._raw(self.val + k, self.coeffs, self.order + k)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentTrunc):
            return NotImplemented
        v1, v2 = self._known_val(), other._known_val()
        order = min(self.order + v2, other.order + v1)
        lo = v1 + v2
        if order <= lo:
            return LaurentTrunc._raw(order, (), order)
        a = self.coeffs[v1 - self.val:]
        b = other.coeffs[v2 - other.val:]
        n = order - lo
        # integer convolution over a common denominator; far cheaper than Fraction sums
        ia, da = _integerize(a[:n])
        ib, db = _integerize(b[:n])
        acc = [0] * n
        nzb = [(j, bj) for j, bj in enumerate(ib) if bj]
        for i, ai in enumerate(ia):
            if not ai:
                continue
            for j, bj in nzb:
                if i + j >= n:
                    break
                acc[i + j] += ai * bj
        den = da * db
        return LaurentTrunc._raw(lo, tuple(Fraction(c, den) for c in acc), order)

    __rmul__ = __mul__

    # -- radix operators -------------------------------------------------
    def substitute_power(self, m: int) -> "LaurentTrunc":
        """f(x^m); the stored order is m*(order-1)+1."""
        if m < 1:
            raise ValueError("substitution exponent must be positive")
        if m == 1:
            return self
        order = m * (self.order - 1) + 1
        if not self.coeffs:
            return LaurentTrunc._raw(order, (), order)
        val = m * self.val
        cs = [_ZERO] * (order - val)
        for i, c in enumerate(self.coeffs):
            cs[m * i] = c
        return LaurentTrunc._raw(val, tuple(cs), order)

    def section(self, m: int, j: int) -> "LaurentTrunc":
        """Series c with c_k = f_{m*k + j}; order floor((order-1-j)/m) + 1."""
        if m < 2:
            raise ValueError("section radix must be at least 2")
        if not 0 <= j < m:
            raise ValueError("section index out of range")
        order = (self.order - 1 - j) // m + 1
        val = -((j - self.val) // m)  # ceil((val - j) / m)
        if order <= val:
            return LaurentTrunc._raw(order, (), order)
        cs = tuple(self.coeff(m * k + j) for k in range(val, order))
        return LaurentTrunc._raw(val, cs, order)


def _integerize(cs) -> tuple[list[int], int]:
    den = 1
    for c in cs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in cs], den


def substitute_power(f: LaurentTrunc, m: int) -> LaurentTrunc:
    if m < 2:
        raise ValueError("substitution exponent must be at least 2")
    return f.substitute_power(m)


def section_series(f: LaurentTrunc, m: int, j: int) -> LaurentTrunc:
    return f.section(m, j)


def power_series_div(num: Poly, den: Poly, n: int) -> list[Fraction]:
    """First n coefficients of num/den with den(0) != 0."""
    d0 = den[0]
    if not d0:
        raise ZeroDivisionError("series division by a denominator vanishing at 0")
    dc = den.coeffs
    dl = len(dc)
    out: list[Fraction] = []
    inv = 1 / d0
    for k in range(n):
        acc = num[k]
        for t in range(1, min(k, dl - 1) + 1):
            acc -= dc[t] * out[k - t]
        out.append(acc * inv)
    return out


def laurent_expand(r: RatFunc, order: int) -> LaurentTrunc:
    """Expansion of r at the origin modulo x^order."""
    r = RatFunc.coerce(r)
    if r.is_zero():
        val = min(0, order)
        return LaurentTrunc._raw(val, (_ZERO,) * (order - val), order)
    a, b = r.num.ord0(), r.den.ord0()
    val = a - b
    if order <= val:
        return LaurentTrunc._raw(order, (), order)
    cs = power_series_div(r.num.shift(-a), r.den.shift(-b), order - val)
    return LaurentTrunc._raw(val, tuple(cs), order)

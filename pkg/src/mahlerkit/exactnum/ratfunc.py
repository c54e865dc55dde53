"""Reduced rational functions over Q and their radix sections."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, interpolate, poly_gcd, resultant, to_rational


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic.

    Zero is stored as 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        num = num if isinstance(num, Poly) else Poly([num])
        den = den if isinstance(den, Poly) else Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly([1])
            else:
                g = poly_gcd(num, den)
                if g.deg > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.lc
                if lc != 1:
                    num = num * (1 / lc)
                    den = den * (1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls(value, _reduced=True)
        if isinstance(value, (int, Fraction, str)):
            return cls(Poly([to_rational(value)]), _reduced=True)
        raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x(), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.deg == 0

    def valuation(self) -> int | None:
        """Order at the origin (negative for a pole); None for zero."""
        if self.num.is_zero():
            return None
        return self.num.ord0() - self.den.ord0()

    def deg_at_infinity(self) -> int | None:
        if self.num.is_zero():
            return None
        return self.num.deg - self.den.deg

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        from ..exprparse import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        from ..exprparse import format_ratfunc

        return format_ratfunc(self)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    # -- substitution and evaluation -------------------------------------
    def substitute_power(self, m: int) -> "RatFunc":
        """r(x^m); coprimality and monicity survive the substitution."""
        if m == 1:
            return self
        return RatFunc(self.num.compose_power(m), self.den.compose_power(m), _reduced=True)

    def __call__(self, value):
        d = self.den(value)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    def eval_complex(self, z: complex) -> complex:
        return self.num.eval_complex(z) / self.den.eval_complex(z)


def section_ratfunc(a: RatFunc, m: int) -> list[RatFunc]:
    """Unique (c^0, ..., c^{m-1}) with a(x) = sum_j x^j c^j(x^m).

    The denominator is replaced by D(x^m), where D(w) = Res_z(z^m - w, den(z)),
    which is a multiple of den(x); the numerator is then split by exponent class.
    """
    if m < 2:
        raise ValueError("section radix must be at least 2")
    if a.is_zero():
        return [RatFunc() for _ in range(m)]
    den = a.den
    e = den.deg
    zm = Poly.monomial(m)
    points = []
    for w in range(e + 1):
        wq = Fraction(w)
        points.append((wq, resultant(zm - wq, den)))
    big_d = interpolate(points)
    cofactor = big_d.compose_power(m).exact_div(den)
    num = a.num * cofactor
    return [RatFunc(num.section(m, j), big_d) for j in range(m)]


def assemble_sections(sections: list[RatFunc]) -> RatFunc:
    """Inverse of section_ratfunc: sum_j x^j c^j(x^m)."""
    m = len(sections)
    total = RatFunc()
    for j, c in enumerate(sections):
        if c:
            total = total + RatFunc(Poly.monomial(j), _reduced=True) * c.substitute_power(m)
    return total

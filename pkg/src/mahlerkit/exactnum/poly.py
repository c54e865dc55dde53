"""Dense univariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class Poly:
    """Immutable dense polynomial; ``coeffs[k]`` is the coefficient of x^k.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs must already hold Fractions
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    # -- basic queries -------------------------------------------------
    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def ord0(self) -> int | None:
        """Order of vanishing at 0; ``None`` for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] += c
        return Poly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._raw([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    cs[i + j] += ai * bj
        return Poly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.deg
        lcb = other.lc
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lcb
            quo[k - db] = q
            for i in range(db + 1):
                rem[k - db + i] -= q * bc[i]
        return Poly._raw(quo), Poly._raw(rem[:db] if db > 0 else [])

    def __divmod__(self, other):
        return self.divmod(self._coerce(other))

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Poly._raw([c / lc for c in self.coeffs])

    # -- structural operations ----------------------------------------
    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def compose_power(self, m: int) -> "Poly":
        """Return p(x^m)."""
        if m < 1:
            raise ValueError("exponent must be positive")
        if m == 1 or len(self.coeffs) <= 1:
            return self
        cs = [Fraction(0)] * ((len(self.coeffs) - 1) * m + 1)
        for k, c in enumerate(self.coeffs):
            cs[k * m] = c
        return Poly._raw(cs)

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0) or divide by x^-k when that is exact."""
        if k >= 0:
            return Poly._raw([Fraction(0)] * k + list(self.coeffs)) if self.coeffs else self
        if any(self.coeffs[: -k]):
            raise ArithmeticError("x^%d does not divide the polynomial" % -k)
        return Poly._raw(list(self.coeffs[-k:]))

    def section(self, m: int, j: int) -> "Poly":
        """Polynomial c with c(y) = sum_t coeff[m*t + j] y^t."""
        return Poly._raw(list(self.coeffs[j::m]))

    def reverse(self, d: int | None = None) -> "Poly":
        """x^d * p(1/x), with d defaulting to deg p."""
        if d is None:
            d = self.deg
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly._raw(cs[: d + 1][::-1])

    def content_scale(self) -> Fraction:
        """Positive rational s such that s*p has coprime integer coefficients."""
        from math import gcd, lcm

        if not self.coeffs:
            return Fraction(1)
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        g = 0
        for c in self.coeffs:
            g = gcd(g, c.numerator * (den // c.denominator))
        return Fraction(den, g)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
        # keep coefficient growth in check
        if b:
            b = b.monic()
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant via the Euclidean remainder sequence."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    result = Fraction(1)
    while True:
        m, n = f.deg, g.deg
        if n == 0:
            return result * g.lc ** m
        r = f % g
        if r.is_zero():
            return Fraction(0)
        if (m * n) % 2:
            result = -result
        result *= g.lc ** (m - r.deg)
        f, g = g, r


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Newton interpolation through distinct nodes."""
    xs = [to_rational(x) for x, _ in points]
    table = [to_rational(y) for _, y in points]
    n = len(xs)
    coefs = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)
        ]
        coefs.append(table[0])
    result = Poly([coefs[-1]])
    for k in range(n - 2, -1, -1):
        result = result * Poly([-xs[k], 1]) + coefs[k]
    return result

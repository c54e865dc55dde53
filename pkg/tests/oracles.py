"""Reference computations that share no code with the package.

Everything here works on plain lists of Fractions with schoolbook loops, so
agreement with the library is evidence rather than a tautology.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


def conv(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def stretch(a, m):
    """Coefficient list of a(x^m)."""
    if not a:
        return []
    out = [Fraction(0)] * (m * (len(a) - 1) + 1)
    for i, x in enumerate(a):
        out[m * i] = x
    return out


def series_div(num, den, n):
    """First n coefficients of num/den, den[0] != 0."""
    out = []
    for k in range(n):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for t in range(1, min(k, len(den) - 1) + 1):
            acc -= den[t] * out[k - t]
        out.append(acc / den[0])
    return out


def residual_coeff(polys, p, f, e):
    """Coefficient of x^e in sum_i P_i(x) f(x^(p^i)) with f a dict n -> value."""
    total = Fraction(0)
    for i, poly in enumerate(polys):
        step = p**i
        for t, c in enumerate(poly):
            if c and (e - t) >= 0 and (e - t) % step == 0:
                total += c * f.get((e - t) // step, 0)
    return total


def brute_force_solve(polys, p, seed, n_terms):
    """Solve sum_i P_i f(x^(p^i)) = 0 index by index from x^0.

    The unknown f_n is found from the coefficient of x^(n + v0), which is
    affine in f_n: evaluate it at f_n = 0 and f_n = 1.  When the slope is
    zero the value comes from the seed.
    """
    v0 = next(t for t, c in enumerate(polys[0]) if c)
    f: dict[int, Fraction] = {}
    for n in range(n_terms):
        e = n + v0
        f[n] = Fraction(0)
        r0 = residual_coeff(polys, p, f, e)
        f[n] = Fraction(1)
        slope = residual_coeff(polys, p, f, e) - r0
        if slope:
            f[n] = -r0 / slope
        else:
            f[n] = Fraction(seed[n])
    return [f[n] for n in range(n_terms)]


def sectioning_oracle(coeffs, m, j):
    """Coefficients of the j-th radix-m section of a power series given as a list."""
    return coeffs[j::m]


def thue_morse(n):
    return [(-1) ** bin(k).count("1") for k in range(n)]


def baum_sweet(n):
    """1 when the binary expansion of k has no odd-length block of zeros."""
    out = [1]
    for k in range(1, n):
        out.append(int(all(len(b) % 2 == 0 for b in re.findall("0+", bin(k)[2:]))))
    return out


def integer_clear(coeff_lists):
    """Scale several coefficient lists by a common factor into integers."""
    den = 1
    for lst in coeff_lists:
        for c in lst:
            den = math.lcm(den, Fraction(c).denominator)
    return [[Fraction(c) * den for c in lst] for lst in coeff_lists]

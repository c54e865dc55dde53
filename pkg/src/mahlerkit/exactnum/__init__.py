"""Exact arithmetic tower: rationals, polynomials, rational functions, truncated Laurent series.

Rationals are :class:`fractions.Fraction` throughout.
"""

from fractions import Fraction as Rational

from .laurent import (
    LaurentTrunc,
    laurent_expand,
    power_series_div,
    section_series,
    substitute_power,
)
from .poly import Poly, interpolate, poly_gcd, poly_lcm, resultant, to_rational
from .ratfunc import RatFunc, assemble_sections, section_ratfunc

__all__ = [
    "Rational",
    "Poly",
    "RatFunc",
    "LaurentTrunc",
    "laurent_expand",
    "power_series_div",
    "section_series",
    "section_ratfunc",
    "assemble_sections",
    "substitute_power",
    "poly_gcd",
    "poly_lcm",
    "resultant",
    "interpolate",
    "to_rational",
]

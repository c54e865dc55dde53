"""Exact nullspaces over Q with a modular rank filter."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from . import kernels

Row = Sequence[Fraction]


def residue(c: Fraction, prime: int = kernels.PRIME) -> int | None:
    """Image of ``c`` in Z/prime, or None when the denominator vanishes there."""
    den = c.denominator % prime
    if not den:
        return None
    return c.numerator * pow(den, -1, prime) % prime


def trivial_nullspace_mod(rows: Sequence[Row], ncols: int, prime: int = kernels.PRIME) -> bool:
    """True when full column rank is certified modulo ``prime``.

    Rank can only drop under reduction mod a prime, so full rank mod p
    implies full rank over Q.  False means "not certified", nothing more.
    """
    if len(rows) < ncols:
        return False
    res_rows = []
    for row in rows:
        rr = []
        for c in row:
            v = residue(c, prime)
            if v is None:
                return False
            rr.append(v)
        res_rows.append(rr)
    return kernels.rank_mod(res_rows, ncols, prime) == ncols


def _insert(pivots: dict[int, dict[int, Fraction]], row: dict[int, Fraction]) -> bool:
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            inv = 1 / row[c]
            pivots[c] = {k: v * inv for k, v in row.items()}
            return True
        f = row[c]
        for k, v in piv.items():
            nv = row.get(k, 0) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return False


def _sparse(row: Row) -> dict[int, Fraction]:
    return {k: Fraction(v) for k, v in enumerate(row) if v}


def _basis_from_pivots(pivots: dict[int, dict[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    for pc in sorted(pivots, reverse=True):
        row = pivots[pc]
        for q in sorted(k for k in row if k != pc and k in pivots):
            f = row.get(q)
            if not f:
                continue
            for k, v in pivots[q].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pc, row in pivots.items():
            coef = row.get(fc)
            if coef:
                v[pc] = -coef
        basis.append(v)
    return basis


def _nullspace_direct(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        _insert(pivots, _sparse(row))
        if len(pivots) == ncols:
            return []
    return _basis_from_pivots(pivots, ncols)


def _integer_row(row: Row) -> list[int]:
    """``row`` scaled to integers; the scaling leaves the nullspace unchanged."""
    den = 1
    for c in row:
        if c and c.denominator != 1:
            den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) if c else 0 for c in row]


def _dot(row: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(row, v) if a and b)


def nullspace(rows: Sequence[Row], ncols: int, *, head: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : row . v = 0 for every row}.

    The first ``head`` rows (default ncols + 8) are eliminated directly; the
    remaining rows only refine that candidate space, which keeps the work
    proportional to the nullity when the system is tall.
    """
    if head is None:
        head = ncols + 8
    basis = _nullspace_direct(rows[:head], ncols)
    rest = rows[head:]
    if not basis or not rest:
        return basis
    ibasis = [_integer_row(v) for v in basis]
    images = [[_dot(r, v) for v in ibasis] for r in map(_integer_row, rest)]
    bad = [img for img in images if any(img)]
    if not bad:
        return basis
    combos = _nullspace_direct(bad, len(basis))
    return [
        [sum((c * b[i] for c, b in zip(combo, ibasis) if c), Fraction(0)) for i in range(ncols)]
        for combo in combos
    ]

"""Nullspaces over Q and the modular rank filter, both kernel backends."""

import importlib
import random
from fractions import Fraction

import pytest

from mahlerkit import _kernels_py, kernels
from mahlerkit.linalg import nullspace, residue, trivial_nullspace_mod

BACKENDS = [_kernels_py.rank_mod]
try:
    BACKENDS.append(importlib.import_module("mahlerkit._kernels").rank_mod)
except ImportError:
    pass


def _rank_exact(rows, ncols):
    """Fraction Gaussian elimination, written out independently."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("rank_mod", BACKENDS)
def test_rank_mod_matches_exact_rank(rank_mod):
    rng = random.Random(7)
    p = kernels.PRIME
    for _ in range(150):
        nc = rng.randint(1, 8)
        k = rng.randint(0, nc)
        gens = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(k)]
        rows = [
            [sum(rng.randint(-3, 3) * g[i] for g in gens) for i in range(nc)]
            for _ in range(rng.randint(1, 12))
        ]
        assert rank_mod([[v % p for v in r] for r in rows], nc, p) == _rank_exact(rows, nc)


def test_backends_agree_on_large_input():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    rng = random.Random(3)
    p = kernels.PRIME
    rows = [[rng.randrange(p) for _ in range(40)] for _ in range(60)]
    rows[10] = [(a + b) % p for a, b in zip(rows[0], rows[1])]
    assert BACKENDS[0](rows, 40, p) == BACKENDS[1](rows, 40, p) == 40


def test_residue():
    p = kernels.PRIME
    assert residue(Fraction(1, 2)) * 2 % p == 1
    assert residue(Fraction(1, p)) is None


def test_full_rank_certified():
    rows = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert trivial_nullspace_mod(rows, 2)
    assert nullspace(rows, 2) == []


def test_deficient_rank_not_certified():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert not trivial_nullspace_mod(rows, 2)
    (v,) = nullspace(rows, 2)
    assert v[0] + 2 * v[1] == 0


def test_tall_system_refinement():
    rng = random.Random(11)
    nc = 5
    rows = [[Fraction(rng.randint(-5, 5)) for _ in range(nc)] for _ in range(3)]
    # many later rows are combinations, one is not
    for _ in range(40):
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        rows.append([a * x + b * y for x, y in zip(rows[0], rows[1])])
    rows.append([Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(7)])
    basis = nullspace(rows, nc, head=3)
    assert len(basis) == nc - _rank_exact(rows, nc)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_pure_backend_forced(monkeypatch):
    monkeypatch.setenv("MAHLERKIT_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("MAHLERKIT_PURE")
        importlib.reload(kernels)

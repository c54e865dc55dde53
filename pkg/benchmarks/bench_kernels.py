"""Compiled vs pure-Python modular rank, plus an end-to-end dependence test.

Run with ``python3 benchmarks/bench_kernels.py [--sizes 40 80 160] [--repeat 3]``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from mahlerkit import _kernels_py, kernels

try:
    from mahlerkit import _kernels as _compiled
except ImportError:
    _compiled = None


def _matrix(n, rng):
    p = kernels.PRIME
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n + 8)]


def bench_rank(sizes, repeat):
    rng = random.Random(0)
    print(f"{'n':>5} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        rows = _matrix(n, rng)
        t_py = min(timeit.repeat(lambda: _kernels_py.rank_mod(rows, n, kernels.PRIME), number=1, repeat=repeat))
        if _compiled is None:
            print(f"{n:>5} {t_py:>12.4f} {'n/a':>13} {'':>8}")
            continue
        t_c = min(timeit.repeat(lambda: _compiled.rank_mod(rows, n, kernels.PRIME), number=1, repeat=repeat))
        print(f"{n:>5} {t_py:>12.4f} {t_c:>13.4f} {t_py / t_c:>7.1f}x")


_END_TO_END = """
import time
from mahlerkit import RatFunc, lin_dep_test
from mahlerkit.exactnum import laurent_expand
from mahlerkit.kernels import BACKEND
X = RatFunc.x()
from mahlerkit import LaurentTrunc, MahlerEquation, solve_series
# independent over Q(x), so every call is settled by the modular rank filter
tm = solve_series(MahlerEquation(2, (-1 / (1 - X),)), [1], 400)
bs = solve_series(MahlerEquation(2, (RatFunc(-1), X)), [1], 400)
fam = [tm, bs, laurent_expand(1 / (1 - X - X**3), 400)]
t0 = time.perf_counter()
for d in range(0, 100, 8):
    lin_dep_test(fam, d)
print(f"{BACKEND:>9}: lin_dep_test sweep d=0..96 on 3 series x 400 terms: {time.perf_counter() - t0:.3f}s")
"""


def bench_end_to_end():
    sys.stdout.flush()
    for pure in ("", "1"):
        env = dict(os.environ, MAHLERKIT_PURE=pure)
        subprocess.run([sys.executable, "-c", _END_TO_END], env=env, check=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 160, 320])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend selected at import: {kernels.BACKEND}")
    bench_rank(args.sizes, args.repeat)
    bench_end_to_end()


if __name__ == "__main__":
    main()

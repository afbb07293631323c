"""Compare the compiled and pure-Python kernels.

Kernel timings call both implementations directly on identical inputs; the
end-to-end timing runs the same workload in a child process once with each
backend selected through ``PLNN_PURE``.

    python benchmarks/bench_kernels.py [--repeat N] [--seed N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from plnn._kernels import _pure

try:
    from plnn._kernels import _fast
except ImportError:
    _fast = None

WORKLOAD = r"""
import random, time
from plnn import BACKEND, decompose, equivalent, gen_scaled
from plnn.sampling import rand_network, rand_positive_scales
rng = random.Random(int(__import__("sys").argv[1]))
t0 = time.perf_counter()
for _ in range(20):
    net = rand_network(rng, (2, 3, 3, 1))
    decompose(net, prune=True)
    other = gen_scaled(net, 1, rand_positive_scales(rng, 3))
    assert equivalent(net, other)
print(BACKEND, time.perf_counter() - t0)
"""


def _lps(rng, count):
    out = []
    for _ in range(count):
        m, n = rng.randint(3, 8), rng.randint(6, 16)
        A = [[Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(n)] for _ in range(m)]
        b = [Fraction(rng.randint(-6, 6)) for _ in range(m)]
        c = [Fraction(rng.randint(-3, 6)) for _ in range(n)]
        out.append((A, b, c))
    return out


def _envelopes(rng, count):
    out = []
    for _ in range(count):
        d = rng.randint(1, 3)
        rows = [[rng.randint(-10**6, 10**6) for _ in range(d + 1)] for _ in range(rng.randint(4, 64))]
        pt = [Fraction(rng.randint(-99, 99), rng.randint(1, 30)) for _ in range(d)]
        den = 1
        for v in pt:
            den = den * v.denominator
        out.append((rows, [int(v * den) for v in pt] + [den]))
    return out


def _time(fn, cases, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for case in cases:
            fn(*case)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cases", type=int, default=300)
    args = ap.parse_args(argv)

    if _fast is None:
        print("compiled kernels are not built; only the pure backend is available")
        return 1
    rng = random.Random(args.seed)
    lps = _lps(rng, args.cases)
    envs = _envelopes(rng, args.cases * 10)
    for A, b, c in lps[:50]:
        assert _pure.simplex_eq(A, b, c)[0] == _fast.simplex_eq(A, b, c)[0]

    print(f"{'kernel':<22}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for name, fn_pure, fn_fast, cases in (
        ("simplex_eq", _pure.simplex_eq, _fast.simplex_eq, lps),
        ("max_affine_int", _pure.max_affine_int, _fast.max_affine_int, envs),
    ):
        tp = _time(fn_pure, cases, args.repeat)
        tf = _time(fn_fast, cases, args.repeat)
        print(f"{name:<22}{tp:>12.4f}{tf:>14.4f}{tp / tf:>9.2f}x")

    times = {}
    for pure in ("1", "0"):
        env = dict(os.environ, PLNN_PURE=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD, str(args.seed)],
                             capture_output=True, text=True, env=env, check=True).stdout.split()
        times[out[0]] = float(out[1])
    print(f"{'decompose + equivalent':<22}{times['pure']:>12.4f}{times['compiled']:>14.4f}"
          f"{times['pure'] / times['compiled']:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

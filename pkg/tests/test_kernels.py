"""The compiled and pure kernels must agree exactly."""

import random
from fractions import Fraction

import pytest

from plnn import _kernels
from plnn._kernels import _pure

try:
    from plnn._kernels import _fast
except ImportError:  # extension not built
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernels not built")


def _rand_lp(rng, m, n):
    A = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
    c = [Fraction(rng.randint(-3, 5)) for _ in range(n)]
    return A, b, c


def test_backend_is_reported():
    assert _kernels.BACKEND in ("compiled", "pure")


def test_pure_simplex_small_known_optimum():
    # min -x1 - x2 s.t. x1 + s1 = 1, x2 + s2 = 2
    A = [[1, 0, 1, 0], [0, 1, 0, 1]]
    status, x, value, duals = _pure.simplex_eq(
        [[Fraction(v) for v in r] for r in A], [Fraction(1), Fraction(2)], [Fraction(v) for v in (-1, -1, 0, 0)]
    )
    assert status == "optimal"
    assert value == -3
    assert x[:2] == [1, 2] or tuple(x[:2]) == (1, 2)


def test_pure_simplex_infeasible_and_unbounded():
    st, *_ = _pure.simplex_eq([[Fraction(1)]], [Fraction(-1)], [Fraction(0)])
    assert st == "infeasible"
    st, *_ = _pure.simplex_eq([[Fraction(1), Fraction(-1)]], [Fraction(0)], [Fraction(-1), Fraction(0)])
    assert st == "unbounded"


@needs_fast
def test_simplex_parity_random():
    rng = random.Random(7)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        A, b, c = _rand_lp(rng, m, n)
        p = _pure.simplex_eq(A, b, c)
        f = _fast.simplex_eq(A, b, c)
        assert p[0] == f[0]
        if p[0] == "optimal":
            assert p[2] == f[2]
            assert list(p[1]) == list(f[1])
            assert list(p[3]) == list(f[3])


@needs_fast
def test_max_affine_parity_random():
    rng = random.Random(8)
    for _ in range(300):
        d = rng.randint(0, 3)
        rows = [[rng.randint(-50, 50) for _ in range(d + 1)] for _ in range(rng.randint(1, 6))]
        pt = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(d)]
        assert _pure.max_affine_int(rows, pt) == _fast.max_affine_int(rows, pt)


@needs_fast
def test_fast_returns_fractions():
    status, x, value, duals = _fast.simplex_eq([[Fraction(1), Fraction(1)]], [Fraction(1, 3)], [Fraction(1), Fraction(2)])
    assert status == "optimal"
    assert isinstance(value, Fraction) and value == Fraction(1, 3)
    assert all(isinstance(v, Fraction) for v in x)

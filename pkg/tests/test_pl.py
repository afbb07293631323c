import random
from fractions import Fraction

import pytest

from plnn.arith import Matrix
from plnn.errors import DimensionError, PieceCapExceeded
from plnn.pl import (
    Affine,
    PLFunc,
    PLVec,
    matvec_nonneg,
    pl_add,
    pl_dedup,
    pl_eval,
    pl_max,
    pl_scale_nonneg,
    pl_shift,
    pl_zero,
)
from plnn.sampling import rand_plfunc, rand_point

X = Affine((1,), 0)


def lin(*coeffs, c=0):
    return Affine(coeffs, c)


def test_dedup_keeps_first_occurrence_order():
    f = pl_dedup([lin(2), lin(1), lin(2), lin(1, c=0)])
    assert [p.key for p in f] == [(2, 0), (1, 0)]


def test_eval_relu_and_example():
    relu = PLFunc((X, Affine.const(1, 0)))
    assert relu((Fraction(-3),)) == 0
    assert relu((Fraction(5, 2),)) == Fraction(5, 2)
    f = PLFunc((lin(1, 1, c=-1), lin(-1, -1, c=2)))
    assert pl_eval(f, (Fraction(1, 2), Fraction(1, 3))) == Fraction(7, 6)


def test_eval_dimension_mismatch():
    with pytest.raises(DimensionError):
        PLFunc((X,))((1, 2))


def test_empty_envelope_rejected():
    with pytest.raises(ValueError):
        pl_dedup([])


def test_mixed_dims_rejected():
    with pytest.raises(DimensionError):
        PLFunc((lin(1), lin(1, 2)))


def test_max_add_pointwise():
    rng = random.Random(3)
    for _ in range(50):
        d = rng.randint(1, 3)
        f, g = rand_plfunc(rng, d), rand_plfunc(rng, d)
        x = rand_point(rng, d)
        assert pl_max(f, g)(x) == max(f(x), g(x))
        assert pl_add(f, g)(x) == f(x) + g(x)
        assert pl_shift(f, Fraction(2, 3))(x) == f(x) + Fraction(2, 3)
        assert pl_scale_nonneg(Fraction(3, 2), f)(x) == Fraction(3, 2) * f(x)


def test_add_piece_count_is_product_before_dedup():
    f = PLFunc((lin(1), lin(2)))
    g = PLFunc((lin(0, c=1), lin(0, c=2), lin(-1)))
    assert len(pl_add(f, g)) == 6


def test_scale_negative_rejected_and_zero_collapses():
    f = PLFunc((X, lin(-1)))
    with pytest.raises(ValueError):
        pl_scale_nonneg(-1, f)
    assert pl_scale_nonneg(0, f) == pl_zero(1)


def test_piece_cap():
    f = PLFunc(tuple(lin(k) for k in range(4)))
    with pytest.raises(PieceCapExceeded):
        pl_add(f, f, cap=10)
    with pytest.raises(PieceCapExceeded):
        pl_max(f, f, cap=7)


def test_matvec_nonneg_pointwise():
    T = PLVec((PLFunc((X, Affine.const(1, 0))), PLFunc((lin(-1), Affine.const(1, 1)))))
    W = Matrix.from_rows([[2, "1/2"], [0, 3]])
    out = matvec_nonneg(W, T, b=[1, -1])
    for x in (Fraction(-2), Fraction(0), Fraction(7, 3)):
        t = T((x,))
        assert out((x,)) == (2 * t[0] + t[1] / 2 + 1, 3 * t[1] - 1)
    with pytest.raises(ValueError):
        matvec_nonneg(Matrix.from_rows([[-1, 0]]), T)


def test_json_roundtrip():
    f = PLFunc((lin(Fraction(1, 3), -2, c=Fraction(-7, 4)), lin(0, 0)))
    obj = f.to_json()
    assert obj["pieces"][0] == {"coeffs": ["1/3", "-2"], "constant": "-7/4"}
    assert PLFunc.from_json(obj) == f
    v = PLVec((f, f))
    assert PLVec.from_json(v.to_json()) == v


def test_sorted_is_lexicographic():
    f = PLFunc((lin(2), lin(-1, c=3), lin(-1)))
    assert [p.key for p in f.sorted()] == [(-1, 0), (-1, 3), (2, 0)]

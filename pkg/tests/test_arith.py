from fractions import Fraction

import pytest

from plnn.arith import Matrix, RatParseError, format_rat, matvec, parse_rat, split_pos_neg


@pytest.mark.parametrize(
    "text, value",
    [
        ("0", Fraction(0)),
        ("-7", Fraction(-7)),
        ("1/3", Fraction(1, 3)),
        ("-3/4", Fraction(-3, 4)),
        ("6/4", Fraction(3, 2)),
        ("0.25", Fraction(1, 4)),
        ("-1.5", Fraction(-3, 2)),
        ("  2 ", Fraction(2)),
    ],
)
def test_parse_rat_accepts_grammar(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1e3", "1/", "--1", "1/-2", ".5", "1.", "nan"])
def test_parse_rat_rejects(bad):
    with pytest.raises(RatParseError):
        parse_rat(bad)


def test_parse_rat_rejects_floats_and_bools():
    with pytest.raises(RatParseError):
        parse_rat(0.5)
    with pytest.raises(RatParseError):
        parse_rat(True)
    assert parse_rat(3) == 3
    assert parse_rat(Fraction(2, 6)) == Fraction(1, 3)


@pytest.mark.parametrize("v", [Fraction(0), Fraction(5), Fraction(-1, 3), Fraction(22, 7)])
def test_format_roundtrip(v):
    assert parse_rat(format_rat(v)) == v


def test_format_is_canonical():
    assert format_rat(Fraction(6, 4)) == "3/2"
    assert format_rat(Fraction(-4, 2)) == "-2"


def test_split_pos_neg_autoencoder_row():
    W = Matrix.from_rows([["-1/3", "3/8", "-6"]])
    plus, minus = split_pos_neg(W)
    assert plus.tolist() == [[0, Fraction(3, 8), 0]]
    assert minus.tolist() == [[Fraction(1, 3), 0, 6]]
    assert (plus - minus) == W
    assert plus.is_nonneg() and minus.is_nonneg()


def test_matrix_basics():
    W = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert W.shape == (2, 3)
    assert W.transpose().shape == (3, 2)
    assert W.column(1) == (2, 5)
    assert matvec(W, (1, 0, -1)) == (-2, -2)
    assert Matrix.identity(2).tolist() == [[1, 0], [0, 1]]


def test_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [3]])

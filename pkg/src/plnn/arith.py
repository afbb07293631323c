"""Exact rational scalars and small dense matrices.

Every coefficient in the package is a :class:`fractions.Fraction`; nothing is
ever routed through binary floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^(-?)(\d+)(?:/(\d+)|\.(\d+))?$")


class RatParseError(ValueError):
    pass


def parse_rat(text) -> Fraction:
    """Parse ``n``, ``p/q`` or ``d.ddd`` (optionally negative) exactly.

    JSON integers are accepted as well; floats and booleans are rejected
    because their value has already been rounded.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise RatParseError(f"refusing non-exact literal {text!r}; pass rationals as strings")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise RatParseError(f"expected a rational literal, got {type(text).__name__}")
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise RatParseError(f"malformed rational literal {text!r}")
    sign, whole, den, frac = m.groups()
    if den is not None:
        if int(den) == 0:
            raise RatParseError(f"zero denominator in {text!r}")
        value = Fraction(int(whole), int(den))
    elif frac is not None:
        value = Fraction(int(whole + frac), 10 ** len(frac))
    else:
        value = Fraction(int(whole))
    return -value if sign else value


def format_rat(value: Fraction) -> str:
    """Inverse of :func:`parse_rat`: ``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return parse_rat(value)


def rat_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_rat(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(rat_vector(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"ragged matrix: row {i} has {len(r)} entries, expected {width}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls(tuple((Fraction(0),) * n for _ in range(m)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def is_nonneg(self) -> bool:
        return all(v >= 0 for r in self.rows for v in r)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def split_pos_neg(W: Matrix) -> tuple[Matrix, Matrix]:
    """Return ``(W+, W-)`` with ``W = W+ - W-`` and both parts entrywise nonnegative."""
    zero = Fraction(0)
    plus = tuple(tuple(max(w, zero) for w in r) for r in W.rows)
    minus = tuple(tuple(max(-w, zero) for w in r) for r in W.rows)
    return Matrix(plus), Matrix(minus)


def matvec(W: Matrix, x: Sequence) -> tuple[Fraction, ...]:
    x = rat_vector(x)
    if len(x) != W.ncols:
        raise ValueError(f"dimension mismatch: matrix has {W.ncols} columns, vector has {len(x)} entries")
    return tuple(sum((w * v for w, v in zip(r, x)), Fraction(0)) for r in W.rows)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((u * v for u, v in zip(a, b)), Fraction(0))

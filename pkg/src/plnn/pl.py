"""Piecewise-linear functions as upper envelopes of affine pieces."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from ._kernels import max_affine_int
from .arith import Matrix, as_rat, format_rat, rat_vector
from .errors import DimensionError, PieceCapExceeded

ZERO = Fraction(0)


@dataclass(frozen=True)
class Affine:
    """``coeffs . x + constant``."""

    coeffs: tuple[Fraction, ...]
    constant: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "coeffs", rat_vector(self.coeffs))
        object.__setattr__(self, "constant", as_rat(self.constant))

    @classmethod
    def const(cls, dim: int, value) -> "Affine":
        return cls((ZERO,) * dim, value)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def key(self) -> tuple[Fraction, ...]:
        return self.coeffs + (self.constant,)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        s = self.constant
        for a, v in zip(self.coeffs, x):
            s += a * v
        return s

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.constant + other.constant)

    def __sub__(self, other: "Affine") -> "Affine":
        return Affine(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.constant - other.constant)

    def __neg__(self) -> "Affine":
        return Affine(tuple(-a for a in self.coeffs), -self.constant)

    def scale(self, c: Fraction) -> "Affine":
        return Affine(tuple(c * a for a in self.coeffs), c * self.constant)

    def shift(self, c: Fraction) -> "Affine":
        return Affine(self.coeffs, self.constant + c)

    def to_json(self) -> dict:
        return {"coeffs": [format_rat(a) for a in self.coeffs], "constant": format_rat(self.constant)}

    @classmethod
    def from_json(cls, obj: dict) -> "Affine":
        return cls(rat_vector(obj["coeffs"]), as_rat(obj.get("constant", 0)))

    def __repr__(self) -> str:
        terms = [f"{format_rat(a)}*x{i + 1}" for i, a in enumerate(self.coeffs) if a]
        terms.append(format_rat(self.constant))
        return "Affine(" + " + ".join(terms) + ")"


def _dedup(pieces: Iterable[Affine]) -> tuple[Affine, ...]:
    seen = {}
    for p in pieces:
        seen.setdefault(p.key, p)
    return tuple(seen.values())


@dataclass(frozen=True)
class PLFunc:
    """``x -> max_k pieces[k](x)``; pieces are distinct and kept in insertion order."""

    pieces: tuple[Affine, ...]
    dim: int = field(default=-1)

    def __post_init__(self):
        pieces = _dedup(self.pieces)
        if not pieces:
            raise ValueError("a piecewise-linear function needs at least one piece")
        dim = pieces[0].dim
        if self.dim not in (-1, dim):
            raise DimensionError(f"declared dim {self.dim} but pieces have dim {dim}")
        for p in pieces:
            if p.dim != dim:
                raise DimensionError(f"mixed piece dimensions {dim} and {p.dim}")
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "dim", dim)

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def piece_set(self) -> frozenset:
        return frozenset(p.key for p in self.pieces)

    def same_pieces(self, other: "PLFunc") -> bool:
        return self.piece_set() == other.piece_set()

    @cached_property
    def _int_form(self) -> tuple[list[list[int]], int]:
        # Common-denominator integer rows make evaluation a pure int loop.
        den = 1
        for p in self.pieces:
            for v in p.key:
                den = math.lcm(den, v.denominator)
        rows = [[int(v * den) for v in p.key] for p in self.pieces]
        return rows, den

    def __call__(self, x: Sequence) -> Fraction:
        return pl_eval(self, x)

    def sorted(self) -> "PLFunc":
        return PLFunc(tuple(sorted(self.pieces, key=lambda p: p.key)))

    def to_json(self) -> dict:
        return {"dim": self.dim, "pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, obj: dict) -> "PLFunc":
        pieces = tuple(Affine.from_json(p) for p in obj["pieces"])
        return cls(pieces, int(obj.get("dim", -1)))


@dataclass(frozen=True)
class PLVec:
    components: tuple[PLFunc, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("PLVec needs at least one component")
        dims = {c.dim for c in comps}
        if len(dims) != 1:
            raise DimensionError(f"components disagree on input dimension: {sorted(dims)}")
        object.__setattr__(self, "components", comps)

    @property
    def dim(self) -> int:
        return self.components[0].dim

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> PLFunc:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __call__(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(pl_eval(c, x) for c in self.components)

    def to_json(self) -> list:
        return [c.to_json() for c in self.components]

    @classmethod
    def from_json(cls, obj: list) -> "PLVec":
        return cls(tuple(PLFunc.from_json(c) for c in obj))


def pl_eval(f: PLFunc, x: Sequence) -> Fraction:
    x = rat_vector(x)
    if len(x) != f.dim:
        raise DimensionError(f"point has {len(x)} coordinates, function expects {f.dim}")
    rows, den = f._int_form
    xden = 1
    for v in x:
        xden = math.lcm(xden, v.denominator)
    point = [int(v * xden) for v in x]
    point.append(xden)
    return Fraction(max_affine_int(rows, point), den * xden)


def pl_dedup(pieces: Sequence[Affine]) -> PLFunc:
    if not pieces:
        raise ValueError("cannot build an envelope from an empty piece list")
    return PLFunc(tuple(pieces))


def _check_dims(f: PLFunc, g: PLFunc):
    if f.dim != g.dim:
        raise DimensionError(f"input dimensions differ: {f.dim} vs {g.dim}")


def pl_max(f: PLFunc, g: PLFunc, cap: int | None = None) -> PLFunc:
    _check_dims(f, g)
    if cap is not None and len(f) + len(g) > cap:
        raise PieceCapExceeded(len(f) + len(g), cap)
    return PLFunc(f.pieces + g.pieces)


def pl_add(f: PLFunc, g: PLFunc, cap: int | None = None) -> PLFunc:
    """Envelope of all pairwise sums; pointwise ``f + g``."""
    _check_dims(f, g)
    if cap is not None and len(f) * len(g) > cap:
        raise PieceCapExceeded(len(f) * len(g), cap)
    if len(g) == 1:
        q = g.pieces[0]
        return PLFunc(tuple(p + q for p in f.pieces))
    return PLFunc(tuple(p + q for p in f.pieces for q in g.pieces))


def pl_shift(f: PLFunc, c) -> PLFunc:
    c = as_rat(c)
    return PLFunc(tuple(p.shift(c) for p in f.pieces))


def pl_scale_nonneg(c, f: PLFunc) -> PLFunc:
    c = as_rat(c)
    if c < 0:
        raise ValueError(f"negative scale {c} does not commute with max")
    if c == 0:
        return PLFunc((Affine.const(f.dim, 0),))
    return PLFunc(tuple(p.scale(c) for p in f.pieces))


def pl_zero(dim: int) -> PLFunc:
    return PLFunc((Affine.const(dim, 0),))


def matvec_nonneg(W: Matrix, T: PLVec, b: Sequence | None = None, cap: int | None = None) -> PLVec:
    """Componentwise envelope of ``W T(x) + b`` for entrywise-nonnegative ``W``."""
    if not W.is_nonneg():
        raise ValueError("matvec_nonneg needs a nonnegative matrix")
    if W.ncols != len(T):
        raise DimensionError(f"matrix has {W.ncols} columns but the vector has {len(T)} components")
    b = rat_vector(b) if b is not None else (ZERO,) * W.nrows
    if len(b) != W.nrows:
        raise DimensionError(f"offset has {len(b)} entries, matrix has {W.nrows} rows")
    out = []
    for row, off in zip(W.rows, b):
        acc = pl_zero(T.dim)
        for w, comp in zip(row, T.components):
            if w:
                acc = pl_add(acc, pl_scale_nonneg(w, comp), cap)
        out.append(pl_shift(acc, off) if off else acc)
    return PLVec(tuple(out))

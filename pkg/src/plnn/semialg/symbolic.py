"""Tropical decomposition with the network coefficients kept as symbols."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PieceCapExceeded
from ..network import Network, architecture_index_sizes, default_piece_cap
from ..pl import Affine
from .poly import Poly


@dataclass(frozen=True)
class SymbolicAffine:
    """``sum_l coeffs[l] * x_l + constant`` with polynomial coefficients."""

    coeffs: tuple[Poly, ...]
    constant: Poly

    @classmethod
    def zero(cls, dim: int) -> "SymbolicAffine":
        return cls((Poly(),) * dim, Poly())

    @classmethod
    def from_affine(cls, a: Affine) -> "SymbolicAffine":
        return cls(tuple(Poly.const(c) for c in a.coeffs), Poly.const(a.constant))

    @classmethod
    def lift(cls, a) -> "SymbolicAffine":
        return a if isinstance(a, SymbolicAffine) else cls.from_affine(a)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "SymbolicAffine") -> "SymbolicAffine":
        return SymbolicAffine(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.constant + other.constant
        )

    def __sub__(self, other: "SymbolicAffine") -> "SymbolicAffine":
        return SymbolicAffine(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.constant - other.constant
        )

    def scale(self, c: Poly) -> "SymbolicAffine":
        return SymbolicAffine(tuple(c * a for a in self.coeffs), c * self.constant)

    def shift(self, c: Poly) -> "SymbolicAffine":
        return SymbolicAffine(self.coeffs, self.constant + c)

    def variables(self) -> set[str]:
        out = set(self.constant.variables())
        for c in self.coeffs:
            out |= c.variables()
        return out

    def as_poly(self, xnames: Sequence[str]) -> Poly:
        p = self.constant
        for c, x in zip(self.coeffs, xnames):
            if not c.is_zero():
                p = p + c * Poly.var(x)
        return p

    def subs(self, assignment) -> Affine:
        return Affine(tuple(c(assignment) for c in self.coeffs), self.constant(assignment))


def _name(tag: str, base: str, *idx: int) -> str:
    stem = f"{base}_" + "_".join(str(i) for i in idx)
    return f"{tag}_{stem}" if tag else stem


def weight_names(tag: str, k: int, i: int, j: int) -> tuple[str, str, str]:
    """Raw, positive-part and negative-part names of entry ``(i, j)`` of ``W^(k)`` (1-based)."""
    return _name(tag, "w", k, i, j), _name(tag, "wplus", k, i, j), _name(tag, "wminus", k, i, j)


def bias_name(tag: str, k: int, i: int) -> str:
    return _name(tag, "b", k, i)


def threshold_name(tag: str, k: int, i: int) -> str:
    return _name(tag, "t", k, i)


def weight_entries(widths: Sequence[int]):
    """Yield 1-based ``(k, i, j)`` for every weight entry of the architecture."""
    for k, (n_in, n_out) in enumerate(zip(widths[:-1], widths[1:]), start=1):
        for i in range(1, n_out + 1):
            for j in range(1, n_in + 1):
                yield k, i, j


def raw_assignment(net: Network, tag: str = "") -> dict[str, Fraction]:
    """Values of the raw coefficient symbols ``w``, ``b``, ``t`` for a concrete network."""
    out = {}
    for k, layer in enumerate(net.layers, start=1):
        for i, row in enumerate(layer.W.rows, start=1):
            for j, w in enumerate(row, start=1):
                out[weight_names(tag, k, i, j)[0]] = w
            out[bias_name(tag, k, i)] = layer.b[i - 1]
            out[threshold_name(tag, k, i)] = layer.t[i - 1]
    return out


def full_assignment(net: Network, tag: str = "") -> dict[str, Fraction]:
    """Raw symbols plus the positive/negative weight parts."""
    out = raw_assignment(net, tag)
    for k, layer in enumerate(net.layers, start=1):
        for i, row in enumerate(layer.W.rows, start=1):
            for j, w in enumerate(row, start=1):
                _, wp, wm = weight_names(tag, k, i, j)
                out[wp] = max(w, Fraction(0))
                out[wm] = max(-w, Fraction(0))
    return out


def _formal_sum(terms, dim: int) -> list[SymbolicAffine]:
    acc = [SymbolicAffine.zero(dim)]
    for w, comp in terms:
        acc = [a + p.scale(w) for a in acc for p in comp]
    return acc


def symbolic_decompose(
    widths: Sequence[int], tag: str = "", cap: int | None = None
) -> list[tuple[list[SymbolicAffine], list[SymbolicAffine]]]:
    """Per output ``(pos pieces, neg pieces)`` in the symbols ``wplus``, ``wminus``, ``b``, ``t``.

    Pieces are kept formally (one per index of the recursion), so their
    number is fixed by ``widths``.
    """
    widths = tuple(int(w) for w in widths)
    if len(widths) < 2 or min(widths) < 1:
        raise ValueError(f"invalid architecture {widths}")
    cap = default_piece_cap() if cap is None else cap
    n_pos, n_neg = architecture_index_sizes(widths)
    if n_pos > cap:
        raise PieceCapExceeded(n_pos, cap, "symbolic decomposition")
    d = widths[0]

    def W(k, i, j):
        _, wp, wm = weight_names(tag, k, i, j)
        return Poly.var(wp), Poly.var(wm)

    pos, neg = [], []
    for i in range(1, widths[1] + 1):
        coeffs = tuple(W(1, i, j)[0] - W(1, i, j)[1] for j in range(1, d + 1))
        pos.append([
            SymbolicAffine(coeffs, Poly.var(bias_name(tag, 1, i))),
            SymbolicAffine((Poly(),) * d, Poly.var(threshold_name(tag, 1, i))),
        ])
        neg.append([SymbolicAffine.zero(d)])

    for k in range(2, len(widths)):
        new_pos, new_neg = [], []
        for r in range(1, widths[k] + 1):
            ws = [W(k, r, l) for l in range(1, widths[k - 1] + 1)]
            above = [(wp, p) for (wp, _), p in zip(ws, pos)] + [(wm, n) for (_, wm), n in zip(ws, neg)]
            below = [(wm, p) for (_, wm), p in zip(ws, pos)] + [(wp, n) for (wp, _), n in zip(ws, neg)]
            b = Poly.var(bias_name(tag, k, r))
            t = Poly.var(threshold_name(tag, k, r))
            lower = _formal_sum(below, d)
            new_pos.append([a.shift(b) for a in _formal_sum(above, d)] + [q.shift(t) for q in lower])
            new_neg.append(lower)
        pos, neg = new_pos, new_neg
    return list(zip(pos, neg))


def concrete_symbolic(pieces: Sequence[Affine]) -> list[SymbolicAffine]:
    return [SymbolicAffine.from_affine(p) for p in pieces]


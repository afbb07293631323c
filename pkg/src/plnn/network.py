"""Layered networks ``x -> max{W x + b, t}`` and their tropical decomposition.

Every network function is written as ``pos(x) - neg(x)`` with ``pos`` and
``neg`` componentwise upper envelopes, built layer by layer from the
nonnegative parts of each weight matrix.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Matrix, format_rat, rat_vector, split_pos_neg
from .envelope import minimize, minimize_sum
from .errors import DimensionError, ShapeError
from .pl import Affine, PLFunc, PLVec, pl_add, pl_max, pl_scale_nonneg, pl_shift, pl_zero

DEFAULT_PIECE_CAP = 10**6


def default_piece_cap() -> int:
    raw = os.environ.get("PLNN_PIECE_CAP")
    if raw:
        cap = int(raw)
        if cap < 1:
            raise ValueError("PLNN_PIECE_CAP must be at least 1")
        return cap
    return DEFAULT_PIECE_CAP


@dataclass(frozen=True)
class Layer:
    W: Matrix
    b: tuple[Fraction, ...]
    t: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.W, Matrix):
            object.__setattr__(self, "W", Matrix.from_rows(self.W))
        object.__setattr__(self, "b", rat_vector(self.b))
        object.__setattr__(self, "t", rat_vector(self.t))

    @property
    def n_in(self) -> int:
        return self.W.ncols

    @property
    def n_out(self) -> int:
        return self.W.nrows

    def to_json(self) -> dict:
        return {
            "W": [[format_rat(v) for v in r] for r in self.W.rows],
            "b": [format_rat(v) for v in self.b],
            "t": [format_rat(v) for v in self.t],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Layer":
        return cls(Matrix.from_rows(obj["W"]), rat_vector(obj["b"]), rat_vector(obj["t"]))


@dataclass(frozen=True)
class Network:
    layers: tuple[Layer, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ValueError("a network needs at least one layer")
        object.__setattr__(self, "layers", layers)

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def input_dim(self) -> int:
        return self.layers[0].n_in

    @property
    def output_dim(self) -> int:
        return self.layers[-1].n_out

    @property
    def widths(self) -> tuple[int, ...]:
        return (self.input_dim,) + tuple(layer.n_out for layer in self.layers)

    def to_json(self) -> dict:
        return {"layers": [layer.to_json() for layer in self.layers]}

    @classmethod
    def from_json(cls, obj: dict) -> "Network":
        return cls(tuple(Layer.from_json(layer) for layer in obj["layers"]))


def shape_report(net: Network) -> str | None:
    """First shape inconsistency (1-based layer numbers), or None."""
    for k, layer in enumerate(net.layers, start=1):
        m = layer.n_out
        if len(layer.b) != m:
            return f"layer {k}: W^({k}) has {m} rows but b^({k}) has {len(layer.b)} entries"
        if len(layer.t) != m:
            return f"layer {k}: W^({k}) has {m} rows but t^({k}) has {len(layer.t)} entries"
        if k < net.depth:
            nxt = net.layers[k]
            if nxt.n_in != m:
                return (
                    f"layers ({k}, {k + 1}): layer {k} outputs {m} values "
                    f"but W^({k + 1}) has {nxt.n_in} columns"
                )
    return None


def validate(net: Network) -> None:
    report = shape_report(net)
    if report is None:
        return
    if report.startswith("layers ("):
        k = int(report[len("layers ("):].split(",")[0])
        raise ShapeError(report, (k, k + 1))
    k = int(report.split(":")[0].split()[1])
    raise ShapeError(report, (k,))


def forward_eval(net: Network, x: Sequence) -> tuple[Fraction, ...]:
    validate(net)
    v = rat_vector(x)
    if len(v) != net.input_dim:
        raise DimensionError(f"input has {len(v)} coordinates, network expects {net.input_dim}")
    for layer in net.layers:
        v = tuple(
            max(sum((w * u for w, u in zip(row, v)), bias), thr)
            for row, bias, thr in zip(layer.W.rows, layer.b, layer.t)
        )
    return v


@dataclass(frozen=True)
class TropicalPair:
    """``pos - neg`` equals the network function componentwise.

    ``index_sizes`` holds, per output, the sizes of the formal index sets of
    ``pos`` and ``neg`` produced by the recursion before any merging of
    coinciding pieces; they depend only on the architecture.
    """

    pos: PLVec
    neg: PLVec
    index_sizes: tuple[tuple[int, int], ...]
    pruned: bool = False

    def __post_init__(self):
        if len(self.pos) != len(self.neg):
            raise DimensionError("positive and negative parts have different output counts")
        if self.pos.dim != self.neg.dim:
            raise DimensionError("positive and negative parts have different input dims")

    def __call__(self, x) -> tuple[Fraction, ...]:
        return tuple(p - n for p, n in zip(self.pos(x), self.neg(x)))

    def to_json(self) -> dict:
        return {
            "pruned": self.pruned,
            "pos": self.pos.to_json(),
            "neg": self.neg.to_json(),
            "piece_counts": [list(c) for c in piece_counts(self)],
            "index_sizes": [list(c) for c in self.index_sizes],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TropicalPair":
        return cls(
            PLVec.from_json(obj["pos"]),
            PLVec.from_json(obj["neg"]),
            tuple(tuple(c) for c in obj["index_sizes"]),
            bool(obj.get("pruned", False)),
        )


def architecture_index_sizes(widths: Sequence[int]) -> tuple[int, int]:
    """Formal ``(|pos|, |neg|)`` index-set sizes for every output of an architecture."""
    if len(widths) < 2:
        raise ValueError("architecture needs an input width and at least one layer")
    p, n = 2, 1
    for m_prev in widths[1:-1]:
        prod = p**m_prev * n**m_prev
        p, n = 2 * prod, prod
    return p, n


def _sum_terms(terms, dim: int, prune: bool, cap: int) -> PLFunc:
    acc = pl_zero(dim)
    for w, comp in terms:
        if not w:
            continue
        scaled = pl_scale_nonneg(w, comp)
        acc = minimize_sum(acc, scaled) if prune else pl_add(acc, scaled, cap)
    return acc


def decompose(net: Network, prune: bool = True, cap: int | None = None) -> TropicalPair:
    validate(net)
    cap = default_piece_cap() if cap is None else cap
    d = net.input_dim
    first = net.layers[0]
    pos = []
    for row, bias, thr in zip(first.W.rows, first.b, first.t):
        f = PLFunc((Affine(row, bias), Affine.const(d, thr)))
        pos.append(minimize(f) if prune else f)
    neg = [pl_zero(d) for _ in pos]
    sizes = (2, 1)

    for layer in net.layers[1:]:
        Wp, Wm = split_pos_neg(layer.W)
        new_pos, new_neg = [], []
        for r in range(layer.n_out):
            above = list(zip(Wp.rows[r], pos)) + list(zip(Wm.rows[r], neg))
            below = list(zip(Wm.rows[r], pos)) + list(zip(Wp.rows[r], neg))
            a = pl_shift(_sum_terms(above, d, prune, cap), layer.b[r])
            n_r = _sum_terms(below, d, prune, cap)
            p_r = pl_max(a, pl_shift(n_r, layer.t[r]), cap)
            if prune:
                p_r = minimize(p_r)
            new_pos.append(p_r)
            new_neg.append(n_r)
        prod = sizes[0] ** len(pos) * sizes[1] ** len(neg)
        sizes = (2 * prod, prod)
        pos, neg = new_pos, new_neg

    return TropicalPair(
        PLVec(tuple(pos)),
        PLVec(tuple(neg)),
        tuple(sizes for _ in pos),
        prune,
    )


def piece_counts(pair: TropicalPair) -> tuple[tuple[int, int], ...]:
    """Distinct stored pieces per output, ``(|pos_r|, |neg_r|)``."""
    return tuple((len(p), len(n)) for p, n in zip(pair.pos, pair.neg))


def index_set_sizes(pair: TropicalPair) -> tuple[tuple[int, int], ...]:
    return pair.index_sizes


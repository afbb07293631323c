"""Network equivalence through cross sums of tropical parts.

``nu1 == nu2`` iff ``pos1 + neg2 == neg1 + pos2`` as functions, and two
envelopes are equal iff their minimal representations have the same pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Matrix, as_rat, format_rat, parse_rat, rat_vector
from .envelope import dominance_region, minimize, minimize_sum
from .errors import DimensionError, PlnnError
from .lp import StrictSystem, strict_feasible
from .network import Layer, Network, decompose, forward_eval, validate
from .pl import PLFunc


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    witness: tuple[Fraction, ...] | None
    outputs: tuple[tuple[PLFunc, PLFunc], ...]

    def __bool__(self) -> bool:
        return self.equivalent

    def to_json(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "witness": None if self.witness is None else [format_rat(v) for v in self.witness],
            "outputs": [
                {"lhs_pieces": lhs.to_json()["pieces"], "rhs_pieces": rhs.to_json()["pieces"]}
                for lhs, rhs in self.outputs
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EquivVerdict":
        w = obj.get("witness")
        outputs = []
        for o in obj["outputs"]:
            lhs, rhs = o["lhs_pieces"], o["rhs_pieces"]
            dim = len(lhs[0]["coeffs"]) if lhs else -1
            outputs.append((PLFunc.from_json({"dim": dim, "pieces": lhs}), PLFunc.from_json({"dim": dim, "pieces": rhs})))
        return cls(bool(obj["equivalent"]), None if w is None else tuple(parse_rat(v) for v in w), tuple(outputs))


def cross_sums(N1: Network, N2: Network, cap: int | None = None) -> tuple[tuple[PLFunc, PLFunc], ...]:
    """Minimal ``(pos1 + neg2, neg1 + pos2)`` for every output coordinate."""
    if N1.input_dim != N2.input_dim:
        raise DimensionError(f"input dims differ: {N1.input_dim} vs {N2.input_dim}")
    if N1.output_dim != N2.output_dim:
        raise DimensionError(f"output dims differ: {N1.output_dim} vs {N2.output_dim}")
    t1 = decompose(N1, prune=True, cap=cap)
    t2 = decompose(N2, prune=True, cap=cap)
    return tuple(
        (minimize_sum(p1, n2), minimize_sum(n1, p2))
        for p1, n1, p2, n2 in zip(t1.pos, t1.neg, t2.pos, t2.neg)
    )


def equivalent(N1: Network, N2: Network, cap: int | None = None) -> EquivVerdict:
    validate(N1)
    validate(N2)
    outputs = cross_sums(N1, N2, cap)
    for lhs, rhs in outputs:
        if not lhs.same_pieces(rhs):
            x = dominance_witness(lhs, rhs)
            if forward_eval(N1, x) == forward_eval(N2, x):
                raise PlnnError("separating point failed to separate the networks")
            return EquivVerdict(False, x, outputs)
    return EquivVerdict(True, None, outputs)


def dominance_witness(lhs: PLFunc, rhs: PLFunc) -> tuple[Fraction, ...]:
    """Deterministic point where two envelopes with different minimal forms disagree."""
    lm, rm = minimize(lhs), minimize(rhs)
    if lm.same_pieces(rm):
        raise ValueError("envelopes are equal; no separating point exists")
    own, other = (lm, rm) if lm.piece_set() - rm.piece_set() else (rm, lm)
    other_keys = other.piece_set()
    a_idx = next(i for i, p in enumerate(own.pieces) if p.key not in other_keys)
    a = own.pieces[a_idx]
    start = dominance_region(own, a_idx)
    if lhs(start.witness) != rhs(start.witness):
        return start.witness

    region = [
        (tuple(u - v for u, v in zip(a.coeffs, p.coeffs)), p.constant - a.constant)
        for i, p in enumerate(own.pieces)
        if i != a_idx
    ]
    dim = own.dim
    for b in other.pieces:
        row = (tuple(u - v for u, v in zip(b.coeffs, a.coeffs)), a.constant - b.constant)
        res = strict_feasible(StrictSystem(dim, tuple(region + [row])))
        if res:
            return res.witness
    below = [
        (tuple(u - v for u, v in zip(a.coeffs, b.coeffs)), b.constant - a.constant) for b in other.pieces
    ]
    res = strict_feasible(StrictSystem(dim, tuple(region + below)))
    if res:
        return res.witness
    raise PlnnError("no separating point found for distinct minimal envelopes")


def _check_hidden(N: Network, k: int) -> None:
    if not 1 <= k < N.depth:
        raise ValueError(f"layer index {k} must satisfy 1 <= k < {N.depth} (needs a following layer)")


def gen_permuted(N: Network, k: int, perm: Sequence[int]) -> Network:
    """Reorder the units of hidden layer ``k`` (1-based); unit ``i`` becomes old unit ``perm[i]``."""
    validate(N)
    _check_hidden(N, k)
    layer, nxt = N.layers[k - 1], N.layers[k]
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(layer.n_out)):
        raise ValueError(f"{perm} is not a permutation of 0..{layer.n_out - 1}")
    new_layer = Layer(
        Matrix(tuple(layer.W.rows[p] for p in perm)),
        tuple(layer.b[p] for p in perm),
        tuple(layer.t[p] for p in perm),
    )
    new_next = Layer(
        Matrix(tuple(tuple(row[p] for p in perm) for row in nxt.W.rows)),
        nxt.b,
        nxt.t,
    )
    layers = list(N.layers)
    layers[k - 1], layers[k] = new_layer, new_next
    return Network(tuple(layers))


def gen_scaled(N: Network, k: int, scales: Sequence) -> Network:
    """Multiply unit ``i`` of layer ``k`` by ``scales[i] > 0`` and undo it in layer ``k + 1``."""
    validate(N)
    _check_hidden(N, k)
    layer, nxt = N.layers[k - 1], N.layers[k]
    c = rat_vector(scales)
    if len(c) != layer.n_out:
        raise ValueError(f"need {layer.n_out} scales, got {len(c)}")
    if any(v <= 0 for v in c):
        raise ValueError("scales must be positive")
    new_layer = Layer(
        Matrix(tuple(tuple(ci * w for w in row) for ci, row in zip(c, layer.W.rows))),
        tuple(ci * v for ci, v in zip(c, layer.b)),
        tuple(ci * v for ci, v in zip(c, layer.t)),
    )
    new_next = Layer(
        Matrix(tuple(tuple(w / ci for w, ci in zip(row, c)) for row in nxt.W.rows)),
        nxt.b,
        nxt.t,
    )
    layers = list(N.layers)
    layers[k - 1], layers[k] = new_layer, new_next
    return Network(tuple(layers))


def perturb(N: Network, layer: int, kind: str, index: tuple[int, ...], delta) -> Network:
    """Copy of ``N`` with one coefficient shifted by ``delta`` (test fixture helper)."""
    delta = as_rat(delta)
    layers = list(N.layers)
    L = layers[layer - 1]
    if kind == "W":
        i, j = index
        rows = [list(r) for r in L.W.rows]
        rows[i][j] += delta
        layers[layer - 1] = Layer(Matrix.from_rows(rows), L.b, L.t)
    elif kind in ("b", "t"):
        (i,) = index
        vec = list(getattr(L, kind))
        vec[i] += delta
        b, t = (vec, L.t) if kind == "b" else (L.b, vec)
        layers[layer - 1] = Layer(L.W, b, t)
    else:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    return Network(tuple(layers))

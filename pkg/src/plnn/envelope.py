"""Redundancy, minimal representations, coverage and corners of upper envelopes."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import rat_vector
from .errors import DimensionError
from .lp import Feasible, Infeasible, StrictOutcome, StrictSystem, strict_feasible
from .pl import Affine, PLFunc


def _dominance_rows(pieces: Sequence[Affine], j: int) -> list:
    pj = pieces[j]
    return [
        (tuple(a - b for a, b in zip(pj.coeffs, pk.coeffs)), pk.constant - pj.constant)
        for k, pk in enumerate(pieces)
        if k != j
    ]


def dominance_region(f: PLFunc, j: int) -> StrictOutcome:
    """Point where piece ``j`` is strictly above every other piece, if any."""
    if not 0 <= j < len(f):
        raise IndexError(f"piece index {j} out of range for {len(f)} pieces")
    if len(f) == 1:
        return Feasible((Fraction(0),) * f.dim)
    return strict_feasible(StrictSystem(f.dim, tuple(_dominance_rows(f.pieces, j))))


def _in_region(pieces: Sequence[Affine], j: int, x) -> bool:
    v = pieces[j](x)
    return all(v > p(x) for k, p in enumerate(pieces) if k != j)


def is_redundant(f: PLFunc, j: int) -> bool:
    """True iff dropping piece ``j`` leaves the envelope unchanged everywhere."""
    if len(f) < 2:
        if not 0 <= j < len(f):
            raise IndexError(f"piece index {j} out of range for {len(f)} pieces")
        raise ValueError("redundancy is undefined for a single-piece envelope")
    return not dominance_region(f, j)


def relevant_witnesses(f: PLFunc) -> dict[int, tuple[Fraction, ...]]:
    """Relevant piece indices mapped to a point of their open dominance region."""
    out = {}
    for j in range(len(f)):
        res = dominance_region(f, j)
        if res:
            out[j] = res.witness
    return out


def relevant_indices(f: PLFunc) -> tuple[int, ...]:
    return tuple(sorted(relevant_witnesses(f)))


def minimize(f: PLFunc) -> PLFunc:
    """Unique minimal representation, pieces in lexicographic coefficient order."""
    keep = relevant_indices(f)
    return PLFunc(tuple(f.pieces[k] for k in keep)).sorted()


def minimize_sum(f: PLFunc, g: PLFunc) -> PLFunc:
    """``minimize(pl_add(f, g))`` without materialising the full product.

    ``P_k + N_l`` is relevant in ``f + g`` exactly when the open dominance
    regions of ``P_k`` in ``f`` and ``N_l`` in ``g`` intersect.
    """
    if f.dim != g.dim:
        raise DimensionError(f"input dimensions differ: {f.dim} vs {g.dim}")
    fw = relevant_witnesses(f)
    gw = relevant_witnesses(g)
    fp = [f.pieces[k] for k in sorted(fw)]
    gp = [g.pieces[l] for l in sorted(gw)]
    fwit = [fw[k] for k in sorted(fw)]
    gwit = [gw[l] for l in sorted(gw)]
    out = []
    for k, pk in enumerate(fp):
        f_rows = _dominance_rows(fp, k)
        for l, nl in enumerate(gp):
            if _in_region(gp, l, fwit[k]) or _in_region(fp, k, gwit[l]):
                out.append(pk + nl)
                continue
            rows = f_rows + _dominance_rows(gp, l)
            if strict_feasible(StrictSystem(f.dim, tuple(rows))):
                out.append(pk + nl)
    return PLFunc(tuple(out)).sorted()


def covers_Rn(Q: Sequence[Affine]) -> bool:
    """True iff every point of R^d satisfies ``Q_k(x) >= 0`` for some k."""
    if not Q:
        raise ValueError("coverage needs at least one affine function")
    dim = Q[0].dim
    if any(q.dim != dim for q in Q):
        raise DimensionError("affine functions disagree on dimension")
    rows = tuple((tuple(-a for a in q.coeffs), q.constant) for q in Q)
    return isinstance(strict_feasible(StrictSystem(dim, rows)), Infeasible)


def is_corner(f: PLFunc, x0: Sequence) -> bool:
    x0 = rat_vector(x0)
    if len(x0) != f.dim:
        raise DimensionError(f"point has {len(x0)} coordinates, function expects {f.dim}")
    values = [p(x0) for p in f.pieces]
    top = max(values)
    return sum(1 for v in values if v == top) >= 2


def corners_1d(f: PLFunc) -> list[Fraction]:
    if f.dim != 1:
        raise DimensionError(f"corner enumeration needs dim 1, got {f.dim}")
    rel = [f.pieces[k] for k in relevant_indices(f)] if len(f) > 1 else list(f.pieces)
    found = set()
    for i, p in enumerate(rel):
        for q in rel[i + 1:]:
            slope = p.coeffs[0] - q.coeffs[0]
            if slope == 0:
                continue
            x = (q.constant - p.constant) / slope
            if x not in found and is_corner(f, (x,)):
                found.add(x)
    return sorted(found)

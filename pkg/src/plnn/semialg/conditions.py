"""Formula builders for coverage, redundancy, relevance strata and equivalence."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DimensionError, PieceCapExceeded
from ..network import Network, architecture_index_sizes, decompose, default_piece_cap, validate
from ..pl import Affine
from .formula import FALSE, TRUE, Exists, ForAll, Formula, Not, conj, disj, eq, ge, sorted_names
from .poly import Poly
from .symbolic import SymbolicAffine, concrete_symbolic, symbolic_decompose, weight_entries, weight_names


def default_xnames(dim: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, dim + 1))


def _prepare(pieces, xnames) -> tuple[list[SymbolicAffine], tuple[str, ...]]:
    pieces = [SymbolicAffine.lift(p) for p in pieces]
    if not pieces:
        raise ValueError("need at least one affine function")
    dim = pieces[0].dim
    if any(p.dim != dim for p in pieces):
        raise DimensionError("affine functions disagree on dimension")
    xs = tuple(xnames) if xnames is not None else default_xnames(dim)
    if len(xs) != dim:
        raise DimensionError(f"{len(xs)} variable names for dimension {dim}")
    clash = set(xs) & set().union(*(p.variables() for p in pieces))
    if clash:
        raise ValueError(f"coefficient symbols {sorted(clash)} collide with the point variables")
    return pieces, xs


def coverage_formula(Q: Sequence[Affine | SymbolicAffine], xnames: Sequence[str] | None = None) -> Formula:
    """``forall x: Q_1(x) >= 0 or ... or Q_m(x) >= 0``."""
    pieces, xs = _prepare(Q, xnames)
    return ForAll(xs, disj(*[ge(q.as_poly(xs)) for q in pieces]))


def redundancy_formula(
    pieces: Sequence[Affine | SymbolicAffine], j: int, xnames: Sequence[str] | None = None
) -> Formula:
    """``forall x: OR_{k != j} P_k(x) - P_j(x) >= 0`` (piece ``j`` is redundant)."""
    pieces, xs = _prepare(pieces, xnames)
    if len(pieces) < 2:
        raise ValueError("redundancy needs at least two pieces")
    if not 0 <= j < len(pieces):
        raise IndexError(f"piece index {j} out of range for {len(pieces)} pieces")
    pj = pieces[j]
    return ForAll(xs, disj(*[ge((p - pj).as_poly(xs)) for k, p in enumerate(pieces) if k != j]))


def stratum_formula(
    pieces: Sequence[Affine | SymbolicAffine], K: Iterable[int], xnames: Sequence[str] | None = None
) -> Formula:
    """Exactly the pieces in ``K`` are relevant."""
    pieces, xs = _prepare(pieces, xnames)
    K = set(K)
    if not K <= set(range(len(pieces))):
        raise IndexError(f"index set {sorted(K)} outside 0..{len(pieces) - 1}")
    if len(pieces) == 1:
        return TRUE if K == {0} else FALSE
    parts = []
    for k in range(len(pieces)):
        f = redundancy_formula(pieces, k, xs)
        parts.append(Not(f) if k in K else f)
    return conj(*parts)


def bridge_constraints(widths: Sequence[int], tag: str) -> tuple[list[Formula], list[str]]:
    """``w = wplus - wminus``, ``wplus, wminus >= 0``, ``wplus * wminus = 0`` per entry."""
    atoms, split_vars = [], []
    for k, i, j in weight_entries(widths):
        w, wp, wm = weight_names(tag, k, i, j)
        pw, pp, pm = Poly.var(w), Poly.var(wp), Poly.var(wm)
        atoms += [eq(pw - pp + pm), ge(pp), ge(pm), eq(pp * pm)]
        split_vars += [wp, wm]
    return atoms, split_vars


def cross_sum_index_sizes(widths1: Sequence[int], widths2: Sequence[int]) -> tuple[int, int]:
    """Formal sizes of the two cross-sum index sets ``(|I|, |J|)``."""
    p1, n1 = architecture_index_sizes(widths1)
    p2, n2 = architecture_index_sizes(widths2)
    return p1 * n2, n1 * p2


def cross_sum_pieces(
    widths1: Sequence[int],
    widths2: Sequence[int] | None = None,
    n0: Network | None = None,
    cap: int | None = None,
    tags: tuple[str, str] = ("n", "m"),
) -> list[tuple[list[SymbolicAffine], list[SymbolicAffine]]]:
    """Per output the symbolic ``A = pos + neg0`` and ``B = neg + pos0`` piece lists."""
    cap = default_piece_cap() if cap is None else cap
    widths1 = tuple(widths1)
    if n0 is not None:
        validate(n0)
        widths2 = n0.widths
    widths2 = widths1 if widths2 is None else tuple(widths2)
    if widths1[0] != widths2[0] or widths1[-1] != widths2[-1]:
        raise DimensionError(f"architectures {widths1} and {widths2} differ in input or output size")
    lhs = symbolic_decompose(widths1, tags[0], cap)
    if n0 is not None:
        pair = decompose(n0, prune=True, cap=cap)
        rhs = [(concrete_symbolic(p.pieces), concrete_symbolic(n.pieces)) for p, n in zip(pair.pos, pair.neg)]
    else:
        rhs = symbolic_decompose(widths2, tags[1], cap)
    out = []
    for (pos, neg), (pos0, neg0) in zip(lhs, rhs):
        size = len(pos) * len(neg0) * len(neg) * len(pos0)
        if size > cap:
            raise PieceCapExceeded(size, cap, "mutual-domination formula")
        A = [p + m for p in pos for m in neg0]
        B = [q + n for q in neg for n in pos0]
        out.append((A, B))
    return out


def equivalence_formula(
    widths1: Sequence[int],
    widths2: Sequence[int] | None = None,
    n0: Network | None = None,
    cap: int | None = None,
    xnames: Sequence[str] | None = None,
    tags: tuple[str, str] = ("n", "m"),
) -> Formula:
    """Coefficients (free: raw ``w``, ``b``, ``t``) of networks whose function equals the other side's.

    Envelope equality ``max A = max B`` is written as mutual domination,
    and each weight is tied to its positive and negative parts by the
    complementarity system, which are existentially bound.
    """
    sides = cross_sum_pieces(widths1, widths2, n0, cap, tags)
    dim = tuple(widths1)[0]
    xs = tuple(xnames) if xnames is not None else default_xnames(dim)
    bodies = []
    for A, B in sides:
        Ap = [a.as_poly(xs) for a in A]
        Bp = [b.as_poly(xs) for b in B]
        a_below = [disj(*[ge(b - a) for b in Bp]) for a in Ap]
        b_below = [disj(*[ge(a - b) for a in Ap]) for b in Bp]
        bodies.extend(a_below + b_below)
    bridges, split_vars = bridge_constraints(widths1, tags[0])
    if n0 is None:
        more, more_vars = bridge_constraints(widths2 if widths2 is not None else widths1, tags[1])
        bridges += more
        split_vars += more_vars
    return Exists(tuple(sorted_names(split_vars)), conj(*bridges, ForAll(xs, conj(*bodies))))

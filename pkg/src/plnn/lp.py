"""Exact emptiness test for open polyhedra ``{x : G x > h}``.

The margin program ``max delta  s.t.  G x - delta >= h,  delta <= 1`` is solved
through its dual,

    min  z - h.y   s.t.  G^T y = 0,  sum(y) + z = 1,  y, z >= 0,

which has ``dim + 1`` equality rows no matter how many inequalities there
are.  The primal point is read back from the simplex multipliers and checked
exactly before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._kernels import simplex_eq
from .arith import as_rat, rat_vector
from .errors import DimensionError, PlnnError

Row = tuple[tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class StrictSystem:
    """Rows ``(g, h)`` meaning ``g.x > h``; optional ``closed`` rows mean ``g.x >= h``."""

    dim: int
    rows: tuple[Row, ...]
    closed: tuple[Row, ...] = ()

    def __post_init__(self):
        rows = tuple((rat_vector(g), as_rat(h)) for g, h in self.rows)
        closed = tuple((rat_vector(g), as_rat(h)) for g, h in self.closed)
        if not rows and not closed:
            raise ValueError("empty inequality system")
        for g, _ in rows + closed:
            if len(g) != self.dim:
                raise DimensionError(f"row has {len(g)} coefficients, system dim is {self.dim}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "closed", closed)


@dataclass(frozen=True)
class Feasible:
    witness: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Infeasible:
    def __bool__(self) -> bool:
        return False


StrictOutcome = Feasible | Infeasible


def _lhs(g, x) -> Fraction:
    s = Fraction(0)
    for a, v in zip(g, x):
        if a:
            s += a * v
    return s


def verify_witness(sys: StrictSystem, x: Sequence) -> bool:
    x = rat_vector(x)
    if len(x) != sys.dim:
        raise DimensionError(f"point has {len(x)} coordinates, system dim is {sys.dim}")
    return all(_lhs(g, x) > h for g, h in sys.rows) and all(_lhs(g, x) >= h for g, h in sys.closed)


def strict_feasible(sys: StrictSystem) -> StrictOutcome:
    d = sys.dim
    cols = list(sys.rows) + list(sys.closed)
    n_strict = len(sys.rows)
    A = [[g[l] for g, _ in cols] + [0] for l in range(d)]
    A.append([1] * n_strict + [0] * len(sys.closed) + [1])
    b = [0] * d + [1]
    c = [-h for _, h in cols] + [1]
    status, _, value, duals = simplex_eq(A, b, c)
    if status == "unbounded":
        # only closed rows can make the margin program infeasible
        return Infeasible()
    if status != "optimal":
        raise PlnnError(f"margin program unexpectedly {status}")
    if value <= 0:
        return Infeasible()
    x = tuple(-u for u in duals[:d])
    if not verify_witness(sys, x):
        raise PlnnError("simplex multipliers failed exact verification")
    return Feasible(x)

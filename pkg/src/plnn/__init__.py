"""Exact tropical decomposition and equivalence of piecewise-linear networks.

Networks ``x -> max{W x + b, t}`` (layer by layer) are rewritten as a
difference of two upper envelopes of affine pieces. Envelopes are reduced to
their unique minimal form with an exact rational LP, which decides network
equivalence; the same conditions can be emitted as first-order formulas for
external real-arithmetic solvers.
"""

from ._kernels import BACKEND
from .arith import Matrix, format_rat, matvec, parse_rat, split_pos_neg
from .envelope import (
    corners_1d,
    covers_Rn,
    is_corner,
    is_redundant,
    minimize,
    minimize_sum,
    relevant_indices,
)
from .equivalence import EquivVerdict, dominance_witness, equivalent, gen_permuted, gen_scaled
from .errors import DimensionError, FragmentError, PieceCapExceeded, PlnnError, ShapeError
from .lp import Feasible, Infeasible, StrictSystem, strict_feasible, verify_witness
from .network import (
    Layer,
    Network,
    TropicalPair,
    decompose,
    forward_eval,
    index_set_sizes,
    piece_counts,
    validate,
)
from .pl import (
    Affine,
    PLFunc,
    PLVec,
    matvec_nonneg,
    pl_add,
    pl_dedup,
    pl_eval,
    pl_max,
    pl_scale_nonneg,
)

__version__ = "0.1.0"

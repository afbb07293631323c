"""Semialgebraic membership conditions as first-order formulas."""

from .conditions import (
    bridge_constraints,
    coverage_formula,
    cross_sum_pieces,
    cross_sum_index_sizes,
    equivalence_formula,
    redundancy_formula,
    stratum_formula,
)
from .formula import FALSE, TRUE, And, Atom, Exists, ForAll, Formula, Not, Or, free_vars
from .ground import eval_ground
from .poly import Poly, parse_poly
from .smtlib import emit_smtlib
from .symbolic import SymbolicAffine, full_assignment, raw_assignment, symbolic_decompose

__all__ = [
    "And", "Atom", "Exists", "FALSE", "ForAll", "Formula", "Not", "Or", "Poly", "SymbolicAffine", "TRUE",
    "bridge_constraints", "coverage_formula", "cross_sum_pieces", "emit_smtlib", "cross_sum_index_sizes",
    "equivalence_formula", "eval_ground", "free_vars", "full_assignment", "parse_poly", "raw_assignment",
    "redundancy_formula", "stratum_formula", "symbolic_decompose",
]

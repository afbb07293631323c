"""First-order formulas over polynomial sign conditions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .poly import Poly, natural_key

RELATIONS = ("=", ">", ">=")


@dataclass(frozen=True)
class Atom:
    """``poly REL 0``."""

    poly: Poly
    rel: str

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class And:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class ForAll:
    vars: tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: tuple[str, ...]
    body: "Formula"


Formula = Union[Atom, And, Or, Not, ForAll, Exists]

TRUE = And(())
FALSE = Or(())


def ge(p: Poly) -> Atom:
    return Atom(p, ">=")


def gt(p: Poly) -> Atom:
    return Atom(p, ">")


def eq(p: Poly) -> Atom:
    return Atom(p, "=")


def conj(*args: Formula) -> Formula:
    return args[0] if len(args) == 1 else And(tuple(args))


def disj(*args: Formula) -> Formula:
    return args[0] if len(args) == 1 else Or(tuple(args))


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return f.poly.variables()
    if isinstance(f, (And, Or)):
        out: set[str] = set()
        for a in f.args:
            out |= free_vars(a)
        return out
    if isinstance(f, Not):
        return free_vars(f.arg)
    if isinstance(f, (ForAll, Exists)):
        return free_vars(f.body) - set(f.vars)
    raise TypeError(f"not a formula: {f!r}")


def check_well_formed(f: Formula, bound: frozenset = frozenset()) -> None:
    """Quantified names must be distinct from each other and from enclosing binders."""
    if isinstance(f, Atom):
        return
    if isinstance(f, (And, Or)):
        for a in f.args:
            check_well_formed(a, bound)
    elif isinstance(f, Not):
        check_well_formed(f.arg, bound)
    elif isinstance(f, (ForAll, Exists)):
        if len(set(f.vars)) != len(f.vars):
            raise ValueError(f"duplicate bound variable in {f.vars}")
        clash = bound & set(f.vars)
        if clash:
            raise ValueError(f"variables {sorted(clash)} rebound in a nested quantifier")
        check_well_formed(f.body, bound | frozenset(f.vars))
    else:
        raise TypeError(f"not a formula: {f!r}")


def sorted_names(names) -> list[str]:
    return sorted(names, key=natural_key)


def atom_count(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1
    if isinstance(f, (And, Or)):
        return sum(atom_count(a) for a in f.args)
    if isinstance(f, Not):
        return atom_count(f.arg)
    return atom_count(f.body)

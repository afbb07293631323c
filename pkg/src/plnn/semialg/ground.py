"""Exact decision of ground instances of the formulas built in ``conditions``.

Supported fragment, after the free symbols are replaced by rationals:

* Boolean combinations (and/or/not) of ground atoms and sentences below;
* ``forall xs: body`` where ``body`` is quantifier free and every atom is
  affine in ``xs``; decided by refuting each disjunct of the negated body
  with the exact LP;
* ``exists vs: (... and <complementarity system> and ...)`` where each
  bound pair is pinned by ``w - p + m = 0, p >= 0, m >= 0, p*m = 0``.

Anything else raises :class:`FragmentError`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import FragmentError
from ..lp import StrictSystem, strict_feasible
from .formula import And, Atom, Exists, ForAll, Formula, Not, Or, sorted_names
from .poly import Poly

DNF_LIMIT = 200_000


def eval_ground(f: Formula, assignment: Mapping[str, Fraction]) -> bool:
    env = {k: Fraction(v) for k, v in assignment.items()}
    return _eval(f, env)


def _ground_atom(atom: Atom, env) -> bool:
    p = atom.poly.subs(env)
    if not p.is_const():
        left = sorted_names(p.variables())
        raise FragmentError(f"unassigned or unquantified variables {left} in atom")
    v = p.const_value()
    if atom.rel == ">=":
        return v >= 0
    if atom.rel == ">":
        return v > 0
    return v == 0


def _eval(f: Formula, env) -> bool:
    if isinstance(f, Atom):
        return _ground_atom(f, env)
    if isinstance(f, And):
        return all(_eval(a, env) for a in f.args)
    if isinstance(f, Or):
        return any(_eval(a, env) for a in f.args)
    if isinstance(f, Not):
        return not _eval(f.arg, env)
    if isinstance(f, ForAll):
        return _forall(f, env)
    if isinstance(f, Exists):
        return _exists(f, env)
    raise FragmentError(f"not a formula: {f!r}")


# -- universal block -------------------------------------------------------


def _nnf_neg(f: Formula, negate: bool):
    """Negation normal form as nested ('and'|'or', [...]) / (poly, rel) literals."""
    if isinstance(f, Atom):
        if not negate:
            return (f.poly, f.rel)
        if f.rel == ">=":
            return (-f.poly, ">")
        if f.rel == ">":
            return (-f.poly, ">=")
        return ("or", [(f.poly, ">"), (-f.poly, ">")])
    if isinstance(f, Not):
        return _nnf_neg(f.arg, not negate)
    if isinstance(f, (And, Or)):
        is_and = isinstance(f, And) != negate
        return ("and" if is_and else "or", [_nnf_neg(a, negate) for a in f.args])
    raise FragmentError("nested quantifier inside a universal block")


def _dnf(node) -> list[list]:
    if node[0] == "and":
        out = [[]]
        for child in node[1]:
            parts = _dnf(child)
            if len(out) * len(parts) > DNF_LIMIT:
                raise FragmentError("negated body too large to split into conjunctions")
            out = [a + b for a in out for b in parts]
        return out
    if node[0] == "or":
        out = []
        for child in node[1]:
            out.extend(_dnf(child))
        return out
    return [[node]]


def _forall(f: ForAll, env) -> bool:
    xs = list(f.vars)
    if set(xs) & set(env):
        raise FragmentError(f"bound variables {sorted(set(xs) & set(env))} also assigned")
    # substitute once per distinct atom polynomial
    cache: dict[Poly, Poly] = {}

    def ground(p: Poly) -> Poly:
        q = cache.get(p)
        if q is None:
            q = cache[p] = p.subs(env)
        return q

    for branch in _dnf(_nnf_neg(f.body, True)):
        strict, closed = [], []
        dead = False
        for poly, rel in branch:
            q = ground(poly)
            lin = q.affine_in(xs)
            if lin is None:
                raise FragmentError(f"atom {q} is not affine in {xs} after substitution")
            coeffs, const = lin
            if not coeffs:
                ok = const > 0 if rel == ">" else (const >= 0 if rel == ">=" else const == 0)
                if not ok:
                    dead = True
                    break
                continue
            g = tuple(coeffs.get(x, Fraction(0)) for x in xs)
            if rel == ">":
                strict.append((g, -const))
            elif rel == ">=":
                closed.append((g, -const))
            else:
                closed.append((g, -const))
                closed.append((tuple(-v for v in g), const))
        if dead:
            continue
        if not strict and not closed:
            return False
        if strict_feasible(StrictSystem(len(xs), tuple(strict), tuple(closed))):
            return False
    return True


# -- existential block -------------------------------------------------------


def _conjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, And):
        out = []
        for a in f.args:
            out.extend(_conjuncts(a))
        return out
    return [f]


def _exists(f: Exists, env) -> bool:
    bound = set(f.vars)
    atoms = [a for a in _conjuncts(f.body) if isinstance(a, Atom)]
    nonneg = set()
    products = set()
    links = {}
    for a in atoms:
        p = a.poly.subs(env)
        names = p.variables()
        if not names or not names <= bound:
            continue
        if a.rel == ">=":
            lin = p.affine_in(bound)
            if lin and len(lin[0]) == 1 and lin[1] == 0:
                (v, c), = lin[0].items()
                if c > 0:
                    nonneg.add(v)
        elif a.rel == "=":
            lin = p.affine_in(bound)
            if lin is not None and len(lin[0]) == 2:
                (u, cu), (v, cv) = sorted(lin[0].items())
                if {cu, cv} == {1, -1}:
                    plus, minus = (u, v) if cu == -1 else (v, u)
                    links[(plus, minus)] = lin[1]
            elif lin is None and len(p.terms) == 1:
                (mono, _), = p.terms.items()
                if len(mono) == 2 and all(e == 1 for _, e in mono):
                    products.add(frozenset(v for v, _ in mono))
    pinned = {}
    for (plus, minus), w in links.items():
        if plus in nonneg and minus in nonneg and frozenset((plus, minus)) in products:
            pinned[plus] = max(w, Fraction(0))
            pinned[minus] = max(-w, Fraction(0))
    missing = bound - set(pinned)
    if missing:
        raise FragmentError(f"existential variables {sorted_names(missing)} are not pinned by a sign split")
    inner = dict(env)
    inner.update(pinned)
    return _eval(f.body, inner)

"""SMT-LIB 2 text for formulas (logic NRA: quantified nonlinear real arithmetic)."""

from __future__ import annotations

import re
from fractions import Fraction

from .formula import And, Atom, Exists, ForAll, Formula, Not, Or, check_well_formed, free_vars, sorted_names
from .poly import Poly

_SIMPLE = re.compile(r"^[A-Za-z_~!@$%^&*+=<>.?/-][A-Za-z0-9_~!@$%^&*+=<>.?/-]*$")


def symbol(name: str) -> str:
    if _SIMPLE.match(name):
        return name
    if "|" in name or "\\" in name:
        raise ValueError(f"cannot quote symbol {name!r}")
    return f"|{name}|"


def number(value: Fraction) -> str:
    value = Fraction(value)
    mag = abs(value)
    text = str(mag.numerator) if mag.denominator == 1 else f"(/ {mag.numerator} {mag.denominator})"
    return f"(- {text})" if value < 0 else text


def _monomial(mono) -> str:
    factors = [symbol(v) for v, e in mono for _ in range(e)]
    return factors[0] if len(factors) == 1 else "(* " + " ".join(factors) + ")"


def _term(mono, coeff: Fraction) -> str:
    if not mono:
        return number(coeff)
    body = _monomial(mono)
    if coeff == 1:
        return body
    inner = body[3:-1] if body.startswith("(* ") else body
    return f"(* {number(coeff)} {inner})"


def poly_text(p: Poly) -> str:
    terms = [(m, c) for m, c in p.sorted_terms()]
    # variables first, constant last
    terms = [t for t in terms if t[0]] + [t for t in terms if not t[0]]
    if not terms:
        return "0"
    if len(terms) == 1:
        m, c = terms[0]
        return _term(m, c) if c > 0 or not m else f"(- {_term(m, -c)})"
    if len(terms) == 2 and terms[0][1] > 0 and terms[1][1] < 0:
        return f"(- {_term(terms[0][0], terms[0][1])} {_term(terms[1][0], -terms[1][1])})"
    parts = []
    for m, c in terms:
        parts.append(_term(m, c) if c > 0 or not m else f"(- {_term(m, -c)})")
    return "(+ " + " ".join(parts) + ")"


def formula_text(f: Formula) -> str:
    if isinstance(f, Atom):
        return f"({f.rel} {poly_text(f.poly)} 0)"
    if isinstance(f, (And, Or)):
        if not f.args:
            return "true" if isinstance(f, And) else "false"
        if len(f.args) == 1:
            return formula_text(f.args[0])
        op = "and" if isinstance(f, And) else "or"
        return f"({op} " + " ".join(formula_text(a) for a in f.args) + ")"
    if isinstance(f, Not):
        return f"(not {formula_text(f.arg)})"
    if isinstance(f, (ForAll, Exists)):
        q = "forall" if isinstance(f, ForAll) else "exists"
        binders = " ".join(f"({symbol(v)} Real)" for v in f.vars)
        return f"({q} ({binders}) {formula_text(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


def emit_smtlib(f: Formula, comment: str | None = None, check_sat: bool = True) -> str:
    check_well_formed(f)
    lines = []
    if comment:
        lines += [f"; {line}" for line in comment.splitlines()]
    lines.append("(set-logic NRA)")
    for v in sorted_names(free_vars(f)):
        lines.append(f"(declare-fun {symbol(v)} () Real)")
    lines.append(f"(assert {formula_text(f)})")
    if check_sat:
        lines.append("(check-sat)")
    return "\n".join(lines) + "\n"

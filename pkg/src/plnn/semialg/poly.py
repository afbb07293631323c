"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Iterable, Mapping

from ..arith import RatParseError, as_rat, parse_rat

Monomial = tuple[tuple[str, int], ...]

_NUM_SPLIT = re.compile(r"(\d+)")


def natural_key(name: str):
    """Sort key ordering ``w_1_10`` after ``w_1_9``."""
    return tuple(int(p) if p.isdigit() else p for p in _NUM_SPLIT.split(name))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable polynomial; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, Fraction) else as_rat(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, value) -> "Poly":
        value = as_rat(value)
        return cls({(): value}) if value else cls()

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def lift(cls, value) -> "Poly":
        return value if isinstance(value, Poly) else cls.const(value)

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not m for m in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __add__(self, other) -> "Poly":
        other = Poly.lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = Poly.lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def subs(self, assignment: Mapping[str, Fraction]) -> "Poly":
        """Substitute the assigned variables; others stay symbolic."""
        out: dict = {}
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for v, e in m:
                if v in assignment:
                    coeff = coeff * assignment[v] ** e
                else:
                    rest.append((v, e))
            if coeff:
                key = tuple(rest)
                out[key] = out.get(key, 0) + coeff
        return Poly(out)

    def __call__(self, assignment: Mapping[str, Fraction]) -> Fraction:
        missing = self.variables() - set(assignment)
        if missing:
            raise KeyError(f"unassigned variables: {sorted(missing, key=natural_key)}")
        return self.subs(assignment).const_value()

    def affine_in(self, names: Iterable[str]) -> tuple[dict[str, Fraction], Fraction] | None:
        """``(coefficients, constant)`` when every term is constant or linear in ``names``."""
        names = set(names)
        lin: dict[str, Fraction] = {}
        const = Fraction(0)
        for m, c in self.terms.items():
            if not m:
                const += c
            elif len(m) == 1 and m[0][1] == 1 and m[0][0] in names:
                lin[m[0][0]] = lin.get(m[0][0], 0) + c
            else:
                return None
        return lin, const

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        def key(item):
            m, _ = item
            return (0 if m else 1, [(natural_key(v), e) for v, e in m])

        return sorted(self.terms.items(), key=key)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class PolyParseError(ValueError):
    pass


def parse_poly(text) -> Poly:
    """Parse ``"2*a - 1/3*b^2 + 0.5"`` style expressions (``^`` or ``**`` for powers)."""
    if isinstance(text, Poly):
        return text
    if not isinstance(text, str):
        return Poly.const(as_rat(text))
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _from_ast(tree.body, text)


def _from_ast(node, text: str) -> Poly:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
            raise PolyParseError(f"unsupported literal in {text!r}")
        src = ast.get_source_segment(text.replace("^", "**"), node)
        try:
            return Poly.const(parse_rat(src) if src else node.value)
        except RatParseError as exc:
            raise PolyParseError(f"in {text!r}: {exc}") from None
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _from_ast(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _from_ast(node.left, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise PolyParseError(f"exponents must be integer literals in {text!r}")
            return left ** node.right.value
        right = _from_ast(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_const() or right.is_zero():
                raise PolyParseError(f"division only by nonzero constants in {text!r}")
            return left * Poly.const(1 / right.const_value())
    raise PolyParseError(f"unsupported syntax in polynomial {text!r}")

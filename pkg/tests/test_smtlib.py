import re
from fractions import Fraction

import pytest

from plnn.pl import Affine
from plnn.semialg import Atom, ForAll, Poly, SymbolicAffine, coverage_formula, emit_smtlib, parse_poly
from plnn.semialg.smtlib import number, poly_text, symbol


def test_numbers():
    assert number(Fraction(3)) == "3"
    assert number(Fraction(-3)) == "(- 3)"
    assert number(Fraction(1, 3)) == "(/ 1 3)"
    assert number(Fraction(-2, 5)) == "(- (/ 2 5))"


def test_symbols():
    assert symbol("n_w_1_1_1") == "n_w_1_1_1"
    assert symbol("a b") == "|a b|"
    with pytest.raises(ValueError):
        symbol("a|b")


@pytest.mark.parametrize("text, expected", [
    ("0", "0"),
    ("x", "x"),
    ("-x", "(- x)"),
    ("2*x", "(* 2 x)"),
    ("x - 1", "(- x 1)"),
    ("x*y", "(* x y)"),
    ("3*x^2*y", "(* 3 x x y)"),
    ("x + y - 1/2", "(+ x y (- (/ 1 2)))"),
])
def test_poly_text(text, expected):
    assert poly_text(parse_poly(text)) == expected


def _balanced(text):
    depth = 0
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def test_coverage_script_structure():
    Q = [SymbolicAffine((parse_poly("1"), parse_poly("1")), parse_poly("-c")),
         SymbolicAffine((parse_poly("-1"), parse_poly("-1")), parse_poly("d"))]
    text = emit_smtlib(coverage_formula(Q), comment="band")
    lines = text.splitlines()
    assert lines[0] == "; band"
    assert lines[1] == "(set-logic NRA)"
    assert lines[2:4] == ["(declare-fun c () Real)", "(declare-fun d () Real)"]
    assert lines[-1] == "(check-sat)"
    assert "(forall ((x1 Real) (x2 Real))" in text
    assert _balanced(text)
    assert not re.search(r"\d\.\d", text)  # no decimal literals


def test_declarations_in_natural_order():
    f = ForAll(("x",), Atom(Poly.var("w_10") + Poly.var("w_9") + Poly.var("x"), ">="))
    text = emit_smtlib(f, check_sat=False)
    assert text.index("w_9") < text.index("w_10")
    assert "(check-sat)" not in text


def test_ill_formed_rejected():
    with pytest.raises(ValueError):
        emit_smtlib(Atom(Poly.var("x"), "<"))


@pytest.mark.solver
def test_solver_agrees_on_coverage():
    z3 = pytest.importorskip("z3")
    for c, d, expected in ((0, 1, "sat"), (1, 0, "unsat")):
        Q = [Affine((1, 1), -c), Affine((-1, -1), d)]
        s = z3.Solver()
        s.from_string(emit_smtlib(coverage_formula(Q)))
        assert str(s.check()) == expected


@pytest.mark.solver
def test_solver_agrees_on_redundancy():
    z3 = pytest.importorskip("z3")
    from plnn.semialg import redundancy_formula

    pieces = [SymbolicAffine((parse_poly(c),), Poly()) for c in ("1", "2", "a")]
    text = emit_smtlib(redundancy_formula(pieces, 2, ["x"]), check_sat=False)
    for a, expected in (("(/ 3 2)", "sat"), ("3", "unsat")):
        s = z3.Solver()
        s.from_string(text + f"(assert (= a {a}))\n")
        assert str(s.check()) == expected

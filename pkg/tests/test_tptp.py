from __future__ import annotations

import pytest

from helpers import minicorpus
from holtptp.errors import DialectViolation, TptpSyntaxError
from holtptp.formats import FORMATS, translate
from holtptp.hol import TyApp, fun
from holtptp.hol.types import flatten_name
from holtptp.problems import make_problem
from holtptp.syntactic.th1 import to_th1
from holtptp.theory import parse_theory
from holtptp.tptp.ast import TRUE, Annotated, Dialect, Fn, Quant, Sym, TptpProblem, Var
from holtptp.tptp.mangle import mangle, resolve
from holtptp.tptp.parser import parse_tptp
from holtptp.tptp.printer import print_problem

I_THM = """
(const I (fun 'a 'a))
(thm i_thm (deps) (! (l (v x 'a) (a (a (c eq (fun 'a (fun 'a bool))) (a (c I (fun 'a 'a)) (v x 'a))) (v x 'a)))))
"""


def test_th1_polymorphic_declaration():
    th = parse_theory(I_THM, "thy")
    text = print_problem(to_th1(make_problem(th, "i_thm", "bushy")))
    assert "thf(i_tp, type, i: !>[A: $tType]: (A > A))." in text.splitlines()


def test_minimal_fof_problem():
    p = TptpProblem(Dialect.FOF, (), (Annotated("goal", "conjecture", TRUE),))
    assert print_problem(p) == "fof(goal, conjecture, $true).\n"


def test_lambda_in_fof_is_rejected():
    lam = Quant("^", (("X", None),), Var("X"))
    p = TptpProblem(Dialect.FOF, (), (Annotated("goal", "conjecture", lam),))
    with pytest.raises(DialectViolation):
        print_problem(p)


def test_type_quantifier_in_tf0_is_rejected():
    body = Quant("!>", (("A", Fn("$tType")),), TRUE)
    with pytest.raises(DialectViolation):
        print_problem(TptpProblem(Dialect.TF0, (), (Annotated("goal", "conjecture", body),)))


class TestMangle:
    def test_case_fold(self):
        assert mangle("MAP", "function") == "map"

    def test_variable(self):
        assert mangle("x", "variable") == "X"

    def test_quoting(self):
        assert mangle("0", "function") == "'0'"
        assert mangle("a-b", "function") == "'a-b'"

    def test_basic_type_flattening(self):
        assert flatten_name(TyApp("list", (TyApp("real"),))) == "list_real"
        assert flatten_name(fun(TyApp("bool"), TyApp("bool"))) == "fun_o_o"

    def test_collisions_get_suffixes(self):
        f1, f2 = Sym("atom", "F", "F"), Sym("atom", "f", "f")
        goal = Quant("!", (("X", None),), Fn("p", (Fn(f1), Fn(f2), Var("X"))))
        out = resolve(TptpProblem(Dialect.FOF, (), (Annotated("goal", "conjecture", goal),)))
        atoms = out.formulas[0].formula.body.args
        assert [a.name for a in atoms[:2]] == ["f", "f_1"]

    def test_injective_over_corpus(self):
        th = minicorpus()
        for fmt in FORMATS:
            p = translate(make_problem(th, th.theorems[-1].name, "chainy"), fmt)
            declared = [d.symbol for d in p.decls]
            assert len(declared) == len(set(declared)), fmt


@pytest.mark.parametrize("fmt", list(FORMATS))
def test_round_trip_is_structural(fmt):
    th = minicorpus()
    for thm in th.theorems[::4]:
        p = translate(make_problem(th, thm.name, "bushy"), fmt)
        assert parse_tptp(print_problem(p), p.dialect) == p


def test_printing_is_deterministic():
    th = minicorpus()
    p = make_problem(th, th.theorems[5].name, "chainy")
    for fmt in FORMATS:
        assert print_problem(translate(p, fmt)) == print_problem(translate(p, fmt))


def test_one_formula_per_line():
    th = minicorpus()
    text = print_problem(translate(make_problem(th, th.theorems[-1].name, "chainy"), "th0-ii"))
    assert all(line.endswith(").") for line in text.splitlines())


class TestParser:
    def test_typed_binder_in_fof(self):
        with pytest.raises(TptpSyntaxError):
            parse_tptp("fof(a, axiom, ![X:num]: p(X)).", "fof")

    def test_th0_golden_conjecture_parses(self):
        text = ("thf(conj, conjecture, ![A: del, B: del, F: $i]: ((mem @ F @ (arr @ A @ B)) => "
                "(![X: $i]: ((mem @ X @ A) => ((ap @ (ap @ (let @ A @ B) @ F) @ X) = (ap @ F @ X)))))).")
        p = parse_tptp(text, "th0")
        assert len(p.conjectures) == 1

    def test_syntax_error_location(self):
        with pytest.raises(TptpSyntaxError) as e:
            parse_tptp("fof(a, axiom, p(X).\n", "fof")
        assert e.value.line == 1

    def test_dialect_inferred_from_keyword(self):
        assert parse_tptp("thf(a, conjecture, $true).").dialect in (Dialect.TH0, Dialect.TH1)
        assert parse_tptp("fof(a, conjecture, $true).").dialect is Dialect.FOF

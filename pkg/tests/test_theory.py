from __future__ import annotations

import pytest

from helpers import LET, MINICORPUS
from holtptp.errors import DuplicateName, ForwardReference, HolTypeError, TheoryError, UnknownName
from holtptp.hol import BOOL, TyVar, alpha_eq, fun, mk_eq, mk_forall
from holtptp.hol.terms import App, Const, Var
from holtptp.theory import load_theory, parse_theory, print_theory

I_THM = """
(const I (fun 'a 'a))
(thm i_thm (deps) (! (l (v x 'a) (a (a (c eq (fun 'a (fun 'a bool))) (a (c I (fun 'a 'a)) (v x 'a))) (v x 'a)))))
"""


def test_identity_theorem():
    th = parse_theory(I_THM)
    a = TyVar("a")
    x = Var("x", a)
    expected = mk_forall(x, mk_eq(App(Const("I", fun(a, a)), x), x))
    f = th["i_thm"]
    assert f.role == "theorem" and f.deps == ()
    assert alpha_eq(f.prop, expected)


def test_empty_file():
    assert parse_theory("").formulas == ()
    assert parse_theory("; only a comment\n").formulas == ()


def test_unknown_constant_is_located():
    with pytest.raises(UnknownName) as e:
        parse_theory("(axiom a1\n  (a (c J (fun bool bool)) (c true bool)))")
    assert (e.value.line, e.value.column) == (2, 9)


def test_forward_reference():
    text = "(axiom a1 (a (c P (fun bool bool)) (c true bool)))\n(const P (fun bool bool))"
    with pytest.raises(ForwardReference):
        parse_theory(text)


def test_dependency_must_be_earlier():
    text = "(thm t1 (deps t2) (c true bool))\n(thm t2 (deps) (c true bool))"
    with pytest.raises(ForwardReference):
        parse_theory(text)


def test_duplicate_names_rejected():
    with pytest.raises(DuplicateName):
        parse_theory("(axiom a (c true bool))\n(axiom a (c true bool))")
    with pytest.raises(DuplicateName):
        parse_theory("(axiom a (c true bool))\n(thm t (deps a a) (c true bool))")


def test_ill_typed_instance():
    with pytest.raises(HolTypeError):
        parse_theory("(axiom a (a (c neg (fun bool bool)) (v x 'a)))")


def test_non_proposition():
    with pytest.raises(TheoryError):
        parse_theory("(typeop num 0)\n(const Z num)\n(axiom a (c Z num))")


@pytest.mark.parametrize(
    "text",
    [
        "(axiom a",
        "(axiom a (c true bool)))",
        "(axiom a (q true bool))",
        "(frobnicate)",
        "(typeop num x)",
        "(axiom a (l (c true bool) (c true bool)))",
        "(axiom a (v x ')) ",
    ],
)
def test_malformed_inputs_give_located_errors(text):
    with pytest.raises(TheoryError) as e:
        parse_theory(text)
    assert e.value.line >= 1


@pytest.mark.parametrize("path", [LET, MINICORPUS])
def test_print_parse_fixpoint(path):
    th = load_theory(path)
    again = parse_theory(print_theory(th), th.name)
    assert again.formulas == th.formulas
    assert again.signature == th.signature
    assert print_theory(again) == print_theory(th)


def test_roles_and_deps():
    th = load_theory(LET)
    assert [f.role for f in th.formulas] == ["definition", "theorem"]
    assert th["LET_THM"].deps == ("LET_DEF",)
    assert th.name == "let"


def test_every_formula_is_a_proposition():
    from holtptp.hol import typecheck

    th = load_theory(MINICORPUS)
    assert all(typecheck(f.prop, th.signature) == BOOL for f in th.formulas)

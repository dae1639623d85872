from __future__ import annotations

import pytest
from hypothesis import given, settings

from helpers import SIG, conjecture_problem, formulas, minicorpus
from holtptp.formats import translate_text
from holtptp.hol import BOOL, typecheck
from holtptp.hol.logic import is_formula_connective
from holtptp.hol.terms import Abs, subterms
from holtptp.problems import make_problem
from holtptp.syntactic.lifting import atoms_of
from holtptp.syntactic.pipeline import lift_problem
from holtptp.theory import parse_theory
from holtptp.validate import check_text

HEADER = """
(typeop num 0)
(const ZERO num)
(const SUC (fun num num))
(const TIMES (fun num (fun num num)))
(const linear (fun (fun num num) bool))
(const Q (fun (fun 'a (fun 'b 'a)) bool))
(const COND2 (fun bool (fun num (fun num num))))
(const G (fun bool bool))
(const I (fun 'a 'a))
(const P bool)
(const R bool)
"""

GOALS = {
    "linear": "(! (l (v k num) (a (c linear (fun (fun num num) bool))"
              " (l (v x num) (a (a (c TIMES (fun num (fun num num))) (v k num)) (v x num))))))",
    "q": "(a (c Q (fun (fun 'a (fun 'b 'a)) bool)) (l (v x 'a) (l (v y 'b) (v x 'a))))",
    "g": "(a (c G (fun bool bool)) (a (a (c and (fun bool (fun bool bool))) (c P bool)) (c R bool)))",
    "cond": "(a (a (c eq (fun num (fun num bool))) (a (a (a (c COND2 (fun bool (fun num (fun num num))))"
            " (a (a (c and (fun bool (fun bool bool))) (c P bool)) (c R bool))) (c ZERO num)) (c ZERO num)))"
            " (c ZERO num))",
    "suc": "(a (a (c eq (fun num (fun num bool))) (a (c SUC (fun num num)) (c ZERO num))) (c ZERO num))",
    "ii": "(! (l (v x 'a) (a (a (c eq (fun 'a (fun 'a bool))) (a (a (c I (fun (fun 'a 'a) (fun 'a 'a)))"
          " (c I (fun 'a 'a))) (v x 'a))) (v x 'a))))",
}


def problem(key):
    th = parse_theory(HEADER + f"(thm goal (deps) {GOALS[key]})", "t")
    return make_problem(th, "goal", "bushy")


def lines(key, fmt):
    return translate_text(problem(key), fmt).splitlines()


class TestLambdaLifting:
    def test_capturing_abstraction(self):
        out = lines("linear", "tf1-i")
        assert "tff(def_f1, axiom, ![K: num, X: num]: (f1_2(K,X) = times_2(K,X)))." in out
        assert "tff(conj, conjecture, ![K: num]: p(linear_1(f1_1(K))))." in out

    def test_polymorphic_projection(self):
        out = lines("q", "tf1-i")
        assert "tff(def_f1, axiom, !>[A: $tType, B: $tType]: ![X: A, Y: B]: (f1_2(A,B,X,Y) = X))." in out
        assert "tff(conj, conjecture, !>[A: $tType, B: $tType]: p(q_1(A,B,f1(A,B))))." in out

    def test_th1_keeps_lambdas(self):
        out = lines("q", "th1-i")
        assert "thf(conj, conjecture, !>[A: $tType, B: $tType]: (q @ A @ B @ (^[X: A, Y: B]: X)))." in out


class TestBooleanLifting:
    def test_connective_under_predicate(self):
        out = lines("g", "tf1-i")
        assert "tff(def_f1, axiom, (p(f1) <=> (p(p_1) & p(r))))." in out
        assert "tff(conj, conjecture, p(g_1(f1)))." in out

    def test_condition_argument(self):
        out = "\n".join(lines("cond", "tf1-i"))
        assert "(p(f1) <=> (p(p_1) & p(r)))" in out
        assert "cond2_3(f1,zero,zero)" in out


class TestApify:
    def test_full_application_of_unary_constant(self):
        out = lines("suc", "tf1-i")
        assert "tff(conj, conjecture, (suc_1(zero) = zero))." in out
        assert "tff(arity_suc_1, axiom, ![X1: num]: (suc_1(X1) = ap(num,num,suc,X1)))." in out

    def test_over_application_goes_through_ap(self):
        out = lines("ii", "tf1-i")
        assert "tff(conj, conjecture, !>[A: $tType]: ![X: A]: (ap(A,A,i_1(fun(A,A),i(A)),X) = X))." in out

    def test_ap_declaration(self):
        out = lines("suc", "tf1-i")
        assert "tff(ap_tp, type, ap: !>[A: $tType, B: $tType]: ((fun(A,B) * A) > B))." in out

    def test_fof_tags_every_term(self):
        out = lines("suc", "fof-i")
        assert "fof(conj, conjecture, (s(num,suc_1(s(num,zero))) = s(num,zero)))." in out

    def test_th1_explicit_type_arguments(self):
        out = lines("ii", "th1-i")
        assert "thf(conj, conjecture, !>[A: $tType]: ![X: A]: ((i @ (A > A) @ (i @ A) @ X) = X))." in out


class TestSpecialTypes:
    def test_monomorphic_ap_bridge(self):
        out = lines("linear", "tf0-i")
        assert any(line.startswith("tff(ap_fun_num_num_bridge, axiom,") for line in out)
        assert "tff(conj, conjecture, ![K: num]: p(linear_1(f1_1(K))))." in out

    def test_round_trip_axioms(self):
        out = lines("g", "tf0-i")
        assert "tff(ji_o, axiom, ![X: o]: (j_o(s(bool,i_o(X))) = X))." in out
        assert "tff(ij_o, axiom, ![X: mu]: (s(bool,i_o(j_o(s(bool,X)))) = s(bool,X)))." in out

    def test_polymorphic_terms_stay_tagged(self):
        out = lines("q", "tf0-i")
        assert "tff(conj, conjecture, ![A: del, B: del]: p(j_o(s(bool,q_1(s(fun(A,fun(B,A)),f1))))))." in out


def test_residual_quantifier_gets_equivalence():
    th = minicorpus()
    out = translate_text(make_problem(th, "FORALL_INST", "bushy"), "tf1-i").splitlines()
    assert ("tff(equiv_forall, axiom, !>[A: $tType]: ![P: fun(A,o)]: "
            "(p(forall_1(A,P)) <=> (![X: A]: p(ap(A,o,P,X)))))." in out)


@pytest.mark.parametrize("fmt", ["th1-i", "tf1-i", "fof-i", "tf0-i", "th0-i"])
@pytest.mark.parametrize("key", sorted(GOALS))
def test_examples_validate(key, fmt):
    from holtptp.formats import FORMATS

    assert check_text(translate_text(problem(key), fmt), FORMATS[fmt].dialect) == []


@given(formulas)
@settings(max_examples=200, deadline=None)
def test_lifting_leaves_first_order_atoms(t):
    lifted, ctx = lift_problem(conjecture_problem(SIG, t))
    for f in lifted + [d.formula for d in ctx.defs]:
        for atom in atoms_of(f):
            for s in subterms(atom):
                assert not isinstance(s, Abs)
                if s is not atom and s.ty == BOOL:
                    assert not is_formula_connective(s)
    sig = SIG.copy()
    for d in ctx.defs:
        sig.add_const(d.name, d.const.ty)
    for f in lifted + [d.formula for d in ctx.defs]:
        assert typecheck(f, sig) == BOOL

from __future__ import annotations

import csv

import pytest
from hypothesis import given, settings

from helpers import FIXTURES, formulas, minicorpus, rename_bound
from holtptp.errors import RoleMismatch, UnknownTheorem
from holtptp.problems import Category, category_counts, classify, classify_term, higher_order_reasons, make_problem
from holtptp.theory import parse_theory

HEADER = """
(typeop num 0)
(typeop nlist 0)
(const ZERO num)
(const SUC (fun num num))
(const LEN (fun nlist num))
(const Q (fun (fun num num) bool))
(const G (fun bool bool))
(const P bool)
"""

EXAMPLES = {
    "uni": ("(! (l (v x num) (a (a (c eq (fun num (fun num bool))) (a (c SUC (fun num num)) (v x num)))"
            " (a (c SUC (fun num num)) (v x num)))))", Category.UNI_FO),
    "mono": ("(! (l (v l nlist) (a (a (c eq (fun num (fun num bool))) (a (c LEN (fun nlist num)) (v l nlist)))"
             " (c ZERO num))))", Category.MONO_FO),
    "poly": ("(! (l (v x 'a) (a (a (c eq (fun 'a (fun 'a bool))) (v x 'a)) (v x 'a))))", Category.POLY_FO),
    "fnvar": ("(! (l (v f (fun num num)) (a (a (c eq (fun num (fun num bool))) (a (v f (fun num num)) (c ZERO num)))"
              " (c ZERO num))))", Category.MONO_HO),
    "partial": ("(a (c Q (fun (fun num num) bool)) (c SUC (fun num num)))", Category.MONO_HO),
    "boolarg": ("(a (c G (fun bool bool)) (c P bool))", Category.MONO_HO),
    "polyho": ("(! (l (v f (fun 'a 'a)) (! (l (v x 'a) (a (a (c eq (fun 'a (fun 'a bool)))"
               " (a (v f (fun 'a 'a)) (v x 'a))) (v x 'a))))))", Category.POLY_HO),
}


def example_theory():
    body = "\n".join(f"(thm {k} (deps) {text})" for k, (text, _) in EXAMPLES.items())
    return parse_theory(HEADER + body, "ex")


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_classification_examples(name):
    assert classify(example_theory()[name]) is EXAMPLES[name][1]


def test_higher_order_reasons_are_named():
    th = example_theory()
    assert higher_order_reasons(th["fnvar"].prop) == ["quantified function variable"]
    assert higher_order_reasons(th["partial"].prop) == ["partial application"]
    assert higher_order_reasons(th["boolarg"].prop) == ["boolean argument"]
    assert higher_order_reasons(th["uni"].prop) == []


def test_corpus_counts_sum_to_size():
    th = minicorpus()
    counts = category_counts(th.formulas)
    assert sum(counts.values()) == len(th.formulas)
    assert all(counts[c] > 0 for c in Category)


def test_corpus_labels():
    th = minicorpus()
    with open(FIXTURES / "minicorpus_labels.csv", newline="") as fh:
        labels = {row["formula"]: row["category"] for row in csv.DictReader(fh)}
    assert {f.name: classify(f).value for f in th.formulas} == labels


@given(formulas)
@settings(max_examples=200, deadline=None)
def test_classification_invariant_under_renaming(t):
    assert classify_term(rename_bound(t)) is classify_term(t)


class TestProblems:
    def test_bushy_takes_listed_dependencies(self):
        th = minicorpus()
        for thm in th.theorems:
            p = make_problem(th, thm.name, "bushy")
            assert {a.name for a in p.axioms} == set(thm.deps)
            assert p.conjecture is thm

    def test_chainy_takes_all_earlier_formulas(self):
        th = minicorpus()
        for thm in th.theorems:
            p = make_problem(th, thm.name, "chainy")
            assert p.axioms == th.formulas[: th.position(thm.name)]

    def test_bushy_within_chainy(self):
        th = minicorpus()
        for thm in th.theorems:
            bushy = {a.name for a in make_problem(th, thm.name, "bushy").axioms}
            chainy = {a.name for a in make_problem(th, thm.name, "chainy").axioms}
            assert bushy <= chainy

    def test_conjecture_is_last(self):
        th = minicorpus()
        p = make_problem(th, th.theorems[3].name, "chainy")
        assert p.formulas[-1] is p.conjecture

    def test_errors(self):
        th = minicorpus()
        with pytest.raises(UnknownTheorem):
            make_problem(th, "NO_SUCH_THM", "bushy")
        axiom = next(f for f in th.formulas if f.role != "theorem")
        with pytest.raises(RoleMismatch):
            make_problem(th, axiom.name, "bushy")
        with pytest.raises(ValueError):
            make_problem(th, th.theorems[0].name, "leafy")

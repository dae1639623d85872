from __future__ import annotations

import csv

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.metrics import accuracy_score
from sklearn.pipeline import Pipeline

from helpers import FIXTURES, let_theory, minicorpus
from holtptp.estimators import FormulaClassifier, TptpTranslator
from holtptp.formats import translate_text
from holtptp.problems import make_problem


def test_translator_matches_direct_call():
    th = let_theory()
    est = TptpTranslator(theory=th, format="fof-ii").fit()
    assert est.transform(["LET_THM"]) == [translate_text(make_problem(th, "LET_THM", "bushy"), "fof-ii")]


def test_translator_accepts_problems():
    th = let_theory()
    p = make_problem(th, "LET_THM", "chainy")
    assert TptpTranslator(format="th1-i").fit_transform([p]) == [translate_text(p, "th1-i")]


def test_translator_params_round_trip():
    est = TptpTranslator(format="tf1-i", mode="chainy", special_types=False)
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(ValueError):
        TptpTranslator(format="tf9").fit()


def test_classifier_against_labels():
    th = minicorpus()
    with open(FIXTURES / "minicorpus_labels.csv", newline="") as fh:
        labels = {row["formula"]: row["category"] for row in csv.DictReader(fh)}
    X = list(th.formulas)
    y = np.array([labels[f.name] for f in X])
    clf = FormulaClassifier().fit(X, y)
    assert accuracy_score(y, clf.predict(X)) == 1.0
    assert set(clf.classes_) == set(y)


def test_classifier_in_pipeline():
    th = minicorpus()
    pipe = Pipeline([("clf", FormulaClassifier())]).fit(list(th.formulas))
    out = pipe.predict([f.prop for f in th.formulas[:3]])
    assert out.shape == (3,)

"""scikit-learn style wrappers around translation and classification.

Both estimators are stateless apart from their parameters, so ``fit`` only
validates them. They exist so the toolkit can sit inside a ``Pipeline`` or be
cross-checked with ``sklearn.metrics`` against hand labels.
"""

from __future__ import annotations

from typing import Iterable, List, Union

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .formats import FORMATS, translate_text
from .hol.terms import Term
from .problems import MODES, Category, HolProblem, classify_term, make_problem
from .theory import NamedFormula, Theory


def _prop(x: Union[NamedFormula, Term]) -> Term:
    return x.prop if isinstance(x, NamedFormula) else x


class TptpTranslator(TransformerMixin, BaseEstimator):
    """Map theorems (names in `theory`, or ready-made problems) to TPTP text."""

    def __init__(self, theory: Theory = None, format: str = "tf0-ii", mode: str = "bushy", special_types: bool = True):
        self.theory = theory
        self.format = format
        self.mode = mode
        self.special_types = special_types

    def fit(self, X=None, y=None):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        self.is_fitted_ = True
        return self

    def _problem(self, x) -> HolProblem:
        if isinstance(x, HolProblem):
            return x
        if self.theory is None:
            raise ValueError("theorem names need a theory")
        return make_problem(self.theory, x, self.mode)

    def transform(self, X: Iterable) -> List[str]:
        return [translate_text(self._problem(x), self.format, self.special_types) for x in X]

    def __sklearn_is_fitted__(self) -> bool:
        return True


class FormulaClassifier(ClassifierMixin, BaseEstimator):
    """Rule-based category classifier; ``fit`` learns nothing."""

    def fit(self, X=None, y=None):
        self.classes_ = np.array([c.value for c in Category])
        return self

    def predict(self, X: Iterable) -> np.ndarray:
        return np.array([classify_term(_prop(x)).value for x in X])

    def __sklearn_is_fitted__(self) -> bool:
        return True

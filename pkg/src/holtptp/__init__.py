"""Translate polymorphic higher-order theories into TPTP problems.

Typical use::

    from holtptp import load_theory, make_problem, translate_text

    theory = load_theory("let.holt")
    problem = make_problem(theory, "LET_THM", "bushy")
    print(translate_text(problem, "th0-ii"))
"""

from .formats import FORMAT_NAMES, FORMATS, translate, translate_text
from .problems import Category, HolProblem, category_counts, classify, make_problem
from .theory import NamedFormula, Theory, load_theory, parse_theory
from .tptp.parser import parse_tptp
from .tptp.printer import print_problem
from .validate import Violation, check_dialect, check_text

__all__ = [
    "FORMAT_NAMES", "FORMATS", "translate", "translate_text",
    "Category", "HolProblem", "category_counts", "classify", "make_problem",
    "NamedFormula", "Theory", "load_theory", "parse_theory",
    "parse_tptp", "print_problem", "Violation", "check_dialect", "check_text",
]

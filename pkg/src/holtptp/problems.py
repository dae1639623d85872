"""Per-theorem problem assembly and formula classification."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .errors import RoleMismatch, UnknownTheorem
from .hol.logic import connective_app, dest_binder
from .hol.signature import Signature
from .hol.terms import Abs, App, Const, Term, Var, beta_normalize, strip_comb, subterms, term_type_vars
from .hol.types import BOOL, is_fun
from .theory import NamedFormula, Theory

MODES = ("bushy", "chainy")


@dataclass(frozen=True)
class HolProblem:
    conjecture: NamedFormula
    axioms: Tuple[NamedFormula, ...]
    mode: str
    signature: Signature
    theory: str

    @property
    def formulas(self) -> Tuple[NamedFormula, ...]:
        return self.axioms + (self.conjecture,)


def make_problem(theory: Theory, theorem_name: str, mode: str) -> HolProblem:
    """Bushy problems take the listed dependencies; chainy ones take every earlier formula."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
    if theorem_name not in theory:
        raise UnknownTheorem(theorem_name)
    thm = theory[theorem_name]
    if thm.role != "theorem":
        raise RoleMismatch(f"{theorem_name} is a {thm.role}, not a theorem")
    if mode == "bushy":
        wanted = set(thm.deps)
        axioms = tuple(f for f in theory.formulas if f.name in wanted)
    else:
        axioms = theory.formulas[: theory.position(theorem_name)]
    return HolProblem(thm, axioms, mode, theory.signature, theory.name)


# classification -----------------------------------------------------------

class Category(str, enum.Enum):
    UNI_FO = "UniFO"
    MONO_FO = "MonoFO"
    POLY_FO = "PolyFO"
    MONO_HO = "MonoHO"
    POLY_HO = "PolyHO"


def is_polymorphic(t: Term) -> bool:
    return bool(term_type_vars(t))


def _formula_parts(t: Term, atoms: List[Term], qvars: List[Var]):
    b = dest_binder(t)
    if b is not None:
        qvars.append(b[1])
        _formula_parts(b[2], atoms, qvars)
        return
    c = connective_app(t)
    if c is not None:
        name, args = c
        if name in ("and", "or", "imp", "neg") or (name == "eq" and args[0].ty == BOOL):
            for a in args:
                _formula_parts(a, atoms, qvars)
            return
        if name == "eq":
            atoms.extend(args)
            return
    atoms.append(t)


def higher_order_reasons(t: Term) -> List[str]:
    """Which higher-order triggers fire for a (beta-normalised) formula."""
    t = beta_normalize(t)
    atoms: List[Term] = []
    qvars: List[Var] = []
    _formula_parts(t, atoms, qvars)
    reasons = []
    if any(is_fun(v.ty) for v in qvars):
        reasons.append("quantified function variable")
    for atom in atoms:
        for s in subterms(atom):
            if isinstance(s, Abs):
                reasons.append("term-level abstraction")
            if isinstance(s, App):
                if any(a.ty == BOOL for a in strip_comb(s)[1]):
                    reasons.append("boolean argument")
        reasons.extend(_partial_applications(atom))
    return list(dict.fromkeys(reasons))


def _partial_applications(t: Term) -> List[str]:
    """A constant or variable given fewer arguments than its type accepts."""
    out = []

    def go(s: Term):
        if isinstance(s, App):
            head, args = strip_comb(s)
            if isinstance(head, (Const, Var)) and is_fun(s.ty):
                out.append("partial application")
            if isinstance(head, Abs):
                go(head)
            for a in args:
                go(a)
        elif isinstance(s, Abs):
            go(s.body)
        elif is_fun(s.ty):
            out.append("partial application")

    go(t)
    return out


def _sort_leaves(ty, out: set):
    if is_fun(ty):
        for a in ty.args:
            _sort_leaves(a, out)
    elif ty != BOOL:
        out.add(ty)


def sorts_of(t: Term) -> set:
    """Maximal non-function, non-bool types of the variables and constants in `t`."""
    out: set = set()
    for s in subterms(t):
        if isinstance(s, (Var, Const)):
            _sort_leaves(s.ty, out)
    return out


def classify_term(t: Term) -> Category:
    poly = is_polymorphic(t)
    ho = bool(higher_order_reasons(t))
    if poly:
        return Category.POLY_HO if ho else Category.POLY_FO
    if ho:
        return Category.MONO_HO
    return Category.UNI_FO if len(sorts_of(t)) <= 1 else Category.MONO_FO


def classify(formula: NamedFormula) -> Category:
    return classify_term(formula.prop)


def category_counts(formulas: Iterable[NamedFormula]) -> Dict[Category, int]:
    counts = Counter(classify(f) for f in formulas)
    return {c: counts.get(c, 0) for c in Category}

"""Preprocessing shared by the translation families."""

from __future__ import annotations

from .logic import dest_eq, list_mk_forall, mk_eq, strip_forall
from .terms import Abs, App, Term, all_var_names, beta_normalize, free_vars, variant


def generalize(formula: Term) -> Term:
    """Universally close the free term variables of a formula, in occurrence order."""
    fvs = free_vars(formula)
    return list_mk_forall(fvs, formula) if fvs else formula


def _extend_once(lhs: Term, rhs: Term):
    """Apply extensionality to an equation with an abstraction on either side."""
    lam, other = (lhs, rhs) if isinstance(lhs, Abs) else (rhs, lhs)
    v = lam.var
    if v in free_vars(other):
        v = variant(v, all_var_names(other) | all_var_names(lam))
    new_lam = beta_normalize(App(lam, v))
    new_other = beta_normalize(App(other, v))
    if lam is lhs:
        return v, mk_eq(new_lam, new_other)
    return v, mk_eq(new_other, new_lam)


def expand_equational_lambdas(formula: Term) -> Term:
    """Turn ``\\x. s = t`` into ``!x. s = t x`` (either side), to a fixpoint, then beta-normalise.

    Only a top-level equation or one under a prefix of universal quantifiers
    is rewritten; deeper occurrences are left to lifting.
    """
    formula = beta_normalize(formula)
    prefix, body = strip_forall(formula)
    added = []
    while True:
        eq = dest_eq(body)
        if eq is None or not (isinstance(eq[0], Abs) or isinstance(eq[1], Abs)):
            break
        v, body = _extend_once(*eq)
        added.append(v)
    if not added:
        return formula
    return list_mk_forall(prefix + added, body)

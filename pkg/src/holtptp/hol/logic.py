"""Builders and recognisers for the logical constants."""

from __future__ import annotations

from typing import List, Optional, Tuple

from .signature import LOGICAL_CONSTANTS
from .terms import Abs, App, Const, Term, Var, mk_comb, strip_comb
from .types import BOOL, HolType, fun_of

CONNECTIVES = ("and", "or", "imp", "neg", "eq", "forall", "exists", "true", "false")

#: number of arguments at which a connective becomes a formula
FULL_ARITY = {"and": 2, "or": 2, "imp": 2, "neg": 1, "eq": 2, "forall": 1, "exists": 1,
              "true": 0, "false": 0}


def TRUE() -> Const:
    return Const("true", BOOL)


def FALSE() -> Const:
    return Const("false", BOOL)


def mk_eq(a: Term, b: Term) -> Term:
    return mk_comb(Const("eq", fun_of(a.ty, a.ty, BOOL)), a, b)


def mk_imp(a: Term, b: Term) -> Term:
    return mk_comb(Const("imp", LOGICAL_CONSTANTS["imp"]), a, b)


def mk_and(a: Term, b: Term) -> Term:
    return mk_comb(Const("and", LOGICAL_CONSTANTS["and"]), a, b)


def mk_or(a: Term, b: Term) -> Term:
    return mk_comb(Const("or", LOGICAL_CONSTANTS["or"]), a, b)


def mk_neg(a: Term) -> Term:
    return App(Const("neg", LOGICAL_CONSTANTS["neg"]), a)


def mk_iff(a: Term, b: Term) -> Term:
    return mk_eq(a, b)


def _quant(name: str, v: Var, body: Term) -> Term:
    return App(Const(name, fun_of(fun_of(v.ty, BOOL), BOOL)), Abs(v, body))


def mk_forall(v: Var, body: Term) -> Term:
    return _quant("forall", v, body)


def mk_exists(v: Var, body: Term) -> Term:
    return _quant("exists", v, body)


def list_mk_forall(vs: List[Var], body: Term) -> Term:
    for v in reversed(vs):
        body = mk_forall(v, body)
    return body


def connective_app(t: Term) -> Optional[Tuple[str, List[Term]]]:
    """``(name, args)`` when `t` is a connective applied to exactly its full arity."""
    head, args = strip_comb(t)
    if isinstance(head, Const) and head.name in FULL_ARITY and len(args) == FULL_ARITY[head.name]:
        return head.name, args
    return None


def dest_eq(t: Term) -> Optional[Tuple[Term, Term]]:
    c = connective_app(t)
    if c and c[0] == "eq":
        return c[1][0], c[1][1]
    return None


def dest_binder(t: Term) -> Optional[Tuple[str, Var, Term]]:
    """``(q, var, body)`` for ``forall (\\v. body)`` or ``exists (\\v. body)``."""
    c = connective_app(t)
    if c and c[0] in ("forall", "exists") and isinstance(c[1][0], Abs):
        lam = c[1][0]
        return c[0], lam.var, lam.body
    return None


def strip_forall(t: Term) -> Tuple[List[Var], Term]:
    vs = []
    while True:
        b = dest_binder(t)
        if not b or b[0] != "forall":
            return vs, t
        vs.append(b[1])
        t = b[2]


def is_formula_connective(t: Term) -> bool:
    """True when `t` is headed by a fully applied connective other than a residual quantifier."""
    c = connective_app(t)
    if not c:
        return False
    name, args = c
    if name in ("true", "false"):
        return False
    if name in ("forall", "exists"):
        return isinstance(args[0], Abs)
    return True


def quantified_type(q: Const) -> HolType:
    return q.ty.args[0].args[0]

"""Signatures, typechecking, and type-argument inference for constant instances."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..errors import (
    ArityMismatch,
    InstanceMismatch,
    NoMatch,
    NotAFunction,
    NotAProposition,
    TypeMismatch,
    UnknownConstant,
    UnknownTypeOperator,
)
from .terms import Abs, App, Const, Term, Var
from .types import BOOL, HolType, TyApp, TyVar, fun_of, match_generic, type_vars

_A = TyVar("a")

LOGICAL_CONSTANTS: Dict[str, HolType] = {
    "eq": fun_of(_A, _A, BOOL),
    "select": fun_of(fun_of(_A, BOOL), _A),
    "imp": fun_of(BOOL, BOOL, BOOL),
    "and": fun_of(BOOL, BOOL, BOOL),
    "or": fun_of(BOOL, BOOL, BOOL),
    "neg": fun_of(BOOL, BOOL),
    "forall": fun_of(fun_of(_A, BOOL), BOOL),
    "exists": fun_of(fun_of(_A, BOOL), BOOL),
    "true": BOOL,
    "false": BOOL,
    "cond": fun_of(BOOL, _A, _A, _A),
}

BUILTIN_TYPE_OPS: Dict[str, int] = {"bool": 0, "ind": 0, "fun": 2}


@dataclass
class Signature:
    """Type operators with arities and constants with generic types, in declaration order.

    Treat instances as read-only once a theory has been built.
    """

    type_ops: Dict[str, int] = field(default_factory=lambda: dict(BUILTIN_TYPE_OPS))
    consts: Dict[str, HolType] = field(default_factory=lambda: dict(LOGICAL_CONSTANTS))

    def copy(self) -> "Signature":
        return Signature(dict(self.type_ops), dict(self.consts))

    def add_type_op(self, name: str, arity: int) -> None:
        if name in self.type_ops:
            raise ValueError(f"type operator {name} already declared")
        self.type_ops[name] = arity

    def add_const(self, name: str, ty: HolType) -> None:
        if name in self.consts:
            raise ValueError(f"constant {name} already declared")
        check_type(ty, self)
        self.consts[name] = ty

    def generic(self, name: str) -> HolType:
        try:
            return self.consts[name]
        except KeyError:
            raise UnknownConstant(name) from None


def check_type(ty: HolType, sig: Signature) -> None:
    if isinstance(ty, TyVar):
        return
    if ty.con not in sig.type_ops:
        raise UnknownTypeOperator(ty.con)
    if sig.type_ops[ty.con] != len(ty.args):
        raise ArityMismatch(
            f"type operator {ty.con} expects {sig.type_ops[ty.con]} arguments, got {len(ty.args)}"
        )
    for a in ty.args:
        check_type(a, sig)


def typecheck(term: Term, sig: Signature) -> HolType:
    """Check `term` against `sig` and return its type."""
    if isinstance(term, Var):
        check_type(term.ty, sig)
        return term.ty
    if isinstance(term, Const):
        generic = sig.generic(term.name)
        check_type(term.ty, sig)
        try:
            match_generic(generic, term.ty)
        except NoMatch:
            raise InstanceMismatch(
                f"{term.name} used at {term.ty}, not an instance of {generic}"
            ) from None
        return term.ty
    if isinstance(term, App):
        fty = typecheck(term.fn, sig)
        aty = typecheck(term.arg, sig)
        if not (isinstance(fty, TyApp) and fty.con == "fun"):
            raise NotAFunction(str(term.fn))
        if fty.args[0] != aty:
            raise TypeMismatch(str(term))
        return fty.args[1]
    if isinstance(term, Abs):
        check_type(term.var.ty, sig)
        return TyApp("fun", (term.var.ty, typecheck(term.body, sig)))
    raise TypeError(f"not a term: {term!r}")


def check_prop(term: Term, sig: Signature) -> None:
    ty = typecheck(term, sig)
    if ty != BOOL:
        raise NotAProposition(f"{term} has type {ty}")


def type_args(const: Const, sig: Signature) -> List[HolType]:
    """Implicit type arguments of a constant instance, ordered by the generic type."""
    return type_args_for(sig.generic(const.name), const.ty)


def type_args_for(generic: HolType, instance: HolType) -> List[HolType]:
    sub = match_generic(generic, instance)
    return [sub[v] for v in type_vars(generic)]


@dataclass(frozen=True)
class Sequent:
    hyps: Tuple[Term, ...]
    concl: Term

    def __post_init__(self):
        for t in (*self.hyps, self.concl):
            if t.ty != BOOL:
                raise NotAProposition(f"{t} has type {t.ty}")

    def as_formula(self) -> Term:
        from .logic import mk_imp

        body = self.concl
        for h in reversed(self.hyps):
            body = mk_imp(h, body)
        return body

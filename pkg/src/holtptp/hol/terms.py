"""Typed lambda terms.

Terms are immutable and well-typed by construction: building an application
whose argument does not fit the function's domain raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Set, Tuple, Union

from ..errors import NotAFunction, TypeMismatch
from .types import HolType, TyVar, fun, is_fun, type_subst, type_vars


@dataclass(frozen=True)
class Var:
    name: str
    ty: HolType

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str
    ty: HolType

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"
    ty: HolType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        fty = self.fn.ty
        if not is_fun(fty):
            raise NotAFunction(f"{self.fn} has type {fty}, cannot be applied")
        if fty.args[0] != self.arg.ty:
            raise TypeMismatch(
                f"{self.fn} expects {fty.args[0]} but {self.arg} has type {self.arg.ty}"
            )
        object.__setattr__(self, "ty", fty.args[1])

    def __str__(self) -> str:
        head, args = strip_comb(self)
        return "(" + " ".join(str(x) for x in [head, *args]) + ")"


@dataclass(frozen=True)
class Abs:
    var: Var
    body: "Term"
    ty: HolType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "ty", fun(self.var.ty, self.body.ty))

    def __str__(self) -> str:
        return f"(\\{self.var}:{self.var.ty}. {self.body})"


Term = Union[Var, Const, App, Abs]


def mk_comb(fn: Term, *args: Term) -> Term:
    for a in args:
        fn = App(fn, a)
    return fn


def mk_abs(vars_: Iterable[Var], body: Term) -> Term:
    for v in reversed(list(vars_)):
        body = Abs(v, body)
    return body


def strip_comb(t: Term) -> Tuple[Term, List[Term]]:
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def strip_abs(t: Term) -> Tuple[List[Var], Term]:
    vs = []
    while isinstance(t, Abs):
        vs.append(t.var)
        t = t.body
    return vs, t


def subterms(t: Term):
    """Preorder, left to right."""
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        if isinstance(s, App):
            stack.append(s.arg)
            stack.append(s.fn)
        elif isinstance(s, Abs):
            stack.append(s.body)
            stack.append(s.var)


def free_vars(t: Term) -> List[Var]:
    """Distinct free variables in order of first occurrence."""
    seen: Dict[Var, None] = {}

    def go(s: Term, bound: Tuple[Var, ...]):
        if isinstance(s, Var):
            if s not in bound:
                seen.setdefault(s)
        elif isinstance(s, App):
            go(s.fn, bound)
            go(s.arg, bound)
        elif isinstance(s, Abs):
            go(s.body, bound + (s.var,))

    go(t, ())
    return list(seen)


def is_free_in(v: Var, t: Term) -> bool:
    return v in free_vars(t)


def term_type_vars(t: Term) -> List[TyVar]:
    """Distinct type variables of a term, by first occurrence in a preorder walk."""
    seen: Dict[TyVar, None] = {}
    for s in subterms(t):
        if isinstance(s, (Var, Const)):
            for tv in type_vars(s.ty):
                seen.setdefault(tv)
    return list(seen)


def consts_of(t: Term) -> List[Const]:
    seen: Dict[Const, None] = {}
    for s in subterms(t):
        if isinstance(s, Const):
            seen.setdefault(s)
    return list(seen)


def all_var_names(t: Term) -> Set[str]:
    return {s.name for s in subterms(t) if isinstance(s, Var)}


def variant(v: Var, avoid: Set[str]) -> Var:
    """Prime `v` until its name is not in `avoid`."""
    name = v.name
    while name in avoid:
        name += "'"
    return Var(name, v.ty)


def subst(t: Term, sub: Mapping[Var, Term]) -> Term:
    """Capture-avoiding simultaneous substitution of terms for free variables."""
    if not sub:
        return t
    if isinstance(t, Var):
        return sub.get(t, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, App):
        fn, arg = subst(t.fn, sub), subst(t.arg, sub)
        if fn is t.fn and arg is t.arg:
            return t
        return App(fn, arg)
    inner = {k: v for k, v in sub.items() if k != t.var}
    body_fvs = free_vars(t.body)
    inner = {k: v for k, v in inner.items() if k in body_fvs}
    if not inner:
        return t
    incoming: Set[Var] = set()
    for r in inner.values():
        incoming.update(free_vars(r))
    var = t.var
    if var in incoming:
        avoid = {v.name for v in incoming} | all_var_names(t.body)
        fresh = variant(var, avoid)
        inner[var] = fresh
        var = fresh
    return Abs(var, subst(t.body, inner))


def inst_type(t: Term, tysub: Mapping[TyVar, HolType]) -> Term:
    """Instantiate type variables throughout a term."""
    if not tysub:
        return t
    if isinstance(t, Var):
        return Var(t.name, type_subst(t.ty, tysub))
    if isinstance(t, Const):
        return Const(t.name, type_subst(t.ty, tysub))
    if isinstance(t, App):
        return App(inst_type(t.fn, tysub), inst_type(t.arg, tysub))
    return Abs(inst_type(t.var, tysub), inst_type(t.body, tysub))


def alpha_eq(a: Term, b: Term) -> bool:
    def go(x: Term, y: Term, env_x: Dict[Var, int], env_y: Dict[Var, int], depth: int) -> bool:
        if isinstance(x, Var) and isinstance(y, Var):
            ix, iy = env_x.get(x), env_y.get(y)
            if ix is None and iy is None:
                return x == y
            return ix == iy and x.ty == y.ty
        if isinstance(x, Const) and isinstance(y, Const):
            return x == y
        if isinstance(x, App) and isinstance(y, App):
            return go(x.fn, y.fn, env_x, env_y, depth) and go(x.arg, y.arg, env_x, env_y, depth)
        if isinstance(x, Abs) and isinstance(y, Abs):
            if x.var.ty != y.var.ty:
                return False
            return go(
                x.body, y.body,
                {**env_x, x.var: depth}, {**env_y, y.var: depth}, depth + 1,
            )
        return False

    return go(a, b, {}, {}, 0)


def alpha_key(t: Term):
    """A hashable key equal for exactly the alpha-equivalent terms (bound names become indices)."""

    def go(x: Term, env: Dict[Var, int], depth: int):
        if isinstance(x, Var):
            i = env.get(x)
            return ("v", x.name, x.ty) if i is None else ("b", depth - i, x.ty)
        if isinstance(x, Const):
            return ("c", x.name, x.ty)
        if isinstance(x, App):
            return ("a", go(x.fn, env, depth), go(x.arg, env, depth))
        return ("l", x.var.ty, go(x.body, {**env, x.var: depth}, depth + 1))

    return go(t, {}, 0)


def beta_reduce_once(t: Term) -> Tuple[Term, bool]:
    """One leftmost-outermost beta step; used as a small-step oracle."""
    if isinstance(t, App):
        if isinstance(t.fn, Abs):
            return subst(t.fn.body, {t.fn.var: t.arg}), True
        fn, done = beta_reduce_once(t.fn)
        if done:
            return App(fn, t.arg), True
        arg, done = beta_reduce_once(t.arg)
        if done:
            return App(t.fn, arg), True
        return t, False
    if isinstance(t, Abs):
        body, done = beta_reduce_once(t.body)
        return (Abs(t.var, body), True) if done else (t, False)
    return t, False


def beta_normalize(t: Term) -> Term:
    """Beta normal form (normal-order reduction; terminates on simply typed terms)."""
    if isinstance(t, App):
        fn = beta_normalize(t.fn)
        if isinstance(fn, Abs):
            return beta_normalize(subst(fn.body, {fn.var: t.arg}))
        arg = beta_normalize(t.arg)
        if fn is t.fn and arg is t.arg:
            return t
        return App(fn, arg)
    if isinstance(t, Abs):
        body = beta_normalize(t.body)
        return t if body is t.body else Abs(t.var, body)
    return t


def is_beta_normal(t: Term) -> bool:
    return not any(isinstance(s, App) and isinstance(s.fn, Abs) for s in subterms(t))


def term_size(t: Term) -> int:
    if isinstance(t, App):
        return 1 + term_size(t.fn) + term_size(t.arg)
    if isinstance(t, Abs):
        return 1 + term_size(t.body)
    return 1

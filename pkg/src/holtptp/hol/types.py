"""Polymorphic simple types: type variables and constructor applications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Tuple, Union

from ..errors import NoMatch


@dataclass(frozen=True)
class TyVar:
    name: str

    def __str__(self) -> str:
        return "'" + self.name


@dataclass(frozen=True)
class TyApp:
    con: str
    args: Tuple["HolType", ...] = ()

    def __str__(self) -> str:
        if self.con == "fun":
            dom, rng = self.args
            left = f"({dom})" if is_fun(dom) else str(dom)
            return f"{left} -> {rng}"
        if not self.args:
            return self.con
        return f"{self.con}({', '.join(map(str, self.args))})"


HolType = Union[TyVar, TyApp]
TypeSubst = Dict[TyVar, HolType]

BOOL = TyApp("bool")
IND = TyApp("ind")


def fun(dom: HolType, rng: HolType) -> TyApp:
    return TyApp("fun", (dom, rng))


def fun_of(*tys: HolType) -> HolType:
    """Right-associated arrow: ``fun_of(a, b, c)`` is ``a -> b -> c``."""
    result = tys[-1]
    for ty in reversed(tys[:-1]):
        result = fun(ty, result)
    return result


def is_fun(ty: HolType) -> bool:
    return isinstance(ty, TyApp) and ty.con == "fun"


def dest_fun(ty: HolType) -> Tuple[HolType, HolType]:
    if not is_fun(ty):
        raise ValueError(f"not a function type: {ty}")
    return ty.args[0], ty.args[1]


def strip_fun(ty: HolType) -> Tuple[List[HolType], HolType]:
    """Split ``a1 -> ... -> an -> r`` (r not an arrow) into ``([a1..an], r)``."""
    args = []
    while is_fun(ty):
        args.append(ty.args[0])
        ty = ty.args[1]
    return args, ty


def arity(ty: HolType) -> int:
    return len(strip_fun(ty)[0])


def _preorder(ty: HolType) -> Iterator[HolType]:
    stack = [ty]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, TyApp):
            stack.extend(reversed(t.args))


def type_vars(ty: HolType) -> List[TyVar]:
    """Distinct type variables in order of first occurrence (preorder, left to right)."""
    seen: Dict[TyVar, None] = {}
    for t in _preorder(ty):
        if isinstance(t, TyVar):
            seen.setdefault(t)
    return list(seen)


def type_ops(ty: HolType) -> List[Tuple[str, int]]:
    seen: Dict[Tuple[str, int], None] = {}
    for t in _preorder(ty):
        if isinstance(t, TyApp):
            seen.setdefault((t.con, len(t.args)))
    return list(seen)


def is_monomorphic(ty: HolType) -> bool:
    return not any(isinstance(t, TyVar) for t in _preorder(ty))


def is_basic_monomorphic(ty: HolType) -> bool:
    return is_monomorphic(ty) and not is_fun(ty)


def type_subst(ty: HolType, sub: Mapping[TyVar, HolType]) -> HolType:
    if not sub:
        return ty
    if isinstance(ty, TyVar):
        return sub.get(ty, ty)
    if not ty.args:
        return ty
    return TyApp(ty.con, tuple(type_subst(a, sub) for a in ty.args))


def match_generic(generic: HolType, instance: HolType) -> TypeSubst:
    """Find the substitution on the type variables of `generic` that yields `instance`.

    Type variables occurring in `instance` are treated as rigid constants.
    """
    sub: TypeSubst = {}
    stack = [(generic, instance)]
    while stack:
        g, i = stack.pop()
        if isinstance(g, TyVar):
            bound = sub.get(g)
            if bound is None:
                sub[g] = i
            elif bound != i:
                raise NoMatch(f"type variable {g} bound to both {bound} and {i}")
            continue
        if not isinstance(i, TyApp) or i.con != g.con or len(i.args) != len(g.args):
            raise NoMatch(f"cannot match {generic} against {instance}")
        stack.extend(zip(g.args, i.args))
    return sub


def flatten_name(ty: HolType) -> str:
    """Underscore-joined preorder spelling of a type, e.g. ``fun(o,o)`` -> ``fun_o_o``.

    `bool` is spelled ``o``.
    """
    parts = []
    for t in _preorder(ty):
        if isinstance(t, TyVar):
            parts.append(t.name)
        else:
            parts.append("o" if t.con == "bool" else t.con)
    return "_".join(parts)

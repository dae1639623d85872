"""First-order intermediate form shared by the TF1, FOF, TF0 and TH0 encodings.

After lifting, every HOL formula is rewritten with arity-indexed constants and
an explicit binary apply operator. Terms keep their HOL types so each backend
can decide how to render them (type arguments, tags, or special sorts).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from ..hol.logic import connective_app, dest_binder
from ..hol.terms import Const, Term, Var, strip_comb
from ..hol.types import BOOL, HolType, TyVar, fun, strip_fun, type_vars


@dataclass(frozen=True)
class FSym:
    """One arity version of a symbol.

    `kind` is ``const`` (source or logical constant), ``lifted``, ``ap`` or ``comb``.
    """

    kind: str
    name: str
    arity: int
    tyvars: Tuple[TyVar, ...]
    arg_types: Tuple[HolType, ...]
    result: HolType
    hint: str = ""

    @property
    def key(self):
        return (self.kind, self.name, self.arity)

    @property
    def generic_type(self) -> HolType:
        ty = self.result
        for a in reversed(self.arg_types):
            ty = fun(a, ty)
        return ty

    @property
    def monomorphic(self) -> bool:
        return not self.tyvars


_A, _B, _C = TyVar("a"), TyVar("b"), TyVar("c")
AP = FSym("ap", "ap", 2, (_A, _B), (fun(_A, _B), _A), _B, "ap")


@dataclass(frozen=True)
class FVar:
    name: str
    ty: HolType


@dataclass(frozen=True)
class FApp:
    sym: FSym
    type_args: Tuple[HolType, ...]
    args: Tuple["FTerm", ...]
    ty: HolType


FTerm = Union[FVar, FApp]


@dataclass(frozen=True)
class FAtom:
    term: FTerm


@dataclass(frozen=True)
class FEq:
    left: FTerm
    right: FTerm


@dataclass(frozen=True)
class FConn:
    op: str  # and, or, imp, iff, not
    args: Tuple["Formula", ...]


@dataclass(frozen=True)
class FQuant:
    q: str  # forall, exists
    vars: Tuple[FVar, ...]
    body: "Formula"


Formula = Union[FAtom, FEq, FConn, FQuant]


def mk_ap(f: FTerm, x: FTerm) -> FApp:
    dom, rng = f.ty.args
    return FApp(AP, (dom, rng), (f, x), rng)


def forall(vs, body: Formula) -> Formula:
    vs = tuple(vs)
    return FQuant("forall", vs, body) if vs else body


def iff(a: Formula, b: Formula) -> Formula:
    return FConn("iff", (a, b))


def imp(a: Formula, b: Formula) -> Formula:
    return FConn("imp", (a, b))


def version(kind: str, name: str, hint: str, generic: HolType, k: int,
            tyvars: Optional[Tuple[TyVar, ...]] = None) -> FSym:
    args, _ = strip_fun(generic)
    ty = generic
    for _ in range(k):
        ty = ty.args[1]
    if tyvars is None:
        tyvars = tuple(type_vars(generic))
    return FSym(kind, name, k, tuple(tyvars), tuple(args[:k]), ty, hint)


class Apifier:
    """Converts lifted HOL formulas to the first-order form.

    `lookup(name)` returns ``(kind, hint, generic, explicit tyvars)`` for a constant.
    """

    def __init__(self, lookup: Callable[[str], Tuple[str, str, HolType, Tuple[TyVar, ...]]]):
        self.lookup = lookup

    def formula(self, t: Term) -> Formula:
        b = dest_binder(t)
        if b is not None:
            q, v, body = b
            inner = self.formula(body)
            fv = FVar(v.name, v.ty)
            if isinstance(inner, FQuant) and inner.q == q and fv.name not in {x.name for x in inner.vars}:
                return FQuant(q, (fv,) + inner.vars, inner.body)
            return FQuant(q, (fv,), inner)
        c = connective_app(t)
        if c is not None:
            name, args = c
            if name in ("and", "or", "imp"):
                return FConn(name, tuple(self.formula(a) for a in args))
            if name == "neg":
                return FConn("not", (self.formula(args[0]),))
            if name == "eq":
                if args[0].ty == BOOL:
                    return FConn("iff", tuple(self.formula(a) for a in args))
                return FEq(self.term(args[0]), self.term(args[1]))
        return FAtom(self.term(t))

    def term(self, t: Term) -> FTerm:
        head, args = strip_comb(t)
        if isinstance(head, Var):
            out: FTerm = FVar(head.name, head.ty)
            rest = args
        elif isinstance(head, Const):
            kind, hint, generic, tyvars = self.lookup(head.name)
            n = len(strip_fun(generic)[0])
            k = min(len(args), n)
            sym = version(kind, head.name, hint, generic, k, tyvars)
            sub = _match(generic, head.ty)
            targs = tuple(sub.get(tv, tv) for tv in tyvars)
            ty = head.ty
            for _ in range(k):
                ty = ty.args[1]
            out = FApp(sym, targs, tuple(self.term(a) for a in args[:k]), ty)
            rest = args[k:]
        else:
            raise ValueError("abstraction left after lifting")
        for a in rest:
            out = mk_ap(out, self.term(a))
        return out


def _match(generic: HolType, instance: HolType) -> Dict[TyVar, HolType]:
    from ..hol.types import match_generic

    return match_generic(generic, instance)


# traversal helpers ---------------------------------------------------------

def subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, FConn):
            stack.extend(reversed(g.args))
        elif isinstance(g, FQuant):
            stack.append(g.body)


def terms_of(f: Formula) -> Iterator[FTerm]:
    """Every term occurrence, preorder, including quantified variables."""
    for g in subformulas(f):
        roots: List[FTerm] = []
        if isinstance(g, FAtom):
            roots = [g.term]
        elif isinstance(g, FEq):
            roots = [g.left, g.right]
        elif isinstance(g, FQuant):
            roots = list(g.vars)
        stack = list(reversed(roots))
        while stack:
            t = stack.pop()
            yield t
            if isinstance(t, FApp):
                stack.extend(reversed(t.args))


def symbols_of(f: Formula) -> List[FSym]:
    seen: Dict[tuple, FSym] = {}
    for t in terms_of(f):
        if isinstance(t, FApp):
            seen.setdefault(t.sym.key, t.sym)
    return list(seen.values())


def types_of(f: Formula) -> List[HolType]:
    """Types of all term occurrences plus explicit type arguments, first occurrence order."""
    seen: Dict[HolType, None] = {}
    for t in terms_of(f):
        seen.setdefault(t.ty)
        if isinstance(t, FApp):
            for a in t.type_args:
                seen.setdefault(a)
    return list(seen)


def formula_tyvars(f: Formula) -> List[TyVar]:
    seen: Dict[TyVar, None] = {}
    for t in terms_of(f):
        tys = [t.ty] + (list(t.type_args) if isinstance(t, FApp) else [])
        for ty in tys:
            for tv in type_vars(ty):
                seen.setdefault(tv)
    return list(seen)


def map_terms(f: Formula, fn: Callable[[FTerm], FTerm]) -> Formula:
    if isinstance(f, FAtom):
        return FAtom(fn(f.term))
    if isinstance(f, FEq):
        return FEq(fn(f.left), fn(f.right))
    if isinstance(f, FConn):
        return FConn(f.op, tuple(map_terms(a, fn) for a in f.args))
    return FQuant(f.q, f.vars, map_terms(f.body, fn))

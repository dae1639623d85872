"""Helpers shared by the family-I backends for turning IR items into TPTP nodes."""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from ..hol.types import HolType, TyVar
from ..tptp.ast import Annotated, Bin, Dialect, Node, Not, Sym, TptpProblem, TypeDecl, Var, quant
from ..tptp.mangle import resolve
from .ir import FAtom, FConn, FEq, Formula, FSym, FVar
from .pipeline import IRItem

CONNECTIVE_OPS = {"and": "&", "or": "|", "imp": "=>", "iff": "<=>"}


def type_var(tv: TyVar) -> Var:
    return Var(Sym("var", ("tv", tv.name), tv.name))


def term_var(v: FVar) -> Var:
    return Var(Sym("var", ("v", v.name, v.ty), v.name))


def symbol_atom(sym: FSym, suffix_arity: bool = True) -> Sym:
    hint = sym.hint if (sym.arity == 0 or not suffix_arity) else f"{sym.hint}_{sym.arity}"
    return Sym("atom", ("fn",) + sym.key, hint)


def item_name(item: IRItem) -> Sym:
    return Sym("name", ("item",) + tuple(item.key), item.hint)


def render_formula(
    f: Formula,
    atom: Callable[[object], Node],
    eq: Callable[[object, object], Node],
    binder: Callable[[FVar], Tuple[object, Optional[Node]]],
) -> Node:
    if isinstance(f, FAtom):
        return atom(f.term)
    if isinstance(f, FEq):
        return eq(f.left, f.right)
    if isinstance(f, FConn):
        args = [render_formula(a, atom, eq, binder) for a in f.args]
        if f.op == "not":
            return Not(args[0])
        return Bin(CONNECTIVE_OPS[f.op], args[0], args[1])
    q = "!" if f.q == "forall" else "?"
    return quant(q, [binder(v) for v in f.vars], render_formula(f.body, atom, eq, binder))


class DeclTable:
    """Declarations in first-use order, split into type-level and term-level."""

    def __init__(self):
        self.types: Dict[object, TypeDecl] = {}
        self.symbols: Dict[object, TypeDecl] = {}

    def add_type(self, key, symbol, ty: Node):
        if key not in self.types:
            self.types[key] = TypeDecl(Sym("name", ("decl", key), ""), symbol, ty)

    def add_symbol(self, key, symbol, ty: Node):
        if key not in self.symbols:
            self.symbols[key] = TypeDecl(Sym("name", ("decl", key), ""), symbol, ty)

    def all(self) -> Tuple[TypeDecl, ...]:
        return tuple(self.types.values()) + tuple(self.symbols.values())


def assemble(dialect: Dialect, decls, formulas: List[Annotated], reserved) -> TptpProblem:
    return resolve(TptpProblem(dialect, tuple(decls), tuple(formulas)), reserved)


def tyvar_prefix(tyvars: List[TyVar], body: Node, sort: Node, q: str = "!>") -> Node:
    return quant(q, [(type_var(tv).name, sort) for tv in tyvars], body)


def hol_type_key(ty: HolType):
    return ("ty", ty)

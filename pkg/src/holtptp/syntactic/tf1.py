"""TF1-I: polymorphic typed first-order output with explicit type arguments."""

from __future__ import annotations

from ..hol.types import BOOL, IND, HolType, TyVar
from ..problems import HolProblem
from ..tptp.ast import TTYPE, Annotated, Dialect, Fn, Node, O, TptpProblem, Bin, arrow, quant
from .ir import FApp, FSym, FVar, formula_tyvars
from .pipeline import IRProblem, build_ir
from .render import DeclTable, assemble, item_name, render_formula, symbol_atom, term_var, type_var

RESERVED = ("p", "ap", "fun", "o")


class TF1Encoder:
    def __init__(self):
        self.decls = DeclTable()
        self.pending_syms = {}

    def type(self, ty: HolType) -> Node:
        if isinstance(ty, TyVar):
            return type_var(ty)
        if ty == BOOL:
            self.decls.add_type("o", "o", TTYPE)
            return Fn("o")
        if ty == IND:
            return Fn("$i")
        n = len(ty.args)
        kind = arrow([TTYPE] * n, TTYPE)
        if ty.con == "fun":
            self.decls.add_type("fun", "fun", kind)
            return Fn("fun", tuple(self.type(a) for a in ty.args))
        from ..tptp.ast import Sym

        name = Sym("atom", ("type", ty.con), ty.con)
        self.decls.add_type(("type", ty.con), name, kind)
        return Fn(name, tuple(self.type(a) for a in ty.args))

    def symbol(self, sym: FSym):
        if sym.kind == "ap":
            return "ap"
        name = symbol_atom(sym)
        self.pending_syms.setdefault(sym.key, (name, sym))
        return name

    def term(self, t) -> Node:
        if isinstance(t, FVar):
            return term_var(t)
        assert isinstance(t, FApp)
        if t.sym.kind == "ap":
            self.pending_syms.setdefault(t.sym.key, ("ap", t.sym))
        name = self.symbol(t.sym)
        args = tuple(self.type(a) for a in t.type_args) + tuple(self.term(a) for a in t.args)
        return Fn(name, args)

    def formula(self, f) -> Node:
        def atom(t):
            self.decls.add_symbol("p", "p", Bin(">", self.type(BOOL), O))
            return Fn("p", (self.term(t),))

        def eq(a, b):
            return Bin("=", self.term(a), self.term(b))

        def binder(v):
            return term_var(v).name, self.type(v.ty)

        body = render_formula(f, atom, eq, binder)
        tvs = formula_tyvars(f)
        return quant("!>", [(type_var(tv).name, TTYPE) for tv in tvs], body)

    def symbol_type(self, sym: FSym) -> Node:
        body = arrow([self.type(a) for a in sym.arg_types], self.type(sym.result))
        return quant("!>", [(type_var(tv).name, TTYPE) for tv in sym.tyvars], body)

    def encode(self, ir: IRProblem) -> TptpProblem:
        formulas = [Annotated(item_name(i), i.role, self.formula(i.formula)) for i in ir.items]
        for key, (name, sym) in list(self.pending_syms.items()):
            self.decls.add_symbol(key, name, self.symbol_type(sym))
        # p is declared after the symbols it wraps, keep it last for readability
        if "p" in self.decls.symbols:
            self.decls.symbols["p"] = self.decls.symbols.pop("p")
        return assemble(Dialect.TF1, self.decls.all(), formulas, RESERVED)


def to_tf1(problem: HolProblem) -> TptpProblem:
    return TF1Encoder().encode(build_ir(problem))

"""FOF-I: untyped first-order output where every term carries its type as a tag."""

from __future__ import annotations


from ..hol.types import HolType, TyVar
from ..problems import HolProblem
from ..tptp.ast import Annotated, Bin, Dialect, Fn, Node, Sym, TptpProblem, quant
from .ir import FApp, FVar, formula_tyvars
from .pipeline import IRProblem, build_ir
from .render import assemble, item_name, render_formula, symbol_atom, term_var, type_var

RESERVED = ("s", "p", "ap")


def type_term(ty: HolType) -> Node:
    """A type as a first-order term: type variables become term variables."""
    if isinstance(ty, TyVar):
        return type_var(ty)
    return Fn(Sym("atom", ("type", ty.con), ty.con), tuple(type_term(a) for a in ty.args))


def tag(ty: HolType, t: Node) -> Node:
    return Fn("s", (type_term(ty), t))


def tagged(t) -> Node:
    if isinstance(t, FVar):
        return tag(t.ty, term_var(t))
    assert isinstance(t, FApp)
    name = "ap" if t.sym.kind == "ap" else symbol_atom(t.sym)
    return tag(t.ty, Fn(name, tuple(tagged(a) for a in t.args)))


def encode_formula(f) -> Node:
    body = render_formula(
        f,
        atom=lambda t: Fn("p", (tagged(t),)),
        eq=lambda a, b: Bin("=", tagged(a), tagged(b)),
        binder=lambda v: (term_var(v).name, None),
    )
    return quant("!", [(type_var(tv).name, None) for tv in formula_tyvars(f)], body)


def encode(ir: IRProblem) -> TptpProblem:
    formulas = [Annotated(item_name(i), i.role, encode_formula(i.formula)) for i in ir.items]
    return assemble(Dialect.FOF, (), formulas, RESERVED)


def to_fof1(problem: HolProblem) -> TptpProblem:
    return encode(build_ir(problem))

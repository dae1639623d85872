"""TH1-I: polymorphic higher-order output, close to the source logic."""

from __future__ import annotations

from typing import Dict, List

from ..hol.logic import FULL_ARITY, connective_app, dest_binder
from ..hol.normalize import generalize
from ..hol.signature import LOGICAL_CONSTANTS, type_args_for
from ..hol.terms import Abs, Const, Term, Var as HVar, strip_comb, term_type_vars
from ..hol.types import BOOL, IND, HolType, TyVar, fun, type_vars
from ..problems import HolProblem
from ..tptp.ast import (
    FALSE,
    O,
    TRUE,
    TTYPE,
    Annotated,
    Ap,
    Bin,
    Dialect,
    Fn,
    I,
    Node,
    Not,
    Sym,
    TptpProblem,
    Var,
    ap,
    arrow,
    quant,
)
from .render import DeclTable, assemble, type_var

_BINARY = {"and": "&", "or": "|", "imp": "=>"}


def _var(v: HVar) -> Var:
    return Var(Sym("var", ("v", v.name, v.ty), v.name))


class TH1Encoder:
    def __init__(self):
        self.decls = DeclTable()
        self.residual: Dict[str, None] = {}

    def type(self, ty: HolType) -> Node:
        if isinstance(ty, TyVar):
            return type_var(ty)
        if ty == BOOL:
            return O
        if ty == IND:
            return I
        if ty.con == "fun":
            return Bin(">", self.type(ty.args[0]), self.type(ty.args[1]))
        name = Sym("atom", ("type", ty.con), ty.con)
        self.decls.add_type(("type", ty.con), name, arrow([TTYPE] * len(ty.args), TTYPE, curried=True))
        return ap(Fn(name), *[self.type(a) for a in ty.args])

    def const(self, c: Const) -> Node:
        if c.name in FULL_ARITY:
            self.residual.setdefault(c.name)
        name = Sym("atom", ("const", c.name), c.name)
        if c.name not in self.decls.symbols:
            generic = self.generic[c.name]
            tvs = type_vars(generic)
            body = self.type(generic)
            self.decls.add_symbol(c.name, name, quant("!>", [(type_var(t).name, TTYPE) for t in tvs], body))
        targs = type_args_for(self.generic[c.name], c.ty)
        return ap(Fn(name), *[self.type(t) for t in targs])

    def term(self, t: Term) -> Node:
        b = dest_binder(t)
        if b is not None:
            q, v, body = b
            return quant("!" if q == "forall" else "?", [(_var(v).name, self.type(v.ty))], self.term(body))
        c = connective_app(t)
        if c is not None:
            name, args = c
            if name in _BINARY:
                return Bin(_BINARY[name], self.term(args[0]), self.term(args[1]))
            if name == "neg":
                return Not(self.term(args[0]))
            if name == "eq":
                op = "<=>" if args[0].ty == BOOL else "="
                return Bin(op, self.term(args[0]), self.term(args[1]))
            if name == "true":
                return TRUE
            if name == "false":
                return FALSE
        if isinstance(t, HVar):
            return _var(t)
        if isinstance(t, Abs):
            return quant("^", [(_var(t.var).name, self.type(t.var.ty))], self.term(t.body))
        if isinstance(t, Const):
            return self.const(t)
        head, args = strip_comb(t)
        out = self.const(head) if isinstance(head, Const) else self.term(head)
        for a in args:
            out = Ap(out, self.term(a))
        return out

    def formula(self, t: Term) -> Node:
        body = self.term(t)
        return quant("!>", [(type_var(tv).name, TTYPE) for tv in term_type_vars(t)], body)

    def equivalence(self, name: str) -> Node:
        a = TyVar("a")
        x, y = HVar("x", BOOL), HVar("y", BOOL)
        if name in ("and", "or", "imp"):
            lhs = ap(self.const(Const(name, LOGICAL_CONSTANTS[name])), _var(x), _var(y))
            rhs = Bin(_BINARY[name], _var(x), _var(y))
            return quant("!", [(_var(x).name, O), (_var(y).name, O)], Bin("<=>", lhs, rhs))
        if name == "neg":
            lhs = Ap(self.const(Const("neg", LOGICAL_CONSTANTS["neg"])), _var(x))
            return quant("!", [(_var(x).name, O)], Bin("<=>", lhs, Not(_var(x))))
        tv = [(type_var(a).name, TTYPE)]
        if name == "eq":
            u, v = HVar("x", a), HVar("y", a)
            lhs = ap(self.const(Const("eq", LOGICAL_CONSTANTS["eq"])), _var(u), _var(v))
            body = quant("!", [(_var(u).name, self.type(a)), (_var(v).name, self.type(a))],
                         Bin("<=>", lhs, Bin("=", _var(u), _var(v))))
            return quant("!>", tv, body)
        pred = HVar("p", fun(a, BOOL))
        z = HVar("x", a)
        lhs = Ap(self.const(Const(name, LOGICAL_CONSTANTS[name])), _var(pred))
        inner = quant("!" if name == "forall" else "?", [(_var(z).name, self.type(a))], Ap(_var(pred), _var(z)))
        body = quant("!", [(_var(pred).name, self.type(pred.ty))], Bin("<=>", lhs, inner))
        return quant("!>", tv, body)

    def encode(self, problem: HolProblem) -> TptpProblem:
        self.generic = dict(LOGICAL_CONSTANTS)
        self.generic.update(problem.signature.consts)
        axioms: List[Annotated] = []
        conj: List[Annotated] = []
        for nf in problem.formulas:
            body = self.formula(generalize(nf.prop))
            if nf is problem.conjecture:
                conj.append(Annotated(Sym("name", ("conj",), "conj"), "conjecture", body))
            else:
                role = "definition" if nf.role == "definition" else "axiom"
                hint = f"{problem.theory}_{nf.name}"
                axioms.append(Annotated(Sym("name", ("thy", nf.name), hint), role, body))
        done: Dict[str, None] = {}
        while len(done) < len(self.residual):
            for name in list(self.residual):
                if name not in done:
                    done[name] = None
                    axioms.append(Annotated(Sym("name", ("equiv", name), f"equiv_{name}"), "axiom",
                                            self.equivalence(name)))
        return assemble(Dialect.TH1, self.decls.all(), axioms + conj, ())


def to_th1(problem: HolProblem) -> TptpProblem:
    return TH1Encoder().encode(problem)

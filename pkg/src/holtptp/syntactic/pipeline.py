"""Shared front half of the first-order encodings: preprocessing, lifting, apify, background axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..hol.normalize import expand_equational_lambdas, generalize
from ..hol.signature import LOGICAL_CONSTANTS
from ..hol.terms import Term
from ..hol.types import BOOL, HolType, TyVar, fun, fun_of, type_subst, type_vars
from ..problems import HolProblem
from .ir import (
    Apifier,
    FApp,
    FAtom,
    FConn,
    FEq,
    Formula,
    FQuant,
    FSym,
    FVar,
    forall,
    iff,
    imp,
    mk_ap,
    symbols_of,
    version,
)
from .lifting import LiftContext, LiftedDef, lift_booleans, lift_lambdas, residual_connectives

# groups of generated axioms, in output order
GROUPS = ("theory", "lifted", "arity", "equiv", "funext", "comb", "p")


@dataclass(frozen=True)
class IRItem:
    key: Tuple
    hint: str
    role: str
    group: str
    formula: Formula
    subject: Optional[FSym] = None


@dataclass
class IRProblem:
    theory: str
    items: List[IRItem] = field(default_factory=list)

    @property
    def conjecture(self) -> IRItem:
        return next(i for i in self.items if i.role == "conjecture")


def preprocess(t: Term) -> Term:
    return expand_equational_lambdas(generalize(t))


def lift_problem(problem: HolProblem):
    """Lift every formula of `problem`; returns (lifted source formulas, context)."""
    ctx = LiftContext(problem.signature)
    sources = [preprocess(f.prop) for f in problem.formulas]
    lifted = []
    for t in sources:
        t, _ = lift_lambdas(t, ctx)
        lifted.append(t)
    lambda_defs = len(ctx.defs)
    out = []
    for t in lifted:
        t, _ = lift_booleans(t, ctx)
        out.append(t)
    for i in range(lambda_defs):
        d = ctx.defs[i]
        new, _ = lift_booleans(d.formula, ctx)
        if new is not d.formula:
            nd = LiftedDef(d.const, d.tyvars, new, d.kind)
            ctx.defs[i] = nd
            ctx.by_name[d.name] = nd
    return out, ctx


def _lookup(problem: HolProblem, ctx: LiftContext):
    def lookup(name: str):
        d = ctx.by_name.get(name)
        if d is not None:
            return "lifted", ctx.hint(name), d.const.ty, d.tyvars
        generic = problem.signature.generic(name)
        return "const", name, generic, tuple(type_vars(generic))

    return lookup


def _logical(name: str, k: int) -> FSym:
    return version("const", name, name, LOGICAL_CONSTANTS[name], k)


def _vars(prefix: str, types) -> List[FVar]:
    return [FVar(f"{prefix}{i + 1}", ty) for i, ty in enumerate(types)]


def _app(sym: FSym, targs, args) -> FApp:
    sub = dict(zip(sym.tyvars, targs))
    return FApp(sym, tuple(targs), tuple(args), type_subst(sym.result, sub))


_A, _B, _C = TyVar("a"), TyVar("b"), TyVar("c")


def equivalence_axiom(name: str) -> Formula:
    """Bridge from a connective used as a term back to the formula-level connective."""
    x, y = FVar("x", BOOL), FVar("y", BOOL)
    if name in ("and", "or", "imp"):
        lhs = FAtom(_app(_logical(name, 2), (), (x, y)))
        return forall((x, y), iff(lhs, FConn(name, (FAtom(x), FAtom(y)))))
    if name == "neg":
        lhs = FAtom(_app(_logical("neg", 1), (), (x,)))
        return forall((x,), iff(lhs, FConn("not", (FAtom(x),))))
    if name == "eq":
        u, v = FVar("x", _A), FVar("y", _A)
        lhs = FAtom(_app(_logical("eq", 2), (_A,), (u, v)))
        return forall((u, v), iff(lhs, FEq(u, v)))
    if name in ("forall", "exists"):
        pred = FVar("p", fun(_A, BOOL))
        z = FVar("x", _A)
        lhs = FAtom(_app(_logical(name, 1), (_A,), (pred,)))
        return forall((pred,), iff(lhs, FQuant(name, (z,), FAtom(mk_ap(pred, z)))))
    raise ValueError(f"no equivalence axiom for {name}")


def arity_equation(sym: FSym) -> Formula:
    """``c_k(x1..xk) = ap(..ap(c_0, x1).., xk)``."""
    xs = _vars("x", sym.arg_types)
    lhs = FApp(sym, sym.tyvars, tuple(xs), sym.result)
    anchor = FSym(sym.kind, sym.name, 0, sym.tyvars, (), sym.generic_type, sym.hint)
    rhs = FApp(anchor, sym.tyvars, (), sym.generic_type)
    for x in xs:
        rhs = mk_ap(rhs, x)
    return forall(xs, FEq(lhs, rhs))


def funext_axiom() -> Formula:
    f, g = FVar("f", fun(_A, _B)), FVar("g", fun(_A, _B))
    x = FVar("x", _A)
    premise = FQuant("forall", (x,), FEq(mk_ap(f, x), mk_ap(g, x)))
    return forall((f, g), imp(premise, FEq(f, g)))


def _comb(name: str, generic: HolType) -> FApp:
    sym = FSym("comb", name, 0, tuple(type_vars(generic)), (), generic, "comb_" + name)
    return FApp(sym, sym.tyvars, (), generic)


def combinator_axioms() -> List[Tuple[str, Formula]]:
    x, y = FVar("x", _A), FVar("y", _B)
    i = _comb("i", fun(_A, _A))
    k = _comb("k", fun_of(_A, _B, _A))
    s = _comb("s", fun_of(fun_of(_A, _B, _C), fun(_A, _B), _A, _C))
    ax_i = forall((x,), FEq(mk_ap(i, x), x))
    ax_k = forall((x, y), FEq(mk_ap(mk_ap(k, x), y), x))
    f, g, z = FVar("f", fun_of(_A, _B, _C)), FVar("g", fun(_A, _B)), FVar("x", _A)
    lhs = mk_ap(mk_ap(mk_ap(s, f), g), z)
    rhs = mk_ap(mk_ap(f, z), mk_ap(g, z))
    ax_s = forall((f, g, z), FEq(lhs, rhs))
    return [("comb_s", ax_s), ("comb_k", ax_k), ("comb_i", ax_i)]


def p_axioms() -> List[Tuple[str, Formula]]:
    x, y = FVar("x", BOOL), FVar("y", BOOL)
    t = _app(_logical("true", 0), (), ())
    f = _app(_logical("false", 0), (), ())
    inj = forall((x, y), imp(iff(FAtom(x), FAtom(y)), FEq(x, y)))
    cases = forall((x,), FConn("or", (FEq(x, t), FEq(x, f))))
    return [
        ("p_inj", inj),
        ("p_true", FAtom(t)),
        ("p_false", FConn("not", (FAtom(f),))),
        ("bool_cases", cases),
    ]


def build_ir(problem: HolProblem) -> IRProblem:
    lifted, ctx = lift_problem(problem)
    apify = Apifier(_lookup(problem, ctx))
    out = IRProblem(problem.theory)

    theory_items = []
    for nf, t in zip(problem.formulas, lifted):
        is_conj = nf is problem.conjecture
        role = "conjecture" if is_conj else ("definition" if nf.role == "definition" else "axiom")
        hint = "conj" if is_conj else f"{problem.theory}_{nf.name}"
        theory_items.append(IRItem(("thy", nf.name, is_conj), hint, role, "theory", apify.formula(t)))

    lifted_items = [
        IRItem(("lifted", d.name), f"def_{ctx.hint(d.name)}", "axiom", "lifted", apify.formula(d.formula))
        for d in ctx.defs
    ]

    residuals: Dict[str, None] = {}
    for t in lifted + [d.formula for d in ctx.defs]:
        for name in residual_connectives(t):
            residuals.setdefault(name)
    equiv_items = [
        IRItem(("equiv", name), f"equiv_{name}", "axiom", "equiv", equivalence_axiom(name))
        for name in residuals
    ]

    used: Dict[tuple, FSym] = {}
    for item in theory_items + lifted_items + equiv_items:
        for sym in symbols_of(item.formula):
            if sym.kind in ("const", "lifted") and sym.arity >= 1:
                used.setdefault(sym.key, sym)
    arity_items = [
        IRItem(("arity", s.kind, s.name, s.arity), f"arity_{s.hint}_{s.arity}", "axiom", "arity",
               arity_equation(s), s)
        for s in used.values()
    ]

    background = [IRItem(("funext",), "funext", "axiom", "funext", funext_axiom())]
    background += [IRItem((n,), n, "axiom", "comb", f) for n, f in combinator_axioms()]
    background += [IRItem((n,), n, "axiom", "p", f) for n, f in p_axioms()]

    conj = [i for i in theory_items if i.role == "conjecture"]
    axioms = [i for i in theory_items if i.role != "conjecture"]
    out.items = axioms + lifted_items + arity_items + equiv_items + background + conj
    return out

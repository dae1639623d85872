"""Shared fixtures and oracles for the test suite."""

from __future__ import annotations

import random
from pathlib import Path
from typing import Dict, List, Optional

from hypothesis import strategies as st

from holtptp.hol.logic import mk_and, mk_eq, mk_exists, mk_forall, mk_imp, mk_neg, mk_or
from holtptp.hol.signature import Signature
from holtptp.hol.terms import Abs, App, Const, Term, Var, free_vars, term_size
from holtptp.hol.types import BOOL, HolType, TyApp, TyVar, fun, fun_of, is_fun
from holtptp.problems import HolProblem
from holtptp.theory import NamedFormula, load_theory
from holtptp.tptp.ast import Ap, Bin, Fn, Node, Not, Quant, Var as TVar

DATA = Path(__file__).resolve().parents[1] / "src" / "holtptp" / "data"
FIXTURES = Path(__file__).resolve().parent / "fixtures"
LET = DATA / "let.holt"
MINICORPUS = DATA / "minicorpus.holt"


def minicorpus():
    return load_theory(MINICORPUS)


def let_theory():
    return load_theory(LET)


def conjecture_problem(sig: Signature, prop: Term, name: str = "goal", theory: str = "t") -> HolProblem:
    """A problem with `prop` as its only formula."""
    return HolProblem(NamedFormula(name, "theorem", prop), (), "bushy", sig, theory)


# TPTP comparison -------------------------------------------------------------

def alpha_canon(node: Node, env: Optional[Dict[str, str]] = None, counter=None) -> Node:
    """Rename bound variables to ``V0, V1, ..`` in binding order."""
    env = dict(env or {})
    counter = counter if counter is not None else [0]
    if isinstance(node, TVar):
        return TVar(env.get(node.name, node.name))
    if isinstance(node, Fn):
        return Fn(node.name, tuple(alpha_canon(a, env, counter) for a in node.args))
    if isinstance(node, Ap):
        return Ap(alpha_canon(node.fn, env, counter), alpha_canon(node.arg, env, counter))
    if isinstance(node, Bin):
        return Bin(node.op, alpha_canon(node.left, env, counter), alpha_canon(node.right, env, counter))
    if isinstance(node, Not):
        return Not(alpha_canon(node.body, env, counter))
    assert isinstance(node, Quant)
    vs = []
    for name, ty in node.vars:
        ty = alpha_canon(ty, env, counter) if ty is not None else None
        fresh = f"V{counter[0]}"
        counter[0] += 1
        env[name] = fresh
        vs.append((fresh, ty))
    return Quant(node.q, tuple(vs), alpha_canon(node.body, env, counter))


def alpha_equal(a: Node, b: Node) -> bool:
    return alpha_canon(a) == alpha_canon(b)


def formula_named(problem, name: str):
    for f in problem.formulas:
        if f.name == name:
            return f.formula
    raise KeyError(name)


def substitute(node: Node, sub: Dict[str, Node]) -> Node:
    """Replace free TPTP variables."""
    if isinstance(node, TVar):
        return sub.get(node.name, node)
    if isinstance(node, Fn):
        return Fn(node.name, tuple(substitute(a, sub) for a in node.args))
    if isinstance(node, Ap):
        return Ap(substitute(node.fn, sub), substitute(node.arg, sub))
    if isinstance(node, Bin):
        return Bin(node.op, substitute(node.left, sub), substitute(node.right, sub))
    if isinstance(node, Not):
        return Not(substitute(node.body, sub))
    inner = {k: v for k, v in sub.items() if k not in {n for n, _ in node.vars}}
    return Quant(node.q, node.vars, substitute(node.body, inner))


def _conjuncts(node: Node) -> List[Node]:
    if isinstance(node, Bin) and node.op == "&":
        return _conjuncts(node.left) + _conjuncts(node.right)
    return [node]


def _is_mem_of(node: Node, name: str) -> bool:
    return (isinstance(node, Ap) and isinstance(node.fn, Ap) and node.fn.fn == Fn("mem")
            and node.fn.arg == TVar(name))


def unguarded_binders(node: Node, out: Optional[List[str]] = None) -> List[str]:
    """Variables of sort $i bound by ! or ? without a TH0 membership guard right under the binder."""
    out = [] if out is None else out
    if isinstance(node, Quant):
        if node.q in ("!", "?"):
            op = "=>" if node.q == "!" else "&"
            body = node.body
            guards = _conjuncts(body.left) if isinstance(body, Bin) and body.op == op else []
            for v, ty in node.vars:
                if ty == Fn("$i") and not any(_is_mem_of(g, v) for g in guards):
                    out.append(v)
        unguarded_binders(node.body, out)
    elif isinstance(node, Ap):
        unguarded_binders(node.fn, out)
        unguarded_binders(node.arg, out)
    elif isinstance(node, Bin):
        unguarded_binders(node.left, out)
        unguarded_binders(node.right, out)
    elif isinstance(node, Not):
        unguarded_binders(node.body, out)
    return out


def rename_bound(t: Term, suffix: str = "_r") -> Term:
    """Alpha-rename every abstraction binder by appending `suffix`."""
    from holtptp.hol.terms import subst

    if isinstance(t, Abs):
        v = Var(t.var.name + suffix, t.var.ty)
        return Abs(v, rename_bound(subst(t.body, {t.var: v}), suffix))
    if isinstance(t, App):
        return App(rename_bound(t.fn, suffix), rename_bound(t.arg, suffix))
    return t


# random well-typed terms ----------------------------------------------------

NUM = TyApp("num")
ALPHA = TyVar("a")


def random_signature() -> Signature:
    sig = Signature()
    sig.add_type_op("num", 0)
    for name, ty in [
        ("ZERO", NUM),
        ("SUC", fun(NUM, NUM)),
        ("PLUS", fun_of(NUM, NUM, NUM)),
        ("EVEN", fun(NUM, BOOL)),
        ("ID", fun(ALPHA, ALPHA)),
        ("KK", fun_of(ALPHA, TyVar("b"), ALPHA)),
        ("linear", fun(fun(NUM, NUM), BOOL)),
        ("Q", fun(fun(NUM, BOOL), BOOL)),
        ("G", fun(BOOL, BOOL)),
    ]:
        sig.add_const(name, ty)
    return sig


SIG = random_signature()
_BASE = [NUM, BOOL, ALPHA]


class TermGen:
    """Random well-typed terms of a requested type over `SIG`, with a size budget."""

    def __init__(self, rng: random.Random, budget: int):
        self.rng = rng
        self.budget = budget
        self.names = iter(f"v{k}" for k in range(10_000))

    def rtype(self, depth: int = 0) -> HolType:
        if depth < 1 and self.rng.random() < 0.25:
            return fun(self.rng.choice(_BASE), self.rng.choice(_BASE))
        return self.rng.choice(_BASE)

    def spend(self) -> bool:
        self.budget -= 1
        return self.budget > 0

    def heads(self, ty: HolType, env: List[Var]):
        """Candidate ``(head, argument types)`` whose full application has type `ty`."""
        out = []
        for v in env:
            args, t = [], v.ty
            while True:
                if t == ty:
                    out.append((v, list(args)))
                if not is_fun(t):
                    break
                args.append(t.args[0])
                t = t.args[1]
        for name, generic in SIG.consts.items():
            if name in ("eq", "forall", "exists", "select", "cond", "true", "false", "and", "or", "imp", "neg"):
                continue
            inst = self._instantiate(generic, ty)
            if inst is not None:
                for c_ty, args in inst:
                    out.append((Const(name, c_ty), args))
        return out

    def _instantiate(self, generic: HolType, target: HolType):
        results = []
        args: List[HolType] = []
        t = generic
        while True:
            sub = _match_poly(t, target)
            if sub is not None:
                full = generic
                inst = _apply(full, sub, self)
                results.append((inst, [_apply(a, sub, self) for a in args]))
            if not is_fun(t):
                break
            args.append(t.args[0])
            t = t.args[1]
        return results

    def term(self, ty: HolType, env: List[Var]) -> Term:
        r = self.rng.random()
        if not self.spend():
            return self.leaf(ty, env)
        if ty == BOOL and r < 0.4:
            return self.formula(env)
        if is_fun(ty) and r < 0.5:
            v = Var(next(self.names), ty.args[0])
            return Abs(v, self.term(ty.args[1], env + [v]))
        if r < 0.1:
            # a beta redex, so normalisation has work to do
            dom = self.rng.choice([NUM, BOOL])
            v = Var(next(self.names), dom)
            return App(Abs(v, self.term(ty, env + [v])), self.term(dom, env))
        cands = self.heads(ty, env)
        if not cands:
            return self.leaf(ty, env)
        head, args = self.rng.choice(cands)
        out = head
        for a in args:
            out = App(out, self.term(a, env))
        return out

    def leaf(self, ty: HolType, env: List[Var]) -> Term:
        exact = [v for v in env if v.ty == ty]
        if exact:
            return self.rng.choice(exact)
        if ty == BOOL:
            return Const("true", BOOL)
        if ty == NUM:
            return Const("ZERO", NUM)
        if is_fun(ty):
            v = Var(next(self.names), ty.args[0])
            return Abs(v, self.leaf(ty.args[1], env + [v]))
        # some element of a type variable: the choice of anything
        return App(Const("select", fun(fun(ty, BOOL), ty)), Abs(Var("z", ty), Const("true", BOOL)))

    def formula(self, env: List[Var]) -> Term:
        r = self.rng.random()
        if not self.spend():
            return self.leaf(BOOL, env)
        if r < 0.3:
            v = Var(next(self.names), self.rtype())
            q = mk_forall if self.rng.random() < 0.6 else mk_exists
            return q(v, self.formula(env + [v]))
        if r < 0.55:
            mk = self.rng.choice([mk_and, mk_or, mk_imp])
            return mk(self.formula(env), self.formula(env))
        if r < 0.62:
            return mk_neg(self.formula(env))
        if r < 0.8:
            ty = self.rtype()
            return mk_eq(self.term(ty, env), self.term(ty, env))
        return self.term(BOOL, env) if self.budget > 2 else self.leaf(BOOL, env)


def _match_poly(generic: HolType, target: HolType):
    sub: Dict[TyVar, HolType] = {}

    def go(g, t) -> bool:
        if isinstance(g, TyVar):
            if g in sub:
                return sub[g] == t
            sub[g] = t
            return True
        if isinstance(t, TyVar):
            return False
        return g.con == t.con and len(g.args) == len(t.args) and all(go(a, b) for a, b in zip(g.args, t.args))

    return sub if go(generic, target) else None


def _apply(ty: HolType, sub, gen: TermGen) -> HolType:
    if isinstance(ty, TyVar):
        if ty not in sub:
            sub[ty] = gen.rng.choice([NUM, BOOL, ALPHA])
        return sub[ty]
    return TyApp(ty.con, tuple(_apply(a, sub, gen) for a in ty.args))


def random_formula(seed: int, max_size: int = 30) -> Term:
    """A closed, well-typed formula of size at most `max_size`, deterministic in `seed`."""
    rng = random.Random(seed)
    while True:
        t = TermGen(rng, rng.randint(4, 14)).formula([])
        if term_size(t) <= max_size and not free_vars(t):
            return t


def random_term(seed: int, max_size: int = 30) -> Term:
    rng = random.Random(seed)
    while True:
        gen = TermGen(rng, rng.randint(3, 12))
        t = gen.term(gen.rtype(), [])
        if term_size(t) <= max_size:
            return t


formulas = st.integers(min_value=0, max_value=2**32).map(random_formula)
terms = st.integers(min_value=0, max_value=2**32).map(random_term)

"""Lambda-lifting and boolean-lifting for the first-order encodings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..hol.logic import (
    connective_app,
    dest_binder,
    is_formula_connective,
    list_mk_forall,
    mk_eq,
)
from ..hol.signature import Signature
from ..hol.terms import (
    Abs,
    App,
    Const,
    Term,
    Var,
    all_var_names,
    alpha_key,
    free_vars,
    mk_comb,
    subst,
    term_type_vars,
    variant,
)
from ..hol.types import BOOL, TyVar, fun_of, type_vars


@dataclass(frozen=True)
class LiftedDef:
    const: Const
    tyvars: Tuple[TyVar, ...]
    formula: Term
    kind: str  # "lambda" or "boolean"

    @property
    def name(self) -> str:
        return self.const.name


@dataclass
class LiftContext:
    """Per-problem lifting state: fresh-name counter, reuse table, and emitted definitions."""

    signature: Signature
    counter: int = 0
    defs: List[LiftedDef] = field(default_factory=list)
    by_name: Dict[str, LiftedDef] = field(default_factory=dict)
    _reuse: Dict[Tuple[str, tuple], Term] = field(default_factory=dict)

    def fresh_name(self) -> Tuple[str, str]:
        self.counter += 1
        hint = f"f{self.counter}"
        name = hint
        while name in self.signature.consts or name in self.by_name:
            name += "'"
        return name, hint

    def explicit_tyvars(self, generic, term: Term) -> Tuple[TyVar, ...]:
        """Type variables of `generic` in preorder, then any that occur only inside `term`."""
        out = list(type_vars(generic))
        for tv in term_type_vars(term):
            if tv not in out:
                out.append(tv)
        return tuple(out)

    def _new(self, kind: str, key_term: Term, params: List[Var], generic, build) -> Term:
        key = (kind, alpha_key(key_term))
        got = self._reuse.get(key)
        if got is not None:
            return got
        name, _hint = self.fresh_name()
        const = Const(name, generic)
        d = LiftedDef(const, self.explicit_tyvars(generic, key_term), build(const), kind)
        self.defs.append(d)
        self.by_name[name] = d
        replacement = mk_comb(const, *params)
        self._reuse[key] = replacement
        return replacement

    def lift_lambda(self, lam: Abs) -> Term:
        ys = free_vars(lam)
        xs, body = _distinct_binders(lam, ys)
        generic = fun_of(*[v.ty for v in ys], lam.ty)

        def build(const):
            lhs = mk_comb(const, *ys, *xs)
            return list_mk_forall(ys + xs, mk_eq(lhs, body))

        return self._new("lambda", lam, ys, generic, build)

    def lift_boolean(self, phi: Term) -> Term:
        ys = free_vars(phi)
        generic = fun_of(*[v.ty for v in ys], BOOL)

        def build(const):
            return list_mk_forall(ys, mk_eq(mk_comb(const, *ys), phi))

        return self._new("boolean", phi, ys, generic, build)

    def hint(self, name: str) -> str:
        return name.rstrip("'")


def _distinct_binders(lam: Abs, ys: List[Var]) -> Tuple[List[Var], Term]:
    """Strip the binder block of `lam`, renaming binders that clash with earlier names."""
    xs: List[Var] = []
    taken = {v.name for v in ys}
    t: Term = lam
    while isinstance(t, Abs):
        v, body = t.var, t.body
        if v.name in taken:
            nv = variant(v, taken | all_var_names(body))
            body = subst(body, {v: nv})
            v = nv
        taken.add(v.name)
        xs.append(v)
        t = body
    return xs, t


# formula-level traversal ---------------------------------------------------

def _map_atoms(formula: Term, on_atom) -> Term:
    """Rebuild `formula`, applying `on_atom` to every atom (maximal non-connective subterm)."""
    b = dest_binder(formula)
    if b is not None:
        q, v, body = b
        head = formula.fn
        return App(head, Abs(v, _map_atoms(body, on_atom)))
    c = connective_app(formula)
    if c is not None:
        name, args = c
        if name in ("and", "or", "imp", "neg") or (name == "eq" and args[0].ty == BOOL):
            head = formula
            for _ in args:
                head = head.fn
            return mk_comb(head, *[_map_atoms(a, on_atom) for a in args])
    return on_atom(formula)


def _lift_lambdas_in_term(t: Term, ctx: LiftContext) -> Term:
    if isinstance(t, Abs):
        return ctx.lift_lambda(t)
    if isinstance(t, App):
        fn = _lift_lambdas_in_term(t.fn, ctx)
        arg = _lift_lambdas_in_term(t.arg, ctx)
        return t if (fn is t.fn and arg is t.arg) else App(fn, arg)
    return t


def _lift_booleans_in_term(t: Term, ctx: LiftContext, top: bool) -> Term:
    if not top and t.ty == BOOL and is_formula_connective(t):
        return ctx.lift_boolean(t)
    if isinstance(t, App):
        fn = _lift_booleans_in_term(t.fn, ctx, False)
        arg = _lift_booleans_in_term(t.arg, ctx, False)
        return t if (fn is t.fn and arg is t.arg) else App(fn, arg)
    return t


def lift_lambdas(formula: Term, ctx: LiftContext) -> Tuple[Term, List[LiftedDef]]:
    """Replace term-level abstractions, leftmost-outermost, by fresh constants.

    Returns the rewritten formula and the definitions created for it, including
    those created while lifting inside the new definitions themselves.
    """
    start = len(ctx.defs)
    out = _map_atoms(formula, lambda a: _lift_lambdas_in_term(a, ctx))
    i = start
    while i < len(ctx.defs):
        d = ctx.defs[i]
        lifted = _map_atoms(d.formula, lambda a: _lift_lambdas_in_term(a, ctx))
        if lifted is not d.formula:
            nd = LiftedDef(d.const, d.tyvars, lifted, d.kind)
            ctx.defs[i] = nd
            ctx.by_name[d.name] = nd
        i += 1
    return out, ctx.defs[start:]


def lift_booleans(formula: Term, ctx: LiftContext) -> Tuple[Term, List[LiftedDef]]:
    """Replace formula-valued subterms at term level by fresh predicates with biconditional definitions."""
    start = len(ctx.defs)
    out = _map_atoms(formula, lambda a: _lift_booleans_in_term(a, ctx, True))
    i = start
    while i < len(ctx.defs):
        d = ctx.defs[i]
        lifted = _map_atoms(d.formula, lambda a: _lift_booleans_in_term(a, ctx, True))
        if lifted is not d.formula:
            nd = LiftedDef(d.const, d.tyvars, lifted, d.kind)
            ctx.defs[i] = nd
            ctx.by_name[d.name] = nd
        i += 1
    return out, ctx.defs[start:]


def atoms_of(formula: Term) -> List[Term]:
    found: List[Term] = []
    _map_atoms(formula, lambda a: (found.append(a), a)[1])
    return found


def residual_connectives(t: Term) -> List[str]:
    """Connective constants that still occur at term level, in order of first occurrence."""
    from ..hol.logic import CONNECTIVES, dest_eq
    from ..hol.terms import subterms

    seen: Dict[str, None] = {}
    for atom in atoms_of(t):
        eq = dest_eq(atom)
        roots = list(eq) if eq is not None else [atom]
        for root in roots:
            for s in subterms(root):
                if isinstance(s, Const) and s.name in CONNECTIVES and s.name not in ("true", "false"):
                    seen.setdefault(s.name)
    return list(seen)

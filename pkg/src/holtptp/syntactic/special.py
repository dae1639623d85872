"""TF0-I and TH0-I: the tagged encoding injected into a sorted language, with special types.

Terms live in two worlds. The tagged world is the untyped FOF-I encoding, with
sorts ``del`` (type terms), ``mu`` (untagged terms) and ``$i`` (tagged terms).
The typed world gives each monomorphic type its own sort. A term is *natural*
when it can be built in the typed world directly: a variable of monomorphic
type, an application of a constant whose declared type is monomorphic, or an
application of ``ap`` at monomorphic type arguments. The maps ``i_T`` and
``j_T`` move a term of monomorphic type ``T`` between the worlds.

In TH0-I the typed world uses native arrows and application, ``$o`` replaces
the boolean sort, and the predicate ``p`` disappears.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..hol.types import BOOL, HolType, TyVar, fun, flatten_name, is_fun, is_monomorphic
from ..problems import HolProblem
from ..tptp.ast import I, O, TTYPE, Annotated, Ap, Bin, Dialect, Fn, Node, Sym, TptpProblem, Var, ap, arrow, quant
from .ir import AP, FApp, FSym, FVar, Formula, formula_tyvars, terms_of
from .pipeline import IRItem, IRProblem, build_ir
from .render import DeclTable, assemble, item_name, render_formula, symbol_atom, term_var, type_var

DEL, MU = Fn("del"), Fn("mu")
RESERVED = ("del", "mu", "s", "ap", "p")


def specialised(sym: FSym) -> bool:
    return sym.kind in ("const", "lifted") and sym.monomorphic


def mono_ap(t: FApp) -> bool:
    return t.sym.kind == "ap" and all(is_monomorphic(a) for a in t.type_args)


def natural(t) -> bool:
    if isinstance(t, FVar):
        return is_monomorphic(t.ty)
    return specialised(t.sym) or mono_ap(t)


class SpecialTypesEncoder:
    def __init__(self, higher_order: bool):
        self.ho = higher_order
        self.dialect = Dialect.TH0 if higher_order else Dialect.TF0
        self.decls = DeclTable()
        self.special: Dict[HolType, None] = {}
        self.mono_aps: Dict[HolType, None] = {}

    # declarations -----------------------------------------------------------

    def _fo_type(self, args, result) -> Node:
        return arrow(args, result, curried=self.ho)

    def _base_sorts(self):
        self.decls.add_type("del", "del", TTYPE)
        self.decls.add_type("mu", "mu", TTYPE)

    def sort(self, ty: HolType) -> Node:
        """The typed-world type of a monomorphic type."""
        self._base_sorts()
        self.special.setdefault(ty)
        if self.ho:
            if ty == BOOL:
                return O
            if is_fun(ty):
                return Bin(">", self.sort(ty.args[0]), self.sort(ty.args[1]))
        name = Sym("atom", ("sort", ty), flatten_name(ty))
        self.decls.add_type(("sort", ty), name, TTYPE)
        return Fn(name)

    def type_term(self, ty: HolType) -> Node:
        self._base_sorts()
        self._declare_type_ops(ty)
        if isinstance(ty, TyVar):
            return type_var(ty)
        name = Sym("atom", ("type", ty.con), ty.con)
        return self.apply(name, [self.type_term(a) for a in ty.args])

    def _declare_type_ops(self, ty: HolType):
        if isinstance(ty, TyVar):
            return
        name = Sym("atom", ("type", ty.con), ty.con)
        self.decls.add_symbol(("type", ty.con), name, self._fo_type([DEL] * len(ty.args), DEL))
        for a in ty.args:
            self._declare_type_ops(a)

    def _s(self) -> str:
        self._base_sorts()
        self.decls.add_symbol("s", "s", self._fo_type([DEL, MU], I))
        return "s"

    def _ij(self, ty: HolType) -> Tuple[Sym, Sym]:
        flat = flatten_name(ty)
        i = Sym("atom", ("i", ty), "i_" + flat)
        j = Sym("atom", ("j", ty), "j_" + flat)
        srt = self.sort(ty)
        self.decls.add_symbol(("i", ty), i, self._fo_type([srt], MU))
        self.decls.add_symbol(("j", ty), j, self._fo_type([I], srt))
        return i, j

    def apply(self, head, args: List[Node]) -> Node:
        """Apply the symbol named `head`: curried ``@`` in TH0, ``f(..)`` in TF0."""
        if self.ho:
            return ap(Fn(head), *args)
        return Fn(head, tuple(args))

    # the two worlds ---------------------------------------------------------

    def tag(self, ty: HolType, t: Node) -> Node:
        return self.apply(self._s(), [self.type_term(ty), t])

    def to_typed(self, ty: HolType, tagged: Node) -> Node:
        return self.apply(self._ij(ty)[1], [tagged])

    def to_tagged(self, ty: HolType, typed: Node) -> Node:
        return self.tag(ty, self.apply(self._ij(ty)[0], [typed]))

    def typed(self, t) -> Node:
        if not natural(t):
            return self.to_typed(t.ty, self.tagged(t))
        if isinstance(t, FVar):
            self.sort(t.ty)
            return term_var(t)
        if t.sym.kind == "ap":
            dom, rng = t.type_args
            fty = fun(dom, rng)
            f, x = (self.typed(a) for a in t.args)
            if self.ho:
                return Ap(f, x)
            return Fn(self._mono_ap(fty), (f, x))
        return self.apply(self._typed_symbol(t.sym), [self.typed(a) for a in t.args])

    def tagged(self, t) -> Node:
        if natural(t):
            return self.to_tagged(t.ty, self.typed(t))
        if isinstance(t, FVar):
            self._base_sorts()
            return self.tag(t.ty, term_var(t))
        return self.tag(t.ty, self.apply(self._untyped_symbol(t.sym), [self.tagged(a) for a in t.args]))

    def _typed_symbol(self, sym: FSym):
        if self.ho:
            key = ("typed", sym.kind, sym.name)
            name = Sym("atom", ("fn", sym.kind, sym.name), sym.hint)
            ty = self.sort(sym.generic_type)
        else:
            key = ("typed",) + sym.key
            name = symbol_atom(sym)
            ty = self._fo_type([self.sort(a) for a in sym.arg_types], self.sort(sym.result))
        self.decls.add_symbol(key, name, ty)
        return name

    def _untyped_symbol(self, sym: FSym):
        self._base_sorts()
        if sym.kind == "ap":
            self.decls.add_symbol("ap", "ap", self._fo_type([I, I], MU))
            return "ap"
        name = symbol_atom(sym)
        self.decls.add_symbol(("untyped",) + sym.key, name, self._fo_type([I] * sym.arity, MU))
        return name

    def _mono_ap(self, fty: HolType) -> Sym:
        self.mono_aps.setdefault(fty)
        name = Sym("atom", ("ap", fty), "ap_" + flatten_name(fty))
        dom, rng = fty.args
        self.decls.add_symbol(("ap", fty), name, self._fo_type([self.sort(fty), self.sort(dom)], self.sort(rng)))
        return name

    # formulas ---------------------------------------------------------------

    def atom(self, t) -> Node:
        body = self.typed(t)
        if self.ho:
            return body
        p_ty = Bin(">", self.sort(BOOL), O)
        self.decls.add_symbol("p", "p", p_ty)
        return Fn("p", (body,))

    def eq(self, a, b) -> Node:
        if is_monomorphic(a.ty) and (natural(a) or natural(b)):
            return Bin("=", self.typed(a), self.typed(b))
        return Bin("=", self.tagged(a), self.tagged(b))

    def binder(self, v: FVar):
        if is_monomorphic(v.ty):
            return term_var(v).name, self.sort(v.ty)
        self._base_sorts()
        return term_var(v).name, MU

    def formula(self, f: Formula) -> Node:
        body = render_formula(f, self.atom, self.eq, self.binder)
        tvs = formula_tyvars(f)
        if tvs:
            self._base_sorts()
        return quant("!", [(type_var(tv).name, DEL) for tv in tvs], body)

    # background axioms for the two worlds -----------------------------------

    def _round_trip(self, ty: HolType) -> List[Tuple[str, Node]]:
        flat = flatten_name(ty)
        x = Var(Sym("var", ("v", "x"), "x"))
        i, j = self._ij(ty)
        out_in = self.tag(ty, self.apply(i, [self.apply(j, [self.tag(ty, x)])]))
        ax1 = quant("!", [(x.name, MU)], Bin("=", out_in, self.tag(ty, x)))
        in_out = self.apply(j, [self.tag(ty, self.apply(i, [x]))])
        ax2 = quant("!", [(x.name, self.sort(ty))], Bin("=", in_out, x))
        return [(f"ij_{flat}", ax1), (f"ji_{flat}", ax2)]

    def _ap_axioms(self, fty: HolType) -> List[Tuple[str, Node]]:
        flat = flatten_name(fty)
        dom, rng = fty.args
        fv, xv = FVar("f", fty), FVar("x", dom)
        poly = FApp(AP, (dom, rng), (fv, xv), rng)
        # the bridge compares the typed application with the polymorphic one
        generic_ap = self.apply(self._untyped_symbol(AP), [self.tagged(fv), self.tagged(xv)])
        bridged = self.to_typed(rng, self.tag(rng, generic_ap))
        vs = [self.binder(fv), self.binder(xv)]
        out = [(f"ap_{flat}_bridge", quant("!", vs, Bin("=", self.typed(poly), bridged)))]
        if self.ho:
            name = self._mono_ap_th0(fty)
            lhs = ap(Fn(name), term_var(fv), term_var(xv))
            out.append((f"ap_{flat}_native", quant("!", vs, Bin("=", lhs, Ap(term_var(fv), term_var(xv))))))
        return out

    def _mono_ap_th0(self, fty: HolType) -> Sym:
        name = Sym("atom", ("ap", fty), "ap_" + flatten_name(fty))
        dom, rng = fty.args
        ty = arrow([self.sort(fty), self.sort(dom)], self.sort(rng), curried=True)
        self.decls.add_symbol(("ap", fty), name, ty)
        return name

    # assembly -----------------------------------------------------------------

    def keep(self, item: IRItem) -> bool:
        if not self.ho:
            return True
        if item.group == "p":
            return False
        return not (item.group == "arity" and specialised(item.subject))

    def encode(self, ir: IRProblem) -> TptpProblem:
        items = [i for i in ir.items if self.keep(i)]
        body = [(i, self.formula(i.formula)) for i in items if i.role != "conjecture"]
        conj = [(i, self.formula(i.formula)) for i in items if i.role == "conjecture"]
        if self.ho:
            for t in (t for i in items for t in terms_of(i.formula)):
                if isinstance(t, FApp) and mono_ap(t):
                    self.mono_aps.setdefault(fun(*t.type_args))
        extra: List[Tuple[str, Node]] = []
        done: Dict[HolType, None] = {}
        done_ap: Dict[HolType, None] = {}
        # bridges can introduce further special types, so iterate to a fixpoint
        while len(done) < len(self.special) or len(done_ap) < len(self.mono_aps):
            for fty in list(self.mono_aps):
                if fty not in done_ap:
                    done_ap[fty] = None
                    extra += self._ap_axioms(fty)
            for ty in list(self.special):
                if ty not in done:
                    done[ty] = None
                    extra += self._round_trip(ty)
        formulas = [Annotated(item_name(i), i.role, f) for i, f in body]
        formulas += [Annotated(Sym("name", ("extra", n), n), "axiom", f) for n, f in extra]
        formulas += [Annotated(item_name(i), i.role, f) for i, f in conj]
        decls = self.decls.all()
        if "p" in self.decls.symbols:
            decls = tuple(d for d in decls if d.symbol != "p") + (self.decls.symbols["p"],)
        return assemble(self.dialect, decls, formulas, RESERVED)


def to_tf01(problem: HolProblem) -> TptpProblem:
    return SpecialTypesEncoder(higher_order=False).encode(build_ir(problem))


def to_th01(problem: HolProblem) -> TptpProblem:
    return SpecialTypesEncoder(higher_order=True).encode(build_ir(problem))

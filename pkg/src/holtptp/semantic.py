"""Set-theoretic translations: TH0-II, TF0-II and FOF-II.

HOL types become terms of sort ``del`` (non-empty sets) and HOL terms become
sets of sort ``$i`` together with the known fact ``t : T`` written
``mem(t, T)``. Variables and constants carry membership hypotheses; ``ap``
and ``lam`` (TH0 only) build applications and abstractions at the set level.

With special types, a basic monomorphic type ``T`` also gets its own sort with
maps ``i_T`` into the sets and ``j_T`` back, and constants whose type is built
only from such types get a typed twin.

The first-order variants lift abstractions into fresh functions ``f<k>``
(identity and constant functions use ``i`` and ``k`` instead), and FOF-II
replaces the ``del`` sort by a non-emptiness guard ``ne``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .hol.logic import FULL_ARITY, connective_app, dest_binder
from .hol.normalize import generalize
from .hol.signature import LOGICAL_CONSTANTS, type_args_for
from .hol.terms import (
    Abs,
    App,
    Const,
    Term,
    Var as HVar,
    all_var_names,
    alpha_key,
    free_vars,
    is_free_in,
    strip_comb,
    term_type_vars,
    variant,
)
from .hol.types import (
    BOOL,
    IND,
    HolType,
    TyVar,
    flatten_name,
    is_basic_monomorphic,
    is_monomorphic,
    strip_fun,
    type_vars,
)
from .problems import HolProblem
from .syntactic.render import DeclTable, type_var
from .tptp.ast import (
    FALSE,
    O,
    TRUE,
    TTYPE,
    Annotated,
    Bin,
    Dialect,
    Fn,
    I,
    Node,
    Not,
    Quant,
    Sym,
    TptpProblem,
    Var,
    ap,
    arrow,
    conj,
    quant,
)
from .tptp.mangle import resolve

TARGETS = ("th0", "tf0", "fof")
DEL = Fn("del")
RESERVED = ("del", "bool", "ind", "arr", "mem", "ap", "lam", "p", "i_o", "j_o", "o", "i", "k", "ne")

# which basic axioms each target includes, in output order
BASIC_AXIOMS = {
    "th0": ("inj_o", "iso1_o", "iso2_o", "ap_typing", "lam_typing", "funext", "beta"),
    "tf0": ("inj_o", "iso1_o", "iso2_o", "ap_typing", "funext", "prop_ext", "id", "const"),
    "fof": ("ap_typing", "funext", "prop_ext", "id", "const"),
}

_BINARY = {"and": "&", "or": "|", "imp": "=>"}


@dataclass(frozen=True)
class LiftEntry:
    """A lifted abstraction: its function symbol and its type-variable and free-variable parameters."""

    name: Sym
    index: int
    tyvars: Tuple[TyVar, ...]
    params: Tuple[HVar, ...]


@dataclass(frozen=True)
class _R:
    """A translated term: ``set`` (sort $i), ``typed`` (a special sort) or ``form`` (a TH0 formula)."""

    node: Node
    kind: str


def _var(v: HVar) -> Var:
    return Var(Sym("var", ("v", v.name, v.ty), v.name))


class SetEncoder:
    def __init__(self, target: str, special_types: bool = True):
        if target not in TARGETS:
            raise ValueError(f"target must be one of {TARGETS}")
        self.target = target
        self.ho = target == "th0"
        self.special = special_types and target != "fof"
        self.decls = DeclTable()
        self.consts: Dict[str, None] = {}
        self.typed_consts: Dict[str, None] = {}
        self.sorts: Dict[HolType, None] = {}
        self.type_ops: Dict[str, int] = {}
        self.lifted: Dict[tuple, LiftEntry] = {}
        self.lift_axioms: List[Tuple[str, Node]] = []
        self.counter = 0

    # small builders -----------------------------------------------------------

    def app(self, head, args) -> Node:
        args = list(args)
        if not args:
            return Fn(head)
        if self.ho:
            return ap(Fn(head), *args)
        return Fn(head, tuple(args))

    def _builtin(self, name: str):
        if self.target == "fof":
            return
        arr = lambda args, res: arrow(args, res, curried=self.ho)  # noqa: E731
        types = {
            "bool": DEL,
            "ind": DEL,
            "arr": arr([DEL, DEL], DEL),
            "mem": arr([I, DEL], O),
            "ap": arr([I, I], I),
            "lam": arr([DEL, Bin(">", I, I)], I),
            "p": Bin(">", I, O),
            "i_o": Bin(">", O if self.ho else Fn("o"), I),
            "j_o": Bin(">", I, Fn("o")),
            "i": arr([DEL], I),
            "k": arr([DEL, I], I),
        }
        self.decls.add_type("del", "del", TTYPE)
        if name in ("i_o", "j_o") and not self.ho:
            self.decls.add_type("o", "o", TTYPE)
        self.decls.add_symbol(name, name, types[name])

    def use(self, name: str, args=()) -> Node:
        self._builtin(name)
        return self.app(name, args)

    def mem(self, x: Node, ty: Node) -> Node:
        return self.use("mem", [x, ty])

    def ap(self, f: Node, x: Node) -> Node:
        return self.use("ap", [f, x])

    def p(self, x: Node) -> Node:
        return self.use("p", [x])

    @property
    def set_sort(self) -> Optional[Node]:
        return None if self.target == "fof" else I

    def del_binders(self, tyvars, body: Node) -> Node:
        """Quantify type variables: ``del``-sorted, or ``ne``-guarded in FOF."""
        tyvars = list(tyvars)
        if not tyvars:
            return body
        if self.target == "fof":
            guard = conj(Fn("ne", (type_var(tv),)) for tv in tyvars)
            return quant("!", [(type_var(tv).name, None) for tv in tyvars], Bin("=>", guard, body))
        self._builtin("bool")
        self.decls.add_type("del", "del", TTYPE)
        return quant("!", [(type_var(tv).name, DEL) for tv in tyvars], body)

    def guarded(self, q: str, var: Node, ty: Node, body: Node) -> Node:
        """``![X: $i]: (X : T => body)`` or ``?[X: $i]: (X : T & body)``."""
        op = "=>" if q == "!" else "&"
        return quant(q, [(var.name, self.set_sort)], Bin(op, self.mem(var, ty), body))

    # types ----------------------------------------------------------------

    def type_term(self, ty: HolType) -> Node:
        if isinstance(ty, TyVar):
            return type_var(ty)
        self.type_ops.setdefault(ty.con, len(ty.args))
        if ty == BOOL:
            return self.use("bool")
        if ty == IND:
            return self.use("ind")
        if ty.con == "fun":
            return self.use("arr", [self.type_term(a) for a in ty.args])
        name = Sym("atom", ("type", ty.con), ty.con)
        if self.target != "fof":
            self.decls.add_type("del", "del", TTYPE)
            self.decls.add_symbol(("type", ty.con), name, arrow([DEL] * len(ty.args), DEL, curried=self.ho))
        return self.app(name, [self.type_term(a) for a in ty.args])

    def is_special(self, ty: HolType) -> bool:
        return self.special and is_basic_monomorphic(ty)

    def sort(self, ty: HolType) -> Node:
        if ty == BOOL:
            if self.ho:
                return O
            self.decls.add_type("o", "o", TTYPE)
            return Fn("o")
        self.sorts.setdefault(ty)
        name = Sym("atom", ("sort", ty), flatten_name(ty))
        self.decls.add_type(("sort", ty), name, TTYPE)
        return Fn(name)

    def maps(self, ty: HolType) -> Tuple[str, str]:
        if ty == BOOL:
            self._builtin("i_o")
            if self.ho:
                self._builtin("p")
                return "i_o", "p"
            self._builtin("j_o")
            return "i_o", "j_o"
        flat = flatten_name(ty)
        i = Sym("atom", ("i", ty), "i_" + flat)
        j = Sym("atom", ("j", ty), "j_" + flat)
        s = self.sort(ty)
        self.decls.add_symbol(("i", ty), i, Bin(">", s, I))
        self.decls.add_symbol(("j", ty), j, Bin(">", I, s))
        return i, j

    # coercions --------------------------------------------------------------

    def to_set(self, r: _R, ty: HolType) -> Node:
        if r.kind == "set":
            return r.node
        if r.kind == "form" and not self.ho:
            raise AssertionError("formula in term position in a first-order target")
        return self.app(self.maps(ty)[0], [r.node])

    def to_typed(self, r: _R, ty: HolType) -> Node:
        if r.kind == "set":
            return self.app(self.maps(ty)[1], [r.node])
        return r.node

    def to_form(self, r: _R, ty: HolType) -> Node:
        if r.kind == "form" or (r.kind == "typed" and self.ho):
            return r.node
        return self.p(self.to_set(r, ty))

    # binding ----------------------------------------------------------------

    def bind(self, v: HVar) -> _R:
        return _R(_var(v), "typed" if self.is_special(v.ty) else "set")

    # constants ----------------------------------------------------------------

    def generic(self, name: str) -> HolType:
        return self.signature.consts[name]

    def specialised(self, c: Const) -> bool:
        if not self.special or c.name in LOGICAL_CONSTANTS:
            return False
        g = self.generic(c.name)
        args, res = strip_fun(g)
        return is_monomorphic(g) and all(is_basic_monomorphic(t) for t in args + [res])

    def const_set(self, c: Const) -> Node:
        self.consts.setdefault(c.name)
        name = self._const_symbol(c.name)
        targs = type_args_for(self.generic(c.name), c.ty)
        return self.app(name, [self.type_term(t) for t in targs])

    def _const_symbol(self, cname: str) -> Sym:
        name = Sym("atom", ("const", cname), cname)
        if self.target != "fof":
            n = len(type_vars(self.generic(cname)))
            self.decls.add_symbol(("const", cname), name, arrow([DEL] * n, I, curried=self.ho))
        return name

    def typed_symbol(self, cname: str) -> Sym:
        # the set-level constant claims the plain name first
        self._const_symbol(cname)
        self.typed_consts.setdefault(cname)
        name = Sym("atom", ("typed", cname), cname)
        args, res = strip_fun(self.generic(cname))
        self.decls.add_symbol(("typed", cname), name,
                              arrow([self.sort(a) for a in args], self.sort(res), curried=self.ho))
        return name

    # terms -----------------------------------------------------------------

    def term(self, t: Term, env) -> _R:
        if isinstance(t, HVar):
            return env[t]
        if self.ho and t.ty == BOOL and connective_app(t) is not None:
            return _R(self.form(t, env), "form")
        if isinstance(t, Abs):
            if self.ho:
                inner = dict(env)
                inner[t.var] = _R(_var(t.var), "set")
                body = self.to_set(self.term(t.body, inner), t.body.ty)
                lam = Quant("^", ((_var(t.var).name, I),), body)
                return _R(self.use("lam", [self.type_term(t.var.ty), lam]), "set")
            return self.lift(t, env)
        head, args = strip_comb(t)
        full = isinstance(head, Const) and len(args) == len(strip_fun(self.generic(head.name))[0])
        if full and self.specialised(head):
            typed_args = [self.to_typed(self.term(a, env), a.ty) for a in args]
            return _R(self.app(self.typed_symbol(head.name), typed_args), "typed")
        if isinstance(head, Const):
            out = self.const_set(head)
        else:
            out = self.to_set(self.term(head, env), head.ty)
        for a in args:
            out = self.ap(out, self.to_set(self.term(a, env), a.ty))
        return _R(out, "set")

    def lift(self, lam: Abs, env) -> _R:
        x, body = lam.var, lam.body
        if body == x:
            return _R(self.use("i", [self.type_term(x.ty)]), "set")
        if not is_free_in(x, body):
            inner = self.to_set(self.term(body, env), body.ty)
            return _R(self.use("k", [self.type_term(x.ty), inner]), "set")
        entry = self.lifted.get(alpha_key(lam))
        if entry is None:
            entry = self._new_lift(lam)
        args = [type_var(tv) for tv in entry.tyvars]
        for y in entry.params:
            r = env[y]
            args.append(self.to_typed(r, y.ty) if self.is_special(y.ty) else self.to_set(r, y.ty))
        return _R(self.app(entry.name, args), "set")

    def _new_lift(self, lam: Abs) -> LiftEntry:
        x, body = lam.var, lam.body
        tvs = tuple(term_type_vars(lam))
        ys = tuple(free_vars(lam))
        env = {y: self.bind(y) for y in ys}
        env[x] = _R(_var(x), "set")
        rhs = self.to_set(self.term(body, env), body.ty)
        self.counter += 1
        k = self.counter
        name = Sym("atom", ("lift", k), f"f{k}")
        if self.target != "fof":
            arg_sorts = [DEL] * len(tvs) + [self.sort(y.ty) if self.is_special(y.ty) else I for y in ys]
            self.decls.add_symbol(("lift", k), name, arrow(arg_sorts, I, curried=self.ho))
        entry = LiftEntry(name, k, tvs, ys)
        self.lifted[alpha_key(lam)] = entry
        head = self.app(name, [type_var(tv) for tv in tvs] + [_var(y) for y in ys])

        def close(inner: Node) -> Node:
            for y in reversed(ys):
                if self.is_special(y.ty):
                    inner = quant("!", [(_var(y).name, self.sort(y.ty))], inner)
                else:
                    inner = self.guarded("!", _var(y), self.type_term(y.ty), inner)
            return self.del_binders(tvs, inner)

        tp = close(self.mem(head, self.type_term(lam.ty)))
        beta = close(self.guarded("!", _var(x), self.type_term(x.ty), Bin("=", self.ap(head, _var(x)), rhs)))
        self.lift_axioms += [(f"f{k}_typing", tp), (f"f{k}_beta", beta)]
        return entry

    # formulas ----------------------------------------------------------------

    def form(self, t: Term, env) -> Node:
        b = dest_binder(t)
        if b is None:
            c = connective_app(t)
            if c is not None and c[0] in ("forall", "exists"):
                pred = c[1][0]
                x = variant(HVar("x", pred.ty.args[0]), all_var_names(pred))
                b = (c[0], x, App(pred, x))
        if b is not None:
            q, v, body = b
            inner = dict(env)
            r = self.bind(v)
            inner[v] = r
            sub = self.form(body, inner)
            tq = "!" if q == "forall" else "?"
            if r.kind == "typed":
                return quant(tq, [(r.node.name, self.sort(v.ty))], sub)
            return self.guarded(tq, r.node, self.type_term(v.ty), sub)
        c = connective_app(t)
        if c is not None:
            name, args = c
            if name in _BINARY:
                return Bin(_BINARY[name], self.form(args[0], env), self.form(args[1], env))
            if name == "neg":
                return Not(self.form(args[0], env))
            if name == "true":
                return TRUE
            if name == "false":
                return FALSE
            if name == "eq":
                a, b2 = args
                if a.ty == BOOL:
                    return Bin("<=>", self.form(a, env), self.form(b2, env))
                ra, rb = self.term(a, env), self.term(b2, env)
                if "typed" in (ra.kind, rb.kind):
                    return Bin("=", self.to_typed(ra, a.ty), self.to_typed(rb, b2.ty))
                return Bin("=", ra.node, rb.node)
        return self.to_form(self.term(t, env), BOOL)

    def formula(self, t: Term) -> Node:
        t = generalize(t)
        return self.del_binders(term_type_vars(t), self.form(t, {}))

    # background axioms -----------------------------------------------------------

    def _x(self, name: str) -> Var:
        return Var(Sym("var", ("bg", name), name))

    def basic_axiom(self, name: str) -> Node:
        A, B = TyVar("a"), TyVar("b")
        a, b = type_var(A), type_var(B)
        X, Y, F, G = self._x("X"), self._x("Y"), self._x("F"), self._x("G")
        s = self.set_sort
        bool_t = self.use("bool")
        o_sort = O if self.ho else Fn("o")
        if name == "inj_o":
            self.maps(BOOL)
            return quant("!", [(X.name, o_sort)], self.mem(self.use("i_o", [X]), bool_t))
        if name == "iso1_o":
            i, j = self.maps(BOOL)
            back = self.app(j, [self.use("i_o", [X])])
            return quant("!", [(X.name, o_sort)], Bin("<=>" if self.ho else "=", back, X))
        if name == "iso2_o":
            i, j = self.maps(BOOL)
            return self.guarded("!", X, bool_t, Bin("=", self.app(i, [self.app(j, [X])]), X))
        arr_ab = self.use("arr", [a, b])
        if name == "ap_typing":
            body = self.guarded("!", F, arr_ab, self.guarded("!", X, a, self.mem(self.ap(F, X), b)))
            return self.del_binders([A, B], body)
        if name == "lam_typing":
            fs = Bin(">", I, I)
            prem = self.guarded("!", X, a, self.mem(ap(F, X), b))
            body = quant("!", [(F.name, fs)], Bin("=>", prem, self.mem(self.use("lam", [a, F]), arr_ab)))
            return self.del_binders([A, B], body)
        if name == "funext":
            ext = self.guarded("!", X, a, Bin("=", self.ap(F, X), self.ap(G, X)))
            body = self.guarded("!", F, arr_ab, self.guarded("!", G, arr_ab, Bin("=>", ext, Bin("=", F, G))))
            return self.del_binders([A, B], body)
        if name == "beta":
            fs = Bin(">", I, I)
            redex = Bin("=", self.ap(self.use("lam", [a, F]), X), ap(F, X))
            body = quant("!", [(F.name, fs)], self.guarded("!", X, a, redex))
            return self.del_binders([A], body)
        if name == "prop_ext":
            Q, R = self._x("Q"), self._x("R")
            body = Bin("=>", Bin("<=>", self.p(Q), self.p(R)), Bin("=", Q, R))
            return self.guarded("!", Q, bool_t, self.guarded("!", R, bool_t, body))
        if name == "id":
            body = self.guarded("!", X, a, Bin("=", self.ap(self.use("i", [a]), X), X))
            return self.del_binders([A], body)
        if name == "const":
            body = quant("!", [(Y.name, s)], self.guarded("!", X, a, Bin("=", self.ap(self.use("k", [a, Y]), X), Y)))
            return self.del_binders([A], body)
        raise ValueError(name)

    def typing_axiom(self, cname: str) -> Node:
        g = self.generic(cname)
        return self.del_binders(type_vars(g), self.mem(self.const_set(Const(cname, g)), self.type_term(g)))

    def connective_axiom(self, cname: str) -> Optional[Node]:
        """Definition of a logical constant used as a set, in terms of the formula it stands for."""
        if cname not in FULL_ARITY:
            return None
        A = TyVar("a")
        X, Y = self._x("X"), self._x("Y")
        bool_t = self.use("bool")
        c = self.const_set(Const(cname, self.generic(cname)))
        if cname == "true":
            return self.p(c)
        if cname == "false":
            return Not(self.p(c))
        if cname == "neg":
            return self.guarded("!", X, bool_t, Bin("<=>", self.p(self.ap(c, X)), Not(self.p(X))))
        if cname in _BINARY:
            lhs = self.p(self.ap(self.ap(c, X), Y))
            rhs = Bin(_BINARY[cname], self.p(X), self.p(Y))
            return self.guarded("!", X, bool_t, self.guarded("!", Y, bool_t, Bin("<=>", lhs, rhs)))
        a = type_var(A)
        if cname == "eq":
            lhs = self.p(self.ap(self.ap(c, X), Y))
            body = self.guarded("!", X, a, self.guarded("!", Y, a, Bin("<=>", lhs, Bin("=", X, Y))))
            return self.del_binders([A], body)
        F = self._x("F")
        q = "!" if cname == "forall" else "?"
        inner = self.guarded(q, X, a, self.p(self.ap(F, X)))
        body = self.guarded("!", F, self.use("arr", [a, bool_t]), Bin("<=>", self.p(self.ap(c, F)), inner))
        return self.del_binders([A], body)

    def bridge_axiom(self, cname: str) -> Node:
        """``i(c~ x1..xn) = ap(..ap(c, i(x1)).., i(xn))`` for a constant with a typed twin."""
        g = self.generic(cname)
        args, res = strip_fun(g)
        xs = [HVar(f"x{k + 1}", a) for k, a in enumerate(args)]
        lhs = self.app(self.maps(res)[0], [self.app(self.typed_symbol(cname), [_var(x) for x in xs])])
        rhs = self.const_set(Const(cname, g))
        for x in xs:
            rhs = self.ap(rhs, self.app(self.maps(x.ty)[0], [_var(x)]))
        return quant("!", [(_var(x).name, self.sort(x.ty)) for x in xs], Bin("=", lhs, rhs))

    def sort_axioms(self, ty: HolType) -> List[Tuple[str, Node]]:
        flat = flatten_name(ty)
        i, j = self.maps(ty)
        x = self._x("X")
        s = self.sort(ty)
        t = self.type_term(ty)
        return [
            (f"ji_{flat}", quant("!", [(x.name, s)], Bin("=", self.app(j, [self.app(i, [x])]), x))),
            (f"ij_{flat}", self.guarded("!", x, t, Bin("=", self.app(i, [self.app(j, [x])]), x))),
            (f"i_{flat}_typing", quant("!", [(x.name, s)], self.mem(self.app(i, [x]), t))),
        ]

    def ne_facts(self) -> List[Tuple[str, Node]]:
        out = []
        ops = {"bool": 0, "fun": 2}
        ops.update(self.type_ops)
        for con, n in ops.items():
            vs = [TyVar(f"a{k + 1}") for k in range(n)]
            if con in ("bool", "ind", "fun"):
                head = self.app("arr" if con == "fun" else con, [type_var(v) for v in vs])
            else:
                head = self.app(Sym("atom", ("type", con), con), [type_var(v) for v in vs])
            fact = Fn("ne", (head,))
            if vs:
                prem = conj(Fn("ne", (type_var(v),)) for v in vs)
                fact = quant("!", [(type_var(v).name, None) for v in vs], Bin("=>", prem, fact))
            out.append((f"ne_{'arr' if con == 'fun' else con}", fact))
        return out

    # assembly -----------------------------------------------------------------

    def encode(self, problem: HolProblem) -> TptpProblem:
        self.signature = problem.signature
        theory: List[Annotated] = []
        conjecture: List[Annotated] = []
        for nf in problem.formulas:
            body = self.formula(nf.prop)
            if nf is problem.conjecture:
                conjecture.append(Annotated(Sym("name", ("conj",), "conj"), "conjecture", body))
            else:
                role = "definition" if nf.role == "definition" else "axiom"
                theory.append(Annotated(Sym("name", ("thy", nf.name), f"{problem.theory}_{nf.name}"), role, body))

        extra: List[Tuple[str, Node]] = list(self.lift_axioms)
        done_consts: Dict[str, None] = {}
        done_typed: Dict[str, None] = {}
        done_sorts: Dict[HolType, None] = {}
        # background axioms can mention further constants and sorts; iterate to a fixpoint
        while True:
            progressed = False
            for cname in list(self.typed_consts):
                if cname not in done_typed:
                    done_typed[cname] = None
                    extra.append((f"bridge_{cname}", self.bridge_axiom(cname)))
                    progressed = True
            for cname in list(self.consts):
                if cname not in done_consts:
                    done_consts[cname] = None
                    extra.append((f"{cname}_typing", self.typing_axiom(cname)))
                    d = self.connective_axiom(cname)
                    if d is not None:
                        extra.append((f"def_{cname}", d))
                    progressed = True
            for ty in list(self.sorts):
                if ty not in done_sorts:
                    done_sorts[ty] = None
                    extra += self.sort_axioms(ty)
                    progressed = True
            if not progressed:
                break
        basic = [(n, self.basic_axiom(n)) for n in BASIC_AXIOMS[self.target]]
        if self.target == "fof":
            basic += self.ne_facts()

        def named(hint: str, body: Node) -> Annotated:
            return Annotated(Sym("name", ("bg", hint), hint), "axiom", body)

        formulas = theory + [named(h, b) for h, b in extra + basic] + conjecture
        dialect = {"th0": Dialect.TH0, "tf0": Dialect.TF0, "fof": Dialect.FOF}[self.target]
        return resolve(TptpProblem(dialect, self.decls.all(), tuple(formulas)), RESERVED)


def to_th0_ii(problem: HolProblem, special_types: bool = True) -> TptpProblem:
    return SetEncoder("th0", special_types).encode(problem)


def to_tf0_ii(problem: HolProblem, special_types: bool = True) -> TptpProblem:
    return SetEncoder("tf0", special_types).encode(problem)


def to_fof_ii(problem: HolProblem) -> TptpProblem:
    return SetEncoder("fof", False).encode(problem)

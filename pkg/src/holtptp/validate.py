"""Dialect conformance checks for parsed TPTP problems.

Rule catalog (identifier: meaning):

- ``one-conjecture``: the problem must contain exactly one conjecture.
- ``fof-type-decl``: FOF problems have no type declarations.
- ``fof-typed-binder``: FOF quantifiers bind untyped variables only.
- ``fof-ho-construct``: FOF has no ``@``, ``^``, ``>`` or ``*``.
- ``fof-type-quant``: FOF has no ``!>``.
- ``fof-arity``: a FOF symbol is used at two arities or as both predicate and function.
- ``tf0-no-type-quant``: TF0 has no ``!>``.
- ``tf0-ttype-var``: TF0 variables cannot range over ``$tType``.
- ``tf0-poly-type``: TF0 declarations mention no type variables.
- ``tf0-ho-app``: TF0 has no ``@`` or ``^``; arrow types only at declaration top level.
- ``tf1-ho-app``: TF1 has no ``@`` or ``^``; arrow types only at declaration top level.
- ``th0-type-quant``: TH0 has no ``!>``.
- ``th0-type-var``: TH0 variables cannot range over ``$tType`` and declarations have no type variables.
- ``undeclared-symbol``: a typed-dialect symbol is used without a declaration.
- ``ill-typed``: a typed-dialect formula does not typecheck.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .tptp.ast import Ap, Bin, Dialect, Fn, Node, Not, Quant, TptpProblem, Var, walk

RULES = (
    "one-conjecture", "fof-type-decl", "fof-typed-binder", "fof-ho-construct", "fof-type-quant",
    "fof-arity", "tf0-no-type-quant", "tf0-ttype-var", "tf0-poly-type", "tf0-ho-app", "tf1-ho-app",
    "th0-type-quant", "th0-type-var", "undeclared-symbol", "ill-typed",
)

_CONNECTIVES = {"<=>", "<~>", "=>", "<=", "~|", "~&", "&", "|"}


@dataclass(frozen=True)
class Violation:
    location: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: [{self.rule}] {self.message}"


class _Fail(Exception):
    def __init__(self, rule: str, message: str):
        super().__init__(message)
        self.rule = rule


# internal types: ("ttype",) | ("con", name, args) | ("var", name) | ("arr", args, res) | ("pi", vars, body)
TTYPE = ("ttype",)
BOOL = ("con", "$o", ())
IND = ("con", "$i", ())


def _show(t) -> str:
    tag = t[0]
    if tag == "ttype":
        return "$tType"
    if tag == "var":
        return t[1]
    if tag == "con":
        return t[1] + (f"({','.join(map(_show, t[2]))})" if t[2] else "")
    if tag == "arr":
        return f"({' * '.join(map(_show, t[1]))} > {_show(t[2])})"
    return f"!>[{','.join(t[1])}]: {_show(t[2])}"


def _subst(t, sub):
    tag = t[0]
    if tag == "var":
        return sub.get(t[1], t)
    if tag == "con":
        return ("con", t[1], tuple(_subst(a, sub) for a in t[2]))
    if tag == "arr":
        return ("arr", tuple(_subst(a, sub) for a in t[1]), _subst(t[2], sub))
    if tag == "pi":
        inner = {k: v for k, v in sub.items() if k not in t[1]}
        return ("pi", t[1], _subst(t[2], inner))
    return t


class _Checker:
    def __init__(self, problem: TptpProblem):
        self.dialect = problem.dialect
        self.ho = problem.dialect.higher_order
        self.tycons: Dict[str, int] = {"$o": 0, "$i": 0}
        self.syms: Dict[str, tuple] = {}

    # types -----------------------------------------------------------------

    def type_of_node(self, n: Node, tyvars: Tuple[str, ...]) -> tuple:
        if isinstance(n, Fn):
            if n.name == "$tType" and not n.args:
                return TTYPE
            return self._con(n.name, [self.type_of_node(a, tyvars) for a in n.args])
        if isinstance(n, Var):
            if n.name not in tyvars:
                raise _Fail("ill-typed", f"unbound type variable {n.name}")
            return ("var", n.name)
        if isinstance(n, Ap):
            head, args = n, []
            while isinstance(head, Ap):
                args.append(head.arg)
                head = head.fn
            if not isinstance(head, Fn) or head.args:
                raise _Fail("ill-typed", "malformed type application")
            return self._con(head.name, [self.type_of_node(a, tyvars) for a in reversed(args)])
        if isinstance(n, Bin) and n.op == ">":
            if not self.ho and isinstance(n.left, Bin) and n.left.op == "*":
                items, t = [], n.left
                while isinstance(t, Bin) and t.op == "*":
                    items.append(t.right)
                    t = t.left
                items.append(t)
                dom = tuple(self.type_of_node(a, tyvars) for a in reversed(items))
            else:
                dom = (self.type_of_node(n.left, tyvars),)
            return ("arr", dom, self.type_of_node(n.right, tyvars))
        if isinstance(n, Quant) and n.q == "!>":
            names = tuple(v for v, _ in n.vars)
            for v, ty in n.vars:
                if ty != Fn("$tType"):
                    raise _Fail("ill-typed", f"type variable {v} must range over $tType")
            return ("pi", names, self.type_of_node(n.body, tyvars + names))
        raise _Fail("ill-typed", "malformed type")

    def _con(self, name: str, args: List[tuple]) -> tuple:
        if name not in self.tycons:
            raise _Fail("undeclared-symbol", f"undeclared type {name}")
        if self.tycons[name] != len(args):
            raise _Fail("ill-typed", f"type {name} expects {self.tycons[name]} arguments")
        for a in args:
            if a == TTYPE:
                raise _Fail("ill-typed", "$tType used as a type argument")
        return ("con", name, tuple(args))

    def declare(self, symbol: str, ty_node: Node):
        arity = _type_constructor_arity(ty_node)
        if arity is not None:
            self.tycons[symbol] = arity
            return
        ty = self.type_of_node(ty_node, ())
        if symbol in self.syms and self.syms[symbol] != ty:
            raise _Fail("ill-typed", f"{symbol} declared twice with different types")
        self.syms[symbol] = ty

    # first-order terms and formulas --------------------------------------

    def fo_formula(self, n: Node, env: Dict[str, tuple], tyvars: Tuple[str, ...]):
        if isinstance(n, Fn) and n.name in ("$true", "$false") and not n.args:
            return
        if isinstance(n, Bin):
            if n.op in ("=", "!="):
                lt = self.fo_term(n.left, env, tyvars)
                rt = self.fo_term(n.right, env, tyvars)
                if lt != rt:
                    raise _Fail("ill-typed", f"equation between {_show(lt)} and {_show(rt)}")
                return
            if n.op in _CONNECTIVES:
                self.fo_formula(n.left, env, tyvars)
                self.fo_formula(n.right, env, tyvars)
                return
            raise _Fail("ill-typed", f"operator {n.op} in a formula")
        if isinstance(n, Not):
            self.fo_formula(n.body, env, tyvars)
            return
        if isinstance(n, Quant):
            if n.q == "!>":
                names = tuple(v for v, _ in n.vars)
                for v, ty in n.vars:
                    if ty != Fn("$tType"):
                        raise _Fail("ill-typed", f"type variable {v} must range over $tType")
                self.fo_formula(n.body, env, tyvars + names)
                return
            if n.q not in ("!", "?"):
                raise _Fail("ill-typed", f"binder {n.q} in a first-order formula")
            inner = dict(env)
            for v, ty in n.vars:
                vt = IND if ty is None else self.type_of_node(ty, tyvars)
                if vt == TTYPE:
                    raise _Fail("ill-typed", f"variable {v} ranges over $tType outside !>")
                if vt == BOOL:
                    raise _Fail("ill-typed", f"variable {v} ranges over $o")
                if vt[0] in ("arr", "pi"):
                    raise _Fail("ill-typed", f"variable {v} has a functional type")
                inner[v] = vt
            self.fo_formula(n.body, inner, tyvars)
            return
        if isinstance(n, Fn):
            if self.fo_apply(n, env, tyvars) != BOOL:
                raise _Fail("ill-typed", f"{n.name}(...) is not a predicate")
            return
        raise _Fail("ill-typed", "a variable cannot be used as a formula")

    def fo_term(self, n: Node, env, tyvars) -> tuple:
        if isinstance(n, Var):
            if n.name not in env:
                raise _Fail("ill-typed", f"unbound variable {n.name}")
            return env[n.name]
        if isinstance(n, Fn):
            ty = self.fo_apply(n, env, tyvars)
            if ty == BOOL:
                raise _Fail("ill-typed", f"predicate {n.name} used as a term")
            return ty
        raise _Fail("ill-typed", "formula used as a term")

    def fo_apply(self, n: Fn, env, tyvars) -> tuple:
        if n.name not in self.syms:
            raise _Fail("undeclared-symbol", f"undeclared symbol {n.name}")
        ty = self.syms[n.name]
        args = list(n.args)
        if ty[0] == "pi":
            k = len(ty[1])
            if len(args) < k:
                raise _Fail("ill-typed", f"{n.name} expects {k} type arguments")
            tys = [self.type_of_node(a, tyvars) for a in args[:k]]
            ty = _subst(ty[2], dict(zip(ty[1], tys)))
            args = args[k:]
        if ty[0] == "arr":
            dom, res = ty[1], ty[2]
        else:
            dom, res = (), ty
        if len(dom) != len(args):
            raise _Fail("ill-typed", f"{n.name} expects {len(dom)} arguments, got {len(args)}")
        for want, a in zip(dom, args):
            got = self.fo_term(a, env, tyvars)
            if got != want:
                raise _Fail("ill-typed", f"{n.name} expects {_show(want)}, got {_show(got)}")
        return res

    # higher-order --------------------------------------------------------

    def _fresh_binders(self, pi):
        """Rename the binders of `pi` apart so instantiating one at a time cannot capture."""
        self._fresh = getattr(self, "_fresh", 0)
        names = []
        for _ in pi[1]:
            self._fresh += 1
            names.append(f"#{self._fresh}")
        return ("pi", tuple(names), _subst(pi[2], {o: ("var", n) for o, n in zip(pi[1], names)}))

    def ho_type(self, n: Node, env, tyvars) -> tuple:
        if isinstance(n, Var):
            if n.name not in env:
                raise _Fail("ill-typed", f"unbound variable {n.name}")
            return env[n.name]
        if isinstance(n, Fn):
            if n.args:
                raise _Fail("ill-typed", f"first-order application {n.name}(...) in a higher-order formula")
            if n.name in ("$true", "$false"):
                return BOOL
            if n.name not in self.syms:
                raise _Fail("undeclared-symbol", f"undeclared symbol {n.name}")
            return self.syms[n.name]
        if isinstance(n, Ap):
            ft = self.ho_type(n.fn, env, tyvars)
            if ft[0] == "pi":
                arg = self.type_of_node(n.arg, tyvars)
                ft = self._fresh_binders(ft)
                rest = ft[1][1:]
                body = _subst(ft[2], {ft[1][0]: arg})
                return ("pi", rest, body) if rest else body
            if ft[0] != "arr":
                raise _Fail("ill-typed", f"applying a term of type {_show(ft)}")
            at = self.ho_type(n.arg, env, tyvars)
            if ft[1][0] != at:
                raise _Fail("ill-typed", f"argument of type {_show(at)} where {_show(ft[1][0])} expected")
            return ft[2] if len(ft[1]) == 1 else ("arr", ft[1][1:], ft[2])
        if isinstance(n, Bin):
            if n.op in ("=", "!="):
                lt = self.ho_type(n.left, env, tyvars)
                rt = self.ho_type(n.right, env, tyvars)
                if lt != rt:
                    raise _Fail("ill-typed", f"equation between {_show(lt)} and {_show(rt)}")
                return BOOL
            if n.op in _CONNECTIVES:
                for side in (n.left, n.right):
                    if self.ho_type(side, env, tyvars) != BOOL:
                        raise _Fail("ill-typed", f"operand of {n.op} is not $o")
                return BOOL
            raise _Fail("ill-typed", f"type operator {n.op} used as a term")
        if isinstance(n, Not):
            if self.ho_type(n.body, env, tyvars) != BOOL:
                raise _Fail("ill-typed", "operand of ~ is not $o")
            return BOOL
        if isinstance(n, Quant):
            if n.q == "!>":
                names = tuple(v for v, _ in n.vars)
                for v, ty in n.vars:
                    if ty != Fn("$tType"):
                        raise _Fail("ill-typed", f"type variable {v} must range over $tType")
                if self.ho_type(n.body, env, tyvars + names) != BOOL:
                    raise _Fail("ill-typed", "body of !> is not $o")
                return BOOL
            inner = dict(env)
            doms = []
            for v, ty in n.vars:
                if ty is None:
                    vt = IND
                else:
                    vt = self.type_of_node(ty, tyvars)
                if vt == TTYPE or vt[0] == "pi":
                    raise _Fail("ill-typed", f"variable {v} ranges over types")
                inner[v] = vt
                doms.append(vt)
            bt = self.ho_type(n.body, inner, tyvars)
            if n.q == "^":
                for d in reversed(doms):
                    bt = ("arr", (d,), bt)
                return bt
            if bt != BOOL:
                raise _Fail("ill-typed", f"body of {n.q} is not $o")
            return BOOL
        raise _Fail("ill-typed", "unknown node")

    def formula(self, n: Node):
        if self.ho:
            if self.ho_type(n, {}, ()) != BOOL:
                raise _Fail("ill-typed", "formula is not of type $o")
        else:
            self.fo_formula(n, {}, ())


def _type_constructor_arity(n: Node) -> Optional[int]:
    """Arity when `n` is the kind of a type constructor (``$tType``, ``$tType > $tType``...)."""
    tt = Fn("$tType")
    if n == tt:
        return 0
    if not (isinstance(n, Bin) and n.op == ">"):
        return None
    if n.right == tt:
        items, t = [], n.left
        while isinstance(t, Bin) and t.op == "*":
            items.append(t.right)
            t = t.left
        items.append(t)
        return len(items) if all(x == tt for x in items) else None
    if n.left == tt:
        rest = _type_constructor_arity(n.right)
        return None if rest is None else rest + 1
    return None


def _structural(problem: TptpProblem) -> List[Violation]:
    d = problem.dialect
    out: List[Violation] = []

    def add(loc, rule, msg):
        out.append(Violation(loc, rule, msg))

    conj = len(problem.conjectures)
    if conj != 1:
        add("<problem>", "one-conjecture", f"found {conj} conjectures")

    items = [(f"{x.name}", x.type, True) for x in problem.decls]
    items += [(f"{x.name}", x.formula, False) for x in problem.formulas]

    if d is Dialect.FOF:
        for x in problem.decls:
            add(x.name, "fof-type-decl", f"type declaration of {x.symbol}")
        arities: Dict[str, Tuple[str, int]] = {}
        for f in problem.formulas:
            for n in walk(f.formula):
                if isinstance(n, Quant):
                    if n.q == "!>":
                        add(f.name, "fof-type-quant", "type quantifier !>")
                    elif n.q == "^":
                        add(f.name, "fof-ho-construct", "lambda abstraction")
                    if any(ty is not None for _, ty in n.vars):
                        add(f.name, "fof-typed-binder", "typed quantifier variable")
                elif isinstance(n, Ap):
                    add(f.name, "fof-ho-construct", "application operator @")
                elif isinstance(n, Bin) and n.op in (">", "*"):
                    add(f.name, "fof-ho-construct", f"type operator {n.op}")
            _fof_arities(f.name, f.formula, arities, add)
        return out

    for loc, node, is_decl in items:
        for n in walk(node):
            if isinstance(n, Quant):
                if n.q == "!>" and d is Dialect.TF0:
                    add(loc, "tf0-no-type-quant", "type quantifier !> in TF0")
                if n.q == "!>" and d is Dialect.TH0:
                    add(loc, "th0-type-quant", "type quantifier !> in TH0")
                if n.q in ("!", "?", "^") and any(ty == Fn("$tType") for _, ty in n.vars):
                    if d is Dialect.TF0:
                        add(loc, "tf0-ttype-var", "variable ranging over $tType")
                    elif d is Dialect.TH0:
                        add(loc, "th0-type-var", "variable ranging over $tType")
                if n.q == "^" and not d.higher_order:
                    add(loc, "tf0-ho-app" if d is Dialect.TF0 else "tf1-ho-app", "lambda abstraction")
            elif isinstance(n, Ap) and not d.higher_order:
                add(loc, "tf0-ho-app" if d is Dialect.TF0 else "tf1-ho-app", "application operator @")
        if is_decl and d in (Dialect.TF0, Dialect.TH0):
            bound = set()
            for n in walk(node):
                if isinstance(n, Quant):
                    bound.update(v for v, _ in n.vars)
                if isinstance(n, Var):
                    rule = "tf0-poly-type" if d is Dialect.TF0 else "th0-type-var"
                    add(loc, rule, f"type variable {n.name} in a declaration")
                    break
        if is_decl and not d.higher_order:
            body = node.body if isinstance(node, Quant) and node.q == "!>" else node
            inner = [body.left, body.right] if isinstance(body, Bin) and body.op == ">" else [body]
            for part in inner:
                for n in walk(part):
                    if isinstance(n, Bin) and n.op == ">":
                        add(loc, "tf0-ho-app" if d is Dialect.TF0 else "tf1-ho-app",
                            "nested arrow type in a first-order declaration")
                        break
    return out


def _fof_arities(loc, formula, arities, add):
    def term(n):
        if isinstance(n, Fn):
            note(n, "function")
            for a in n.args:
                term(a)

    def note(n: Fn, kind):
        seen = arities.setdefault(n.name, (kind, len(n.args)))
        if seen != (kind, len(n.args)):
            add(loc, "fof-arity", f"{n.name} used as {seen[0]}/{seen[1]} and {kind}/{len(n.args)}")

    def form(n):
        if isinstance(n, Bin):
            if n.op in ("=", "!="):
                term(n.left)
                term(n.right)
            else:
                form(n.left)
                form(n.right)
        elif isinstance(n, Not):
            form(n.body)
        elif isinstance(n, Quant):
            form(n.body)
        elif isinstance(n, Fn):
            if n.name.startswith("$"):
                return
            note(n, "predicate")
            for a in n.args:
                term(a)

    form(formula)


def check_dialect(problem: TptpProblem) -> List[Violation]:
    """All conformance violations of `problem`; an empty list means it is clean."""
    out = _structural(problem)
    if problem.dialect is Dialect.FOF:
        return out
    checker = _Checker(problem)
    for d in problem.decls:
        try:
            checker.declare(d.symbol, d.type)
        except _Fail as e:
            out.append(Violation(d.name, e.rule, str(e)))
        except RecursionError:
            out.append(Violation(d.name, "ill-typed", "declaration nests too deeply"))
    for f in problem.formulas:
        try:
            checker.formula(f.formula)
        except _Fail as e:
            out.append(Violation(f.name, e.rule, str(e)))
        except RecursionError:
            out.append(Violation(f.name, "ill-typed", "formula nests too deeply"))
    return out


def check_text(text: str, dialect: Optional[Dialect] = None) -> List[Violation]:
    from .tptp.parser import parse_tptp

    return check_dialect(parse_tptp(text, dialect))

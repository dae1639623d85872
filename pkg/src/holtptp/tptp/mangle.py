"""Turning source names into TPTP atoms and variables, injectively per problem."""

from __future__ import annotations

import re
from dataclasses import replace
from typing import Dict, Iterable, Optional

from .ast import Annotated, Ap, Bin, Fn, Node, Not, Quant, Sym, TptpProblem, TypeDecl, Var

LOWER_WORD = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
UPPER_WORD = re.compile(r"[A-Z][a-zA-Z0-9_]*\Z")


def quote_atom(text: str) -> str:
    if LOWER_WORD.match(text):
        return text
    return "'" + text.replace("\\", "\\\\").replace("'", "\\'") + "'"


def _var_base(hint: str) -> str:
    out = []
    for ch in hint:
        if ch.isascii() and (ch.isalnum() or ch == "_"):
            out.append(ch)
        else:
            out.append(f"_{ord(ch):x}")
    text = "".join(out) or "V"
    if not text[0].isalpha():
        text = "V" + text
    return text[0].upper() + text[1:]


class Namespace:
    """Injective map from keys to identifiers; later claimants of a taken name get ``_1``, ``_2``..."""

    def __init__(self, kind: str, reserved: Iterable[str] = ()):
        self.kind = kind
        self.by_key: Dict[object, str] = {}
        self.taken = set(reserved)

    def _candidate(self, base: str, n: int) -> str:
        raw = base if n == 0 else f"{base}_{n}"
        return quote_atom(raw) if self.kind == "atom" else raw

    def get(self, key: object, hint: str) -> str:
        got = self.by_key.get(key)
        if got is not None:
            return got
        base = hint.lower() if self.kind == "atom" else _var_base(hint)
        n = 0
        while self._candidate(base, n) in self.taken:
            n += 1
        name = self._candidate(base, n)
        self.taken.add(name)
        self.by_key[key] = name
        return name


def mangle(name: str, kind: str) -> str:
    """Spell a single source name as an atom (``function``, ``predicate``, ``type``) or variable."""
    if kind == "variable":
        return _var_base(name)
    return quote_atom(name.lower())


class Resolver:
    def __init__(self, reserved_atoms: Iterable[str] = (), reserved_names: Iterable[str] = ()):
        self.atoms = Namespace("atom", reserved_atoms)
        self.names = Namespace("atom", reserved_names)
        self.vars: Optional[Namespace] = None

    def name(self, n) -> str:
        if not isinstance(n, Sym):
            return n
        if n.ns == "atom":
            return self.atoms.get(n.key, n.hint)
        if n.ns == "name":
            return self.names.get(n.key, n.hint)
        if n.ns == "var":
            return self.vars.get(n.key, n.hint)
        raise ValueError(f"unknown namespace {n.ns}")

    def node(self, t: Node) -> Node:
        if isinstance(t, Var):
            return Var(self.name(t.name))
        if isinstance(t, Fn):
            return Fn(self.name(t.name), tuple(self.node(a) for a in t.args))
        if isinstance(t, Ap):
            return Ap(self.node(t.fn), self.node(t.arg))
        if isinstance(t, Bin):
            return Bin(t.op, self.node(t.left), self.node(t.right))
        if isinstance(t, Not):
            return Not(self.node(t.body))
        if isinstance(t, Quant):
            vs = tuple((self.name(v), None if ty is None else self.node(ty)) for v, ty in t.vars)
            return Quant(t.q, vs, self.node(t.body))
        raise TypeError(f"not a node: {t!r}")


def resolve(problem: TptpProblem, reserved_atoms: Iterable[str] = ()) -> TptpProblem:
    """Replace every :class:`Sym` by a concrete identifier.

    Atoms are claimed in order of appearance (declarations first, then formulas),
    so builtins listed in `reserved_atoms` keep their spelling and colliding
    source names receive numeric suffixes. Variables are scoped per formula.
    """
    r = Resolver(reserved_atoms, ())
    decls = []
    for d in problem.decls:
        r.vars = Namespace("var")
        symbol = r.name(d.symbol)
        ty = r.node(d.type)
        name = d.name
        if isinstance(name, Sym):
            name = r.names.get(name.key, symbol.strip("'") + "_tp")
        decls.append(TypeDecl(name, symbol, ty))
    formulas = []
    for f in problem.formulas:
        r.vars = Namespace("var")
        formulas.append(Annotated(r.name(f.name), f.role, r.node(f.formula)))
    return replace(problem, decls=tuple(decls), formulas=tuple(formulas))

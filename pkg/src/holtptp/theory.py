"""Reading and writing theory files (``.holt``).

The format is S-expression based::

    (typeop num 0)
    (const SUC (fun num num))
    (axiom ax1 <term>)
    (def LET_DEF <term>)
    (thm let_thm (deps LET_DEF) <term>)

Types are ``'a``, ``bool``, ``ind``, ``(fun t1 t2)`` or ``(name t*)``; a bare
``name`` is accepted for a nullary operator. Terms are ``(v x ty)``,
``(c name ty)``, ``(a fn arg)`` and ``(l (v x ty) body)``; ``(! abs)`` and
``(? abs)`` abbreviate ``forall`` and ``exists`` applied to an abstraction.
``;`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .errors import (
    DuplicateName,
    ForwardReference,
    HolError,
    HolSyntaxError,
    HolTypeError,
    UnknownName,
)
from .hol.signature import BUILTIN_TYPE_OPS, Signature, check_prop, check_type, typecheck
from .hol.terms import Abs, App, Const, Term, Var
from .hol.types import HolType, TyApp, TyVar

ROLES = ("axiom", "definition", "theorem")
_KEYWORD_ROLE = {"axiom": "axiom", "def": "definition", "thm": "theorem"}


@dataclass(frozen=True)
class NamedFormula:
    name: str
    role: str
    prop: Term
    deps: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")


@dataclass(frozen=True)
class Theory:
    signature: Signature
    formulas: Tuple[NamedFormula, ...] = ()
    name: str = "thy"
    _index: Dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({f.name: i for i, f in enumerate(self.formulas)})

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __getitem__(self, name: str) -> NamedFormula:
        return self.formulas[self._index[name]]

    def position(self, name: str) -> int:
        return self._index[name]

    @property
    def theorems(self) -> List[NamedFormula]:
        return [f for f in self.formulas if f.role == "theorem"]


# S-expressions ---------------------------------------------------------------

@dataclass
class _Atom:
    text: str
    line: int
    col: int


@dataclass
class _List:
    items: List[Union["_Atom", "_List"]]
    line: int
    col: int


_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


def _tokens(text: str) -> Iterator[Tuple[str, int, int]]:
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = m.group()
        col = pos - line_start + 1
        if tok[0].isspace() or tok[0] == ";":
            nl = tok.count("\n")
            if nl:
                line += nl
                line_start = pos + tok.rfind("\n") + 1
        else:
            yield tok, line, col
        pos = m.end()


def read_sexprs(text: str) -> List[Union[_Atom, _List]]:
    stack: List[_List] = [_List([], 0, 0)]
    for tok, line, col in _tokens(text):
        if tok == "(":
            stack.append(_List([], line, col))
        elif tok == ")":
            if len(stack) == 1:
                raise HolSyntaxError("unbalanced ')'", line, col)
            done = stack.pop()
            stack[-1].items.append(done)
        else:
            stack[-1].items.append(_Atom(tok, line, col))
    if len(stack) > 1:
        top = stack[-1]
        raise HolSyntaxError("unclosed '('", top.line, top.col)
    return stack[0].items


# Parsing ---------------------------------------------------------------------

class _Reader:
    def __init__(self, sig: Signature, later_consts: Dict[str, int], later_types: Dict[str, int]):
        self.sig = sig
        self.later_consts = later_consts
        self.later_types = later_types

    def _unknown(self, what: str, name: str, node, later: Dict[str, int]):
        if name in later:
            raise ForwardReference(f"{what} {name} used before its declaration", node.line, node.col)
        raise UnknownName(f"undeclared {what} {name}", node.line, node.col)

    def type(self, node) -> HolType:
        if isinstance(node, _Atom):
            text = node.text
            if text.startswith("'"):
                if len(text) == 1:
                    raise HolSyntaxError("empty type variable name", node.line, node.col)
                return TyVar(text[1:])
            return self._tyapp(text, [], node)
        if not node.items or not isinstance(node.items[0], _Atom):
            raise HolSyntaxError("expected a type", node.line, node.col)
        head = node.items[0].text
        return self._tyapp(head, [self.type(a) for a in node.items[1:]], node)

    def _tyapp(self, name: str, args: List[HolType], node) -> HolType:
        if name not in self.sig.type_ops:
            self._unknown("type operator", name, node, self.later_types)
        ty = TyApp(name, tuple(args))
        try:
            check_type(ty, self.sig)
        except HolError as e:
            raise HolTypeError(str(e), node.line, node.col) from None
        return ty

    def term(self, node) -> Term:
        if not isinstance(node, _List) or not node.items or not isinstance(node.items[0], _Atom):
            raise HolSyntaxError("expected a term", node.line, node.col)
        tag = node.items[0].text
        args = node.items[1:]
        try:
            if tag in ("v", "c"):
                if len(args) != 2 or not isinstance(args[0], _Atom):
                    raise HolSyntaxError(f"({tag} NAME type) expected", node.line, node.col)
                name, ty = args[0].text, self.type(args[1])
                if tag == "v":
                    return Var(name, ty)
                if name not in self.sig.consts:
                    self._unknown("constant", name, args[0], self.later_consts)
                const = Const(name, ty)
                typecheck(const, self.sig)
                return const
            if tag == "a":
                if len(args) != 2:
                    raise HolSyntaxError("(a fn arg) expected", node.line, node.col)
                return App(self.term(args[0]), self.term(args[1]))
            if tag in ("!", "?"):
                # binder sugar: (! (l (v x ty) body)) is forall applied to the abstraction
                if len(args) != 1:
                    raise HolSyntaxError(f"({tag} (l (v x ty) body)) expected", node.line, node.col)
                lam = self.term(args[0])
                if not isinstance(lam, Abs):
                    raise HolSyntaxError("a binder needs an abstraction", node.line, node.col)
                q = "forall" if tag == "!" else "exists"
                return App(Const(q, TyApp("fun", (typecheck(lam, self.sig), TyApp("bool")))), lam)
            if tag == "l":
                if len(args) != 2:
                    raise HolSyntaxError("(l (v x ty) body) expected", node.line, node.col)
                var = self.term(args[0])
                if not isinstance(var, Var):
                    raise HolSyntaxError("abstraction must bind a variable", node.line, node.col)
                return Abs(var, self.term(args[1]))
        except HolError as e:
            raise HolTypeError(str(e), node.line, node.col) from None
        raise HolSyntaxError(f"unknown term form {tag!r}", node.line, node.col)


def _atom(node, what: str) -> str:
    if not isinstance(node, _Atom):
        raise HolSyntaxError(f"expected {what}", node.line, node.col)
    return node.text


def parse_theory(text: str, name: str = "thy") -> Theory:
    items = read_sexprs(text)
    later_consts: Dict[str, int] = {}
    later_types: Dict[str, int] = {}
    later_formulas: Dict[str, int] = {}
    for i, item in enumerate(items):
        if isinstance(item, _List) and len(item.items) >= 2 and all(
            isinstance(x, _Atom) for x in item.items[:2]
        ):
            kw, nm = item.items[0].text, item.items[1].text
            target = {"const": later_consts, "typeop": later_types}.get(kw, later_formulas)
            target.setdefault(nm, i)

    sig = Signature()
    reader = _Reader(sig, later_consts, later_types)
    formulas: List[NamedFormula] = []
    seen: Dict[str, NamedFormula] = {}

    for item in items:
        if not isinstance(item, _List) or not item.items:
            raise HolSyntaxError("expected a parenthesised item", item.line, item.col)
        kw = _atom(item.items[0], "an item keyword")
        rest = item.items[1:]
        if kw == "typeop":
            if len(rest) != 2:
                raise HolSyntaxError("(typeop NAME NAT) expected", item.line, item.col)
            nm = _atom(rest[0], "a type operator name")
            arity_text = _atom(rest[1], "an arity")
            if not arity_text.isdigit():
                raise HolSyntaxError("arity must be a natural number", rest[1].line, rest[1].col)
            if nm in sig.type_ops:
                raise DuplicateName(f"type operator {nm} declared twice", item.line, item.col)
            sig.add_type_op(nm, int(arity_text))
            later_types.pop(nm, None)
        elif kw == "const":
            if len(rest) != 2:
                raise HolSyntaxError("(const NAME type) expected", item.line, item.col)
            nm = _atom(rest[0], "a constant name")
            if nm in sig.consts:
                raise DuplicateName(f"constant {nm} declared twice", item.line, item.col)
            sig.add_const(nm, reader.type(rest[1]))
            later_consts.pop(nm, None)
        elif kw in _KEYWORD_ROLE:
            role = _KEYWORD_ROLE[kw]
            deps: Tuple[str, ...] = ()
            if kw == "thm":
                if len(rest) != 3:
                    raise HolSyntaxError("(thm NAME (deps ...) term) expected", item.line, item.col)
                deps = _read_deps(rest[1], seen, later_formulas)
                body = rest[2]
            else:
                if len(rest) != 2:
                    raise HolSyntaxError(f"({kw} NAME term) expected", item.line, item.col)
                body = rest[1]
            nm = _atom(rest[0], "a formula name")
            if nm in seen:
                raise DuplicateName(f"formula {nm} declared twice", item.line, item.col)
            prop = reader.term(body)
            try:
                check_prop(prop, sig)
            except HolError as e:
                raise HolTypeError(str(e), body.line, body.col) from None
            nf = NamedFormula(nm, role, prop, deps)
            formulas.append(nf)
            seen[nm] = nf
            later_formulas.pop(nm, None)
        else:
            raise HolSyntaxError(f"unknown item {kw!r}", item.line, item.col)
    return Theory(sig, tuple(formulas), name)


def _read_deps(node, seen, later) -> Tuple[str, ...]:
    if not isinstance(node, _List) or not node.items or _atom(node.items[0], "deps") != "deps":
        raise HolSyntaxError("(deps NAME*) expected", node.line, node.col)
    out: List[str] = []
    for d in node.items[1:]:
        nm = _atom(d, "a dependency name")
        if nm in out:
            raise DuplicateName(f"dependency {nm} listed twice", d.line, d.col)
        if nm not in seen:
            if nm in later:
                raise ForwardReference(f"dependency {nm} is declared later", d.line, d.col)
            raise UnknownName(f"unknown dependency {nm}", d.line, d.col)
        out.append(nm)
    return tuple(out)


def load_theory(path: Union[str, Path], name: Optional[str] = None) -> Theory:
    path = Path(path)
    return parse_theory(path.read_text(encoding="utf-8"), name or path.stem)


# Printing --------------------------------------------------------------------

def print_type(ty: HolType) -> str:
    if isinstance(ty, TyVar):
        return "'" + ty.name
    if not ty.args:
        return ty.con
    return "(" + " ".join([ty.con, *map(print_type, ty.args)]) + ")"


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"(v {t.name} {print_type(t.ty)})"
    if isinstance(t, Const):
        return f"(c {t.name} {print_type(t.ty)})"
    if isinstance(t, App):
        return f"(a {print_term(t.fn)} {print_term(t.arg)})"
    return f"(l {print_term(t.var)} {print_term(t.body)})"


def print_theory(theory: Theory) -> str:
    from .hol.signature import LOGICAL_CONSTANTS

    lines = []
    for nm, n in theory.signature.type_ops.items():
        if nm not in BUILTIN_TYPE_OPS:
            lines.append(f"(typeop {nm} {n})")
    for nm, ty in theory.signature.consts.items():
        if nm not in LOGICAL_CONSTANTS:
            lines.append(f"(const {nm} {print_type(ty)})")
    for f in theory.formulas:
        body = print_term(f.prop)
        if f.role == "theorem":
            lines.append(f"(thm {f.name} (deps{''.join(' ' + d for d in f.deps)}) {body})")
        else:
            kw = "axiom" if f.role == "axiom" else "def"
            lines.append(f"({kw} {f.name} {body})")
    return "\n".join(lines) + ("\n" if lines else "")

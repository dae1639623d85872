"""Dialect-generic TPTP syntax trees.

One node family covers terms, formulas and types: a TF1 sort such as
``fun(A,B)`` is an :class:`Fn`, an arrow type is a :class:`Bin` with operator
``>``, and a type quantifier is a :class:`Quant` with ``!>``.

Names are plain strings or :class:`Sym` placeholders; placeholders are
resolved to atoms by :func:`holtptp.tptp.mangle.resolve` just before printing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union


class Dialect(str, enum.Enum):
    FOF = "fof"
    TF0 = "tf0"
    TF1 = "tf1"
    TH0 = "th0"
    TH1 = "th1"

    @property
    def keyword(self) -> str:
        return {"fof": "fof", "tf0": "tff", "tf1": "tff", "th0": "thf", "th1": "thf"}[self.value]

    @property
    def higher_order(self) -> bool:
        return self.value in ("th0", "th1")

    @property
    def polymorphic(self) -> bool:
        return self.value in ("tf1", "th1")


@dataclass(frozen=True)
class Sym:
    """A name still to be mangled. `ns` is ``atom``, ``var`` or ``name``."""

    ns: str
    key: object
    hint: str


Name = Union[str, Sym]


@dataclass(frozen=True)
class Var:
    name: Name


@dataclass(frozen=True)
class Fn:
    name: Name
    args: Tuple["Node", ...] = ()


@dataclass(frozen=True)
class Ap:
    fn: "Node"
    arg: "Node"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Not:
    body: "Node"


@dataclass(frozen=True)
class Quant:
    q: str
    vars: Tuple[Tuple[Name, Optional["Node"]], ...]
    body: "Node"


Node = Union[Var, Fn, Ap, Bin, Not, Quant]

BINARY_OPS = ("<=>", "=>", "&", "|", "=", "!=", ">", "*")
QUANTIFIERS = ("!", "?", "^", "!>")


@dataclass(frozen=True)
class TypeDecl:
    name: Name
    symbol: Name
    type: Node


@dataclass(frozen=True)
class Annotated:
    name: Name
    role: str
    formula: Node


@dataclass(frozen=True)
class TptpProblem:
    dialect: Dialect
    decls: Tuple[TypeDecl, ...] = ()
    formulas: Tuple[Annotated, ...] = ()

    @property
    def conjectures(self) -> Tuple[Annotated, ...]:
        return tuple(f for f in self.formulas if f.role == "conjecture")


# construction helpers --------------------------------------------------------

TRUE = Fn("$true")
FALSE = Fn("$false")
TTYPE = Fn("$tType")
O = Fn("$o")
I = Fn("$i")


def ap(fn: Node, *args: Node) -> Node:
    for a in args:
        fn = Ap(fn, a)
    return fn


def left_fold(op: str, items) -> Node:
    items = list(items)
    out = items[0]
    for x in items[1:]:
        out = Bin(op, out, x)
    return out


def conj(items) -> Node:
    items = list(items)
    return left_fold("&", items) if items else TRUE


def arrow(args, result: Node, curried: bool = False) -> Node:
    """``(a1 * .. * an) > r`` for first-order dialects, ``a1 > .. > r`` when curried."""
    args = list(args)
    if not args:
        return result
    if curried:
        for a in reversed(args):
            result = Bin(">", a, result)
        return result
    return Bin(">", left_fold("*", args), result)


def quant(q: str, vars_, body: Node) -> Node:
    vars_ = tuple(vars_)
    if not vars_:
        return body
    if isinstance(body, Quant) and body.q == q:
        return Quant(q, vars_ + body.vars, body.body)
    return Quant(q, vars_, body)


def walk(node: Node) -> Iterator[Node]:
    """Preorder traversal, including binder types."""
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, Fn):
            stack.extend(reversed(n.args))
        elif isinstance(n, Ap):
            stack.extend((n.arg, n.fn))
        elif isinstance(n, Bin):
            stack.extend((n.right, n.left))
        elif isinstance(n, Not):
            stack.append(n.body)
        elif isinstance(n, Quant):
            stack.append(n.body)
            stack.extend(t for _, t in reversed(n.vars) if t is not None)

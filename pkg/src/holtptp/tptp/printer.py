"""Bit-exact TPTP printing."""

from __future__ import annotations

from typing import List

from ..errors import DialectViolation
from .ast import Annotated, Ap, Bin, Dialect, Fn, Node, Not, Quant, Sym, TptpProblem, TypeDecl, Var, walk

# operators whose chains print without inner parentheses, and on which side
_LEFT_ASSOC = {"&", "|", "*"}
_RIGHT_ASSOC = {">"}


def _name(n) -> str:
    if isinstance(n, Sym):
        raise ValueError(f"unresolved symbol {n.hint!r}; run mangle.resolve first")
    return n


def _operand(t: Node, tight: bool = False) -> str:
    """Print `t` where a unitary formula/term is required; `tight` also brackets negations."""
    if isinstance(t, Quant) or (tight and isinstance(t, Not)):
        return "(" + print_node(t) + ")"
    return print_node(t)


def _chain(t: Bin) -> List[Node]:
    if t.op in _LEFT_ASSOC:
        items = []
        op = t.op
        while isinstance(t, Bin) and t.op == op:
            items.append(t.right)
            t = t.left
        items.append(t)
        return items[::-1]
    if t.op in _RIGHT_ASSOC:
        items = []
        while isinstance(t, Bin) and t.op == ">":
            items.append(t.left)
            t = t.right
        items.append(t)
        return items
    return [t.left, t.right]


def print_node(t: Node) -> str:
    if isinstance(t, Var):
        return _name(t.name)
    if isinstance(t, Fn):
        if not t.args:
            return _name(t.name)
        return _name(t.name) + "(" + ",".join(print_node(a) for a in t.args) + ")"
    if isinstance(t, Ap):
        items = []
        while isinstance(t, Ap):
            items.append(t.arg)
            t = t.fn
        items.append(t)
        return "(" + " @ ".join(_operand(x, True) for x in reversed(items)) + ")"
    if isinstance(t, Bin):
        tight = t.op in ("=", "!=")
        return "(" + f" {t.op} ".join(_operand(x, tight) for x in _chain(t)) + ")"
    if isinstance(t, Not):
        return "~ " + _operand(t.body)
    if isinstance(t, Quant):
        vs = []
        for v, ty in t.vars:
            vs.append(_name(v) if ty is None else f"{_name(v)}: {print_node(ty)}")
        return f"{t.q}[{', '.join(vs)}]: " + print_node(t.body)
    raise TypeError(f"not a node: {t!r}")


def forbidden_construct(dialect: Dialect, t: Node, in_type: bool = False):
    """The first construct in `t` that `dialect` does not allow, or None."""
    for n in walk(t):
        if isinstance(n, Ap) and not dialect.higher_order:
            return "application operator @"
        if isinstance(n, Quant):
            if n.q == "^" and not dialect.higher_order:
                return "lambda abstraction"
            if n.q == "!>" and not dialect.polymorphic:
                return "type quantifier !>"
            if dialect is Dialect.FOF and any(ty is not None for _, ty in n.vars):
                return "typed binder"
        if isinstance(n, Bin) and n.op in (">", "*") and not in_type and not dialect.higher_order:
            return f"type operator {n.op} in a formula"
        if isinstance(n, Fn) and n.name == "$tType" and not dialect.polymorphic and not in_type:
            return "$tType in a formula"
    return None


def print_decl(dialect: Dialect, d: TypeDecl) -> str:
    if dialect is Dialect.FOF:
        raise DialectViolation("FOF has no type declarations")
    bad = forbidden_construct(dialect, d.type, in_type=True)
    if bad:
        raise DialectViolation(f"{bad} in declaration of {d.symbol}")
    return f"{dialect.keyword}({_name(d.name)}, type, {_name(d.symbol)}: {print_node(d.type)})."


def print_formula(dialect: Dialect, f: Annotated) -> str:
    bad = forbidden_construct(dialect, f.formula)
    if bad:
        raise DialectViolation(f"{bad} in formula {f.name}")
    return f"{dialect.keyword}({_name(f.name)}, {f.role}, {print_node(f.formula)})."


def print_problem(problem: TptpProblem) -> str:
    if len(problem.conjectures) != 1:
        raise DialectViolation(
            f"a problem needs exactly one conjecture, found {len(problem.conjectures)}"
        )
    lines = [print_decl(problem.dialect, d) for d in problem.decls]
    lines += [print_formula(problem.dialect, f) for f in problem.formulas]
    return "\n".join(lines) + "\n"

"""Recursive-descent reader for the TPTP subset this toolkit prints.

It accepts ``fof``, ``tff`` and ``thf`` annotated formulas, ``%`` and ``/* */``
comments, and the usual infix connectives. A typed binder inside ``fof`` is
rejected as a syntax error.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple, Union

from ..errors import TptpSyntaxError
from .ast import Annotated, Ap, Bin, Dialect, Fn, Node, Not, Quant, TptpProblem, TypeDecl, Var

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*|/\*.*?\*/)
  | (?P<quoted>'(?:[^'\\]|\\.)*')
  | (?P<distinct>"(?:[^"\\]|\\.)*")
  | (?P<op><=>|<~>|=>|<=|~\||~&|!=|!>|[!?^@~&|=>*(),\[\]:.])
  | (?P<word>\$\$?[a-zA-Z0-9_]+|[a-zA-Z0-9_]+)
    """,
    re.VERBOSE | re.DOTALL,
)

_CONNECTIVES = ("<=>", "<~>", "=>", "<=", "~|", "~&", "&", "|", ">", "*")
_ASSOC = {"&", "|", "*"}
_KEYWORDS = {"fof": (Dialect.FOF,), "tff": (Dialect.TF0, Dialect.TF1), "thf": (Dialect.TH0, Dialect.TH1)}


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def tokenize(text: str) -> List[_Tok]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TptpSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind != "ws":
            out.append(_Tok(kind, tok, line, pos - line_start + 1))
        nl = tok.count("\n")
        if nl:
            line += nl
            line_start = pos + tok.rfind("\n") + 1
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.keyword = ""

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        return TptpSyntaxError(f"{msg}, found {tok.text or 'end of input'!r}", tok.line, tok.col)

    def peek(self, text: str) -> bool:
        return self.tok.kind in ("op",) and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.peek(text):
            raise self.error(f"expected {text!r}")
        t = self.tok
        self.i += 1
        return t

    def name(self) -> str:
        t = self.tok
        if t.kind in ("word", "quoted"):
            self.i += 1
            return t.text
        raise self.error("expected a name")

    # formulas ------------------------------------------------------------

    def formula(self) -> Node:
        first = self.eq_level()
        if not (self.tok.kind == "op" and self.tok.text in _CONNECTIVES):
            return first
        op = self.tok.text
        items = [first]
        while self.peek(op):
            self.i += 1
            items.append(self.eq_level())
        if self.tok.kind == "op" and self.tok.text in _CONNECTIVES:
            raise self.error(f"mixed connectives after {op!r} need parentheses")
        if op == ">":
            out = items[-1]
            for x in reversed(items[:-1]):
                out = Bin(">", x, out)
            return out
        if op not in _ASSOC and len(items) > 2:
            raise self.error(f"{op!r} is not associative")
        out = items[0]
        for x in items[1:]:
            out = Bin(op, out, x)
        return out

    def eq_level(self) -> Node:
        left = self.app_level()
        if self.peek("=") or self.peek("!="):
            op = self.tok.text
            self.i += 1
            return Bin(op, left, self.app_level())
        return left

    def app_level(self) -> Node:
        out = self.unit()
        while self.peek("@"):
            self.i += 1
            out = Ap(out, self.unit())
        return out

    def unit(self) -> Node:
        t = self.tok
        if t.kind == "op":
            if t.text == "(":
                self.i += 1
                inner = self.formula()
                self.expect(")")
                return inner
            if t.text == "~":
                self.i += 1
                return Not(self.eq_level())
            if t.text in ("!", "?", "^", "!>"):
                self.i += 1
                vs = self.binder_vars()
                self.expect(":")
                return Quant(t.text, vs, self.eq_level())
            raise self.error("expected a formula or term")
        if t.kind == "word" and t.text[0].isupper():
            self.i += 1
            return Var(t.text)
        if t.kind in ("word", "quoted", "distinct"):
            self.i += 1
            args: Tuple[Node, ...] = ()
            if self.peek("("):
                self.i += 1
                items = [self.formula()]
                while self.peek(","):
                    self.i += 1
                    items.append(self.formula())
                self.expect(")")
                args = tuple(items)
            return Fn(t.text, args)
        raise self.error("expected a formula or term")

    def binder_vars(self):
        self.expect("[")
        vs = []
        while True:
            t = self.tok
            if not (t.kind == "word" and t.text[0].isupper()):
                raise self.error("expected a variable")
            self.i += 1
            ty = None
            if self.peek(":"):
                if self.keyword == "fof":
                    raise self.error("typed binder not allowed in fof")
                self.i += 1
                ty = self.formula()
            vs.append((t.text, ty))
            if self.peek(","):
                self.i += 1
                continue
            self.expect("]")
            return tuple(vs)

    # annotated formulas -------------------------------------------------

    def skip_annotations(self):
        depth = 0
        while not (depth == 0 and self.peek(")")):
            if self.tok.kind == "eof":
                raise self.error("unterminated annotations")
            if self.peek("(") or self.peek("["):
                depth += 1
            elif self.peek("]") or (self.peek(")") and depth):
                depth -= 1
            self.i += 1

    def annotated(self):
        kw_tok = self.tok
        kw = self.name()
        if kw not in _KEYWORDS:
            raise self.error(f"unknown formula keyword {kw!r}", kw_tok)
        self.keyword = kw
        self.expect("(")
        name = self.name()
        self.expect(",")
        role = self.name()
        self.expect(",")
        if role == "type":
            depth = 0
            while self.peek("("):
                self.i += 1
                depth += 1
            sym = self.name()
            self.expect(":")
            ty = self.formula()
            for _ in range(depth):
                self.expect(")")
            item = TypeDecl(name, sym, ty)
        else:
            item = Annotated(name, role, self.formula())
        if self.peek(","):
            self.i += 1
            self.skip_annotations()
        self.expect(")")
        self.expect(".")
        return kw, item


def parse_tptp(text: str, dialect: Optional[Union[Dialect, str]] = None) -> TptpProblem:
    """Parse TPTP text. Without `dialect`, it is inferred from keywords and content."""
    p = _Parser(text)
    decls, formulas, kws = [], [], set()
    while p.tok.kind != "eof":
        kw, item = p.annotated()
        kws.add(kw)
        (decls if isinstance(item, TypeDecl) else formulas).append(item)
    if dialect is not None:
        dialect = Dialect(dialect)
    if dialect is None:
        dialect = _infer_dialect(kws, decls, formulas)
    elif kws and kws != {dialect.keyword}:
        raise TptpSyntaxError(f"{dialect.value} problem contains {sorted(kws)} lines", 1, 1)
    return TptpProblem(dialect, tuple(decls), tuple(formulas))


def _infer_dialect(kws, decls, formulas) -> Dialect:
    from .ast import walk

    if len(kws) > 1:
        raise TptpSyntaxError(f"mixed formula keywords {sorted(kws)}", 1, 1)
    kw = next(iter(kws), "fof")
    if kw == "fof":
        return Dialect.FOF
    nodes = [d.type for d in decls] + [f.formula for f in formulas]
    poly = any(isinstance(n, Quant) and n.q == "!>" for root in nodes for n in walk(root))
    if kw == "tff":
        return Dialect.TF1 if poly else Dialect.TF0
    return Dialect.TH1 if poly else Dialect.TH0

"""Expressions over a workspace.

Grammar::

    query   := setexpr [ ("<=" | "==" | "meets") setexpr ]
    setexpr := postfix { "&" postfix }  |  postfix { "|" postfix }
    postfix := atom { "^c" }
    atom    := NAME | "(" setexpr ")"
             | ("meet" | "join") "(" setexpr { "," setexpr } ")"
             | ("img" | "img:inf" | "img:sup") "(" NAME "," setexpr ")"
             | "inv" "(" NAME "," setexpr ")"

``&`` and ``|`` associate to the left; mixing them without parentheses is a
syntax error. ``meet``/``join`` are n-ary intersection/union, ``img`` uses the
fiber-infimum convention unless suffixed ``:sup``, and ``inv`` is the inverse
image. A query evaluates to an SVNSet, or to a bool when it has a predicate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import SVNSet, intersection, meets, union
from .errors import ExpressionSyntaxError, UniverseMismatch
from .maps import ImageConvention, image, inverse_image
from .workspace import Workspace

__all__ = ["evaluate", "tokenize"]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<img>img(?::(?:inf|sup))?\b)
  | (?P<comp>\^c)
  | (?P<op><=|==|&|\||\(|\)|,)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)

KEYWORDS = {"meet", "join", "inv", "meets"}
CONVENTIONS = {"img": ImageConvention.PAPER_INF, "img:inf": ImageConvention.PAPER_INF,
               "img:sup": ImageConvention.STANDARD_SUP}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(source: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", pos)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            if kind == "name" and text in KEYWORDS:
                kind = "keyword"
            out.append(Token(kind, text, pos))
        pos = m.end()
    out.append(Token("end", "", len(source)))
    return out


class _Parser:
    def __init__(self, ws: Workspace, source: str):
        self.ws = ws
        self.tokens = tokenize(source)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            found = tok.text or "end of input"
            raise ExpressionSyntaxError(f"expected {text!r}, found {found!r}", tok.pos)
        return tok

    def query(self):
        left = self.setexpr()
        tok = self.peek()
        if tok.text in ("<=", "==", "meets"):
            self.take()
            right = self.setexpr()
            _same_universe(left, right)
            result = {"<=": lambda: left <= right, "==": lambda: left == right,
                      "meets": lambda: meets(left, right)}[tok.text]()
        else:
            result = left
        end = self.peek()
        if end.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {end.text!r}", end.pos)
        return result

    def setexpr(self) -> SVNSet:
        value = self.postfix()
        op = None
        while self.peek().text in ("&", "|"):
            tok = self.take()
            if op is not None and tok.text != op:
                raise ExpressionSyntaxError("mixing '&' and '|' needs parentheses", tok.pos)
            op = tok.text
            right = self.postfix()
            _same_universe(value, right)
            value = value & right if op == "&" else value | right
        return value

    def postfix(self) -> SVNSet:
        value = self.atom()
        while self.peek().kind == "comp":
            self.take()
            value = ~value
        return value

    def atom(self) -> SVNSet:
        tok = self.take()
        if tok.text == "(":
            value = self.setexpr()
            self.expect(")")
            return value
        if tok.kind == "keyword" and tok.text in ("meet", "join"):
            self.expect("(")
            args = [self.setexpr()]
            while self.peek().text == ",":
                self.take()
                args.append(self.setexpr())
            self.expect(")")
            for a in args[1:]:
                _same_universe(args[0], a)
            return intersection(args) if tok.text == "meet" else union(args)
        if tok.kind == "img" or tok.text == "inv":
            self.expect("(")
            name = self.take()
            if name.kind != "name":
                raise ExpressionSyntaxError("expected a map name", name.pos)
            f = self.ws.map(name.text)
            self.expect(",")
            arg = self.setexpr()
            self.expect(")")
            if tok.text == "inv":
                return inverse_image(f, arg)
            return image(f, arg, CONVENTIONS[tok.text])
        if tok.kind == "name":
            return self.ws.set(tok.text)
        found = tok.text or "end of input"
        raise ExpressionSyntaxError(f"unexpected {found!r}", tok.pos)


def _same_universe(a: SVNSet, b: SVNSet):
    if a.universe != b.universe:
        raise UniverseMismatch("operands live over different universes")


def evaluate(ws: Workspace, expression: str):
    """Evaluate ``expression`` against ``ws``; returns an SVNSet or a bool."""
    return _Parser(ws, expression).query()

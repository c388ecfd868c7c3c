"""Concrete syntax: parser with offset-annotated errors and a canonical printer.

    expr     := term (("+" | "-") term)*
    term     := [integer "*"] chain
    chain    := layer (";" layer)*            bottom to top
    layer    := "[" halfgens ("|" axisgen)? "]"  |  "[" axisgen "]"
    halfgens := (halfgen ("," halfgen)*)?
"""
from __future__ import annotations

import re

from ..hypercomb import HYPER, SymmetryMode
from .diagram import Chain, DiagramError, DiagramExpr, Generator, InterfaceError, Kind, Layer


class DiagramSyntaxError(DiagramError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>ID|id|[msxMSX])|(?P<punct>[\[\]\(\),|;+*-]))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise DiagramSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, mode: SymmetryMode):
        self.tokens = _tokenize(text)
        self.i = 0
        self.mode = mode

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None, kind=None):
        tok = self.tokens[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DiagramSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> DiagramExpr:
        chains = [self.term(1)]
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            chains.append(self.term(sign))
        self.take(kind="end")
        try:
            return DiagramExpr(tuple(chains), self.mode)
        except InterfaceError as exc:
            raise InterfaceError(f"{exc}", exc.layer_index, exc.below, exc.above) from None

    def term(self, sign: int) -> Chain:
        coeff = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -sign
        if self.peek()[0] == "int":
            coeff = int(self.take()[1])
            self.take("*")
        start = self.peek()[2]
        layers = [self.layer()]
        while self.peek()[1] == ";":
            self.take()
            layers.append(self.layer())
        try:
            return Chain(sign * coeff, tuple(layers))
        except InterfaceError as exc:
            raise InterfaceError(
                f"{exc} (chain starting at offset {start})", exc.layer_index, exc.below, exc.above
            ) from None

    def layer(self) -> Layer:
        open_tok = self.take("[")
        left, axis = [], None
        if self.peek()[1] not in ("|", "]"):
            g, off = self.generator()
            if g.on_axis:
                axis = g
            else:
                left.append(g)
                while self.peek()[1] == ",":
                    self.take()
                    g, off = self.generator()
                    if g.on_axis:
                        raise DiagramSyntaxError(f"axis generator {g} must follow '|'", off)
                    left.append(g)
        if axis is None and self.peek()[1] == "|":
            self.take()
            axis, off = self.generator()
            if not axis.on_axis:
                raise DiagramSyntaxError(f"{axis} after '|' is not an axis generator", off)
        self.take("]")
        try:
            return Layer(tuple(left), axis, self.mode)
        except DiagramError as exc:
            raise DiagramSyntaxError(str(exc), open_tok[2]) from None

    def generator(self):
        name_tok = self.take(kind="name")
        self.take("(")
        args = [int(self.take(kind="int")[1])]
        while self.peek()[1] == ",":
            self.take()
            args.append(int(self.take(kind="int")[1]))
        self.take(")")
        try:
            return Generator(Kind(name_tok[1]), tuple(args)), name_tok[2]
        except DiagramError as exc:
            raise DiagramSyntaxError(str(exc), name_tok[2]) from None


def parse(text: str, mode=HYPER) -> DiagramExpr:
    return _Parser(text, SymmetryMode.parse(mode)).expr()


def format_chain(chain: Chain) -> str:
    body = chain.body()
    return body if chain.coefficient == 1 else f"{chain.coefficient}*{body}"


def format_expr(d: DiagramExpr) -> str:
    if not d.chains:
        return "0"
    out = []
    for n, ch in enumerate(d.chains):
        c = ch.coefficient
        body = ch.body() if abs(c) == 1 else f"{abs(c)}*{ch.body()}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


format = format_expr

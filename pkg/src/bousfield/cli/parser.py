"""Tokenizer and recursive-descent parser for the expression language.

Grammar (lowest to highest precedence)::

    expr   := sum (("<=" | "==") sum)?
    sum    := prod ("+" prod)*              join
    prod   := setop ("*" setop)*            smash
    setop  := unary (("|" | "&") unary)*    set union / intersection
    unary  := "~" unary | atom              set complement
    atom   := "t(" natinf "," expr ")" | "j(" natw "," expr ")" | "k(" expr ")"
            | "@" NAME ("(" natw ")")?
            | "{" (item ("," item)* ","?)? "}" | "[" nat "," natinf "]" | "N"
            | "per(" nat "," nat "," "{" residues "}" ("," "inf")? ")"
            | FN "(" args ")" | "(" expr ")"

``theta`` separates its three arguments with ";": ``theta(A; qmin; shape)``
where qmin is a head value or ``none`` and shape is ``empty``,
``unbounded`` or the largest j-head.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from ..catalog import has_name
from ..indexsets import INF, OMEGA


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.message = message
        self.pos = pos

    def __str__(self):
        return f"syntax error at offset {self.pos}: {self.message}"


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class SetItems:
    items: tuple
    pos: int


@dataclass(frozen=True)
class SetInterval:
    lo: int
    hi: object
    pos: int


@dataclass(frozen=True)
class SetFull:
    pos: int


@dataclass(frozen=True)
class SetPeriodic:
    start: int
    period: int
    residues: tuple
    infinity: bool
    pos: int


@dataclass(frozen=True)
class SetOp:
    op: str  # "|", "&", "~"
    args: tuple
    pos: int


@dataclass(frozen=True)
class ElemLit:
    kind: str
    head: object
    tail: "Ast"
    pos: int


@dataclass(frozen=True)
class CatalogRef:
    name: str
    param: object
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # "join" | "smash"
    left: "Ast"
    right: "Ast"
    pos: int


@dataclass(frozen=True)
class Rel:
    op: str  # "leq" | "eq"
    left: "Ast"
    right: "Ast"
    pos: int


@dataclass(frozen=True)
class ThetaArgs:
    A: "Ast"
    q_min: object
    shape: object  # "empty" | "unbounded" | head value
    pos: int


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    pos: int


Ast = Union[SetItems, SetInterval, SetFull, SetPeriodic, SetOp, ElemLit,
            CatalogRef, BinOp, Rel, Call]

# name -> (min args, max args); None means variadic
FUNCTIONS = {
    "neg": (1, 1),
    "heyting": (2, 2),
    "comp": (1, 1),
    "idem": (1, 1),
    "bool": (1, 1),
    "sigma": (1, 1),
    "reconstruct": (1, 3),
    "proj": (2, 2),
    "theta": (1, 1),
    "sup": (0, None),
    "tail": (1, 1),
    "head": (1, 1),
    "classify": (1, 1),
    "catalog": (0, 0),
}


# -- tokens ---------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>@[A-Za-z0-9_'/^\-]+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><=|==|[+*|&~(){}\[\],;])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "num" | "name" | "word" | "op" | "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if match.lastgroup != "ws":
            tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- parser ---------------------------------------------------------------------


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def error(self, expected: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", tok.pos)

    def accept(self, text: str) -> Optional[Token]:
        if self.tok.kind in ("op", "word") and self.tok.text == text:
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        tok = self.accept(text)
        if tok is None:
            self.error(repr(text))
        return tok

    # -- numbers

    def nat(self) -> int:
        if self.tok.kind != "num":
            self.error("a natural number")
        return int(self.advance().text)

    def head(self, allow_omega: bool):
        if self.tok.kind == "num":
            return int(self.advance().text)
        if self.accept("inf"):
            return INF
        if allow_omega and self.accept("w"):
            return OMEGA
        self.error("a natural number, 'w' or 'inf'" if allow_omega
                   else "a natural number or 'inf'")

    # -- grammar

    def parse(self) -> Ast:
        node = self.expr()
        if self.tok.kind != "end":
            self.error("an operator or end of input")
        return node

    def expr(self) -> Ast:
        left = self.sum()
        for op, name in (("<=", "leq"), ("==", "eq")):
            tok = self.accept(op)
            if tok:
                return Rel(name, left, self.sum(), tok.pos)
        return left

    def sum(self) -> Ast:
        node = self.prod()
        while (tok := self.accept("+")):
            node = BinOp("join", node, self.prod(), tok.pos)
        return node

    def prod(self) -> Ast:
        node = self.setop()
        while (tok := self.accept("*")):
            node = BinOp("smash", node, self.setop(), tok.pos)
        return node

    def setop(self) -> Ast:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "|&":
            tok = self.advance()
            node = SetOp(tok.text, (node, self.unary()), tok.pos)
        return node

    def unary(self) -> Ast:
        if (tok := self.accept("~")):
            return SetOp("~", (self.unary(),), tok.pos)
        return self.atom()

    def atom(self) -> Ast:
        tok = self.tok
        if tok.kind == "op":
            if tok.text == "(":
                self.advance()
                node = self.expr()
                self.expect(")")
                return node
            if tok.text == "{":
                return self.set_items()
            if tok.text == "[":
                return self.interval()
        elif tok.kind == "name":
            return self.catalog_ref()
        elif tok.kind == "word":
            return self.word()
        self.error("an expression")

    def set_items(self) -> SetItems:
        start = self.expect("{")
        items = []
        while not self.accept("}"):
            if items and not self.accept(","):
                self.error("',' or '}'")
            if items and self.accept("}"):
                break
            items.append(self.head(allow_omega=False))
        return SetItems(tuple(items), start.pos)

    def interval(self) -> SetInterval:
        start = self.expect("[")
        lo = self.nat()
        self.expect(",")
        hi = self.head(allow_omega=False)
        self.expect("]")
        return SetInterval(lo, hi, start.pos)

    def catalog_ref(self) -> CatalogRef:
        tok = self.advance()
        name = tok.text[1:]
        if not has_name(name):
            raise ParseError(f"unknown catalog name {name!r}", tok.pos)
        param = None
        if self.accept("("):
            param = self.head(allow_omega=True)
            self.expect(")")
        return CatalogRef(name, param, tok.pos)

    def word(self) -> Ast:
        tok = self.advance()
        word = tok.text
        if word == "N":
            return SetFull(tok.pos)
        if word in ("t", "j"):
            self.expect("(")
            head = self.head(allow_omega=(word == "j"))
            self.expect(",")
            tail = self.expr()
            self.expect(")")
            return ElemLit(word, head, tail, tok.pos)
        if word == "k":
            self.expect("(")
            tail = self.expr()
            self.expect(")")
            return ElemLit("k", None, tail, tok.pos)
        if word == "per":
            return self.periodic(tok)
        if word == "theta":
            return self.theta(tok)
        if word not in FUNCTIONS:
            raise ParseError(f"unknown function {word!r}", tok.pos)
        self.expect("(")
        args = []
        if not self.accept(")"):
            args.append(self.expr())
            while self.accept(","):
                args.append(self.expr())
            self.expect(")")
        lo, hi = FUNCTIONS[word]
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = f"{lo}" if lo == hi else f"{lo}..{hi if hi is not None else 'n'}"
            raise ParseError(f"{word} takes {want} argument(s), got {len(args)}", tok.pos)
        return Call(word, tuple(args), tok.pos)

    def periodic(self, tok: Token) -> SetPeriodic:
        self.expect("(")
        start = self.nat()
        self.expect(",")
        period_tok = self.tok
        period = self.nat()
        if period == 0:
            raise ParseError("period must be positive", period_tok.pos)
        self.expect(",")
        self.expect("{")
        residues = []
        while not self.accept("}"):
            if residues:
                self.expect(",")
            residues.append(self.nat())
        infinity = False
        if self.accept(","):
            self.expect("inf")
            infinity = True
        self.expect(")")
        return SetPeriodic(start, period, tuple(residues), infinity, tok.pos)

    def theta(self, tok: Token) -> Call:
        self.expect("(")
        A = self.expr()
        self.expect(";")
        q_min = None if self.accept("none") else self.head(allow_omega=False)
        self.expect(";")
        if self.accept("empty"):
            shape = "empty"
        elif self.accept("unbounded"):
            shape = "unbounded"
        else:
            shape = self.head(allow_omega=True)
        self.expect(")")
        return Call("theta", (ThetaArgs(A, q_min, shape, tok.pos),), tok.pos)


def parse(text: str) -> Ast:
    return Parser(text).parse()

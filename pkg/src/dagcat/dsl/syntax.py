"""Morphism expressions: AST, parser and printer.

Grammar::

    program := { decl NEWLINE } [ expr ]
    decl    := "obj" IDENT { IDENT } | "gen" IDENT ":" objexpr "->" objexpr
    expr    := term { ";" term }          # f ; g  means  g o f
    term    := factor { "*" factor }      # tensor binds tighter
    factor  := IDENT | "id" "[" objexpr "]" | "dag" "(" expr ")" | "(" expr ")"
    objexpr := objatom { "*" objatom }
    objatom := IDENT | NUMBER | "I"       # NUMBER k is k circles, I and 0 the unit

Objects are flat tuples of atom names.  A circle is the atom ``CIRCLE``,
which cannot clash with an identifier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Optional

CIRCLE = "#"
UNIT_NAME = "I"
KEYWORDS = {"obj", "gen", "id", "dag"}

Obj = tuple  # tuple[str, ...]


class ParseError(SyntaxError):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.line, self.col, self.expected = line, col, tuple(sorted(expected))
        text = f"line {line}, column {col}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Span:
    line: int
    col: int


@dataclass(frozen=True)
class Term:
    # annotations and positions are not part of term identity
    dom: Optional[Obj] = field(default=None, compare=False, kw_only=True)
    cod: Optional[Obj] = field(default=None, compare=False, kw_only=True)
    span: Optional[Span] = field(default=None, compare=False, kw_only=True, repr=False)

    @property
    def annotated(self) -> bool:
        return self.dom is not None and self.cod is not None


@dataclass(frozen=True)
class Gen(Term):
    name: str


@dataclass(frozen=True)
class Id(Term):
    obj: Obj


@dataclass(frozen=True)
class Compose(Term):
    first: Term
    then: Term


@dataclass(frozen=True)
class Tensor(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Dagger(Term):
    term: Term


@dataclass
class Signature:
    atoms: set = field(default_factory=set)
    generators: dict = field(default_factory=dict)  # name -> (dom, cod)

    def declare_atom(self, name: str) -> None:
        self.atoms.add(name)

    def declare(self, name: str, dom: Obj, cod: Obj) -> None:
        if name in self.generators:
            raise SignatureError(f"generator {name!r} declared twice")
        for a in dom + cod:
            if a != CIRCLE and a not in self.atoms:
                raise SignatureError(f"generator {name!r} uses undeclared object {a!r}")
        self.generators[name] = (tuple(dom), tuple(cod))

    def merged(self, other: "Signature") -> "Signature":
        sig = Signature(set(self.atoms) | set(other.atoms), dict(self.generators))
        for name, (d, c) in other.generators.items():
            sig.declare(name, d, c)
        return sig


def cob_signature() -> Signature:
    sig = Signature()
    for name, (a, b) in {"cup": (0, 1), "cap": (1, 0), "pants": (2, 1),
                         "copants": (1, 2), "swap": (2, 2)}.items():
        sig.declare(name, (CIRCLE,) * a, (CIRCLE,) * b)
    return sig


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<comment>\#[^\n]*) | (?P<newline>\n)
  | (?P<arrow>->) | (?P<number>\d+) | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[;*()\[\]:])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, number, punct, newline, eof
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens, pos, line, line_start = [], 0, 1, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "newline":
            tokens.append(Token("newline", "\n", line, col))
            line, line_start = line + 1, m.end()
        elif kind in ("ident", "number"):
            tokens.append(Token(kind, m.group(), line, col))
        elif kind in ("arrow", "punct"):
            tokens.append(Token("punct", m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, len(source) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0
        self.skip_newlines = False

    def peek(self) -> Token:
        if self.skip_newlines:
            while self.tokens[self.pos].kind == "newline":
                self.pos += 1
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, expected) -> None:
        tok = self.peek()
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"unexpected {got}", tok.line, tok.col, expected)

    def expect(self, text: str) -> Token:
        if self.peek().text != text or self.peek().kind not in ("punct", "ident"):
            self.fail({repr(text)})
        return self.advance()

    def ident(self) -> Token:
        tok = self.peek()
        if tok.kind != "ident" or tok.text in KEYWORDS:
            self.fail({"identifier"})
        return self.advance()

    def program(self) -> tuple[Signature, Optional[Term]]:
        sig = Signature()
        while True:
            tok = self.peek()
            if tok.kind == "newline":
                self.advance()
            elif tok.kind == "ident" and tok.text == "obj":
                self.advance()
                sig.declare_atom(self.ident().text)
                while self.peek().kind == "ident":
                    sig.declare_atom(self.ident().text)
                self.end_of_decl()
            elif tok.kind == "ident" and tok.text == "gen":
                self.advance()
                name = self.ident()
                self.expect(":")
                dom = self.objexpr()
                self.expect("->")
                cod = self.objexpr()
                try:
                    sig.declare(name.text, dom, cod)
                except SignatureError as exc:
                    raise ParseError(str(exc), name.line, name.col) from None
                self.end_of_decl()
            else:
                break
        if self.peek().kind == "eof":
            return sig, None
        self.skip_newlines = True
        term = self.expr()
        if self.peek().kind != "eof":
            self.fail({"';'", "'*'", "end of input"})
        return sig, term

    def end_of_decl(self) -> None:
        if self.peek().kind not in ("newline", "eof"):
            self.fail({"end of line"})

    def objexpr(self) -> Obj:
        atoms = self.objatom()
        while self.peek().text == "*":
            self.advance()
            atoms += self.objatom()
        return atoms

    def objatom(self) -> Obj:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return (CIRCLE,) * int(tok.text)
        if tok.kind == "ident" and tok.text not in KEYWORDS:
            self.advance()
            return () if tok.text == UNIT_NAME else (tok.text,)
        self.fail({"object name", "circle count", "'I'"})

    def expr(self) -> Term:
        start = self.peek()
        term = self.term()
        while self.peek().text == ";" and self.peek().kind == "punct":
            self.advance()
            term = Compose(term, self.term(), span=Span(start.line, start.col))
        return term

    def term(self) -> Term:
        start = self.peek()
        term = self.factor()
        while self.peek().text == "*" and self.peek().kind == "punct":
            self.advance()
            term = Tensor(term, self.factor(), span=Span(start.line, start.col))
        return term

    def factor(self) -> Term:
        tok = self.peek()
        span = Span(tok.line, tok.col)
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "ident" and tok.text == "id":
            self.advance()
            self.expect("[")
            obj = self.objexpr()
            self.expect("]")
            return Id(obj, span=span)
        if tok.kind == "ident" and tok.text == "dag":
            self.advance()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Dagger(inner, span=span)
        if tok.kind == "ident" and tok.text not in KEYWORDS:
            self.advance()
            return Gen(tok.text, span=span)
        self.fail({"generator name", "'id'", "'dag'", "'('"})


def parse(source: str) -> tuple[Signature, Optional[Term]]:
    """Parse declarations followed by an optional expression."""
    return _Parser(source).program()


def parse_expr(source: str) -> Term:
    sig, term = parse(source)
    if term is None:
        raise ParseError("expected an expression", 1, 1)
    if sig.atoms or sig.generators:
        raise ParseError("declarations are not allowed in an expression", 1, 1)
    return term


def parse_signature(source: str) -> Signature:
    sig, term = parse(source)
    if term is not None:
        raise ParseError("unexpected expression in signature file",
                         term.span.line if term.span else 1,
                         term.span.col if term.span else 1)
    return sig


def show_object(obj: Obj) -> str:
    if not obj:
        return UNIT_NAME
    if all(a == CIRCLE for a in obj):
        return str(len(obj))
    return " * ".join(str(len([a])) if a == CIRCLE else a for a in obj)


def to_source(term: Term, unicode: bool = False) -> str:
    """Print ``term`` so that parsing the result gives the same term.

    ``unicode=True`` renders composition in applicative order with ``∘`` and
    uses ``⊗`` and ``†``; that form is for display only.
    """
    if unicode:
        return _show_unicode(term)
    if isinstance(term, Gen):
        return term.name
    if isinstance(term, Id):
        return f"id[{show_object(term.obj)}]"
    if isinstance(term, Dagger):
        return f"dag({to_source(term.term)})"
    if isinstance(term, Compose):
        right = to_source(term.then)
        if isinstance(term.then, Compose):
            right = f"({right})"
        return f"{to_source(term.first)} ; {right}"
    if isinstance(term, Tensor):
        left, right = to_source(term.left), to_source(term.right)
        if isinstance(term.left, Compose):
            left = f"({left})"
        if isinstance(term.right, (Compose, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not a term: {term!r}")


def _show_unicode(term: Term) -> str:
    if isinstance(term, Gen):
        return term.name
    if isinstance(term, Id):
        return f"1[{show_object(term.obj)}]"
    if isinstance(term, Dagger):
        inner = _show_unicode(term.term)
        return f"{inner}†" if isinstance(term.term, (Gen, Id)) else f"({inner})†"
    if isinstance(term, Compose):
        return f"({_show_unicode(term.then)} ∘ {_show_unicode(term.first)})"
    return f"({_show_unicode(term.left)} ⊗ {_show_unicode(term.right)})"


def strip(term: Term) -> Term:
    """Drop annotations (not positions)."""
    kids = {}
    if isinstance(term, Compose):
        kids = {"first": strip(term.first), "then": strip(term.then)}
    elif isinstance(term, Tensor):
        kids = {"left": strip(term.left), "right": strip(term.right)}
    elif isinstance(term, Dagger):
        kids = {"term": strip(term.term)}
    return replace(term, dom=None, cod=None, **kids)

"""Spec-file language for algebras, derivations and named elements.

Grammar (whitespace-insensitive, ``#`` starts a line comment)::

    spec       := stmt*
    stmt       := algebra | derivation | letdef
    algebra    := "algebra" IDENT "{" "even" IDENT* ";" "odd" IDENT* ";" "}"
    derivation := "derivation" IDENT ("even"|"odd") "on" IDENT "{" (IDENT "->" expr ";")* "}"
    letdef     := "let" IDENT "=" expr ";"
    expr       := ["-"] term (("+"|"-") term)*
    term       := factor ("*" factor)*
    factor     := RATIONAL | IDENT ("^" NAT)? | "(" expr ")"

A ``let`` is evaluated in the most recently declared algebra. Multiplication
is always explicit, so multi-character generator names are unambiguous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import AlgebraSignature, Element
from .derivations import Derivation
from .errors import DSLSyntaxError, ParityError, SuperAlgebraError

KEYWORDS = {"algebra", "even", "odd", "derivation", "on", "let"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>\#[^\n]*)|(?P<arrow>->)|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[{};=+\-*^()/])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | int | sym | eof
    text: str
    line: int
    column: int


def tokenize(text: str) -> list:
    tokens, pos, line, col = [], 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind, chunk = m.lastgroup, m.group()
        if kind == "arrow":
            kind = "sym"
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass
class SpecModel:
    algebras: dict = field(default_factory=dict)
    derivations: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)  # name -> Element
    default_algebra: str | None = None

    def algebra(self, name: str | None = None) -> AlgebraSignature:
        if name is None:
            if self.default_algebra is None:
                raise SuperAlgebraError("spec declares no algebra")
            name = self.default_algebra
        try:
            return self.algebras[name]
        except KeyError:
            raise SuperAlgebraError(f"unknown algebra {name!r}") from None

    def derivation(self, name: str) -> Derivation:
        try:
            return self.derivations[name]
        except KeyError:
            raise SuperAlgebraError(f"unknown derivation {name!r}") from None

    def parse_expr(self, text: str, algebra: str | None = None) -> Element:
        sig = self.algebra(algebra)
        parser = _Parser(tokenize(text), self)
        value = parser.expr(sig)
        parser.expect_eof()
        return value


class _Parser:
    def __init__(self, tokens, model: SpecModel):
        self.tokens = tokens
        self.pos = 0
        self.model = model

    # -- token helpers ---------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message, *expected, tok=None):
        tok = tok or self.tok
        raise DSLSyntaxError(message, tok.line, tok.column, expected)

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def at(self, text) -> bool:
        return self.tok.kind in ("sym", "ident") and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            self.error(f"unexpected {self.tok.text or 'end of input'!r}", repr(text))
        return self.advance()

    def ident(self, what="identifier") -> Token:
        tok = self.tok
        if tok.kind != "ident" or tok.text in KEYWORDS:
            self.error(f"unexpected {tok.text or 'end of input'!r}", what)
        return self.advance()

    def expect_eof(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}", "end of input")

    # -- statements ------------------------------------------------------
    def spec(self) -> SpecModel:
        while self.tok.kind != "eof":
            if self.at("algebra"):
                self.algebra()
            elif self.at("derivation"):
                self.derivation()
            elif self.at("let"):
                self.letdef()
            else:
                self.error(f"unexpected {self.tok.text!r}", "'algebra'", "'derivation'", "'let'")
        return self.model

    def _claim(self, tok: Token, generators=()):
        m = self.model
        if tok.text in m.algebras or tok.text in m.derivations or tok.text in m.elements \
                or tok.text in generators:
            self.error(f"duplicate name {tok.text!r}", tok=tok)

    def algebra(self):
        self.expect("algebra")
        name = self.ident("algebra name")
        self._claim(name)
        self.expect("{")
        self.expect("even")
        even = self._names(";")
        self.expect(";")
        self.expect("odd")
        odd = self._names(";")
        self.expect(";")
        self.expect("}")
        seen = set()
        for tok in even + odd:
            if tok.text in seen:
                self.error(f"duplicate generator {tok.text!r}", tok=tok)
            seen.add(tok.text)
        sig = AlgebraSignature(tuple(t.text for t in even), tuple(t.text for t in odd), name.text)
        self.model.algebras[name.text] = sig
        self.model.default_algebra = name.text

    def _names(self, stop) -> list:
        out = []
        while not self.at(stop):
            out.append(self.ident("generator name"))
        return out

    def derivation(self):
        self.expect("derivation")
        name = self.ident("derivation name")
        self._claim(name)
        if self.at("even") or self.at("odd"):
            parity = 0 if self.advance().text == "even" else 1
        else:
            self.error(f"unexpected {self.tok.text!r}", "'even'", "'odd'")
        self.expect("on")
        alg_tok = self.ident("algebra name")
        if alg_tok.text not in self.model.algebras:
            self.error(f"unknown algebra {alg_tok.text!r}", tok=alg_tok)
        sig = self.model.algebras[alg_tok.text]
        self.expect("{")
        images = {}
        while not self.at("}"):
            gen = self.ident("generator name")
            if gen.text not in sig.generators:
                self.error(f"unknown generator {gen.text!r} in algebra {sig.name}", tok=gen)
            if gen.text in images:
                self.error(f"duplicate image for {gen.text!r}", tok=gen)
            self.expect("->")
            start = self.tok
            img = self.expr(sig)
            self.expect(";")
            try:
                Derivation(sig, parity, {gen.text: img}, name=name.text)
            except ParityError:
                want = (sig.generator_parity(gen.text) + parity) % 2
                self.error(
                    f"image parity violates |image| = |{gen.text}| + |{name.text}| "
                    f"(image must be {'odd' if want else 'even'})",
                    tok=start,
                )
            images[gen.text] = img
        self.expect("}")
        self.model.derivations[name.text] = Derivation(sig, parity, images, name=name.text)

    def letdef(self):
        self.expect("let")
        name = self.ident("element name")
        if self.model.default_algebra is None:
            self.error("'let' before any algebra declaration", tok=name)
        self._claim(name, self.model.algebra().generators)
        self.expect("=")
        value = self.expr(self.model.algebra())
        self.expect(";")
        self.model.elements[name.text] = value

    # -- expressions -----------------------------------------------------
    def expr(self, sig) -> Element:
        negate = False
        if self.at("-"):
            self.advance()
            negate = True
        value = self.term(sig)
        if negate:
            value = -value
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term(sig)
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self, sig) -> Element:
        value = self.factor(sig)
        while self.at("*"):
            self.advance()
            value = value * self.factor(sig)
        return value

    def factor(self, sig) -> Element:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            if self.at("/"):
                self.advance()
                den = self.tok
                if den.kind != "int" or int(den.text) == 0:
                    self.error("denominator must be a positive integer", "positive integer")
                self.advance()
                return sig.scalar(Fraction(num, int(den.text)))
            return sig.scalar(num)
        if self.at("("):
            self.advance()
            value = self.expr(sig)
            self.expect(")")
            return value
        if tok.kind == "ident" and tok.text not in KEYWORDS:
            self.advance()
            value = self._resolve(tok, sig)
            if self.at("^"):
                self.advance()
                exp = self.tok
                if exp.kind != "int":
                    self.error("exponent must be a natural number", "natural number")
                self.advance()
                value = value ** int(exp.text)
            return value
        self.error(f"unexpected {tok.text or 'end of input'!r}", "number", "identifier", "'('")

    def _resolve(self, tok: Token, sig) -> Element:
        if tok.text in sig.generators:
            return sig.gen(tok.text)
        elem = self.model.elements.get(tok.text)
        if elem is not None and elem.signature == sig:
            return elem
        self.error(f"unknown generator or element {tok.text!r} in algebra {sig.name}", tok=tok)


def parse_spec(text: str) -> SpecModel:
    return _Parser(tokenize(text), SpecModel()).spec()


def format_element(value: Element) -> str:
    """DSL expression text; re-parsing it gives back ``value``."""
    return str(value)

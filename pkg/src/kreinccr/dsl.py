"""A small expression language for algebra elements.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' uint)?
    atom   := number | symbol | '(' expr ')'
    number := rational ['i']          (rational = integer, p/q, or decimal)
    symbol := 'z' | 'd' | 'a' | 'a*' | 'a_'uint | 'a_'uint'*'

Juxtaposition means product.  The '*' in 'a*' binds to the symbol by
longest match: ``a* a`` is a product of two generators, while ``a * a``
is ``a`` times ``a``.  The printer emits exactly this grammar, so
``parse(print(ast)) == ast``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import HEISENBERG, HOLOMORPHIC, AlgebraElement, multimode_set
from .exact import ExactScalar
from .exceptions import IncompatibleAlgebras, ParseError

MAX_INPUT = 64 * 1024


# -- AST ---------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    imag: bool = False


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Pow:
    base: object       # Num | Sym | Group
    exponent: int


@dataclass(frozen=True)
class Prod:
    factors: tuple     # length >= 2


@dataclass(frozen=True)
class Sum:
    head: object
    tail: tuple        # of ('+'|'-', node), length >= 1


@dataclass(frozen=True)
class Group:
    inner: object


# -- tokenizer ---------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(\d+/\d+|\d+\.\d+|\.\d+|\d+)i?)
  | (?P<symbol>a_\d+\*?|a\*?|z|d)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str   # "number" | "symbol" | one of + - * ^ ( ) | "end"
    text: str
    offset: int


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             offset=pos, expected=("number", "symbol", "operator"))
        if m.lastgroup != "ws":
            kind = m.lastgroup if m.lastgroup != "op" else m.group()
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _number_value(text):
    imag = text.endswith("i")
    if imag:
        text = text[:-1]
    return Fraction(text), imag


# -- parser ------------------------------------------------------------

_ATOM_START = ("number", "symbol", "(")


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.cur
        self.i += 1
        return t

    def expect(self, kind):
        if self.cur.kind != kind:
            raise ParseError(f"expected {kind!r}, found {self.cur.text or 'end of input'!r}",
                             offset=self.cur.offset, expected=(kind,))
        return self.advance()

    def expr(self):
        head = self.term()
        tail = []
        while self.cur.kind in ("+", "-"):
            op = self.advance().kind
            tail.append((op, self.term()))
        if not tail:
            return head
        return Sum(head, tuple(tail))

    def term(self):
        factors = [self.factor()]
        while True:
            if self.cur.kind == "*":
                self.advance()
                factors.append(self.factor())
            elif self.cur.kind in _ATOM_START:
                factors.append(self.factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Prod(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.cur.kind == "^":
            self.advance()
            t = self.cur
            if t.kind != "number" or not t.text.isdigit():
                raise ParseError("expected a nonnegative integer exponent",
                                 offset=t.offset, expected=("uint",))
            self.advance()
            return Pow(base, int(t.text))
        return base

    def atom(self):
        t = self.cur
        if t.kind == "number":
            self.advance()
            value, imag = _number_value(t.text)
            return Num(value, imag)
        if t.kind == "symbol":
            self.advance()
            return Sym(t.text)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        raise ParseError(f"expected an atom, found {t.text or 'end of input'!r}",
                         offset=t.offset, expected=_ATOM_START)


def parse_expr(text: str):
    """Parse the expression grammar into an AST."""
    if len(text.encode()) > MAX_INPUT:
        raise ParseError("input exceeds 64 KiB", offset=MAX_INPUT, expected=())
    p = _Parser(_tokenize(text))
    ast = p.expr()
    if p.cur.kind != "end":
        raise ParseError(f"trailing input {p.cur.text!r}",
                         offset=p.cur.offset, expected=("end",))
    return ast


# -- printer -----------------------------------------------------------

def print_expr(ast) -> str:
    """Inverse of parse_expr on grammar-shaped ASTs."""
    if isinstance(ast, Num):
        return f"{ast.value}i" if ast.imag else str(ast.value)
    if isinstance(ast, Sym):
        return ast.name
    if isinstance(ast, Pow):
        return f"{print_expr(ast.base)}^{ast.exponent}"
    if isinstance(ast, Prod):
        return " ".join(print_expr(f) for f in ast.factors)
    if isinstance(ast, Sum):
        out = print_expr(ast.head)
        for op, node in ast.tail:
            out += f" {op} {print_expr(node)}"
        return out
    if isinstance(ast, Group):
        return f"({print_expr(ast.inner)})"
    raise TypeError(f"not an AST node: {ast!r}")


# -- evaluation --------------------------------------------------------

def symbols_of(ast):
    if isinstance(ast, Sym):
        return {ast.name}
    if isinstance(ast, Pow):
        return symbols_of(ast.base)
    if isinstance(ast, Prod):
        return set().union(*(symbols_of(f) for f in ast.factors))
    if isinstance(ast, Sum):
        out = symbols_of(ast.head)
        for _, node in ast.tail:
            out |= symbols_of(node)
        return out
    if isinstance(ast, Group):
        return symbols_of(ast.inner)
    return set()


def infer_generators(ast, eta=None):
    """Pick the generator set implied by the symbols in the expression."""
    syms = symbols_of(ast)
    holo = any(s in ("z", "d") for s in syms)
    heis = any(s in ("a", "a*") for s in syms)
    multi = any(s.startswith("a_") for s in syms)
    if holo + heis + multi > 1:
        raise IncompatibleAlgebras(
            "expression mixes generators from different algebras")
    if multi:
        return multimode_set(eta or {})
    if heis:
        return HEISENBERG
    return HOLOMORPHIC


def to_element(ast, gens=None, eta=None) -> AlgebraElement:
    """Evaluate an AST into an algebra element (exact coefficients)."""
    if gens is None:
        gens = infer_generators(ast, eta)
    return _eval(ast, gens)


def _eval(ast, gens):
    if isinstance(ast, Num):
        c = ExactScalar(0, 0, ast.value) if ast.imag else ExactScalar(ast.value)
        return AlgebraElement.scalar(gens, c)
    if isinstance(ast, Sym):
        return AlgebraElement.generator(gens, ast.name)
    if isinstance(ast, Pow):
        return _eval(ast.base, gens) ** ast.exponent
    if isinstance(ast, Prod):
        out = _eval(ast.factors[0], gens)
        for f in ast.factors[1:]:
            out = out * _eval(f, gens)
        return out
    if isinstance(ast, Sum):
        out = _eval(ast.head, gens)
        for op, node in ast.tail:
            rhs = _eval(node, gens)
            out = out + rhs if op == "+" else out - rhs
        return out
    if isinstance(ast, Group):
        return _eval(ast.inner, gens)
    raise TypeError(f"not an AST node: {ast!r}")

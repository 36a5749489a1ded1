"""Prenex existential sentences over the vocabulary {<=, =}.

Grammar (operators by decreasing precedence: ! then & then |):

    sentence := quantifier* matrix
    quantifier := 'E' IDENT '.'
    matrix   := or
    or       := and ('|' and)*
    and      := unary ('&' unary)*
    unary    := '!' unary | '(' or ')' | atom
    atom     := IDENT ('<=' | '=') IDENT

'E' and 'A' are reserved words.  A universal quantifier ('A') is rejected.
Negation may appear anywhere in the input; the parsed matrix is normalised
to negation normal form (negations on atoms only), which is the shape every
other module relies on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

from .errors import FormulaSyntaxError, FreeVariable, UnboundVariable, UnsupportedQuantifier
from .poset import Poset


class AtomKind(Enum):
    Leq = "<="
    Eq = "="


@dataclass(frozen=True)
class Variable:
    name: str
    index: int


@dataclass(frozen=True)
class Lit:
    kind: AtomKind
    left: str
    right: str
    negated: bool = False


@dataclass(frozen=True)
class And:
    items: tuple["Matrix", ...]


@dataclass(frozen=True)
class Or:
    items: tuple["Matrix", ...]


Matrix = Union[Lit, And, Or]


@dataclass(frozen=True)
class Sentence:
    vars: tuple[Variable, ...]
    matrix: Matrix


# -- tokenizer -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<leq><=)
      | (?P<eq>=)
      | (?P<not>!)
      | (?P<and>&)
      | (?P<or>\|)
      | (?P<lp>\()
      | (?P<rp>\))
      | (?P<dot>\.)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_RESERVED = {"E", "A"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        if kind != "ws":
            out.append(_Token(kind, m.group(), pos))
        pos = m.end()
    out.append(_Token("eof", "", len(text)))
    return out


# -- raw parse tree (pre-NNF) ----------------------------------------------------

_RNot = tuple  # ("not", node) | ("and", items) | ("or", items) | ("atom", kind, l, r)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise FormulaSyntaxError(f"expected {what}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def ident(self, what: str) -> _Token:
        tok = self.expect("ident", what)
        if tok.text in _RESERVED:
            raise FormulaSyntaxError(f"{tok.text!r} is reserved and cannot name a variable", tok.pos)
        return tok

    def parse_sentence(self) -> tuple[list[str], _RNot]:
        names: list[str] = []
        while self.peek().kind == "ident" and self.peek().text in _RESERVED:
            quant = self.take()
            if quant.text == "A":
                raise UnsupportedQuantifier(quant.pos)
            name = self.ident("a variable name")
            self.expect("dot", "'.'")
            if name.text in names:
                raise FormulaSyntaxError(f"variable {name.text!r} quantified twice", name.pos)
            names.append(name.text)
        matrix = self.parse_or()
        tok = self.peek()
        if tok.kind != "eof":
            raise FormulaSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return names, matrix

    def parse_or(self) -> _RNot:
        items = [self.parse_and()]
        while self.peek().kind == "or":
            self.take()
            items.append(self.parse_and())
        return items[0] if len(items) == 1 else ("or", tuple(items))

    def parse_and(self) -> _RNot:
        items = [self.parse_unary()]
        while self.peek().kind == "and":
            self.take()
            items.append(self.parse_unary())
        return items[0] if len(items) == 1 else ("and", tuple(items))

    def parse_unary(self) -> _RNot:
        tok = self.peek()
        if tok.kind == "not":
            self.take()
            return ("not", self.parse_unary())
        if tok.kind == "lp":
            self.take()
            inner = self.parse_or()
            self.expect("rp", "')'")
            return inner
        left = self.ident("a variable name")
        op = self.take()
        if op.kind == "leq":
            kind = AtomKind.Leq
        elif op.kind == "eq":
            kind = AtomKind.Eq
        else:
            raise FormulaSyntaxError(f"expected '<=' or '=', found {op.text or 'end of input'!r}", op.pos)
        right = self.ident("a variable name")
        return ("atom", kind, left.text, right.text)


def _flatten(cls: type, items: tuple[Matrix, ...]) -> tuple[Matrix, ...]:
    out: list[Matrix] = []
    for item in items:
        if isinstance(item, cls):
            out.extend(item.items)
        else:
            out.append(item)
    return tuple(out)


def _to_nnf(node: _RNot, negated: bool) -> Matrix:
    tag = node[0]
    if tag == "atom":
        _, kind, left, right = node
        return Lit(kind, left, right, negated)
    if tag == "not":
        return _to_nnf(node[1], not negated)
    items = tuple(_to_nnf(child, negated) for child in node[1])
    flip = (tag == "and") == negated  # and under negation becomes or, and vice versa
    if flip:
        return Or(_flatten(Or, items))
    return And(_flatten(And, items))


def _matrix_names(m: Matrix) -> set[str]:
    if isinstance(m, Lit):
        return {m.left, m.right}
    return set().union(*(_matrix_names(c) for c in m.items))


def parse_sentence(text: str) -> Sentence:
    """Parse a prenex existential sentence; the matrix comes out in NNF."""
    names, raw = _Parser(_tokenize(text)).parse_sentence()
    matrix = _to_nnf(raw, False)
    bound = set(names)
    for name in sorted(_matrix_names(matrix)):
        if name not in bound:
            raise FreeVariable(name)
    vars_ = tuple(Variable(name, i) for i, name in enumerate(names))
    return Sentence(vars_, matrix)


def eval_matrix(m: Matrix, p: Poset, assignment: Mapping[str, int]) -> bool:
    """Evaluate a quantifier-free NNF matrix under a total assignment."""
    if isinstance(m, Lit):
        try:
            a = assignment[m.left]
            b = assignment[m.right]
        except KeyError as exc:
            raise UnboundVariable(f"no value for variable {exc.args[0]!r}") from exc
        if m.kind is AtomKind.Leq:
            value = bool(p.leq[a, b])
        else:
            value = a == b
        return value != m.negated
    if isinstance(m, And):
        return all(eval_matrix(c, p, assignment) for c in m.items)
    return any(eval_matrix(c, p, assignment) for c in m.items)


def format_matrix(m: Matrix) -> str:
    if isinstance(m, Lit):
        s = f"{m.left} {m.kind.value} {m.right}"
        return f"!({s})" if m.negated else s
    if isinstance(m, And):
        return " & ".join(
            f"({format_matrix(c)})" if isinstance(c, Or) else format_matrix(c) for c in m.items
        )
    return " | ".join(format_matrix(c) for c in m.items)


def format_sentence(s: Sentence) -> str:
    prefix = "".join(f"E {v.name}. " for v in s.vars)
    return prefix + format_matrix(s.matrix)


def formula_size(s: Sentence) -> int:
    """Node count of the sentence tree (quantifiers plus matrix nodes)."""

    def nodes(m: Matrix) -> int:
        if isinstance(m, Lit):
            return 1
        return 1 + sum(nodes(c) for c in m.items)

    return len(s.vars) + nodes(s.matrix)

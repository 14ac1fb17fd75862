"""A small language for noncommutative relator expressions.

Grammar::

    expr     := sign? term (("+" | "-") term)*
    term     := rational? atom* ;  at least one of the two
    atom     := gen | "I" | "[" expr "," expr "]" | "{" expr "," expr "}"
              | "<" expr "," expr "," expr ">" | "(" expr ")"
    gen      := "B" digits ("+" | "-")
    rational := digits ("/" digits)?

Juxtaposition is the product and binds tighter than + and -.  ``[a, b]`` is
ab - ba, ``{a, b}`` is ab + ba and ``<a, b, c>`` is abc - cba.  Whitespace is
insignificant except that the sign of a generator must follow its digits.

Example::

    >>> str(to_poly(parse("[B1-, B1+] - I")))
    'B1- B1+ - B1+ B1- - I'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .freealg import MINUS, PLUS, InvalidArgument, NCPoly, antibracket, bracket, triple_minus


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("%d:%d: %s" % (line, col, message))
        self.message = message
        self.line = line
        self.col = col


# --- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    mode: int
    sign: int


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Commutator:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Anticommutator:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Triple:
    a: "Expr"
    b: "Expr"
    c: "Expr"


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Atom = Union[Gen, Unit, Commutator, Anticommutator, Triple, Group]


@dataclass(frozen=True)
class Term:
    coef: Optional[Fraction]
    atoms: Tuple[Atom, ...]


@dataclass(frozen=True)
class Expr:
    terms: Tuple[Tuple[int, Term], ...]  # (sign, term)


# --- lexer -------------------------------------------------------------------

@dataclass
class Token:
    kind: str    # GEN, UNIT, RAT, or the punctuation character itself
    value: object
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    toks = []
    i, line, col = 0, 1, 1
    n = len(text)

    def adv(k: int = 1):
        nonlocal i, col
        i += k
        col += k

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            adv()
            continue
        start = (line, col)
        if ch == "B":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected mode digits after 'B'", *start)
            if j >= n or text[j] not in "+-":
                raise ParseError("generator needs a '+' or '-' right after its mode", line, col + (j - i))
            mode = int(text[i + 1:j])
            sign = PLUS if text[j] == "+" else MINUS
            toks.append(Token("GEN", (mode, sign), *start))
            adv(j + 1 - i)
        elif ch == "I":
            toks.append(Token("UNIT", None, *start))
            adv()
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected denominator digits after '/'", line, col + (j - i) + 1)
                den = int(text[j + 1:k])
                if den == 0:
                    raise ParseError("zero denominator", *start)
                j = k
            toks.append(Token("RAT", Fraction(num, den), *start))
            adv(j - i)
        elif ch in "+-[]{}<>(),":
            toks.append(Token(ch, None, *start))
            adv()
        else:
            raise ParseError("unexpected character %r" % ch, *start)
    toks.append(Token("EOF", None, line, col))
    return toks


# --- parser ------------------------------------------------------------------

_ATOM_START = {"GEN", "UNIT", "[", "{", "<", "("}


class _Parser:
    def __init__(self, toks: List[Token]):
        self.toks = toks
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def take(self, kind: str) -> Token:
        t = self.tok
        if t.kind != kind:
            want = "end of input" if kind == "EOF" else repr(kind)
            got = "end of input" if t.kind == "EOF" else repr(t.kind if t.value is None else _tok_text(t))
            raise ParseError("expected %s, got %s" % (want, got), t.line, t.col)
        self.pos += 1
        return t

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.tok.kind == "-" else 1
            self.pos += 1
        terms.append((sign, self.term()))
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.tok.kind == "-" else 1
            self.pos += 1
            terms.append((sign, self.term()))
        return Expr(tuple(terms))

    def term(self) -> Term:
        coef = None
        if self.tok.kind == "RAT":
            coef = self.tok.value
            self.pos += 1
        atoms = []
        while self.tok.kind in _ATOM_START:
            atoms.append(self.atom())
        if coef is None and not atoms:
            t = self.tok
            raise ParseError("expected a term", t.line, t.col)
        return Term(coef, tuple(atoms))

    def atom(self) -> Atom:
        t = self.tok
        if t.kind == "GEN":
            self.pos += 1
            return Gen(*t.value)
        if t.kind == "UNIT":
            self.pos += 1
            return Unit()
        if t.kind == "(":
            self.pos += 1
            e = self.expr()
            self.take(")")
            return Group(e)
        if t.kind in ("[", "{"):
            close = "]" if t.kind == "[" else "}"
            self.pos += 1
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(close)
            return Commutator(a, b) if t.kind == "[" else Anticommutator(a, b)
        if t.kind == "<":
            self.pos += 1
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(",")
            c = self.expr()
            self.take(">")
            return Triple(a, b, c)
        raise ParseError("expected an atom", t.line, t.col)


def _tok_text(t: Token) -> str:
    if t.kind == "GEN":
        return "B%d%s" % (t.value[0], "+" if t.value[1] == PLUS else "-")
    if t.kind == "RAT":
        return str(t.value)
    return t.kind


def parse(text: str) -> Expr:
    p = _Parser(tokenize(text))
    e = p.expr()
    p.take("EOF")
    return e


# --- printing and lowering ---------------------------------------------------

def _rat_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def to_text(node) -> str:
    if isinstance(node, Expr):
        out = []
        for k, (sign, term) in enumerate(node.terms):
            body = to_text(term)
            if k == 0:
                out.append(("-" if sign < 0 else "") + body)
            else:
                out.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(out)
    if isinstance(node, Term):
        parts = [_rat_text(node.coef)] if node.coef is not None else []
        parts.extend(to_text(a) for a in node.atoms)
        return " ".join(parts)
    if isinstance(node, Gen):
        return "B%d%s" % (node.mode, "+" if node.sign == PLUS else "-")
    if isinstance(node, Unit):
        return "I"
    if isinstance(node, Group):
        return "(%s)" % to_text(node.inner)
    if isinstance(node, Commutator):
        return "[%s, %s]" % (to_text(node.left), to_text(node.right))
    if isinstance(node, Anticommutator):
        return "{%s, %s}" % (to_text(node.left), to_text(node.right))
    if isinstance(node, Triple):
        return "<%s, %s, %s>" % (to_text(node.a), to_text(node.b), to_text(node.c))
    raise TypeError("not an expression node: %r" % (node,))


def to_poly(node, modes: Optional[int] = None) -> NCPoly:
    """Lower an AST to a polynomial; ``modes`` bounds the allowed mode indices."""
    if isinstance(node, Expr):
        acc = NCPoly()
        for sign, term in node.terms:
            acc = acc + to_poly(term, modes) * sign
        return acc
    if isinstance(node, Term):
        acc = NCPoly.unit(node.coef if node.coef is not None else 1)
        for a in node.atoms:
            acc = acc * to_poly(a, modes)
        return acc
    if isinstance(node, Gen):
        if node.mode < 1 or (modes is not None and node.mode > modes):
            raise InvalidArgument("unknown mode index %d (modes = %s)" % (node.mode, modes))
        return NCPoly.gen(node.mode, node.sign)
    if isinstance(node, Unit):
        return NCPoly.unit()
    if isinstance(node, Group):
        return to_poly(node.inner, modes)
    if isinstance(node, Commutator):
        return bracket(to_poly(node.left, modes), to_poly(node.right, modes))
    if isinstance(node, Anticommutator):
        return antibracket(to_poly(node.left, modes), to_poly(node.right, modes))
    if isinstance(node, Triple):
        return triple_minus(to_poly(node.a, modes), to_poly(node.b, modes), to_poly(node.c, modes))
    raise TypeError("not an expression node: %r" % (node,))


def parse_expr(text: str, modes: Optional[int] = None) -> NCPoly:
    return to_poly(parse(text), modes)


def parse_relator_file(text: str, modes: Optional[int] = None) -> List[NCPoly]:
    """One relator per line; blank lines and '#' comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_expr(line, modes))
        except ParseError as e:
            raise ParseError(e.message, lineno, e.col) from None
        except InvalidArgument as e:
            raise ParseError(str(e), lineno, 1) from None
    return out

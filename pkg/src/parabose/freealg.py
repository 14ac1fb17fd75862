"""Free Z2-graded algebra over creation/annihilation symbols.

Words are tuples of :class:`GenSym`; every generator is odd, so the parity of
a word is its length mod 2.  :class:`NCPoly` holds exact rational linear
combinations of words.  The relator families for the boson, paraboson and
order-2 algebras are built here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple, Union

PLUS = 1
MINUS = -1


class InvalidArgument(ValueError):
    """Raised when an operation's precondition on its arguments fails."""


class GenSym(NamedTuple):
    mode: int
    sign: int  # PLUS or MINUS

    def __str__(self) -> str:
        return "B%d%s" % (self.mode, "+" if self.sign == PLUS else "-")

    @property
    def code(self) -> int:
        # (mode, plus < minus) flattened to a single digit
        return 2 * (self.mode - 1) + (0 if self.sign == PLUS else 1)

    @classmethod
    def from_code(cls, code: int) -> "GenSym":
        return cls(code // 2 + 1, PLUS if code % 2 == 0 else MINUS)


Word = Tuple[GenSym, ...]
Scalar = Fraction
Coefficient = Union[int, Fraction]

UNIT: Word = ()


def gen(mode: int, sign: int) -> GenSym:
    if mode < 1:
        raise InvalidArgument("mode index must be >= 1, got %r" % (mode,))
    if sign not in (PLUS, MINUS):
        raise InvalidArgument("sign must be +1 or -1, got %r" % (sign,))
    return GenSym(mode, sign)


def generators(m: int) -> List[GenSym]:
    """All 2m generators in canonical order (mode, then plus before minus)."""
    return [GenSym(i, s) for i in range(1, m + 1) for s in (PLUS, MINUS)]


def parity(w: Word) -> int:
    return len(w) % 2


def word_key(w: Word) -> Tuple[int, Tuple[int, ...]]:
    """Degree-lexicographic sort key."""
    return (len(w), tuple(g.code for g in w))


def word_str(w: Word) -> str:
    if not w:
        return "I"
    return " ".join(str(g) for g in w)


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


class NCPoly:
    """Finite rational combination of words.  Treated as immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Word, Coefficient], Iterable[Tuple[Word, Coefficient]], None] = None):
        acc: Dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                w = tuple(w)
                acc[w] = acc.get(w, 0) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Word, Fraction]) -> "NCPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def unit(cls, c: Coefficient = 1) -> "NCPoly":
        return cls({UNIT: c})

    @classmethod
    def word(cls, w: Iterable[GenSym], c: Coefficient = 1) -> "NCPoly":
        return cls({tuple(w): c})

    @classmethod
    def gen(cls, mode: int, sign: int) -> "NCPoly":
        return cls({(gen(mode, sign),): 1})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        """Terms in descending canonical word order."""
        for w in sorted(self._terms, key=word_key, reverse=True):
            yield w, self._terms[w]

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Top degree; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    @property
    def parity(self) -> int:
        pars = {len(w) % 2 for w in self._terms}
        if len(pars) > 1:
            raise ValueError("parity undefined for an inhomogeneous polynomial")
        return pars.pop() if pars else 0

    def is_homogeneous(self) -> bool:
        return len({len(w) % 2 for w in self._terms}) <= 1

    def leading_word(self) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self._terms, key=word_key)

    def modes(self) -> set:
        return {g.mode for w in self._terms for g in w}

    def __add__(self, other: "NCPoly") -> "NCPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            x = out.get(w, 0) + c
            if x:
                out[w] = x
            else:
                out.pop(w, None)
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return NCPoly()
            return NCPoly._raw({w: c * other for w, c in self._terms.items()})
        return mul(self, other)

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return mul(_coerce(other), self)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPoly.unit(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            neg = c < 0
            a = -c if neg else c
            body = word_str(w)
            if a != 1:
                body = _frac_str(a) + (" " + body if w else "")
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "NCPoly(%s)" % self


def _coerce(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return NCPoly.unit(x)
    raise TypeError("cannot use %r as an NCPoly" % (x,))


def mul(p: NCPoly, q: NCPoly) -> NCPoly:
    out: Dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            x = out.get(w, 0) + a * b
            if x:
                out[w] = x
            else:
                out.pop(w, None)
    return NCPoly._raw(out)


def bracket(p: NCPoly, q: NCPoly) -> NCPoly:
    return mul(p, q) - mul(q, p)


def antibracket(p: NCPoly, q: NCPoly) -> NCPoly:
    return mul(p, q) + mul(q, p)


def triple_minus(a: NCPoly, b: NCPoly, c: NCPoly) -> NCPoly:
    """abc - cba"""
    return mul(mul(a, b), c) - mul(mul(c, b), a)


def _check_modes(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument("mode count must be a positive integer, got %r" % (m,))


def _dedupe(polys: Iterable[NCPoly]) -> List[NCPoly]:
    seen = set()
    out = []
    for p in polys:
        if p.is_zero() or p in seen:
            continue
        seen.add(p)
        out.append(p)
    return out


def boson_relators(m: int) -> List[NCPoly]:
    """[b_i^-, b_j^+] - d_ij I, [b_i^-, b_j^-], [b_i^+, b_j^+] for 1 <= i, j <= m."""
    _check_modes(m)
    G = NCPoly.gen
    rels = []
    for i, j in product(range(1, m + 1), repeat=2):
        rels.append(bracket(G(i, MINUS), G(j, PLUS)) - NCPoly.unit(int(i == j)))
        rels.append(bracket(G(i, MINUS), G(j, MINUS)))
        rels.append(bracket(G(i, PLUS), G(j, PLUS)))
    return [p for p in rels if not p.is_zero()]


def paraboson_relator(xi: int, eta: int, eps: int, i: int, j: int, k: int) -> NCPoly:
    G = NCPoly.gen
    lhs = bracket(antibracket(G(i, xi), G(j, eta)), G(k, eps))
    return lhs - G(i, xi) * ((eps - eta) * int(j == k)) - G(j, eta) * ((eps - xi) * int(i == k))


def paraboson_relators(m: int) -> List[NCPoly]:
    """[{B_i^xi, B_j^eta}, B_k^eps] - (eps-eta) d_jk B_i^xi - (eps-xi) d_ik B_j^eta."""
    _check_modes(m)
    rng = range(1, m + 1)
    return _dedupe(
        paraboson_relator(xi, eta, eps, i, j, k)
        for xi, eta, eps in product((PLUS, MINUS), repeat=3)
        for i, j, k in product(rng, repeat=3)
    )


def gamma2_family(family: int, k: int, l: int, n: int) -> NCPoly:
    """One member of the six trilinear families of the order-2 relations.

    Families are numbered 1..6 reading the relation table row by row:
    (-+-), (+-+), (--+), (-++), (---), (+++).
    """
    G = NCPoly.gen
    d = lambda a, b: int(a == b)
    if family == 1:
        return triple_minus(G(k, MINUS), G(l, PLUS), G(n, MINUS)) - 2 * d(k, l) * G(n, MINUS) + 2 * d(l, n) * G(k, MINUS)
    if family == 2:
        return triple_minus(G(n, PLUS), G(l, MINUS), G(k, PLUS)) - 2 * d(k, l) * G(n, PLUS) + 2 * d(l, n) * G(k, PLUS)
    if family == 3:
        return triple_minus(G(k, MINUS), G(l, MINUS), G(n, PLUS)) - 2 * d(l, n) * G(k, MINUS)
    if family == 4:
        return triple_minus(G(n, MINUS), G(l, PLUS), G(k, PLUS)) - 2 * d(l, n) * G(k, PLUS)
    if family == 5:
        return triple_minus(G(k, MINUS), G(l, MINUS), G(n, MINUS))
    if family == 6:
        return triple_minus(G(k, PLUS), G(l, PLUS), G(n, PLUS))
    raise InvalidArgument("family must be in 1..6, got %r" % (family,))


def gamma2_relators(m: int) -> List[NCPoly]:
    _check_modes(m)
    rng = range(1, m + 1)
    return _dedupe(
        gamma2_family(f, k, l, n)
        for f in range(1, 7)
        for k, l, n in product(rng, repeat=3)
    )

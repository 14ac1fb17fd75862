"""Super-Hopf structure on the free algebra with primitive odd generators.

Coproducts land in braided tensor powers, represented by :class:`TensorPoly`:
rational combinations of q-tuples of words, multiplied with the sign
(-1)^{|b||c|} whenever an element b is carried past c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

from .freealg import UNIT, GenSym, InvalidArgument, NCPoly, Word, generators, word_key

TensorWord = Tuple[Word, ...]


class TensorPoly:
    """Element of the q-fold braided tensor power of the free algebra."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[TensorWord, Fraction] = None):
        if arity < 1:
            raise InvalidArgument("arity must be >= 1")
        self.arity = arity
        acc: Dict[TensorWord, Fraction] = {}
        for t, c in (terms or {}).items():
            t = tuple(tuple(w) for w in t)
            if len(t) != arity:
                raise InvalidArgument("tuple %r does not have arity %d" % (t, arity))
            acc[t] = acc.get(t, 0) + Fraction(c)
        self._terms = {t: c for t, c in acc.items() if c}

    @classmethod
    def _raw(cls, arity: int, terms: Dict[TensorWord, Fraction]) -> "TensorPoly":
        tp = object.__new__(cls)
        tp.arity = arity
        tp._terms = terms
        return tp

    @classmethod
    def unit(cls, arity: int) -> "TensorPoly":
        return cls._raw(arity, {(UNIT,) * arity: Fraction(1)})

    @property
    def terms(self) -> Mapping[TensorWord, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if other.arity != self.arity:
            raise InvalidArgument("arity mismatch")
        out = dict(self._terms)
        for t, c in other._terms.items():
            x = out.get(t, 0) + c
            if x:
                out[t] = x
            else:
                out.pop(t, None)
        return TensorPoly._raw(self.arity, out)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly._raw(self.arity, {t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, a) -> "TensorPoly":
        if a == 0:
            return TensorPoly(self.arity)
        return TensorPoly._raw(self.arity, {t: c * a for t, c in self._terms.items()})

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        return braided_mul(self, other)

    def parity(self) -> int:
        pars = {sum(len(w) for w in t) % 2 for t in self._terms}
        if len(pars) > 1:
            raise ValueError("inhomogeneous tensor element")
        return pars.pop() if pars else 0

    def items(self):
        key = lambda t: tuple(word_key(w) for w in t)
        for t in sorted(self._terms, key=key, reverse=True):
            yield t, self._terms[t]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.items():
            body = " (x) ".join(" ".join(map(str, w)) or "I" for w in t)
            parts.append("%s*[%s]" % (c, body))
        return " + ".join(parts)

    __repr__ = __str__


def _cross_sign(a: TensorWord, b: TensorWord) -> int:
    """(-1)^{sum_{r<s} |a_s||b_r|}: each b_r passes the a_s to its right."""
    n = 0
    right = 0  # parity of a_{r+1} ... a_q
    for r in range(len(a) - 1, -1, -1):
        n += (len(b[r]) & 1) * right
        right ^= len(a[r]) & 1
    return -1 if n & 1 else 1


def braided_mul(x: TensorPoly, y: TensorPoly) -> TensorPoly:
    if x.arity != y.arity:
        raise InvalidArgument("arity mismatch")
    out: Dict[TensorWord, Fraction] = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            t = tuple(u + v for u, v in zip(a, b))
            v = out.get(t, 0) + _cross_sign(a, b) * c * d
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return TensorPoly._raw(x.arity, out)


def _slot_sum(g: GenSym, q: int) -> TensorPoly:
    terms = {}
    for r in range(q):
        t = [UNIT] * q
        t[r] = (g,)
        terms[tuple(t)] = Fraction(1)
    return TensorPoly._raw(q, terms)


@lru_cache(maxsize=None)
def _word_coproduct(w: Word, q: int) -> TensorPoly:
    # lru_cache writes are idempotent, so concurrent fills are harmless
    if not w:
        return TensorPoly.unit(q)
    return braided_mul(_slot_sum(w[0], q), _word_coproduct(w[1:], q))


def iterated_coproduct(p: NCPoly, q: int) -> TensorPoly:
    """Coproduct iterated into the q-fold braided tensor power (q >= 2)."""
    if q < 2:
        raise InvalidArgument("arity must be >= 2, got %r" % (q,))
    out = TensorPoly(q)
    for w, c in p.terms.items():
        out = out + _word_coproduct(w, q).scale(c)
    return out


def coproduct(p: NCPoly) -> TensorPoly:
    return iterated_coproduct(p, 2)


def counit(p: NCPoly) -> Fraction:
    return p.coefficient(UNIT)


def antipode_word(w: Word) -> Tuple[int, Word]:
    n = len(w)
    sign = -1 if (n + n * (n - 1) // 2) % 2 else 1
    return sign, tuple(reversed(w))


def antipode(p: NCPoly) -> NCPoly:
    out: Dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        s, rw = antipode_word(w)
        out[rw] = out.get(rw, 0) + s * c
    return NCPoly(out)


def apply_coproduct_at(x: TensorPoly, pos: int) -> TensorPoly:
    """(Id^pos (x) Delta (x) Id^rest) applied to x, raising the arity by one.

    The coproduct is even, so no Koszul sign appears.
    """
    if not 0 <= pos < x.arity:
        raise InvalidArgument("position %d out of range" % pos)
    out = TensorPoly(x.arity + 1)
    for t, c in x.terms.items():
        inner = _word_coproduct(t[pos], 2)
        terms = {t[:pos] + pair + t[pos + 1:]: c * d for pair, d in inner.terms.items()}
        out = out + TensorPoly._raw(x.arity + 1, terms)
    return out


def apply_counit_at(x: TensorPoly, pos: int) -> TensorPoly:
    if x.arity < 2:
        raise InvalidArgument("cannot contract a 1-fold tensor")
    out: Dict[TensorWord, Fraction] = {}
    for t, c in x.terms.items():
        if t[pos] == UNIT:
            s = t[:pos] + t[pos + 1:]
            out[s] = out.get(s, 0) + c
    return TensorPoly(x.arity - 1, out)


def multiply_out(x: TensorPoly, left_antipode: bool = False, right_antipode: bool = False) -> NCPoly:
    """mu o (S^a (x) S^b) on a 2-fold tensor."""
    if x.arity != 2:
        raise InvalidArgument("multiply_out needs arity 2")
    acc = NCPoly()
    for (a, b), c in x.terms.items():
        pa = antipode(NCPoly.word(a)) if left_antipode else NCPoly.word(a)
        pb = antipode(NCPoly.word(b)) if right_antipode else NCPoly.word(b)
        acc = acc + (pa * pb) * c
    return acc


def as_tensor(p: NCPoly) -> TensorPoly:
    return TensorPoly(1, {(w,): c for w, c in p.terms.items()})


def iterated_by_positions(p: NCPoly, positions: Iterable[int]) -> TensorPoly:
    """Start from Delta(p) and apply Delta at each given position in turn."""
    x = coproduct(p)
    for pos in positions:
        x = apply_coproduct_at(x, pos)
    return x


def insertion_sequences(q: int) -> List[Tuple[int, ...]]:
    """All position sequences that grow a 2-fold tensor into a q-fold one."""
    seqs: List[Tuple[int, ...]] = [()]
    for arity in range(2, q):
        seqs = [s + (i,) for s in seqs for i in range(arity)]
    return seqs


@dataclass
class HopfReport:
    modes: int
    checks: List[Tuple[str, str, bool]] = field(default_factory=list)  # (law, generator, ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    @property
    def failures(self) -> List[Tuple[str, str]]:
        return [(law, g) for law, g, ok in self.checks if not ok]


def check_hopf_axioms(m: int, max_arity: int = 4) -> HopfReport:
    """Coassociativity, counit and antipode laws, and position independence,
    checked on every generator."""
    if m < 1:
        raise InvalidArgument("mode count must be >= 1")
    rep = HopfReport(m)
    for g in generators(m):
        p = NCPoly.word((g,))
        name = str(g)
        d = coproduct(p)
        rep.checks.append(("coassociativity", name, apply_coproduct_at(d, 0) == apply_coproduct_at(d, 1)))
        left = apply_counit_at(d, 0)
        right = apply_counit_at(d, 1)
        rep.checks.append(("counit", name, left == as_tensor(p) and right == as_tensor(p)))
        unit = NCPoly.unit(counit(p))
        rep.checks.append(("antipode", name, multiply_out(d, left_antipode=True) == unit
                           and multiply_out(d, right_antipode=True) == unit))
        ok = True
        for q in range(3, max_arity + 1):
            direct = iterated_coproduct(p, q)
            ok &= all(iterated_by_positions(p, s) == direct for s in insertion_sequences(q))
        rep.checks.append(("position-independence", name, ok))
    return rep

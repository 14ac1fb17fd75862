"""Degree-truncated two-sided ideals of the free algebra.

The span of all products ``u * r * v`` (u, v words, r a relator) whose top
degree stays within a bound D is a finite-dimensional space of polynomials.
It is row-reduced exactly, which gives a sound membership test: a polynomial
that reduces to zero lies in the ideal.  A nonzero remainder only says that
membership is not witnessed at this bound, since the relators mix degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import GenSym, InvalidArgument, NCPoly, Word, generators, word_key
from .linalg import Echelon, Vec

DEFAULT_BOUND = 5


class WordIndex:
    """Bijection between words of degree <= D over 2m symbols and integers.

    The integer order agrees with the canonical degree-lexicographic order.
    """

    def __init__(self, m: int, bound: int):
        self.m = m
        self.bound = bound
        self.base = 2 * m
        self.offsets = [0]
        for d in range(bound + 1):
            self.offsets.append(self.offsets[-1] + self.base ** d)

    def __len__(self) -> int:
        return self.offsets[-1]

    def rank(self, w: Word) -> int:
        n = len(w)
        if n > self.bound:
            raise InvalidArgument("word of degree %d exceeds bound %d" % (n, self.bound))
        v = 0
        for g in w:
            if g.mode > self.m:
                raise InvalidArgument("generator %s outside %d modes" % (g, self.m))
            v = v * self.base + g.code
        return self.offsets[n] + v

    def word(self, r: int) -> Word:
        n = 0
        while self.offsets[n + 1] <= r:
            n += 1
        v = r - self.offsets[n]
        codes = []
        for _ in range(n):
            v, c = divmod(v, self.base)
            codes.append(c)
        return tuple(GenSym.from_code(c) for c in reversed(codes))

    def vec(self, p: NCPoly) -> Vec:
        return {self.rank(w): c for w, c in p.terms.items()}

    def poly(self, v: Vec) -> NCPoly:
        return NCPoly({self.word(k): c for k, c in v.items()})


def words_of_degree(m: int, d: int) -> List[Word]:
    """All words of length d in canonical (lexicographic) order."""
    gens = generators(m)
    return [tuple(w) for w in product(gens, repeat=d)]


@dataclass
class TruncatedIdealBasis:
    relators: List[NCPoly]
    mode_count: int
    bound: int
    index: WordIndex = field(repr=False)
    echelon: Echelon = field(repr=False)

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def rows(self) -> List[NCPoly]:
        """Reduced echelon rows, leading coefficient 1, leading words descending."""
        return [self.index.poly(r) for r in self.echelon.sorted_rows()]

    def leading_words(self) -> List[Word]:
        return [self.index.word(k) for k in sorted(self.echelon.rows, reverse=True)]


def _check_relator_modes(relators: Sequence[NCPoly], m: int) -> None:
    for r in relators:
        for mode in r.modes():
            if mode > m:
                raise InvalidArgument("relator %s uses mode %d > %d" % (r, mode, m))


def span_truncated_ideal(relators: Sequence[NCPoly], m: int, bound: int = DEFAULT_BOUND) -> TruncatedIdealBasis:
    if m < 1:
        raise InvalidArgument("mode count must be >= 1")
    relators = [r for r in relators if not r.is_zero()]
    top = max((r.degree for r in relators), default=0)
    if bound < top:
        raise InvalidArgument("bound %d below relator degree %d" % (bound, top))
    _check_relator_modes(relators, m)
    index = WordIndex(m, bound)
    ech = Echelon()
    words = [words_of_degree(m, d) for d in range(bound + 1)]
    rel_terms = [[(tuple(w), c) for w, c in r.terms.items()] for r in relators]
    for t in range(bound - min((r.degree for r in relators), default=0) + 1):
        for r, terms in zip(relators, rel_terms):
            if r.degree + t > bound:
                continue
            for du in range(t + 1):
                for u in words[du]:
                    for v in words[t - du]:
                        ech.add({index.rank(u + w + v): c for w, c in terms})
    ech.interreduce()
    return TruncatedIdealBasis(list(relators), m, bound, index, ech)


def _check_degree(p: NCPoly, basis: TruncatedIdealBasis) -> None:
    if p.degree > basis.bound:
        raise InvalidArgument("polynomial degree %d exceeds bound %d" % (p.degree, basis.bound))


def reduce(p: NCPoly, basis: TruncatedIdealBasis) -> NCPoly:
    _check_degree(p, basis)
    return basis.index.poly(basis.echelon.reduce(basis.index.vec(p)))


def contains(p: NCPoly, basis: TruncatedIdealBasis) -> bool:
    return reduce(p, basis).is_zero()


@dataclass
class InclusionReport:
    bound: int
    mode_count: int
    checked: int
    span_rank: int
    failures: List[NCPoly]

    @property
    def passed(self) -> bool:
        return not self.failures


def ideal_inclusion_check(relators_a: Sequence[NCPoly], relators_b: Sequence[NCPoly], m: int,
                          bound: int = DEFAULT_BOUND,
                          basis: Optional[TruncatedIdealBasis] = None) -> InclusionReport:
    """Check that every relator of A lies in the truncated ideal spanned by B."""
    if basis is None:
        basis = span_truncated_ideal(relators_b, m, bound)
    failures = [r for r in relators_a if not contains(r, basis)]
    return InclusionReport(basis.bound, m, len(relators_a), basis.rank, failures)


def minimal_witness_bound(relators_a: Sequence[NCPoly], relators_b: Sequence[NCPoly], m: int,
                          max_bound: int = DEFAULT_BOUND) -> Optional[int]:
    """Smallest bound at which A is contained in the truncated B-ideal, if any <= max_bound."""
    start = max(max((r.degree for r in relators_a), default=0), max((r.degree for r in relators_b), default=0))
    for d in range(start, max_bound + 1):
        if ideal_inclusion_check(relators_a, relators_b, m, d).passed:
            return d
    return None

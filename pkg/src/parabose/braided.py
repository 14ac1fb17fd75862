"""Graded spaces, their braided tensor products, and exact sparse operators.

The only braiding is the Z2 sign rule: swapping homogeneous v and w costs
(-1)^{|v||w|}.  Tensor operators are built by embedding a single-factor
operator into one slot; an odd operator placed at slot r picks up the sign
(-1)^{parity of the factors to its left}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .freealg import InvalidArgument
from .linalg import Vec, axpy


class GradedSpace:
    """Finite super vector space with an explicit basis.

    ``degrees`` is an optional nonnegative integer grading (the Fock particle
    number); when present it determines truncation-safe domains.
    """

    def __init__(self, labels: Sequence[Hashable], parities: Sequence[int],
                 degrees: Optional[Sequence[int]] = None, name: str = ""):
        if len(labels) != len(parities):
            raise InvalidArgument("labels and parities differ in length")
        if degrees is not None and len(degrees) != len(labels):
            raise InvalidArgument("labels and degrees differ in length")
        self.labels = tuple(labels)
        self.parities = tuple(int(p) % 2 for p in parities)
        self.degrees = tuple(degrees) if degrees is not None else None
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise InvalidArgument("duplicate basis labels")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def get_index(self, label: Hashable) -> Optional[int]:
        return self._index.get(label)

    @property
    def max_degree(self) -> int:
        if self.degrees is None:
            raise InvalidArgument("space carries no degree grading")
        return max(self.degrees, default=0)

    def states_up_to(self, d: int) -> List[int]:
        if self.degrees is None:
            raise InvalidArgument("space carries no degree grading")
        return [i for i, k in enumerate(self.degrees) if k <= d]

    def __repr__(self) -> str:
        return "GradedSpace(%s, dim=%d)" % (self.name or "?", self.dim)


class TensorSpace(GradedSpace):
    """Tensor product of graded spaces, optionally truncated by total degree.

    Basis labels are tuples of factor indices in mixed-radix order with the
    leftmost factor most significant.
    """

    def __init__(self, factors: Sequence[GradedSpace], max_degree: Optional[int] = None):
        if not factors:
            raise InvalidArgument("a tensor space needs at least one factor")
        self.factors = tuple(factors)
        graded = all(f.degrees is not None for f in factors)
        if max_degree is not None and not graded:
            raise InvalidArgument("degree truncation needs graded factors")
        labels, pars, degs = [], [], []
        for t in product(*(range(f.dim) for f in factors)):
            if graded:
                d = sum(f.degrees[i] for f, i in zip(factors, t))
                if max_degree is not None and d > max_degree:
                    continue
                degs.append(d)
            labels.append(t)
            pars.append(sum(f.parities[i] for f, i in zip(factors, t)))
        super().__init__(labels, pars, degs if graded else None,
                         name=" (x) ".join(f.name or "?" for f in factors))
        self.truncation = max_degree

    @property
    def arity(self) -> int:
        return len(self.factors)


def braid_swap(vec: Mapping[int, Fraction], space: TensorSpace,
               swapped: Optional[TensorSpace] = None) -> Tuple[Dict[int, Fraction], TensorSpace]:
    """Apply the symmetric braiding V (x) W -> W (x) V."""
    if not isinstance(space, TensorSpace) or space.arity != 2:
        raise InvalidArgument("braid_swap needs a two-factor tensor space")
    V, W = space.factors
    if swapped is None:
        swapped = TensorSpace((W, V), space.truncation)
    out: Dict[int, Fraction] = {}
    for idx, c in vec.items():
        i, j = space.labels[idx]
        sign = -1 if V.parities[i] and W.parities[j] else 1
        k = swapped.get_index((j, i))
        if k is None:
            raise InvalidArgument("swapped state missing from target space")
        out[k] = out.get(k, 0) + sign * c
    return {k: c for k, c in out.items() if c}, swapped


class SparseOperator:
    """Exact linear map between graded spaces with a fixed parity."""

    def __init__(self, domain: GradedSpace, codomain: GradedSpace,
                 entries: Mapping[Tuple[int, int], Fraction], parity: int, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.parity = parity % 2
        cols: Dict[int, Dict[int, Fraction]] = {}
        for (r, c), x in entries.items():
            if x:
                cols.setdefault(c, {})[r] = x
        self.cols = cols
        if check:
            for c, col in cols.items():
                want = domain.parities[c] ^ self.parity
                for r in col:
                    if codomain.parities[r] != want:
                        raise InvalidArgument("operator is not homogeneous of parity %d" % self.parity)

    @classmethod
    def _from_cols(cls, domain, codomain, cols, parity) -> "SparseOperator":
        op = object.__new__(cls)
        op.domain, op.codomain, op.parity = domain, codomain, parity % 2
        op.cols = {c: col for c, col in cols.items() if col}
        return op

    @classmethod
    def identity(cls, space: GradedSpace) -> "SparseOperator":
        return cls._from_cols(space, space, {i: {i: 1} for i in range(space.dim)}, 0)

    @classmethod
    def zero(cls, domain: GradedSpace, codomain: Optional[GradedSpace] = None, parity: int = 0) -> "SparseOperator":
        return cls._from_cols(domain, codomain or domain, {}, parity)

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return {(r, c): x for c, col in self.cols.items() for r, x in col.items()}

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def apply(self, vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        cols = self.cols
        for c, a in vec.items():
            col = cols.get(c)
            if col:
                axpy(out, a, col)
        return out

    def __call__(self, vec):
        return self.apply(vec)

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        return compose(self, other)

    def _check_same(self, other: "SparseOperator") -> None:
        if self.domain is not other.domain or self.codomain is not other.codomain:
            raise InvalidArgument("operators act between different spaces")

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        self._check_same(other)
        if other.parity != self.parity and not other.is_zero() and not self.is_zero():
            raise InvalidArgument("sum of operators of different parity is inhomogeneous")
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            axpy(tgt, 1, col)
        par = self.parity if not self.is_zero() else other.parity
        return SparseOperator._from_cols(self.domain, self.codomain, cols, par)

    def __neg__(self) -> "SparseOperator":
        return self * -1

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        return self + (-other)

    def __mul__(self, a) -> "SparseOperator":
        if a == 0:
            return SparseOperator.zero(self.domain, self.codomain, self.parity)
        cols = {c: {r: a * x for r, x in col.items()} for c, col in self.cols.items()}
        return SparseOperator._from_cols(self.domain, self.codomain, cols, self.parity)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return (self.domain is other.domain and self.codomain is other.codomain
                and self.cols == other.cols)

    __hash__ = None

    def restrict_columns(self, keep: Iterable[int]) -> "SparseOperator":
        keep = set(keep)
        return SparseOperator._from_cols(self.domain, self.codomain,
                                         {c: col for c, col in self.cols.items() if c in keep}, self.parity)

    def __repr__(self) -> str:
        return "SparseOperator(%dx%d, parity=%d, nnz=%d)" % (
            self.codomain.dim, self.domain.dim, self.parity, self.nnz())


def compose(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    """a o b"""
    if b.codomain is not a.domain:
        raise InvalidArgument("cannot compose: codomain of b is not the domain of a")
    cols = {c: a.apply(col) for c, col in b.cols.items()}
    return SparseOperator._from_cols(b.domain, a.codomain, cols, a.parity ^ b.parity)


def commutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return compose(a, b) - compose(b, a)


def anticommutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return compose(a, b) + compose(b, a)


def embed_at(op: SparseOperator, slot: int, space: TensorSpace) -> SparseOperator:
    """Place ``op`` at ``slot`` (1-based) and the identity elsewhere.

    States pushed past the tensor space's degree truncation are dropped.
    """
    if not isinstance(space, TensorSpace):
        raise InvalidArgument("embed_at needs a TensorSpace")
    if not 1 <= slot <= space.arity:
        raise InvalidArgument("slot %d out of range 1..%d" % (slot, space.arity))
    r = slot - 1
    factor = space.factors[r]
    if op.domain is not factor or op.codomain is not factor:
        raise InvalidArgument("operator does not act on factor %d" % slot)
    odd = op.parity
    left = space.factors[:r]
    cols: Dict[int, Dict[int, Fraction]] = {}
    for col, t in enumerate(space.labels):
        fcol = op.cols.get(t[r])
        if not fcol:
            continue
        sign = 1
        if odd and sum(f.parities[i] for f, i in zip(left, t[:r])) % 2:
            sign = -1
        out = {}
        for frow, x in fcol.items():
            row = space.get_index(t[:r] + (frow,) + t[r + 1:])
            if row is not None:
                out[row] = sign * x
        if out:
            cols[col] = out
    return SparseOperator._from_cols(space, space, cols, op.parity)

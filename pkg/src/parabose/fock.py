"""Truncated Fock modules and the Fock-like paraboson modules F(p).

Everything is kept in the unnormalized basis e_k = (b^+)^k |0>, where the
boson operators have integer matrices (b^+ e_k = e_{k+1}, b^- e_k = k e_{k-1})
and the inner product is diagonal with <e_k, e_k> = prod_i k_i!.  Normalized
square-root coefficients are recovered as ratios of squared norms.

A tensor Fock space of p slots is truncated by total particle number N.  An
operator identity involving words of length t is only asserted on states of
degree <= N - t, so truncation can never masquerade as a relation failure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .braided import GradedSpace, SparseOperator, TensorSpace, embed_at
from .freealg import MINUS, PLUS, GenSym, InvalidArgument, NCPoly, generators, paraboson_relators, word_str
from .hopf import TensorPoly, coproduct
from .linalg import Echelon, Vec, axpy, is_positive_definite, ldl_pivots

Assignment = Mapping[GenSym, SparseOperator]


def _check(p: int, m: int, N: int) -> None:
    if p < 1:
        raise InvalidArgument("order must be >= 1, got %r" % (p,))
    if m < 1:
        raise InvalidArgument("mode count must be >= 1, got %r" % (m,))
    if N < 0:
        raise InvalidArgument("cutoff must be >= 0, got %r" % (N,))


def occupations(m: int, d: int) -> List[Tuple[int, ...]]:
    """Occupation vectors of total degree d, lexicographically descending."""
    if m == 1:
        return [(d,)]
    return [(k,) + rest for k in range(d, -1, -1) for rest in occupations(m - 1, d - k)]


@lru_cache(maxsize=None)
def boson_space(m: int, N: int) -> GradedSpace:
    _check(1, m, N)
    labels = [occ for d in range(N + 1) for occ in occupations(m, d)]
    return GradedSpace(labels, [sum(k) for k in labels], [sum(k) for k in labels],
                       name="F_B(m=%d,N=%d)" % (m, N))


def _modes_of(space: GradedSpace) -> int:
    return len(space.labels[0])


def boson_raise(space: GradedSpace, i: int) -> SparseOperator:
    m = _modes_of(space)
    if not 1 <= i <= m:
        raise InvalidArgument("mode %d out of range 1..%d" % (i, m))
    entries = {}
    for c, occ in enumerate(space.labels):
        tgt = occ[:i - 1] + (occ[i - 1] + 1,) + occ[i:]
        r = space.get_index(tgt)
        if r is not None:
            entries[r, c] = 1
    return SparseOperator(space, space, entries, 1)


def boson_lower(space: GradedSpace, i: int) -> SparseOperator:
    m = _modes_of(space)
    if not 1 <= i <= m:
        raise InvalidArgument("mode %d out of range 1..%d" % (i, m))
    entries = {}
    for c, occ in enumerate(space.labels):
        k = occ[i - 1]
        if k:
            entries[space.index(occ[:i - 1] + (k - 1,) + occ[i:]), c] = k
    return SparseOperator(space, space, entries, 1)


@lru_cache(maxsize=None)
def boson_ops(m: int, N: int) -> Dict[GenSym, SparseOperator]:
    space = boson_space(m, N)
    ops = {}
    for g in generators(m):
        ops[g] = boson_raise(space, g.mode) if g.sign == PLUS else boson_lower(space, g.mode)
    return ops


def _occ_weight(occ: Sequence[int]) -> int:
    w = 1
    for k in occ:
        w *= math.factorial(k)
    return w


def boson_gram(m: int, N: int) -> List[int]:
    """Diagonal of the Gram matrix of the unnormalized boson basis."""
    return [_occ_weight(occ) for occ in boson_space(m, N).labels]


@lru_cache(maxsize=None)
def tensor_fock_space(p: int, m: int, N: int) -> TensorSpace:
    _check(p, m, N)
    return TensorSpace([boson_space(m, N)] * p, max_degree=N)


@lru_cache(maxsize=None)
def tensor_gram(p: int, m: int, N: int) -> Tuple[int, ...]:
    space = tensor_fock_space(p, m, N)
    diag = boson_gram(m, N)
    out = []
    for t in space.labels:
        w = 1
        for i in t:
            w *= diag[i]
        out.append(w)
    return tuple(out)


def inner(u: Mapping[int, Fraction], v: Mapping[int, Fraction], weights: Sequence) -> Fraction:
    if len(u) > len(v):
        u, v = v, u
    s = 0
    for k, a in u.items():
        b = v.get(k)
        if b:
            s += a * b * weights[k]
    return Fraction(s)


@lru_cache(maxsize=None)
def slot_ops(p: int, m: int, N: int) -> Tuple[Dict[GenSym, SparseOperator], ...]:
    """Boson generators embedded in each slot: the generators b_i^{(r)+-}."""
    space = tensor_fock_space(p, m, N)
    base = boson_ops(m, N)
    return tuple({g: embed_at(op, r, space) for g, op in base.items()} for r in range(1, p + 1))


@lru_cache(maxsize=None)
def green_ops(p: int, m: int, N: int) -> Dict[GenSym, SparseOperator]:
    slots = slot_ops(p, m, N)
    out = {}
    for g in generators(m):
        acc = slots[0][g]
        for s in slots[1:]:
            acc = acc + s[g]
        out[g] = acc
    return out


def green_operator(p: int, m: int, N: int, i: int, sign: int) -> SparseOperator:
    """Sum over slots of the embedded boson operator for mode i."""
    _check(p, m, N)
    if not 1 <= i <= m:
        raise InvalidArgument("mode %d out of range 1..%d" % (i, m))
    return green_ops(p, m, N)[GenSym(i, sign)]


def vacuum(space: GradedSpace) -> Vec:
    return {0: Fraction(1)}


# --- relator evaluation -------------------------------------------------------

def apply_word(word, assignment: Assignment, vec: Vec) -> Vec:
    for g in reversed(word):
        if not vec:
            break
        vec = assignment[g].apply(vec)
    return vec


def apply_poly(poly: NCPoly, assignment: Assignment, vec: Vec) -> Vec:
    out: Vec = {}
    for w, c in poly.terms.items():
        axpy(out, c, apply_word(w, assignment, vec))
    return out


@dataclass
class RelatorCheck:
    relator: str
    ok: bool
    witness: Optional[str] = None


@dataclass
class RelatorReport:
    checks: List[RelatorCheck]
    max_degree_checked: int
    states_checked: int

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[RelatorCheck]:
        return [c for c in self.checks if not c.ok]


def _vec_str(vec: Vec, space: GradedSpace, limit: int = 4) -> str:
    items = sorted(vec.items())[:limit]
    s = " + ".join("(%s)|%s>" % (c, space.labels[k]) for k, c in items)
    return s + (" + ..." if len(vec) > limit else "")


def verify_relators_on_space(relators: Sequence[NCPoly], assignment: Assignment,
                             space: GradedSpace) -> RelatorReport:
    """Evaluate each relator as an operator on the truncation-safe states."""
    top = space.max_degree
    checks = []
    max_checked = -1
    n_states = 0
    for r in relators:
        safe = space.states_up_to(top - max(r.degree, 0))
        n_states = max(n_states, len(safe))
        if safe:
            max_checked = max(max_checked, max(space.degrees[i] for i in safe))
        witness = None
        for s in safe:
            out = apply_poly(r, assignment, {s: Fraction(1)})
            if out:
                witness = "on |%s>: %s" % (space.labels[s], _vec_str(out, space))
                break
        checks.append(RelatorCheck(str(r), witness is None, witness))
    return RelatorReport(checks, max_checked, n_states)


def green_relations(p: int, m: int) -> List[Tuple[str, int, int, NCPoly]]:
    """The defining relations of p anticommuting boson families.

    Returned as (kind, slot r, slot s, relator) with generators encoded as
    modes of a relabelled alphabet: slot r mode i becomes mode (r-1)*m + i.
    """
    G = NCPoly.gen
    rels = []
    for r, s in product(range(1, p + 1), repeat=2):
        for i, j in product(range(1, m + 1), repeat=2):
            a = lambda k, sg, slot: G((slot - 1) * m + k, sg)
            if r == s:
                rels.append(("ccr", r, s, a(i, MINUS, r) * a(j, PLUS, r) - a(j, PLUS, r) * a(i, MINUS, r) - NCPoly.unit(int(i == j))))
                rels.append(("ccr", r, s, a(i, MINUS, r) * a(j, MINUS, r) - a(j, MINUS, r) * a(i, MINUS, r)))
                rels.append(("ccr", r, s, a(i, PLUS, r) * a(j, PLUS, r) - a(j, PLUS, r) * a(i, PLUS, r)))
            else:
                rels.append(("anomalous", r, s, a(i, MINUS, r) * a(j, PLUS, s) + a(j, PLUS, s) * a(i, MINUS, r)))
                rels.append(("anomalous", r, s, a(i, MINUS, r) * a(j, MINUS, s) + a(j, MINUS, s) * a(i, MINUS, r)))
                rels.append(("anomalous", r, s, a(i, PLUS, r) * a(j, PLUS, s) + a(j, PLUS, s) * a(i, PLUS, r)))
    return [x for x in rels if not x[3].is_zero()]


def slot_assignment(slots: Sequence[Mapping[GenSym, SparseOperator]], m: int) -> Dict[GenSym, SparseOperator]:
    """Relabel per-slot generators into one alphabet (slot r mode i -> mode (r-1)m+i)."""
    out = {}
    for r, ops in enumerate(slots):
        for g, op in ops.items():
            out[GenSym(r * m + g.mode, g.sign)] = op
    return out


def verify_green_relations(p: int, m: int, N: int) -> RelatorReport:
    _check(p, m, N)
    assign = slot_assignment(slot_ops(p, m, N), m)
    rels = [r for _, _, _, r in green_relations(p, m)]
    return verify_relators_on_space(rels, assign, tensor_fock_space(p, m, N))


def verify_paraboson_relations(p: int, m: int, N: int) -> RelatorReport:
    _check(p, m, N)
    return verify_relators_on_space(paraboson_relators(m), green_ops(p, m, N), tensor_fock_space(p, m, N))


# --- the vacuum-generated submodule -------------------------------------------

@dataclass
class SubmoduleBasis:
    order: int
    modes: int
    cutoff: int
    space: TensorSpace = field(repr=False)
    vectors: List[Vec] = field(repr=False)
    degrees: List[int]
    words: List[Tuple[int, ...]]
    orth: List[Vec] = field(repr=False)
    norms: List[Fraction] = field(repr=False)
    lowering_closed: bool = True

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def block(self, d: int) -> List[int]:
        return [a for a, k in enumerate(self.degrees) if k == d]

    def block_dims(self) -> List[int]:
        return [len(self.block(d)) for d in range(self.cutoff + 1)]

    @property
    def weights(self) -> Tuple[int, ...]:
        return tensor_gram(self.order, self.modes, self.cutoff)

    def word_str(self, a: int) -> str:
        w = self.words[a]
        return " ".join("B%d+" % i for i in w) + (" |0>" if w else "|0>")

    def coordinates(self, vec: Vec, d: int) -> Optional[Dict[int, Fraction]]:
        """Coefficients of ``vec`` along the orthogonal basis of block d, or
        None if ``vec`` is not in the span of that block."""
        wts = self.weights
        coords = {}
        resid = dict(vec)
        for a in self.block(d):
            c = inner(self.orth[a], vec, wts) / self.norms[a]
            if c:
                coords[a] = c
                axpy(resid, -c, self.orth[a])
        return None if resid else coords


def focklike_closure(p: int, m: int, N: int) -> SubmoduleBasis:
    """Span of creation polynomials applied to the vacuum, degree by degree."""
    _check(p, m, N)
    space = tensor_fock_space(p, m, N)
    ops = green_ops(p, m, N)
    wts = tensor_gram(p, m, N)
    raise_ = [ops[GenSym(i, PLUS)] for i in range(1, m + 1)]

    vectors: List[Vec] = [vacuum(space)]
    degrees = [0]
    words: List[Tuple[int, ...]] = [()]
    prev = [0]
    for d in range(1, N + 1):
        cands = sorted(((i + 1,) + words[a], a, i) for a in prev for i in range(m))
        ech = Echelon()
        cur = []
        for w, a, i in cands:
            v = raise_[i].apply(vectors[a])
            if ech.add(v):
                cur.append(len(vectors))
                vectors.append(v)
                degrees.append(d)
                words.append(w)
        prev = cur

    orth: List[Vec] = []
    norms: List[Fraction] = []
    for a, v in enumerate(vectors):
        g = dict(v)
        for b in range(a):
            if degrees[b] == degrees[a]:
                c = inner(v, orth[b], wts) / norms[b]
                if c:
                    axpy(g, -c, orth[b])
        orth.append(g)
        norms.append(inner(g, g, wts))

    basis = SubmoduleBasis(p, m, N, space, vectors, degrees, words, orth, norms)
    lower = [ops[GenSym(i, MINUS)] for i in range(1, m + 1)]
    basis.lowering_closed = all(
        basis.coordinates(op.apply(v), degrees[a] - 1) is not None
        for a, v in enumerate(vectors) if degrees[a] > 0 for op in lower
    )
    return basis


def gram_of_submodule(basis: SubmoduleBasis) -> List[List[Fraction]]:
    """Gram matrix of the creation-word vectors; block diagonal by degree."""
    wts = basis.weights
    n = basis.dim
    G = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            if basis.degrees[a] == basis.degrees[b]:
                G[a][b] = G[b][a] = inner(basis.vectors[a], basis.vectors[b], wts)
    return G


def gram_blocks(basis: SubmoduleBasis) -> Dict[int, List[List[Fraction]]]:
    G = gram_of_submodule(basis)
    out = {}
    for d in range(basis.cutoff + 1):
        idx = basis.block(d)
        out[d] = [[G[a][b] for b in idx] for a in idx]
    return out


def gram_positive_definite(basis: SubmoduleBasis) -> bool:
    return all(is_positive_definite(blk) for blk in gram_blocks(basis).values())


def vacuum_kernel_dims(basis: SubmoduleBasis) -> Dict[int, int]:
    """Dimension of the common kernel of all B_i^- inside each degree block."""
    ops = green_ops(basis.order, basis.modes, basis.cutoff)
    lower = [ops[GenSym(i, MINUS)] for i in range(1, basis.modes + 1)]
    dim = basis.space.dim
    out = {}
    for d in range(basis.cutoff + 1):
        idx = basis.block(d)
        if d == 0:
            out[d] = len(idx)
            continue
        # rank of the stacked lowering images of the block's basis vectors
        ech = Echelon()
        for a in idx:
            v = basis.vectors[a]
            stacked = {}
            for i, op in enumerate(lower):
                for k, c in op.apply(v).items():
                    stacked[i * dim + k] = c
            ech.add(stacked)
        out[d] = len(idx) - ech.rank
    return out


# --- carrier: F(p) as a module in its own basis -------------------------------

@dataclass
class FockLikeCarrier:
    """F(p) with the generators written as exact matrices in the orthogonal basis."""
    basis: SubmoduleBasis = field(repr=False)
    space: GradedSpace = field(repr=False)
    ops: Dict[GenSym, SparseOperator] = field(repr=False)

    @property
    def order(self) -> int:
        return self.basis.order

    @property
    def modes(self) -> int:
        return self.basis.modes

    @property
    def cutoff(self) -> int:
        return self.basis.cutoff


class ClosureError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def focklike_carrier(p: int, m: int, N: int) -> FockLikeCarrier:
    basis = focklike_closure(p, m, N)
    if not basis.lowering_closed:
        raise ClosureError("span not closed under lowering operators")
    labels = list(range(basis.dim))
    space = GradedSpace(labels, [d % 2 for d in basis.degrees], basis.degrees,
                        name="F(%d)[m=%d,N=%d]" % (p, m, N))
    amb = green_ops(p, m, N)
    ops = {}
    for g in generators(m):
        op = amb[g]
        entries = {}
        for b, gb in enumerate(basis.orth):
            d = basis.degrees[b] + (1 if g.sign == PLUS else -1)
            if d < 0 or d > N:
                continue
            coords = basis.coordinates(op.apply(gb), d)
            if coords is None:
                raise ClosureError("image of basis vector %d under %s leaves F(%d)" % (b, g, p))
            for a, c in coords.items():
                entries[a, b] = c
        ops[g] = SparseOperator(space, space, entries, 1)
    return FockLikeCarrier(basis, space, ops)


@dataclass
class MatrixElements:
    order: int
    modes: int
    cutoff: int
    norms: List[Tuple[int, int, str, Fraction]]          # (index, degree, word, squared norm)
    elements: List[Tuple[str, int, int, Fraction]]        # (generator, row, col, value)


def matrix_elements(p: int, m: int, N: int) -> MatrixElements:
    car = focklike_carrier(p, m, N)
    b = car.basis
    norms = [(a, b.degrees[a], b.word_str(a), b.norms[a]) for a in range(b.dim)]
    elems = []
    for g in generators(m):
        for (r, c), x in sorted(car.ops[g].entries.items(), key=lambda t: (t[0][1], t[0][0])):
            elems.append((str(g), r, c, x))
    return MatrixElements(p, m, N, norms, elems)


def adjointness_defects(p: int, m: int, N: int, pairs: int = 200, seed: int = 0) -> int:
    """Count random pairs (u, v) in F(p) with <B_i^+ u, v> != <u, B_i^- v>."""
    basis = focklike_closure(p, m, N)
    ops = green_ops(p, m, N)
    wts = basis.weights
    rng = random.Random(seed)
    low = [a for a in range(basis.dim) if basis.degrees[a] < N]
    allv = list(range(basis.dim))
    bad = 0
    for _ in range(pairs):
        u: Vec = {}
        v: Vec = {}
        for a in rng.sample(low, min(3, len(low))):
            axpy(u, Fraction(rng.randint(-5, 5), rng.randint(1, 4)), basis.vectors[a])
        for a in rng.sample(allv, min(3, len(allv))):
            axpy(v, Fraction(rng.randint(-5, 5), rng.randint(1, 4)), basis.vectors[a])
        i = rng.randint(1, m)
        lhs = inner(ops[GenSym(i, PLUS)].apply(u), v, wts)
        rhs = inner(u, ops[GenSym(i, MINUS)].apply(v), wts)
        bad += lhs != rhs
    return bad


def vacuum_eigenvalues(ops: Assignment, m: int, vac: Vec) -> Dict[Tuple[int, int], Optional[Fraction]]:
    """For each (i, j): lambda with B_i^- B_j^+ |0> = lambda |0>, or None if
    the image is not proportional to the vacuum."""
    (k0, c0), = vac.items()
    out = {}
    for i, j in product(range(1, m + 1), repeat=2):
        img = ops[GenSym(i, MINUS)].apply(ops[GenSym(j, PLUS)].apply(vac))
        if not img:
            out[i, j] = Fraction(0)
        elif set(img) == {k0}:
            out[i, j] = Fraction(img[k0]) / c0
        else:
            out[i, j] = None
    return out


@dataclass
class ProfileRow:
    n: int
    norm2: Fraction
    ratio: Optional[Fraction]
    expected_ratio: int
    lowering: Fraction
    expected_lowering: int


def single_paraboson_profile(p: int, n_max: int) -> List[ProfileRow]:
    """Norm ratios and lowering coefficients of f_n = (B^+)^n |0> in F(p), m = 1."""
    if n_max < 0:
        raise InvalidArgument("n_max must be >= 0")
    N = n_max + 1
    basis = focklike_closure(p, 1, N)
    if basis.block_dims() != [1] * (N + 1):
        raise ClosureError("single-mode F(%d) blocks are not one-dimensional" % p)
    f = basis.vectors
    wts = basis.weights
    norms = [inner(v, v, wts) for v in f]
    lower = green_ops(p, 1, N)[GenSym(1, MINUS)]
    rows = []
    for n in range(n_max + 1):
        if n == 0:
            c = Fraction(0) if not lower.apply(f[0]) else None
        else:
            img = lower.apply(f[n])
            k = next(iter(f[n - 1]))
            c = Fraction(img.get(k, 0)) / f[n - 1][k]
            if {kk: c * x for kk, x in f[n - 1].items()} != img:
                raise ClosureError("B^- f_%d is not proportional to f_%d" % (n, n - 1))
        even = n % 2 == 0
        rows.append(ProfileRow(
            n, norms[n], norms[n + 1] / norms[n],
            n + p if even else n + 1,
            Fraction(c),
            n if even else n - 1 + p,
        ))
    return rows


@dataclass
class DimensionRow:
    degree: int
    submodule: int
    full: int


def dimension_table(p: int, m: int, N: int) -> List[DimensionRow]:
    basis = focklike_closure(p, m, N)
    space = basis.space
    rows = []
    for d, sub in enumerate(basis.block_dims()):
        rows.append(DimensionRow(d, sub, sum(1 for k in space.degrees if k == d)))
    return rows


# --- coproducts of relators acting on F(p1) (x) F(p2) -------------------------

def evaluate_tensor_poly(tp: TensorPoly, slots: Sequence[Assignment], vec: Vec) -> Vec:
    """Act with sum c (w_1 (x) ... (x) w_q) using embedded per-slot generators.

    (a_1 (x) ... (x) a_q) acts as E_1(a_1) ... E_q(a_q); the embedding signs
    reproduce the braided module action.
    """
    out: Vec = {}
    for t, c in tp.terms.items():
        v = vec
        for r in range(len(t) - 1, -1, -1):
            v = apply_word(t[r], slots[r], v)
            if not v:
                break
        if v:
            axpy(out, c, v)
    return out


def verify_coproduct_relators(p1: int, p2: int, m: int, N: int) -> RelatorReport:
    """Delta(r) for every paraboson relator r must vanish on F(p1) (x) F(p2)."""
    c1, c2 = focklike_carrier(p1, m, N), focklike_carrier(p2, m, N)
    space = TensorSpace([c1.space, c2.space], max_degree=N)
    slots = [{g: embed_at(op, r, space) for g, op in car.ops.items()}
             for r, car in ((1, c1), (2, c2))]
    checks = []
    safe = space.states_up_to(N - 3)
    for rel in paraboson_relators(m):
        tp = coproduct(rel)
        witness = None
        for s in safe:
            out = evaluate_tensor_poly(tp, slots, {s: Fraction(1)})
            if out:
                witness = "on |%s>: %s" % (space.labels[s], _vec_str(out, space))
                break
        checks.append(RelatorCheck(str(rel), witness is None, witness))
    return RelatorReport(checks, max((space.degrees[s] for s in safe), default=-1), len(safe))

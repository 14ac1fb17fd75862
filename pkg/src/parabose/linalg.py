"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping an integer column key to a nonzero Fraction (or
int).  Column order is the natural integer order; the leading key of a row is
its largest key.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

Vec = Dict[int, Fraction]


def axpy(y: Vec, a, x: Vec) -> None:
    """y += a * x in place, dropping zeros."""
    if not a:
        return
    for k, v in x.items():
        t = y.get(k, 0) + a * v
        if t:
            y[k] = t
        else:
            y.pop(k, None)


def scaled(x: Vec, a) -> Vec:
    if a == 0:
        return {}
    return {k: a * v for k, v in x.items()}


def add(x: Vec, y: Vec) -> Vec:
    out = dict(x)
    axpy(out, 1, y)
    return out


class Echelon:
    """Row echelon basis built one vector at a time.

    Rows are normalized to leading coefficient 1 and have pairwise distinct
    leading keys.  :meth:`interreduce` turns the basis into reduced row
    echelon form, which is unique for a given span.
    """

    def __init__(self) -> None:
        self.rows: Dict[int, Vec] = {}
        self.reduced = True

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _top_reduce(self, vec: Vec) -> Vec:
        rows = self.rows
        while vec:
            lead = max(vec)
            row = rows.get(lead)
            if row is None:
                break
            axpy(vec, -vec[lead], row)
        return vec

    def add(self, vec: Vec) -> bool:
        """Insert ``vec``; return True iff it was independent of the rows."""
        v = self._top_reduce(dict(vec))
        if not v:
            return False
        lead = max(v)
        c = v[lead]
        if c != 1:
            inv = Fraction(1) / c
            v = {k: x * inv for k, x in v.items()}
        self.rows[lead] = v
        self.reduced = False
        return True

    def is_independent(self, vec: Vec) -> bool:
        return bool(self._top_reduce(dict(vec)))

    def interreduce(self) -> None:
        if self.reduced:
            return
        done: Dict[int, Vec] = {}
        for lead in sorted(self.rows):
            row = dict(self.rows[lead])
            # pivots below this lead are already fully reduced
            for k in sorted((k for k in row if k != lead and k in done), reverse=True):
                c = row.get(k)
                if c:
                    axpy(row, -c, done[k])
            done[lead] = row
        self.rows = done
        self.reduced = True

    def reduce(self, vec: Vec) -> Vec:
        """Normal form of ``vec``: no remaining key is a pivot."""
        self.interreduce()
        out = dict(vec)
        hits = [(k, c) for k, c in vec.items() if k in self.rows]
        for k, c in hits:
            axpy(out, -c, self.rows[k])
        return out

    def sorted_rows(self) -> List[Vec]:
        """Rows in descending order of their leading key."""
        self.interreduce()
        return [self.rows[k] for k in sorted(self.rows, reverse=True)]


def rank(vectors: Sequence[Vec]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def ldl_pivots(matrix: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """Pivots of the symmetric elimination A = L D L^T, without row exchanges.

    Stops at the first non-positive pivot, which is returned as the last entry;
    a symmetric matrix is positive definite iff every returned pivot is > 0 and
    the list has full length.
    """
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    pivots: List[Fraction] = []
    for k in range(n):
        d = a[k][k]
        pivots.append(d)
        if d <= 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return pivots


def is_positive_definite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    n = len(matrix)
    for i in range(n):
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                return False
    piv = ldl_pivots(matrix)
    return len(piv) == n and all(d > 0 for d in piv)

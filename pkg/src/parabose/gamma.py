"""The order-2 relation set on its Fock carrier, and the generalized ansatz.

The order-2 algebra has no known confluent normal form, so it is realized
concretely on F(2): the vacuum-generated submodule of two anticommuting boson
families.  The generalized ansatz is the q-fold braided tensor power of that
carrier, with the paraboson generators acting as sums of slot generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .braided import TensorSpace, anticommutator, embed_at
from .fock import (FockLikeCarrier, RelatorCheck, RelatorReport, focklike_carrier, slot_assignment,
                   vacuum_eigenvalues, verify_relators_on_space)
from .freealg import (MINUS, PLUS, GenSym, InvalidArgument, NCPoly, gamma2_relators, generators,
                      paraboson_relators)
from .ideals import DEFAULT_BOUND, InclusionReport, ideal_inclusion_check, minimal_witness_bound


def gamma2_carrier(m: int, N: int) -> FockLikeCarrier:
    return focklike_carrier(2, m, N)


def verify_gamma2_relations(m: int, N: int, order: int = 2) -> RelatorReport:
    """Evaluate every order-2 relator on the F(order) carrier.

    With ``order`` other than 2 this is the negative control: the relations
    are specific to order 2.
    """
    car = focklike_carrier(order, m, N)
    return verify_relators_on_space(gamma2_relators(m), car.ops, car.space)


def verify_custom_relators(relators: Sequence[NCPoly], order: int, m: int, N: int) -> RelatorReport:
    """Carrier check for user-supplied relators against F(order)."""
    for r in relators:
        bad = [k for k in r.modes() if k > m]
        if bad:
            raise InvalidArgument("relator %s uses mode %d > %d" % (r, max(bad), m))
    car = focklike_carrier(order, m, N)
    return verify_relators_on_space(relators, car.ops, car.space)


@dataclass
class AnsatzReport:
    factors: int
    modes: int
    cutoff: int
    slot_relations: RelatorReport
    cross_slot: List[RelatorCheck]
    paraboson: RelatorReport
    vacuum_eigenvalues: Dict[Tuple[int, int], Optional[Fraction]]
    dim: int = 0

    @property
    def eigenvalue(self) -> Optional[Fraction]:
        """The common lambda in B_i^- B_j^+ |0> = lambda d_ij |0>, if consistent."""
        diag = {v for (i, j), v in self.vacuum_eigenvalues.items() if i == j}
        off = [v for (i, j), v in self.vacuum_eigenvalues.items() if i != j]
        if len(diag) != 1 or any(v != 0 for v in off):
            return None
        return diag.pop()

    @property
    def passed(self) -> bool:
        return (self.slot_relations.passed and all(c.ok for c in self.cross_slot)
                and self.paraboson.passed and self.eigenvalue is not None)


def generalized_ansatz(q: int, m: int, N: int) -> AnsatzReport:
    if q < 1:
        raise InvalidArgument("factor count must be >= 1, got %r" % (q,))
    car = gamma2_carrier(m, N)
    space = TensorSpace([car.space] * q, max_degree=N)
    slots = [{g: embed_at(op, r, space) for g, op in car.ops.items()} for r in range(1, q + 1)]

    # order-2 relations inside each slot, in a relabelled alphabet
    rels = gamma2_relators(m)
    per_slot = []
    for r in range(q):
        shift = {GenSym(k, s): GenSym(r * m + k, s) for k in range(1, m + 1) for s in (PLUS, MINUS)}
        for rel in rels:
            per_slot.append(NCPoly({tuple(shift[g] for g in w): c for w, c in rel.terms.items()}))
    slot_rep = verify_relators_on_space(per_slot, slot_assignment(slots, m), space)

    # distinct slots anticommute; degree-2 identities checked on states of degree <= N-2
    safe = set(space.states_up_to(N - 2))
    cross = []
    for r, s in product(range(q), repeat=2):
        if r == s:
            continue
        for a, b in product(generators(m), repeat=2):
            op = anticommutator(slots[r][a], slots[s][b]).restrict_columns(safe)
            cross.append(RelatorCheck("{%s^(%d), %s^(%d)}" % (a, r + 1, b, s + 1), op.is_zero(),
                                      None if op.is_zero() else "nonzero on safe domain"))

    total = {}
    for g in generators(m):
        acc = slots[0][g]
        for sl in slots[1:]:
            acc = acc + sl[g]
        total[g] = acc
    pb_rep = verify_relators_on_space(paraboson_relators(m), total, space)
    eig = vacuum_eigenvalues(total, m, {0: Fraction(1)}) if N >= 1 else {}
    return AnsatzReport(q, m, N, slot_rep, cross, pb_rep, eig, space.dim)


@dataclass
class Gamma2IdealReport:
    forward: InclusionReport          # paraboson relators inside the order-2 ideal
    converse: InclusionReport         # order-2 relators inside the paraboson ideal
    minimal_bound: Optional[int]

    @property
    def passed(self) -> bool:
        return self.forward.passed


def gamma2_ideal_check(m: int, bound: int = DEFAULT_BOUND) -> Gamma2IdealReport:
    pb, g2 = paraboson_relators(m), gamma2_relators(m)
    fwd = ideal_inclusion_check(pb, g2, m, bound)
    conv = ideal_inclusion_check(g2, pb, m, bound)
    return Gamma2IdealReport(fwd, conv, minimal_witness_bound(pb, g2, m, bound))

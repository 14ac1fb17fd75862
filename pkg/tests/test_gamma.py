from fractions import Fraction

import pytest

from oracles import KleinGreen
from parabose.exprlang import parse_relator_file
from parabose.fock import ClosureError
from parabose.freealg import MINUS, PLUS, InvalidArgument, NCPoly, gamma2_family, gamma2_relators
from parabose.gamma import (gamma2_carrier, gamma2_ideal_check, generalized_ansatz, verify_custom_relators,
                            verify_gamma2_relations)


def test_carrier_basics():
    car = gamma2_carrier(2, 4)
    assert car.order == 2 and car.modes == 2
    assert car.basis.block(0) == [0]
    for op in car.ops.values():
        assert op.parity == 1
        for (r, c) in op.entries:
            assert abs(car.space.degrees[r] - car.space.degrees[c]) == 1


@pytest.mark.parametrize("m,N", [(1, 6), (2, 5), (2, 6)])
def test_gamma2_relations_hold_on_F2(m, N):
    rep = verify_gamma2_relations(m, N)
    assert rep.passed
    assert len(rep.checks) == len(gamma2_relators(m))


def test_gamma2_relations_fail_on_F3():
    rep = verify_gamma2_relations(2, 5, order=3)
    assert not rep.passed
    assert len(rep.failures) == 16


def _first_family_112(kg, v):
    """(<B1-, B1+, B2-> - 2 B2-) v in the Klein construction, by matrix-vector steps."""
    b = lambda i, s, x: kg.green(i, s).dot(x)
    return (b(1, MINUS, b(1, PLUS, b(2, MINUS, v))) - b(2, MINUS, b(1, PLUS, b(1, MINUS, v)))
            - 2 * b(2, MINUS, v))


def test_gamma2_relator_in_klein_oracle():
    kg = KleinGreen(3, 2, 2)
    assert any(_first_family_112(kg, kg.green(2, PLUS).dot(kg.vac)))
    kg = KleinGreen(2, 2, 3)
    one = kg.green(2, PLUS).dot(kg.vac)
    for v in (one, kg.green(1, PLUS).dot(one)):
        assert not any(_first_family_112(kg, v))


def test_sixth_family_vanishes():
    rels = [gamma2_family(6, 1, 2, 1), gamma2_family(6, 2, 1, 1)]
    assert verify_custom_relators(rels, 2, 2, 5).passed


def test_custom_relators():
    rels = parse_relator_file("# boson ccr\n[B1-, B1+] - I\n", 1)
    assert verify_custom_relators(rels, 1, 1, 5).passed
    assert not verify_custom_relators(rels, 2, 1, 5).passed
    with pytest.raises(InvalidArgument):
        verify_custom_relators([NCPoly.gen(3, PLUS)], 2, 2, 3)


def test_ansatz_single_factor_reduces_to_carrier():
    rep = generalized_ansatz(1, 2, 4)
    assert rep.passed and rep.cross_slot == []
    assert rep.eigenvalue == 2


def test_ansatz_two_factors():
    rep = generalized_ansatz(2, 2, 4)
    assert rep.slot_relations.passed
    assert rep.cross_slot and all(c.ok for c in rep.cross_slot)
    assert rep.paraboson.passed
    # oracle: F(2) (x) F(2) sits inside four Klein-coupled boson families,
    # whose vacuum eigenvalue is the number of families
    kg = KleinGreen(4, 2, 1)
    img = kg.green(1, MINUS).dot(kg.green(1, PLUS).dot(kg.vac))
    assert list(img) == [4] + [0] * (len(img) - 1)
    cross = kg.green(2, MINUS).dot(kg.green(1, PLUS).dot(kg.vac))
    assert not any(cross)
    assert rep.eigenvalue == 4


def test_ansatz_three_factors_eigenvalue():
    rep = generalized_ansatz(3, 1, 3)
    assert rep.passed
    assert rep.eigenvalue == 6


def test_ansatz_bad_q():
    with pytest.raises(InvalidArgument):
        generalized_ansatz(0, 1, 2)


def test_gamma2_ideal_check():
    rep = gamma2_ideal_check(2, 5)
    assert rep.passed
    assert rep.forward.passed
    assert not rep.converse.passed
    assert rep.minimal_bound == 3
    assert gamma2_ideal_check(1, 3).passed

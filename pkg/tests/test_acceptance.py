"""Acceptance criteria, one test each.  All comparisons are exact."""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product
from math import comb
from pathlib import Path

from parabose.fock import (adjointness_defects, boson_ops, dimension_table, focklike_closure, gram_blocks,
                           green_ops, single_paraboson_profile, verify_green_relations,
                           verify_paraboson_relations, vacuum_eigenvalues)
from parabose.freealg import (MINUS, PLUS, NCPoly, boson_relators, gamma2_relators, generators,
                              paraboson_relators)
from parabose.gamma import generalized_ansatz, verify_gamma2_relations
from parabose.hopf import check_hopf_axioms, insertion_sequences, iterated_by_positions, iterated_coproduct
from parabose.ideals import ideal_inclusion_check
from parabose.linalg import ldl_pivots

from oracles import KleinGreen

GOLDEN = Path(__file__).parent / "golden"


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, "took %.1fs, budget %ss" % (self.elapsed, self.seconds)


def test_criterion_01_green_relations():
    with Budget(10):
        for p, m in product((1, 2, 3), (1, 2)):
            rep = verify_green_relations(p, m, 6)
            assert rep.passed, (p, m, [c.witness for c in rep.failures])


def test_criterion_02_paraboson_homomorphism():
    with Budget(30):
        for p, m in product((1, 2, 3), (1, 2)):
            rep = verify_paraboson_relations(p, m, 6)
            assert rep.passed, (p, m)
            assert len(rep.checks) == len(paraboson_relators(m))
    assert len(paraboson_relators(2)) == 36


def test_criterion_03_order_eigenvalue():
    with Budget(1):
        for p in (1, 2, 3, 4):
            eig = vacuum_eigenvalues(green_ops(p, 2, 2), 2, {0: Fraction(1)})
            assert eig == {(i, j): p * (i == j) for i, j in product((1, 2), repeat=2)}


def test_criterion_04_single_paraboson_profile():
    with Budget(5):
        for p in (1, 2, 3, 4):
            for r in single_paraboson_profile(p, 10):
                k, odd = divmod(r.n, 2)
                assert r.ratio == (2 * k + 2 if odd else 2 * k + p)
                assert r.lowering == (2 * k + p if odd else 2 * k)


def test_criterion_05_order_one_collapse():
    with Budget(1):
        for m in (1, 2, 3):
            for row in dimension_table(1, m, 5):
                assert row.submodule == row.full == comb(m + row.degree - 1, row.degree)
            G, B = green_ops(1, m, 5), boson_ops(m, 5)
            for g in generators(m):
                assert G[g].entries == B[g].entries


def test_criterion_06_reducibility_witness():
    with Budget(5):
        rows = dimension_table(2, 2, 4)
    assert any(r.submodule < r.full for r in rows)
    assert [(r.submodule, r.full) for r in rows] == [(1, 1), (2, 4), (4, 10), (6, 20), (9, 35)]
    golden = json.loads((GOLDEN / "verify_all.json").read_text())
    rec = next(c for c in golden["checks"] if c["check_id"] == "dimensions")
    assert rec["parameters"]["submodule"][:5] == [r.submodule for r in rows]


def test_criterion_07_hopf_axioms():
    with Budget(5):
        rep = check_hopf_axioms(2, max_arity=4)
        assert rep.passed, rep.failures
        rng = random.Random(2024)
        gens = generators(2)
        for _ in range(100):
            w = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            p = NCPoly.word(w)
            for q in (3, 4):
                direct = iterated_coproduct(p, q)
                assert all(iterated_by_positions(p, s) == direct for s in insertion_sequences(q)), w


def test_criterion_08_ideal_inclusions():
    with Budget(60):
        pb, bos, g2 = paraboson_relators(2), boson_relators(2), gamma2_relators(2)
        assert ideal_inclusion_check(pb, bos, 2, 5).passed
        assert ideal_inclusion_check(pb, g2, 2, 5).passed
        rev = ideal_inclusion_check(bos, pb, 2, 5)
        assert not rev.passed


def test_criterion_09_gamma2_carrier():
    with Budget(30):
        assert verify_gamma2_relations(2, 5).passed
        assert len(verify_gamma2_relations(2, 5, order=3).failures) >= 1


def test_criterion_10_generalized_ansatz():
    with Budget(60):
        rep = generalized_ansatz(2, 2, 4)
        assert rep.slot_relations.passed
        assert all(c.ok for c in rep.cross_slot)
        assert rep.paraboson.passed
        # brute-force oracle: the composite vacuum of two order-2 slots behaves like
        # four Klein-coupled boson families
        kg = KleinGreen(4, 2, 1)
        img = kg.green(1, MINUS).dot(kg.green(1, PLUS).dot(kg.vac))
        assert rep.eigenvalue == img[0] == 4


def test_criterion_11_adjointness_and_positivity():
    with Budget(30):
        for p in (1, 2, 3):
            assert adjointness_defects(p, 2, 5, pairs=200, seed=p) == 0
            for d, blk in gram_blocks(focklike_closure(p, 2, 5)).items():
                piv = ldl_pivots(blk)
                assert len(piv) == len(blk) and all(x > 0 for x in piv), (p, d)


def _verify_all():
    out = subprocess.run([sys.executable, "-m", "parabose", "verify", "--suite", "all"],
                         capture_output=True, check=False)
    assert out.returncode == 0, out.stderr.decode()
    return out.stdout


def test_criterion_12_determinism():
    with Budget(300):
        a, b = _verify_all(), _verify_all()
    assert a == b
    assert a == (GOLDEN / "verify_all.json").read_bytes()

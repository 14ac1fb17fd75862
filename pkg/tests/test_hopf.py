import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from parabose.freealg import MINUS, PLUS, GenSym, InvalidArgument, NCPoly, generators
from parabose.hopf import (TensorPoly, antipode, apply_coproduct_at, braided_mul, check_hopf_axioms, coproduct,
                           counit, insertion_sequences, iterated_by_positions, iterated_coproduct)

I = ()
b1p, b1m, b2p = GenSym(1, PLUS), GenSym(1, MINUS), GenSym(2, PLUS)
gensyms = st.builds(GenSym, st.integers(1, 2), st.sampled_from([PLUS, MINUS]))
words = st.lists(gensyms, max_size=4).map(tuple)


def shuffle_oracle(word, q):
    """Sum over slot assignments of the letters, with the Koszul sign of the
    stable sort that brings each letter to its slot (all letters are odd)."""
    out = {}
    for assign in product(range(q), repeat=len(word)):
        inv = sum(1 for a in range(len(assign)) for b in range(a + 1, len(assign)) if assign[a] > assign[b])
        t = tuple(tuple(g for g, s in zip(word, assign) if s == r) for r in range(q))
        out[t] = out.get(t, 0) + (-1) ** inv
    return TensorPoly(q, out)


def test_coproduct_examples():
    assert coproduct(NCPoly.unit()) == TensorPoly(2, {(I, I): 1})
    assert coproduct(NCPoly.gen(1, PLUS)) == TensorPoly(2, {(I, (b1p,)): 1, ((b1p,), I): 1})
    want = TensorPoly(2, {((b1p, b1m), I): 1, ((b1p,), (b1m,)): 1, ((b1m,), (b1p,)): -1, (I, (b1p, b1m)): 1})
    assert coproduct(NCPoly.word((b1p, b1m))) == want


@given(words, st.integers(2, 4))
@settings(max_examples=60)
def test_iterated_coproduct_matches_shuffle_oracle(w, q):
    assert iterated_coproduct(NCPoly.word(w), q) == shuffle_oracle(w, q)


def test_iterated_coproduct_examples():
    assert len(iterated_coproduct(NCPoly.gen(1, PLUS), 3)) == 3
    assert iterated_coproduct(NCPoly.unit(), 4) == TensorPoly.unit(4)
    with pytest.raises(InvalidArgument):
        iterated_coproduct(NCPoly.gen(1, PLUS), 1)


@given(words, words)
@settings(max_examples=60)
def test_coproduct_is_braided_homomorphism(u, v):
    U, V = NCPoly.word(u), NCPoly.word(v)
    assert coproduct(U * V) == braided_mul(coproduct(U), coproduct(V))


@given(words)
def test_maps_are_even(w):
    p = NCPoly.word(w)
    d = coproduct(p)
    assert all(sum(len(x) for x in t) % 2 == len(w) % 2 for t in d.terms)
    assert antipode(p).parity == p.parity


def test_counit_examples():
    assert counit(NCPoly.unit()) == 1
    assert counit(NCPoly.gen(1, PLUS)) == 0
    assert counit(NCPoly.unit(3) + NCPoly.word((b1p, b1m))) == 3


def test_antipode_examples():
    assert antipode(NCPoly.gen(1, PLUS)) == -NCPoly.gen(1, PLUS)
    assert antipode(NCPoly.word((b1p, b2p))) == -NCPoly.word((b2p, b1p))
    assert antipode(NCPoly.unit()) == NCPoly.unit()


@given(words, words)
def test_antipode_braided_antihomomorphism(u, v):
    U, V = NCPoly.word(u), NCPoly.word(v)
    sign = -1 if len(u) % 2 and len(v) % 2 else 1
    assert antipode(U * V) == antipode(V) * antipode(U) * sign


def test_hopf_axioms_on_generators():
    rep = check_hopf_axioms(2)
    assert rep.passed, rep.failures
    laws = {law for law, _, _ in rep.checks}
    assert laws == {"coassociativity", "counit", "antipode", "position-independence"}
    assert len(rep.checks) == 4 * 4


def test_coassociativity_on_generator_gives_three_slots():
    d = coproduct(NCPoly.gen(1, PLUS))
    assert apply_coproduct_at(d, 0) == apply_coproduct_at(d, 1) == iterated_coproduct(NCPoly.gen(1, PLUS), 3)


def test_position_independence_random_words():
    rng = random.Random(7)
    gens = generators(2)
    for _ in range(100):
        w = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
        p = NCPoly.word(w)
        for q in (3, 4):
            direct = iterated_coproduct(p, q)
            assert all(iterated_by_positions(p, s) == direct for s in insertion_sequences(q))


def test_insertion_sequences():
    assert insertion_sequences(2) == [()]
    assert insertion_sequences(4) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

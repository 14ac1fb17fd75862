from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from parabose.exprlang import (Anticommutator, Commutator, Expr, Gen, Group, ParseError, Term, Triple, Unit,
                               parse, parse_expr, parse_relator_file, to_poly, to_text)
from parabose.freealg import (MINUS, PLUS, GenSym, InvalidArgument, NCPoly, gamma2_relators,
                              paraboson_relators)

b1p, b1m, b2p, b2m = GenSym(1, PLUS), GenSym(1, MINUS), GenSym(2, PLUS), GenSym(2, MINUS)


def test_examples():
    assert parse_expr("[B1-, B1+] - I") == NCPoly.word((b1m, b1p)) - NCPoly.word((b1p, b1m)) - NCPoly.unit()
    assert parse_expr("<B1-, B1+, B2->") == NCPoly.word((b1m, b1p, b2m)) - NCPoly.word((b2m, b1p, b1m))
    assert parse_expr("2/3 B1+ B2+") == NCPoly.word((b1p, b2p), Fraction(2, 3))


def test_brackets_and_groups():
    assert parse_expr("{B1+, B2+}") == NCPoly.word((b1p, b2p)) + NCPoly.word((b2p, b1p))
    assert parse_expr("(B1+ + B2+) B1-") == NCPoly.word((b1p, b1m)) + NCPoly.word((b2p, b1m))
    assert parse_expr("B1+B1-") == NCPoly.word((b1p, b1m))
    assert parse_expr("  B1+\n  B1- ") == NCPoly.word((b1p, b1m))


@pytest.mark.parametrize("text,line,col", [
    ("B1+ +", 1, 6),
    ("[B1+ B2+]", 1, 9),
    ("B+", 1, 1),
    ("B1 +", 1, 3),
    ("B1+ * B2+", 1, 5),
    ("B1+\n  ]", 2, 3),
    ("1/0 B1+", 1, 1),
])
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as ei:
        parse(text)
    assert (ei.value.line, ei.value.col) == (line, col)
    assert str(ei.value).startswith("%d:%d:" % (line, col))


def test_unknown_mode():
    with pytest.raises(InvalidArgument):
        parse_expr("B3+", modes=2)
    assert parse_expr("B3+") == NCPoly.gen(3, PLUS)


def test_relator_file():
    text = "# comment\n\n[B1-, B1+] - I   # ccr\n{B1+, B1+}\n"
    rels = parse_relator_file(text, 1)
    assert len(rels) == 2
    with pytest.raises(ParseError) as ei:
        parse_relator_file("B1+\nB1+ ]\n", 1)
    assert ei.value.line == 2
    with pytest.raises(ParseError) as ei:
        parse_relator_file("B1+\n\nB2+\n", 1)
    assert ei.value.line == 3


def test_builtin_relators_roundtrip_through_text():
    for r in paraboson_relators(2) + gamma2_relators(2):
        assert parse_expr(str(r)) == r


def _exprs(depth):
    gen = st.builds(Gen, st.integers(1, 3), st.sampled_from([PLUS, MINUS]))
    base = st.one_of(gen, st.just(Unit()))
    if depth == 0:
        atom = base
    else:
        sub = _exprs(depth - 1)
        atom = st.one_of(base, st.builds(Commutator, sub, sub), st.builds(Anticommutator, sub, sub),
                         st.builds(Triple, sub, sub, sub), st.builds(Group, sub))
    coef = st.one_of(st.none(), st.fractions(0, 9, max_denominator=5))
    term = st.builds(Term, coef, st.lists(atom, min_size=1, max_size=3).map(tuple))
    return st.lists(st.tuples(st.sampled_from([1, -1]), term), min_size=1, max_size=3).map(
        lambda ts: Expr(tuple(ts)))


@given(_exprs(2))
@settings(max_examples=80, deadline=None)
def test_parse_print_fixed_point(e):
    assert parse(to_text(e)) == e


@given(_exprs(1))
@settings(max_examples=100, deadline=None)
def test_printed_text_lowers_to_same_poly(e):
    assert to_poly(parse(to_text(e))) == to_poly(e)

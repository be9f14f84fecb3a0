import pytest
from hypothesis import given, strategies as st

from solvcore.errors import AlphabetError, ParseError
from solvcore.groups import (INFINITE, FiniteCyclic, FreeAbelian, FreeSolvable, Wreath, cp, csp,
                             from_exponents, order, parse_group, pp, same, wp)
from solvcore.words import IDENTITY, Word, commutator, conj_by, parse_word, random_word

from conftest import words

X1, X2 = Word((1,)), Word((2,))
C = commutator(X1, X2)


def w(text, rank=2):
    return parse_word(text, rank)


def test_wp_examples():
    assert wp(FreeAbelian(2), w("x1 x2 X1 X2"))
    assert wp(FiniteCyclic(3), w("x1 x1 x1", 1))
    assert not wp(FreeSolvable(2, 2), C)
    assert wp(FreeSolvable(1, 2), C)


def test_cp_examples():
    assert cp(FreeAbelian(2), X1, w("x2 x1 X2"))
    assert not cp(FiniteCyclic(4), w("x1", 1), w("x1 x1", 1))
    assert cp(FreeSolvable(2, 2), C, conj_by(X1, C))
    assert not cp(FreeSolvable(2, 2), C, w("x1 x1"))


def test_csp_examples():
    assert csp(FreeAbelian(2), w("x1 x2"), w("x2 x1")) == IDENTITY
    z = csp(FreeSolvable(2, 2), C, conj_by(X1, C))
    assert z is not None and same(FreeSolvable(2, 2), conj_by(z, C), conj_by(X1, C))
    assert csp(FiniteCyclic(3), w("x1", 1), w("x1 x1", 1)) is None


def test_pp_examples():
    Z2 = FreeAbelian(2)
    assert pp(Z2, from_exponents((6, -4)), from_exponents((3, -2))) == 2
    assert pp(Z2, from_exponents((3, 2)), from_exponents((6, 4))) is None
    assert pp(Z2, IDENTITY, X1) == 0
    assert pp(Z2, X1, IDENTITY) is None
    assert pp(Z2, from_exponents((4, 0)), from_exponents((2, 0))) == 2
    assert pp(Z2, from_exponents((4, 1)), from_exponents((2, 0))) is None


def test_pp_cyclic():
    Z6 = FiniteCyclic(6)
    n = pp(Z6, w("x1 x1 x1 x1", 1), w("x1 x1 x1 x1 x1", 1))
    assert n is not None and (5 * n) % 6 == 4
    assert pp(Z6, w("x1", 1), w("x1 x1", 1)) is None


def test_order_examples():
    assert order(FreeSolvable(2, 2), C) == INFINITE
    assert order(FiniteCyclic(4), w("x1 x1", 1)) == 2
    for G in (FreeAbelian(2), FiniteCyclic(5), FreeSolvable(3, 2), Wreath(FiniteCyclic(2), FreeAbelian(1))):
        assert order(G, IDENTITY) == 1


def test_alphabet_checked_at_group_boundary():
    with pytest.raises(AlphabetError):
        wp(FreeAbelian(2), Word((3,)))
    with pytest.raises(AlphabetError):
        cp(FiniteCyclic(2), Word((1,)), Word((2,)))


@pytest.mark.parametrize("text, G", [
    ("S(3,2)", FreeSolvable(3, 2)),
    ("wr(Z^2,S(2,2))", Wreath(FreeAbelian(2), FreeSolvable(2, 2))),
    ("wr(Z/2, Z)", Wreath(FiniteCyclic(2), FreeAbelian(1))),
    ("Z/7", FiniteCyclic(7)),
    ("wr(wr(Z/2,Z),Z^2)", Wreath(Wreath(FiniteCyclic(2), FreeAbelian(1)), FreeAbelian(2))),
])
def test_parse_group(text, G):
    assert parse_group(text) == G
    assert parse_group(str(G)) == G


@pytest.mark.parametrize("text, pos", [("Z/0", 0), ("S(2,0)", 0), ("wr(Z,Z", 6), ("Q", 0), ("Z^2x", 3)])
def test_parse_group_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_group(text)
    assert info.value.position == pos


def test_degree_one_is_free_abelian(rng):
    for _ in range(1000):
        r = rng.randint(1, 3)
        u, v = random_word(r, rng.randint(0, 8), rng), random_word(r, rng.randint(0, 8), rng)
        S, Z = FreeSolvable(1, r), FreeAbelian(r)
        assert wp(S, u) == wp(Z, u)
        assert cp(S, u, v) == cp(Z, u, v)
        assert pp(S, u, v) == pp(Z, u, v)


@given(words(2, 8), st.integers(-5, 5))
def test_pp_round_trip_free_abelian(y, n):
    Z2 = FreeAbelian(2)
    if wp(Z2, y):
        return
    assert pp(Z2, y ** n, y) == n


@given(words(2, 6), words(2, 6), words(2, 3))
def test_cp_reflexive_symmetric(x, y, s):
    G = FreeSolvable(2, 2)
    assert cp(G, x, x)
    assert cp(G, x, conj_by(s, x))
    assert cp(G, x, y) == cp(G, y, x)

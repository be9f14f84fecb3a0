import csv

import pytest

from solvcore import oracle
from solvcore.errors import SizeExceededError
from solvcore.groups import FiniteCyclic, FreeSolvable, cp, same
from solvcore.words import IDENTITY, Word, conj_by, random_word

S22 = FreeSolvable(2, 2)
X1, X2 = Word((1,)), Word((2,))


@pytest.mark.parametrize("m, n, size", [(2, 3, 24), (2, 4, 64), (3, 2, 18)])
def test_table_sizes(m, n, size):
    T = oracle.enumerate_finite_wreath(FiniteCyclic(m), FiniteCyclic(n))
    assert len(T) == size
    assert T.elements[0] == (0, (0,) * n)
    assert all(T.mul[0][i] == i == T.mul[i][0] for i in range(size))
    assert all(T.mul[i][T.inv[i]] == 0 for i in range(size))


def test_table_is_associative():
    T = oracle.enumerate_finite_wreath(FiniteCyclic(2), FiniteCyclic(3))
    mul = T.mul
    r = range(len(T))
    assert all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a in r for b in r for c in r)


def test_table_matches_wreath_arithmetic():
    from solvcore.wreath import w_mul
    T = oracle.enumerate_finite_wreath(FiniteCyclic(3), FiniteCyclic(2))
    for i in range(len(T)):
        assert oracle.from_element(T, oracle.to_element(T, i)) == i
        for j in range(len(T)):
            e = w_mul(oracle.to_element(T, i), oracle.to_element(T, j), T.A, T.B)
            assert oracle.from_element(T, e) == T.mul[i][j]


def test_size_bound():
    with pytest.raises(SizeExceededError):
        oracle.enumerate_finite_wreath(FiniteCyclic(5), FiniteCyclic(8))
    with pytest.raises(SizeExceededError):
        oracle.enumerate_finite_wreath(FiniteCyclic(2), FiniteCyclic(4), bound=10)


def test_brute_conjugacy():
    T = oracle.enumerate_finite_wreath(FiniteCyclic(2), FiniteCyclic(3))
    assert oracle.brute_conjugacy(T, 5, 5) == 0
    classes = oracle.conjugacy_classes(T)
    assert sum(map(len, classes)) == len(T)
    a, b = classes[1][0], classes[2][0]
    assert oracle.brute_conjugacy(T, a, b) is None


def test_conjugacy_is_an_equivalence():
    T = oracle.enumerate_finite_wreath(FiniteCyclic(2), FiniteCyclic(3))
    n = len(T)
    rel = [[oracle.brute_conjugacy(T, i, j) is not None for j in range(n)] for i in range(n)]
    assert all(rel[i][i] for i in range(n))
    assert all(rel[i][j] == rel[j][i] for i in range(n) for j in range(n))
    assert all(rel[i][k] for i in range(n) for j in range(n) for k in range(n) if rel[i][j] and rel[j][k])


def test_classes_csv(tmp_path):
    T = oracle.enumerate_finite_wreath(FiniteCyclic(3), FiniteCyclic(2))
    path = tmp_path / "classes.csv"
    oracle.write_classes_csv(T, path)
    rows = list(csv.DictReader(open(path)))
    assert len(rows) == len(T)
    assert {r["class"] for r in rows} == {str(c) for c in range(len(oracle.conjugacy_classes(T)))}


def test_bounded_search_examples():
    x = X1 * X2 * X2
    s = X2 * ~X1
    z = oracle.bounded_conjugator_search(S22, x, conj_by(s, x), 3)
    assert z is not None and same(S22, conj_by(z, x), conj_by(s, x))
    assert oracle.bounded_conjugator_search(S22, x, x, 3) == IDENTITY
    assert oracle.bounded_conjugator_search(S22, X1, X2, 6) is None


def test_search_implies_decision(rng):
    for _ in range(40):
        x = random_word(2, rng.randint(1, 5), rng)
        y = conj_by(random_word(2, rng.randint(0, 3), rng), x) if rng.random() < 0.5 else random_word(2, 5, rng)
        if oracle.bounded_conjugator_search(S22, x, y, 3) is not None:
            assert cp(S22, x, y)


def test_orbit_matches_search():
    x = X1 * X2
    orbit = oracle.conjugate_orbit(S22, x, 2)
    for k, s in orbit.items():
        assert oracle.bounded_conjugator_search(S22, x, conj_by(s, x), 2) == s

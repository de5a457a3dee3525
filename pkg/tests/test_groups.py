import pytest
from hypothesis import given
from hypothesis import strategies as st

from ydnichols.errors import NotAGroup
from ydnichols.groups import DiagonalDatum, FiniteGroup
from ydnichols.cyclotomic import zeta


def group_axioms(G):
    n = G.order
    e = G.identity
    for x in range(n):
        assert G.mul(e, x) == x == G.mul(x, e)
        assert G.mul(x, G.inv(x)) == e
        for y in range(n):
            for z in range(n):
                assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=2))
def test_abelian_groups(factors):
    G = FiniteGroup.abelian(factors)
    order = 1
    for f in factors:
        order *= f
    assert G.order == order
    assert G.is_abelian()
    group_axioms(G)


@pytest.mark.parametrize("n,order", [(1, 1), (2, 2), (3, 6), (4, 24)])
def test_symmetric_groups(n, order):
    G = FiniteGroup.symmetric(n)
    assert G.order == order
    if n <= 3:
        group_axioms(G)
    assert G.is_abelian() == (n <= 2)


def test_cyclic_inverse():
    G = FiniteGroup.abelian([4])
    g = G.index((1,))
    assert G.inv(g) == G.power(g, 3)
    assert G.element_order(g) == 4
    assert G.exponent() == 4


def test_conjugacy_and_centralizer_in_s3():
    G = FiniteGroup.symmetric(3)
    t = G.index((1, 0, 2))
    c = G.index((1, 2, 0))
    assert len(G.conjugacy_class(t)) == 3
    assert len(G.conjugacy_class(c)) == 2
    assert len(G.centralizer(t)) == 2 and len(G.centralizer(c)) == 3
    for g in range(G.order):
        assert G.conjugate(g, t) in G.conjugacy_class(t)


def test_generator_words_reproduce_elements():
    G = FiniteGroup.from_permutations([(1, 0, 2, 3), (1, 2, 3, 0)])
    assert G.order == 24
    for x in range(G.order):
        y = G.identity
        for k in G.word(x):
            y = G.mul(y, G.generators[k])
        assert y == x


def test_bad_tables_are_rejected():
    with pytest.raises(NotAGroup):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        FiniteGroup([])
    with pytest.raises(NotAGroup):
        FiniteGroup.abelian([0])


def test_diagonal_datum_characters():
    q = [[-1, zeta(3, 1)], [1, zeta(4, 1)]]
    d = DiagonalDatum(q)
    assert d.N == 12
    for i in range(2):
        for j in range(2):
            assert d.character(j)[d.generator(i)] == q[i][j]
    with pytest.raises(ValueError):
        DiagonalDatum([[2]])


def test_nonassociative_loop_is_rejected():
    # a Latin square with identity 0 and inverses that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        FiniteGroup(loop)


def test_associativity_check_sees_every_generator():
    # Z/6 written additively passes; permuting one product breaks associativity
    good = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    FiniteGroup(good)
    bad = [row[:] for row in good]
    bad[2][3], bad[2][4] = bad[2][4], bad[2][3]
    with pytest.raises(NotAGroup):
        FiniteGroup(bad)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import diagonal_module, diagonal_tuple, transposition_module
from strategies import braiding_matrices
from ydnichols.cyclotomic import CycMatrix, CycScalar, zeta
from ydnichols.errors import EmptyModule, NotAYDModule
from ydnichols.groups import FiniteGroup
from ydnichols.yd import YDModule


def c_on_three(M, pos):
    """Braiding of M in positions (pos, pos+1) of M (x) M (x) M."""
    c = M.braiding(M).matrix
    ident = CycMatrix.identity(M.dim)
    return c.kron(ident) if pos == 0 else ident.kron(c)


def check_braid_relation(M):
    c1, c2 = c_on_three(M, 0), c_on_three(M, 1)
    assert c1 @ c2 @ c1 == c2 @ c1 @ c2


@given(braiding_matrices(max_rank=2))
def test_diagonal_braiding_satisfies_braid_relation(q):
    M = diagonal_module(q)
    assert M.validate().passed
    check_braid_relation(M)


@pytest.mark.parametrize("sign", [-1, 1])
def test_transposition_braiding_satisfies_braid_relation(sign):
    M = transposition_module(sign)
    check_braid_relation(M)
    assert M.is_irreducible()


@given(braiding_matrices(max_rank=2))
def test_braiding_inverse_and_naturality(q):
    M = diagonal_module(q)
    b = M.braiding(M)
    assert (b.matrix @ b.inverse).is_identity()
    MM = M.tensor(M)
    assert MM.is_morphism_to(MM, b.matrix)


def test_diagonal_braiding_scalars():
    q = [[-1, zeta(3, 1)], [1, zeta(4, 1)]]
    M = diagonal_module(q)
    c = M.braiding(M).matrix
    # c(x_i (x) x_j) = q_ij x_j (x) x_i
    for i in range(2):
        for j in range(2):
            assert c[j * 2 + i, i * 2 + j] == q[i][j]


@given(braiding_matrices(max_rank=2))
def test_dual_pairs_with_module(q):
    M = diagonal_module(q)
    D = M.dual()
    assert D.validate().passed
    assert D.dual().is_isomorphic(M)
    # evaluation V* (x) V -> k is G-linear: g acts on the dual by the inverse transpose
    for g in range(M.group.order):
        assert (D.action[g].transpose() @ M.action[g]).is_identity()


def test_theta_is_inverse_pair():
    M = transposition_module(-1)
    fwd, inv = M.theta()
    assert (fwd @ inv).is_identity()
    assert M.is_morphism_to(M, fwd)


def test_invalid_modules_are_rejected():
    G = FiniteGroup.abelian([2])
    g = G.index((1,))
    bad = CycMatrix.from_dense([[0, 1], [1, 0]])
    with pytest.raises(NotAYDModule):
        YDModule(G, [g, G.identity], {g: bad})
    with pytest.raises(NotAYDModule):
        YDModule(G, [g], {g: CycMatrix.from_dense([[2]])})


def test_irreducibility():
    mods = diagonal_tuple([[-1, 1], [1, -1]])
    assert all(m.is_irreducible() for m in mods)
    total, tags = YDModule.direct_sum(mods)
    assert tags == [0, 1]
    assert not total.is_irreducible()
    with pytest.raises(EmptyModule):
        YDModule.zero(mods[0].group).is_irreducible()


def test_reducible_over_split_commutant():
    # trivial degree, Z/2 acting by swapping two coordinates: splits as +1 and -1
    G = FiniteGroup.abelian([2])
    g = G.index((1,))
    M = YDModule(G, [G.identity] * 2, {g: CycMatrix.from_dense([[0, 1], [1, 0]])})
    assert not M.is_irreducible()


def test_irreducibility_is_over_the_field_of_the_entries():
    # rotation of order 3 on Q^2: irreducible over Q, but written in a basis
    # involving zeta_3 the eigenvectors become available and it splits
    G = FiniteGroup.abelian([3])
    g = G.index((1,))
    rot = CycMatrix.from_dense([[0, -1], [1, -1]])
    M = YDModule(G, [G.identity] * 2, {g: rot})
    assert M.is_irreducible()
    N = M.conjugated(CycMatrix.from_dense([[1, zeta(3, 1)], [0, 1]]))
    assert N.conductor() == 3
    assert not N.is_irreducible()


@given(st.integers(-3, 3), st.integers(1, 3))
def test_find_isomorphism_after_base_change(a, b):
    M = transposition_module(-1)
    # base change inside degree components: scalars per basis vector
    p = CycMatrix.diag([CycScalar.rational(b), CycScalar.rational(a or 1), CycScalar.rational(1)])
    N = M.conjugated(p)
    f = M.find_isomorphism(N)
    assert f is not None and M.is_morphism_to(N, f)
    assert f.rank() == 3


def test_non_isomorphic_characters():
    a, b = diagonal_tuple([[-1, 1], [1, zeta(4, 1)]])
    assert a.find_isomorphism(b) is None
    assert a.intertwiner_space(b) == []

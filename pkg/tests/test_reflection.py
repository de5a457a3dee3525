import pytest
from hypothesis import assume, given

from oracles import diagonal_cartan_entry, diagonal_tuple, transposition_module
from strategies import braiding_matrices
from ydnichols.cyclotomic import zeta
from ydnichols.errors import NotAYDModule, NotDefinedAtCutoff
from ydnichols.reflection import (
    YDTuple,
    reflect,
    verify_component_filtrations,
    verify_groupoid,
    verify_reflection_theorems,
    weyl_groupoid,
)
from ydnichols.yd import YDModule

E0 = [[-1, 1], [1, -1]]
E1 = [[-1, 1], [-1, -1]]
A2 = [[zeta(3, 1), zeta(3, 1)], [1, zeta(3, 1)]]
# q11 = -1, q22 = i, q12 q21 = -i: the regrading of check (c) matters here
B2_LIKE = [[-1, zeta(4, 3)], [1, zeta(4, 1)]]


def T(q):
    return YDTuple(diagonal_tuple(q))


@given(braiding_matrices(min_rank=2, max_rank=2, orders=(1, 2, 3, 4, 6)))
def test_cartan_rows_match_closed_formula(q):
    want = [diagonal_cartan_entry(q, 0, 1), diagonal_cartan_entry(q, 1, 0)]
    assume(None not in want and min(want) >= -2)
    M = T(q)
    for i in range(2):
        row = reflect(M, i, 4).cartan_row
        assert row[i] == 2 and row[1 - i] == want[i]


def test_e1_reflection():
    d = reflect(T(E1), 0, 4)
    assert d.cartan_row == [2, -1]
    assert d.exponents == {1: 1}
    V = d.result
    assert V[0].is_isomorphic(T(E1)[0].dual())
    assert V[1].dim == 1 and V[1].is_irreducible()
    assert d.summary()["pivot"] == 1


def test_e0_reflection_is_trivial():
    d = reflect(T(E0), 0, 3)
    assert d.cartan_row == [2, 0]
    assert d.result.find_isomorphism(T(E0)) is not None


def test_cutoff_too_small():
    with pytest.raises(NotDefinedAtCutoff) as exc:
        reflect(T(A2), 0, 2)
    assert exc.value.degree_reached == 2


def test_reducible_entries_are_rejected():
    total, _ = YDModule.direct_sum(diagonal_tuple(E0))
    with pytest.raises(NotAYDModule):
        YDTuple([total])


@pytest.mark.parametrize(
    "q,i,D",
    [(E0, 0, 3), (E1, 0, 4), (E1, 1, 4), (A2, 0, 4), (B2_LIKE, 0, 5), (B2_LIKE, 1, 5)],
    ids=["E0", "E1-1", "E1-2", "A2", "B2like-1", "B2like-2"],
)
def test_reflection_theorems(q, i, D):
    rep = verify_reflection_theorems(T(q), i, D)
    assert rep.passed, rep.render()
    rep = verify_component_filtrations(T(q), i, D)
    assert rep.passed, rep.render()


def test_k_grading_identity_fails_without_regrading():
    rep = verify_reflection_theorems(T(B2_LIKE), 0, 5)
    assert rep.passed
    assert rep.data["identity_with_K_grading"] is False
    assert rep.data["K_dims_reflected_grading"] != rep.data["K_dims"]


def test_rank_one_nonabelian_reflection():
    M = YDTuple([transposition_module(-1)])
    d = reflect(M, 0, 3)
    assert d.cartan_row == [2]
    assert d.result[0].is_isomorphic(transposition_module(-1).dual())


def test_weyl_groupoid_e1():
    G = weyl_groupoid(T(E1), 4)
    assert len(G.vertices) == 6 and G.complete
    assert verify_groupoid(G).passed
    for rows in G.cartan_matrices().values():
        assert rows == {0: [2, -1], 1: [-1, 2]}
    assert len(G.adjacency()) == 12
    assert G.adjacency()[0].split()[:2] == ["0", "1"]


def test_weyl_groupoid_e0_single_vertex():
    G = weyl_groupoid(T(E0), 3)
    assert len(G.vertices) == 1
    assert G.edges == [(0, 0, 0, [2, 0]), (0, 1, 0, [0, 2])]


def test_weyl_groupoid_parallel_is_identical():
    a = weyl_groupoid(T(A2), 4, jobs=1).to_json()
    b = weyl_groupoid(T(A2), 4, jobs=2).to_json()
    assert a == b


def test_weyl_groupoid_open_edges_and_vertex_limit():
    G = weyl_groupoid(T(A2), 2)
    assert not G.complete and G.open_edges
    assert any(line.endswith("open 2") for line in G.adjacency())
    G = weyl_groupoid(T(E1), 4, max_vertices=2)
    assert not G.complete and len(G.vertices) == 2

import json
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_symmetrizer_rank, diagonal_module, diagonal_tuple, transposition_module
from strategies import braiding_matrices, roots_of_unity
from ydnichols.cyclotomic import zeta
from ydnichols.errors import CutoffExceeded
from ydnichols.nichols import BraidedSpace, NicholsTruncation, symmetrizer_matrix, verify_braided_hopf
from ydnichols.yd import YDModule


@given(braiding_matrices(max_rank=2))
def test_dims_match_all_permutations_oracle(q):
    M = diagonal_module(q)
    B = NicholsTruncation(M, 3)
    assert B.dims() == [brute_symmetrizer_rank(M, n) for n in range(4)]


@given(roots_of_unity(orders=(2, 3, 4, 5, 6)))
def test_rank_one_is_truncated_polynomial_ring(q):
    # B(kx) with c(x (x) x) = q x (x) x is k[x]/(x^N) for q of order N > 1, k[x] for q = 1
    N = q.multiplicative_order()
    B = NicholsTruncation(diagonal_module([[q]]), 6)
    want = [1] * 7 if N == 1 else [1 if n < N else 0 for n in range(7)]
    assert B.dims() == want


def test_quantum_plane_dims():
    # q12 q21 = 1 and q11 = q22 = -1: exterior algebra on two letters
    B = NicholsTruncation(diagonal_module([[-1, zeta(4, 1)], [zeta(4, 3), -1]]), 3)
    assert B.dims() == [1, 2, 1, 0]


def test_fomin_kirillov_dims():
    B = NicholsTruncation(transposition_module(-1), 5)
    assert B.dims() == [1, 3, 4, 3, 1, 0]


def test_symmetrizer_matrix_rank_matches_truncation():
    M = transposition_module(-1)
    space = BraidedSpace.from_yd(M)
    for n in range(4):
        assert symmetrizer_matrix(space, n).rank() == brute_symmetrizer_rank(M, n)


def test_tensor_mode_keeps_all_words():
    M = diagonal_module([[-1, 1], [1, -1]])
    T = NicholsTruncation(M, 3, mode="tensor")
    assert T.dims() == [1, 2, 4, 8]


def test_multidegrees():
    mods = diagonal_tuple([[-1, 1], [-1, -1]])
    total, tags = YDModule.direct_sum(mods)
    B = NicholsTruncation(total, 4, tags=tags)
    md = B.multidegree_dims()
    assert md[(1, 1)] == 2 and md[(2, 1)] == 1 and md[(1, 2)] == 1 and md[(2, 2)] == 1
    assert sum(v for k, v in md.items() if sum(k) == 2) == B.dim(2)


@pytest.mark.parametrize(
    "M",
    [
        diagonal_module([[-1, 1], [-1, -1]]),
        diagonal_module([[zeta(3, 1), zeta(3, 2)], [1, zeta(3, 1)]]),
        transposition_module(-1),
    ],
    ids=["E1", "A2-zeta3", "FK3"],
)
def test_braided_hopf_axioms(M):
    B = NicholsTruncation(M, 4 if M.dim < 3 else 3)
    rep = verify_braided_hopf(B)
    assert rep.passed, rep.render()


def test_symmetric_algebra_has_primitives_only_in_degree_one():
    B = NicholsTruncation(diagonal_module([[1, 1], [1, 1]]), 3)
    assert B.dims() == [1, 2, 3, 4]
    assert verify_braided_hopf(B).passed


def test_tensor_algebra_has_primitives_in_degree_two():
    T = NicholsTruncation(diagonal_module([[-1]]), 2, mode="tensor")
    assert len(T.primitives(2)) == 1


def test_cutoff_is_enforced():
    B = NicholsTruncation(diagonal_module([[-1]]), 2)
    with pytest.raises(CutoffExceeded):
        B.dim(3)
    with pytest.raises(CutoffExceeded):
        B.project_word((0, 0, 0))
    with pytest.raises(ValueError):
        NicholsTruncation(diagonal_module([[-1]]), -1)


def test_deterministic_basis():
    M = transposition_module(-1)
    a = NicholsTruncation(M, 4)
    b = NicholsTruncation(M, 4)
    assert a.basis == b.basis
    assert all(a.mult_matrix(1, n) == b.mult_matrix(1, n) for n in range(4))


@given(braiding_matrices(max_rank=2), st.integers(1, 4))
def test_state_round_trip(q, D):
    mods = diagonal_tuple(q)
    total, tags = YDModule.direct_sum(mods)
    B = NicholsTruncation(total, D, tags=tags)
    state = json.loads(json.dumps(B.to_state()))
    C = NicholsTruncation(total, D, tags=tags, state=state)
    assert C.basis == B.basis
    assert json.dumps(C.to_state(), sort_keys=True) == json.dumps(B.to_state(), sort_keys=True)
    for n in range(D + 1):
        for w in product(range(total.dim), repeat=n):
            assert C.project_word(w) == B.project_word(w)


def test_state_must_match_cutoff():
    M = diagonal_module([[-1]])
    state = NicholsTruncation(M, 2).to_state()
    with pytest.raises(ValueError):
        NicholsTruncation(M, 3, state=state)

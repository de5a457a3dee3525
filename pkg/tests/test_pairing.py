import pytest
from hypothesis import given

from oracles import brute_symmetrizer_rank, diagonal_module, transposition_module
from strategies import braiding_matrices
from ydnichols.cyclotomic import ONE
from ydnichols.errors import PairingDegenerate
from ydnichols.nichols import NicholsTruncation
from ydnichols.pairing import GradedPairing, canonical_pairing, inverse_pairing, pairing_radical, verify_pairing


def nichols_pair(M, D, mode="nichols"):
    return canonical_pairing(NicholsTruncation(M.dual(), D, mode=mode), NicholsTruncation(M, D, mode=mode))


@given(braiding_matrices(max_rank=2))
def test_tensor_pairing_radical_is_nichols_kernel(q):
    M = diagonal_module(q)
    P = nichols_pair(M, 3, mode="tensor")
    for n in range(4):
        assert P.radical_codim(n) == brute_symmetrizer_rank(M, n)
        assert len(pairing_radical(P, n)) == M.dim ** n - P.radical_codim(n)


@pytest.mark.parametrize(
    "M,D",
    [(diagonal_module([[-1, 1], [-1, -1]]), 4), (transposition_module(-1), 3)],
    ids=["E1", "FK3"],
)
def test_axioms_and_inverse_pairing(M, D):
    P = nichols_pair(M, D)
    rep = verify_pairing(P)
    assert rep.passed, rep.render()
    rep = verify_pairing(inverse_pairing(P))
    assert rep.passed, rep.render()


def test_dual_basis():
    P = nichols_pair(transposition_module(-1), 3)
    for n in range(4):
        duals = P.dual_basis(n)
        for b, xi in enumerate(duals):
            for c in range(P.right.dim(n)):
                assert P.pair(n, xi, {c: ONE}) == (1 if b == c else 0)


def test_degenerate_gram_is_rejected():
    M = diagonal_module([[-1]])
    T = NicholsTruncation(M, 2, mode="tensor")
    P = canonical_pairing(NicholsTruncation(M.dual(), 2, mode="tensor"), T)
    assert P.radical_codim(2) == 0
    with pytest.raises(PairingDegenerate):
        GradedPairing(P.left, P.right, P.grams)
    with pytest.raises(PairingDegenerate):
        P.gram_inverse(2)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import diagonal_tuple, transposition_module
from ydnichols.bosonization import Bosonization, CoinvariantAlgebra, verify_hopf
from ydnichols.cyclotomic import CycScalar, zeta
from ydnichols.nichols import NicholsTruncation
from ydnichols.yd import YDModule


def tuple_truncation(q, D):
    mods = diagonal_tuple(q)
    total, tags = YDModule.direct_sum(mods)
    return mods, NicholsTruncation(total, D, tags=tags)


@pytest.mark.parametrize("q", [[[-1, 1], [1, -1]], [[-1, 1], [-1, -1]]], ids=["E0", "E1"])
def test_hopf_suite_small_cutoff(q):
    _, R = tuple_truncation(q, 3)
    rep = verify_hopf(Bosonization(R))
    assert rep.passed, rep.render()


def test_hopf_suite_nonabelian_group():
    R = NicholsTruncation(transposition_module(-1), 2)
    A = Bosonization(R)
    rep = verify_hopf(A, group_sample=[A.G.identity] + A.G.generators)
    assert rep.passed, rep.render()


A2 = tuple_truncation([[zeta(3, 1), zeta(3, 1)], [1, zeta(3, 1)]], 3)[1]
A2_BOS = Bosonization(A2)
A2_BASIS = A2_BOS.basis()


@st.composite
def elements(draw):
    keys = draw(st.lists(st.sampled_from(A2_BASIS), min_size=1, max_size=3, unique=True))
    return {k: CycScalar.rational(draw(st.integers(-3, 3)) or 1) for k in keys}


def degree(x):
    return max(k[0] for k in x)


@given(elements(), elements())
def test_antipode_is_antimultiplicative(x, y):
    A = A2_BOS
    if degree(x) + degree(y) > A.cutoff:
        return
    assert A.antipode(A.mul(x, y)) == A.mul(A.antipode(y), A.antipode(x))


@given(elements())
def test_antipode_inverse(x):
    A = A2_BOS
    assert A.antipode_inverse(A.antipode(x)) == x


@given(elements())
def test_vartheta_pi_decomposition(x):
    # x = vartheta(x1) pi(x2)
    A = A2_BOS
    out = {}
    for (a, b), c in A.coproduct(x).items():
        for k, v in A.mul(A.vartheta({a: 1}), A.pi({b: 1})).items():
            out[k] = out.get(k, 0) + c * v
    assert {k: v for k, v in out.items() if v} == x


@pytest.mark.parametrize(
    "q,keep,want",
    [
        ([[-1, 1], [-1, -1]], 0, [1, 1, 1, 1, 0]),
        ([[-1, 1], [-1, -1]], 1, [1, 1, 1, 1, 0]),
        ([[-1, 1], [1, -1]], 0, [1, 1, 0, 0, 0]),
    ],
    ids=["E1-pivot1", "E1-pivot2", "E0-pivot1"],
)
def test_coinvariant_dims_factor_the_hilbert_series(q, keep, want):
    mods, R = tuple_truncation(q, 4)
    K = CoinvariantAlgebra(Bosonization(R), keep, NicholsTruncation(mods[keep], 4))
    # [DERIVED] from dim B(M)(n) = sum dim K(a) dim B(M_i)(n - a) with B(M_i) = k[x]/(x^2)
    assert K.dims == want
    for d, conv, dim in K.hilbert_check():
        assert conv == dim, d


def test_coinvariants_are_coinvariant():
    mods, R = tuple_truncation([[-1, 1], [-1, -1]], 4)
    A = Bosonization(R)
    K = CoinvariantAlgebra(A, 0, NicholsTruncation(mods[0], 4))
    for _, _, v in K.basis:
        # (id (x) p) Delta(x) = x (x) 1
        got = A.tensor_map(A.coproduct(v), None, K.p)
        want = {(k, (0, 0, A.G.identity)): c for k, c in v.items()}
        assert got == want

import copy

import pytest

from oracles import diagonal_tuple
from ydnichols.bosonization import Bosonization, CoinvariantAlgebra
from ydnichols.nichols import NicholsTruncation
from ydnichols.omega import (
    CoinvariantModule,
    RelativeYDModule,
    coinvariant_omega_suite,
    drinfeld_map,
    filtrations,
    omega_inverse_object,
    omega_mu,
    omega_object,
    same_subspace,
    transported,
    verify_braided_monoidal,
)
from ydnichols.pairing import canonical_pairing, inverse_pairing
from ydnichols.yd import YDModule

E0 = [[-1, 1], [1, -1]]
E1 = [[-1, 1], [-1, -1]]


def setup(q, pivot, D=4):
    mods = diagonal_tuple(q)
    total, tags = YDModule.direct_sum(mods)
    R = NicholsTruncation(total, D, tags=tags)
    small = NicholsTruncation(mods[pivot], D)
    KM = CoinvariantModule(CoinvariantAlgebra(Bosonization(R), pivot, small))
    P = canonical_pairing(NicholsTruncation(mods[pivot].dual(), D), small)
    return KM, P, Bosonization(small)


@pytest.fixture(scope="module")
def e1():
    return setup(E1, 0)


def test_coinvariant_module_is_yetter_drinfeld(e1):
    KM, P, A = e1
    assert KM.module.validate(A).passed
    assert not KM.truncated
    assert KM.degrees() == [0, 1, 2, 3]


def test_omega_image_is_yetter_drinfeld_over_dual(e1):
    KM, P, A = e1
    OX = omega_object(KM.module, P)
    rep = OX.validate(Bosonization(P.left))
    assert rep.passed, rep.render()
    assert OX.grading == [-g for g in KM.module.grading]


def test_tampered_coaction_is_detected(e1):
    KM, P, A = e1
    OX = omega_object(KM.module, P)
    bad = copy.deepcopy(OX)
    bad.coact[1][0] = bad.coact[1][0].scale(-1)
    assert not bad.validate(Bosonization(P.left)).passed


@pytest.mark.parametrize("q,pivot", [(E0, 0), (E1, 0), (E1, 1)], ids=["E0-1", "E1-1", "E1-2"])
def test_full_suite(q, pivot):
    KM, P, A = setup(q, pivot)
    rep = coinvariant_omega_suite(KM, P, A)
    assert rep.passed, rep.render()


def test_round_trip_with_inverse_pairing(e1):
    KM, P, A = e1
    X = KM.module
    back = omega_object(omega_object(X, P), inverse_pairing(P))
    # equal after the natural identification m -> S(m_-1) m_0, not literally on E1
    assert back.same_structure(transported(X, drinfeld_map(X, A)))
    assert not back.same_structure(X)
    assert omega_inverse_object(omega_object(X, P), P).same_structure(X)


def test_round_trip_is_literal_on_e0():
    KM, P, A = setup(E0, 0)
    X = KM.module
    assert omega_object(omega_object(X, P), inverse_pairing(P)).same_structure(X)


def test_omega_mu_is_invertible_morphism(e1):
    KM, P, A = e1
    X = KM.module
    w = omega_mu(X, X, A)
    assert (w @ w.inverse()).is_identity()
    OX = omega_object(X, P)
    assert OX.tensor(OX).is_morphism_to(omega_object(X.tensor(X), P), w)


def test_braided_monoidal_on_unit_and_k(e1):
    KM, P, A = e1
    X = KM.module
    unit = RelativeYDModule.trivial(X.ring)
    rep = verify_braided_monoidal([unit, X], P, A)
    assert rep.passed, rep.render()


def test_filtrations_swap(e1):
    KM, P, A = e1
    X = KM.module
    OX = omega_object(X, P)
    for n in range(5):
        fd, fm = filtrations(X, n)
        ofd, ofm = filtrations(OX, n)
        assert same_subspace(ofm, fd, X.dim) and same_subspace(ofd, fm, X.dim)

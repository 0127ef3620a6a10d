import itertools

import pytest

from thetachain.adc import ChainMorphism, compose_morphisms
from thetachain.discs import (
    CochainMorphism,
    brute_force_cochain_hom,
    compose_cochain,
    dualize_morphism,
    dualize_object,
    identity_cochain,
    undualize_morphism,
    undualize_object,
    validate_cochain_morphism,
    window_coboundary,
)
from thetachain.errors import NegativeEntry, NotCoaugmented, NotCochainMap
from thetachain.simple import enumerate_hom, from_sequence

SMALL = [(0,), (0, 1, 0), (0, 1, 0, 1, 0), (0, 1, 2, 1, 0)]


def test_point():
    C = dualize_object(from_sequence((0,)))
    assert C.coboundary == ((),) and C.eta == (1,)


def test_transposes(convention):
    K = from_sequence((0, 1, 0), convention)
    a, x, b = K.order
    # read in flow order both conventions give ∂x = b - a
    C = dualize_object(K)
    assert C.coboundary[a] == ((x, -1),)
    assert C.coboundary[b] == ((x, 1),)
    assert C.coboundary[x] == ()
    K = from_sequence((0, 1, 2, 1, 0), convention)
    a, f, alpha, g, b = K.order
    C = dualize_object(K)
    assert C.coboundary[f] == ((alpha, -1),)
    assert C.coboundary[g] == ((alpha, 1),)


@pytest.mark.parametrize("dims", SMALL + [(0, 1, 2, 1, 2, 1, 0), (0, 1, 2, 3, 2, 1, 0)])
def test_window_formula(dims, convention):
    K = from_sequence(dims, convention)
    assert window_coboundary(K) == dualize_object(K)
    assert undualize_object(dualize_object(K)) == K


def test_morphism_duals(convention):
    K = from_sequence((0, 1, 0), convention)
    ends = enumerate_hom(K, K)
    duals = {dualize_morphism(f).matrices for f in ends}
    assert len(duals) == 3
    assert dualize_morphism(ChainMorphism.identity(K)) == identity_cochain(dualize_object(K))
    for f in ends:
        assert undualize_morphism(dualize_morphism(f)) == f
        validate_cochain_morphism(None, None, dualize_morphism(f))


def test_contravariance():
    objs = [from_sequence(s) for s in SMALL]
    for K, L, M in itertools.product(objs, repeat=3):
        for f in enumerate_hom(K, L):
            for g in enumerate_hom(L, M):
                lhs = dualize_morphism(compose_morphisms(g, f))
                assert lhs == compose_cochain(dualize_morphism(f), dualize_morphism(g))


def test_invalid_cochain_maps():
    K = from_sequence((0, 1, 0))
    C = dualize_object(K)
    with pytest.raises(NotCoaugmented):
        validate_cochain_morphism(C, C, ())
    g = dualize_morphism(ChainMorphism.identity(K))
    bumped = (g.matrices[0], ((2,),))
    with pytest.raises(NotCochainMap):
        validate_cochain_morphism(C, C, bumped)
    with pytest.raises(NegativeEntry):
        validate_cochain_morphism(C, C, (((1, 0), (0, 1)), ((-1,),)))


@pytest.mark.parametrize("src, dst", list(itertools.product(SMALL, repeat=2)))
def test_disc_hom_counts(src, dst):
    K, L = from_sequence(src), from_sequence(dst)
    disc = brute_force_cochain_hom(dualize_object(L), dualize_object(K))
    assert len(disc) == len(enumerate_hom(K, L))
    assert all(isinstance(g, CochainMorphism) for g in disc)

import pytest
from hypothesis import given, strategies as st

from thetachain.adc import (
    AugmentedDirectedComplex,
    Chain,
    ChainMorphism,
    brute_force_hom,
    check_loop_free,
    check_strongly_loop_free,
    check_unital,
    compose_morphisms,
    is_morphism,
    point,
    pos_neg_parts,
    validate_morphism_general,
    zero_complex,
)
from thetachain.errors import InvalidStructure, NegativeEntry, NotAugmented, NotChainMap, ShapeMismatch, SourceTargetMismatch
from thetachain.simple import enumerate_hom, from_sequence

from conftest import dimension_sequences

# a, b in degree 0; x, y in degree 1 with ∂x = b - a and ∂y = a - b
CYCLE = AugmentedDirectedComplex.build(
    (0, 0, 1, 1), {2: {1: 1, 0: -1}, 3: {0: 1, 1: -1}}, {0: 1, 1: 1}
)


def test_pos_neg_parts():
    assert pos_neg_parts(Chain(0, (0, 0))) == (Chain(0, (0, 0)), Chain(0, (0, 0)))
    assert pos_neg_parts(Chain(0, (-3, 2))) == (Chain(0, (0, 2)), Chain(0, (3, 0)))


def test_structure_is_validated():
    with pytest.raises(InvalidStructure):  # ε∂ ≠ 0
        AugmentedDirectedComplex.build((0, 0, 1), {2: {0: 1, 1: 1}}, {0: 1, 1: 1})
    with pytest.raises(InvalidStructure):  # boundary into the wrong degree
        AugmentedDirectedComplex.build((0, 2), {1: {0: 1}}, {0: 1})
    with pytest.raises(InvalidStructure):  # ∂∂ ≠ 0
        AugmentedDirectedComplex.build((0, 0, 1, 1, 2), {2: {1: 1, 0: -1}, 3: {1: 1, 0: -1}, 4: {2: 1}}, {0: 1, 1: 1})


def test_unital():
    assert all(check_unital(from_sequence(s)) for s in [(0,), (0, 1, 2, 1, 0), (0, 1, 0, 1, 0)])
    assert not check_unital(AugmentedDirectedComplex.build((0,), {}, {0: 2}))


def test_loop_freeness():
    assert check_strongly_loop_free(point())
    assert not check_strongly_loop_free(CYCLE)
    assert not check_loop_free(CYCLE)
    flat = AugmentedDirectedComplex.build((0, 0, 0), {}, {0: 1, 1: 1, 2: 1})
    assert check_loop_free(flat)
    assert check_strongly_loop_free(zero_complex())


def test_general_validation():
    K = from_sequence((0, 1, 0))
    ident = validate_morphism_general(K, K, ChainMorphism.identity(K).matrices)
    assert ident == ChainMorphism.identity(K)
    with pytest.raises(NotChainMap):  # a ↦ b, b ↦ a, x ↦ x
        validate_morphism_general(K, K, (((0, 1), (1, 0)), ((1,),)))
    with pytest.raises(NotChainMap):  # x ↦ 0
        validate_morphism_general(K, K, (((1, 0), (0, 1)), ((0,),)))
    with pytest.raises(NegativeEntry):
        validate_morphism_general(K, K, (((1, 0), (0, 1)), ((-1,),)))
    with pytest.raises(NotAugmented):
        validate_morphism_general(K, K, (((1, 1), (0, 1)), ((1,),)))
    with pytest.raises(ShapeMismatch):
        validate_morphism_general(K, K, (((1, 0),), ((1,),)))


def test_composition():
    K, P = from_sequence((0, 1, 0)), from_sequence((0,))
    collapse = ChainMorphism.from_images(K, P, {0: [0], 2: [0]})
    assert is_morphism(collapse)
    idp = ChainMorphism.identity(P)
    assert compose_morphisms(idp, collapse) == collapse
    assert compose_morphisms(collapse, ChainMorphism.identity(K)) == collapse
    with pytest.raises(SourceTargetMismatch):
        compose_morphisms(collapse, collapse)


def test_brute_force_bound_two_matches_bound_one():
    K, L = from_sequence((0, 1, 0)), from_sequence((0, 1, 2, 1, 0))
    assert brute_force_hom(K, L, 1) == brute_force_hom(K, L, 2)


def test_maps_killed_by_augmentation_vanish():
    K, L = from_sequence((0, 1, 0)), from_sequence((0, 1, 0, 1, 0))
    assert brute_force_hom(K, L, 2, scale=0) == [ChainMorphism(K, L, ())]


small = st.sampled_from([(0,), (0, 1, 0), (0, 1, 0, 1, 0), (0, 1, 2, 1, 0)])


@given(small, small, small, st.data())
def test_associativity(a, b, c, data):
    K, L, M = from_sequence(a), from_sequence(b), from_sequence(c)
    f = data.draw(st.sampled_from(enumerate_hom(K, L)))
    g = data.draw(st.sampled_from(enumerate_hom(L, M)))
    h = data.draw(st.sampled_from(enumerate_hom(M, K)))
    assert compose_morphisms(h, compose_morphisms(g, f)) == compose_morphisms(compose_morphisms(h, g), f)


@given(dimension_sequences(11))
def test_simple_complexes_satisfy_the_identities(s):
    K = from_sequence(s)
    for i in range(len(K)):
        if K.degrees[i]:
            dx = K.d(K.basis_chain(i))
            assert (not K.d(dx)) if dx.degree else K.epsilon(dx) == 0
    assert check_unital(K) and check_loop_free(K) and check_strongly_loop_free(K)

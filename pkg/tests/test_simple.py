import math

import pytest
from hypothesis import given, strategies as st

from thetachain.adc import AugmentedDirectedComplex, ChainMorphism, brute_force_hom, compose_morphisms
from thetachain.errors import Condition1Violated, Condition2Violated, MixedDegrees, NotComparable, NotSeparated
from thetachain.representations import GradedOrderedSet
from thetachain.simple import (
    bridges,
    bridges_interleaving,
    enumerate_hom,
    from_graded_set,
    from_sequence,
    image_is_separated,
    is_separated,
    morphism_sequences,
    recognize_simple,
    separated_leq,
    separated_leq_via_boundary,
    validate_simple_morphism,
)

from conftest import dimension_sequences


def flow(K, *positions):
    """Basis indices at the given flow positions."""
    return tuple(K.order[p] for p in positions)


def test_boundary_from_order():
    K = from_sequence((0, 1, 0))
    assert K.terms(K.d(K.basis_chain(1))) == [(0, -1), (2, 1)]
    K = from_sequence((0, 1, 2, 1, 0))
    assert K.terms(K.d(K.basis_chain(2))) == [(1, -1), (3, 1)]
    assert K.terms(K.d(K.basis_chain(1))) == [(0, -1), (4, 1)]
    assert K.terms(K.d(K.basis_chain(3))) == [(0, -1), (4, 1)]
    assert from_sequence((0,)).boundary == ((),)


def test_swapped_negates_boundary():
    std, sw = from_sequence((0, 1, 2, 1, 0)), from_sequence((0, 1, 2, 1, 0), "swapped")
    assert sw.boundary == tuple(tuple((j, -c) for j, c in t) for t in std.boundary)
    assert sw.order == (4, 3, 2, 1, 0)
    assert sw.flow_dims == std.flow_dims


def test_from_graded_set_keeps_names():
    g = GradedOrderedSet.from_sequence((0, 1, 0), elements=("a", "x", "b"))
    assert from_graded_set(g).names == ("a", "x", "b")


def test_separated(convention):
    K = from_sequence((0, 1, 0, 1, 0), convention)
    a, x, b, y, c = flow(K, 0, 1, 2, 3, 4)
    assert is_separated(K, ())
    assert is_separated(K, (x, y))
    assert not is_separated(K, (x, x))
    assert not is_separated(K, (y, x))
    with pytest.raises(MixedDegrees):
        is_separated(K, (a, x))


def test_separated_leq(convention):
    K = from_sequence((0, 1, 0), convention)
    a, x, b = flow(K, 0, 1, 2)
    assert separated_leq(K, (a,), (a,))
    assert separated_leq(K, (a,), (b,))
    assert not separated_leq(K, (b,), (a,))
    assert not separated_leq(K, (a,), (a, b))
    assert separated_leq_via_boundary(K, (a,), (b,))


def test_bridges(convention):
    K = from_sequence((0, 1, 0), convention)
    a, x, b = flow(K, 0, 1, 2)
    assert bridges(K, (), (a,), (a,))
    assert bridges(K, (x,), (a,), (b,))
    with pytest.raises(NotComparable):
        bridges(K, (x,), (b,), (a,))
    K = from_sequence((0, 1, 0, 1, 0), convention)
    a, x, b, y, c = flow(K, 0, 1, 2, 3, 4)
    assert not bridges(K, (x,), (a,), (c,))
    assert bridges(K, (x, y), (a,), (c,))
    assert bridges_interleaving(K, (x, y), (a,), (c,))


def test_simple_morphism_validation(convention):
    K, P = from_sequence((0, 1, 0), convention), from_sequence((0,), convention)
    a, x, b = flow(K, 0, 1, 2)
    ident = validate_simple_morphism(K, K, {a: (a,), x: (x,), b: (b,)})
    assert ident == ChainMorphism.identity(K)
    collapse = validate_simple_morphism(K, P, {a: (0,), x: (), b: (0,)})
    assert image_is_separated(collapse, x)
    with pytest.raises(Condition1Violated):
        validate_simple_morphism(K, K, {a: (b,), x: (x,), b: (a,)})
    with pytest.raises(Condition2Violated):
        validate_simple_morphism(K, K, {a: (a,), x: (), b: (b,)})
    with pytest.raises(NotSeparated):
        validate_simple_morphism(K, K, {a: (a,), x: (x, x), b: (b,)})
    with pytest.raises(Condition1Violated):
        validate_simple_morphism(K, K, {a: (), x: (), b: ()})


@pytest.mark.parametrize("src, dst, count", [
    ((0,), (0,), 1),
    ((0, 1, 0), (0, 1, 0), 3),
    ((0, 1, 0), (0, 1, 0, 1, 0), 6),
    ((0, 1, 2, 1, 0), (0, 1, 0), 3),
    ((0, 1, 0), (0, 1, 2, 1, 0), 4),
])
def test_hom_counts(src, dst, count, convention):
    K, L = from_sequence(src, convention), from_sequence(dst, convention)
    homs = enumerate_hom(K, L)
    assert len(homs) == count
    assert homs == brute_force_hom(K, L)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 2)])
def test_theta1_is_the_simplex_category(m, n):
    O = lambda k: from_sequence((0,) + (1, 0) * k)
    assert len(enumerate_hom(O(m), O(n))) == math.comb(m + n + 1, m + 1)


def test_recognize_simple():
    for conv in ("std", "swapped"):
        K = from_sequence((0, 1, 2, 1, 2, 1, 0), conv)
        S = recognize_simple(AugmentedDirectedComplex(K.degrees, K.boundary, K.augmentation))
        assert S is not None and S.order == K.order
    # two parallel arrows a ⇉ b: loop-free but not totally ordered
    parallel = AugmentedDirectedComplex.build((0, 0, 1, 1), {2: {1: 1, 0: -1}, 3: {1: 1, 0: -1}}, {0: 1, 1: 1})
    assert recognize_simple(parallel) is None


seqs = st.sampled_from([(0,), (0, 1, 0), (0, 1, 0, 1, 0), (0, 1, 2, 1, 0), (0, 1, 2, 1, 2, 1, 0)])


@given(seqs, seqs, st.sampled_from(["std", "swapped"]))
def test_enumerated_morphisms_are_separated(a, b, conv):
    K, L = from_sequence(a, conv), from_sequence(b, conv)
    for f in enumerate_hom(K, L):
        assert all(image_is_separated(f, i) for i in range(len(K)))
        assert validate_simple_morphism(K, L, morphism_sequences(f)) == f


@given(seqs, seqs, seqs, st.data())
def test_composition_closure(a, b, c, data):
    K, L, M = (from_sequence(s) for s in (a, b, c))
    f = data.draw(st.sampled_from(enumerate_hom(K, L)))
    g = data.draw(st.sampled_from(enumerate_hom(L, M)))
    assert compose_morphisms(g, f) in enumerate_hom(K, M)


@given(dimension_sequences(9), dimension_sequences(7))
def test_conventions_give_identical_hom_sets(a, b):
    std = enumerate_hom(from_sequence(a), from_sequence(b))
    sw = enumerate_hom(from_sequence(a, "swapped"), from_sequence(b, "swapped"))
    assert [f.matrices for f in std] == [f.matrices for f in sw]

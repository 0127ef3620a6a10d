import pytest
from hypothesis import given, strategies as st

from thetachain.adc import AugmentedDirectedComplex, ChainMorphism
from thetachain.cells import (
    atom,
    check_atom_boundary,
    compose,
    d,
    enumerate_cells,
    format_cell,
    make_cell,
    nu_map,
)
from thetachain.errors import BadAugmentation, BoundaryMismatch, InfiniteSupport, NotComposable, NotPositive, NotUnital
from thetachain.simple import enumerate_hom, from_sequence


@pytest.fixture
def ab():
    """(0,1,0) with its elements a, x, b in flow order."""
    def make(conv):
        K = from_sequence((0, 1, 0), conv)
        return K, *K.order
    return make


def test_make_cell(ab, convention):
    K, a, x, b = ab(convention)
    assert make_cell(K, [([a], [a])]).dimension == 0
    c = make_cell(K, [([a], [b]), ([x], [x])])
    assert c == atom(K, x)
    with pytest.raises(BoundaryMismatch):
        make_cell(K, [([a], [b])])
    with pytest.raises(BadAugmentation):
        make_cell(K, [([a, b], [a, b])])
    with pytest.raises(NotPositive):
        make_cell(K, [([a], [a]), ({x: -1}, {x: -1})])
    with pytest.raises(InfiniteSupport):
        make_cell(K, [([a], [a]), ([], []), ([0], [0])])


def test_d_and_compose(ab, convention):
    K, a, x, b = ab(convention)
    ax = atom(K, x)
    assert d(0, "-", ax) == atom(K, a)
    assert d(0, "+", ax) == atom(K, b)
    assert d(1, "+", ax) == ax
    with pytest.raises(NotComposable):
        compose(0, ax, ax)
    assert compose(0, atom(K, a), ax) == ax


def test_atoms_of_a_two_cell(convention):
    K = from_sequence((0, 1, 2, 1, 0), convention)
    a, f, alpha, g, b = K.order
    x = atom(K, alpha)
    assert x == make_cell(K, [([a], [b]), ([f], [g]), ([alpha], [alpha])])
    assert d(1, "+", x) == make_cell(K, [([a], [b]), ([g], [g])])
    assert check_atom_boundary(K, alpha) and check_atom_boundary(K, f)


def test_atoms_need_a_unital_basis():
    K = AugmentedDirectedComplex.build((0,), {}, {0: 2})
    with pytest.raises(NotUnital):
        atom(K, 0)


@pytest.mark.parametrize("dims, count", [
    ((0,), 1), ((0, 1, 0), 3), ((0, 1, 0, 1, 0), 6), ((0, 1, 2, 1, 0), 5),
])
def test_cell_counts(dims, count, convention):
    K = from_sequence(dims, convention)
    assert len(enumerate_cells(K)) == count
    assert len(enumerate_cells(K, 2)) == count


def test_composite_arrow_is_a_cell():
    K = from_sequence((0, 1, 0, 1, 0))
    a, x, b, y, c = K.order
    xy = compose(0, atom(K, x), atom(K, y))
    assert xy == make_cell(K, [([a], [c]), ([x, y], [x, y])])
    assert xy in enumerate_cells(K)


def test_nu_map(ab):
    K, a, x, b = ab("std")
    P = from_sequence((0,))
    collapse = ChainMorphism.from_images(K, P, {a: [0], b: [0]})
    assert nu_map(collapse, atom(K, x)) == atom(P, 0)
    for c in enumerate_cells(K):
        assert nu_map(ChainMorphism.identity(K), c) == c


def test_format():
    K = from_sequence((0, 1, 0))
    assert format_cell(atom(K, 1)) == "0: ([0] | [2]); 1: ([1] | [1])"


objects = st.sampled_from([(0, 1, 0, 1, 0), (0, 1, 2, 1, 0), (0, 1, 2, 1, 2, 1, 0), (0, 1, 2, 3, 2, 1, 0)])


@given(objects, st.data())
def test_identity_laws(dims, data):
    K = from_sequence(dims)
    cells = enumerate_cells(K)
    x = data.draw(st.sampled_from(cells))
    n = data.draw(st.integers(0, K.top))
    assert compose(n, d(n, "-", x), x) == x == compose(n, x, d(n, "+", x))
    m = x.dimension
    assert d(m, "-", x) == x == d(m, "+", x)


@given(objects, st.data())
def test_nu_preserves_composition(dims, data):
    K = from_sequence(dims)
    L = from_sequence(data.draw(objects))
    f = data.draw(st.sampled_from(enumerate_hom(K, L)))
    cells = enumerate_cells(K)
    n = data.draw(st.integers(0, K.top))
    x = data.draw(st.sampled_from(cells))
    followers = [y for y in cells if d(n, "-", y) == d(n, "+", x)]
    y = data.draw(st.sampled_from(followers))
    assert nu_map(f, compose(n, x, y)) == compose(n, nu_map(f, x), nu_map(f, y))

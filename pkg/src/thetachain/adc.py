"""Augmented directed complexes with prescribed bases.

A complex is a finite graded basis with an integer boundary and an
augmentation on degree 0.  The distinguished submonoid in each degree is
the set of nonnegative combinations of basis elements, so it is never
stored.  Chains are dense integer vectors over the basis elements of one
degree; morphisms are per-degree integer matrices (rows indexed by the
target basis, columns by the source basis, both in declaration order).
"""

from __future__ import annotations

import graphlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidStructure,
    NegativeEntry,
    NotAugmented,
    NotChainMap,
    ShapeMismatch,
    SourceTargetMismatch,
)

Matrix = tuple[tuple[int, ...], ...]


# -- small exact linear algebra ------------------------------------------

def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matvec(m: Matrix, v: Sequence[int], rows: int) -> tuple[int, ...]:
    if rows == 0:
        return ()
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def matmul(a: Matrix, b: Matrix, rows: int, cols: int) -> Matrix:
    if not b or not a or not a[0]:
        return zeros(rows, cols)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def transpose(m: Matrix, rows: int, cols: int) -> Matrix:
    if rows == 0 or cols == 0:
        return zeros(cols, rows)
    return tuple(zip(*m))


# -- chains --------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    degree: int
    coeffs: tuple[int, ...]

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        return Chain(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Chain") -> "Chain":
        self._check(other)
        return Chain(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Chain":
        return Chain(self.degree, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "Chain":
        return Chain(self.degree, tuple(k * a for a in self.coeffs))

    def _check(self, other):
        if other.degree != self.degree or len(other.coeffs) != len(self.coeffs):
            raise ValueError("chains of different degree or length")

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        """Local positions with nonzero coefficient."""
        return tuple(k for k, c in enumerate(self.coeffs) if c)


def pos_neg_parts(x: Chain) -> tuple[Chain, Chain]:
    """Split ``x = plus - minus`` with nonnegative parts of disjoint support."""
    plus = Chain(x.degree, tuple(max(c, 0) for c in x.coeffs))
    minus = Chain(x.degree, tuple(max(-c, 0) for c in x.coeffs))
    return plus, minus


# -- complexes -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AugmentedDirectedComplex:
    """Complex with a prescribed basis.

    ``boundary[i]`` is a sorted tuple of ``(j, c)`` pairs meaning
    ``∂b_i = Σ c·b_j``; ``augmentation[i]`` is only meaningful in degree 0.
    Basis order is declaration order.  ``names`` are labels only and take no
    part in equality.
    """

    degrees: tuple[int, ...]
    boundary: tuple[tuple[tuple[int, int], ...], ...]
    augmentation: tuple[int, ...]
    names: tuple = ()

    def __post_init__(self):
        n = len(self.degrees)
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.boundary) != n or len(self.augmentation) != n:
            raise InvalidStructure("degrees, boundary and augmentation differ in length")
        if self.names and len(self.names) != n:
            raise InvalidStructure("names and degrees differ in length")
        if not self.names:
            object.__setattr__(self, "names", tuple(range(n)))
        bd = []
        for i, terms in enumerate(self.boundary):
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict[int, int] = {}
            for j, c in items:
                acc[int(j)] = acc.get(int(j), 0) + int(c)
            bd.append(tuple(sorted((j, c) for j, c in acc.items() if c)))
        object.__setattr__(self, "boundary", tuple(bd))
        aug = tuple(int(e) if d == 0 else 0 for e, d in zip(self.augmentation, self.degrees))
        object.__setattr__(self, "augmentation", aug)
        self._validate()

    def _validate(self):
        degs = self.degrees
        if any(d < 0 for d in degs):
            raise InvalidStructure("negative degree")
        for i, terms in enumerate(self.boundary):
            for j, _ in terms:
                if not 0 <= j < len(degs):
                    raise InvalidStructure(f"boundary of {i} refers to unknown element {j}")
                if degs[j] != degs[i] - 1:
                    raise InvalidStructure(
                        f"boundary of {i} (degree {degs[i]}) contains {j} of degree {degs[j]}"
                    )
        for i in range(len(degs)):
            if degs[i] == 1:
                e = sum(c * self.augmentation[j] for j, c in self.boundary[i])
                if e:
                    raise InvalidStructure(f"augmentation of the boundary of {i} is {e}, not 0")
            elif degs[i] >= 2:
                dd: dict[int, int] = {}
                for j, c in self.boundary[i]:
                    for k, c2 in self.boundary[j]:
                        dd[k] = dd.get(k, 0) + c * c2
                if any(dd.values()):
                    raise InvalidStructure(f"boundary of boundary of {i} is nonzero")

    # equality ignores names
    def _signature(self):
        return (self.degrees, self.boundary, self.augmentation)

    def __eq__(self, other):
        if not isinstance(other, AugmentedDirectedComplex):
            return NotImplemented
        return self is other or self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    @classmethod
    def build(cls, degrees, boundary=None, augmentation=None, names=()):
        """Convenience constructor: ``boundary`` maps element → {element: coeff},
        ``augmentation`` maps degree-0 element → int (default 1)."""
        n = len(degrees)
        boundary = boundary or {}
        augmentation = augmentation or {}
        bd = [dict(boundary.get(i, {})) for i in range(n)]
        aug = [augmentation.get(i, 1) if degrees[i] == 0 else 0 for i in range(n)]
        return cls(tuple(degrees), tuple(bd), tuple(aug), tuple(names))

    # -- derived indexing --

    def __len__(self):
        return len(self.degrees)

    @cached_property
    def top(self) -> int:
        """Largest degree, or -1 for the zero complex."""
        return max(self.degrees, default=-1)

    @cached_property
    def by_degree(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.top + 1)]
        for i, d in enumerate(self.degrees):
            out[d].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def local(self) -> tuple[int, ...]:
        """Position of each basis element among those of its degree."""
        pos = [0] * len(self.degrees)
        for q in self.by_degree:
            for k, i in enumerate(q):
                pos[i] = k
        return tuple(pos)

    def basis(self, q: int) -> tuple[int, ...]:
        return self.by_degree[q] if 0 <= q <= self.top else ()

    def rank(self, q: int) -> int:
        return len(self.basis(q))

    @cached_property
    def boundary_matrices(self) -> tuple[Matrix, ...]:
        """Entry ``q`` is the matrix of ``∂: K_q → K_{q-1}`` (entry 0 is empty)."""
        mats: list[Matrix] = [()]
        for q in range(1, self.top + 1):
            m = [[0] * self.rank(q) for _ in range(self.rank(q - 1))]
            for i in self.basis(q):
                for j, c in self.boundary[i]:
                    m[self.local[j]][self.local[i]] = c
            mats.append(tuple(tuple(r) for r in m))
        return tuple(mats)

    # -- chains --

    def zero(self, q: int) -> Chain:
        return Chain(q, (0,) * self.rank(q))

    def basis_chain(self, i: int) -> Chain:
        q = self.degrees[i]
        v = [0] * self.rank(q)
        v[self.local[i]] = 1
        return Chain(q, tuple(v))

    def chain(self, q: int, terms: Mapping[int, int] | Iterable[int]) -> Chain:
        """Chain of degree ``q`` from basis indices (a mapping or a multiset)."""
        v = [0] * self.rank(q)
        items = terms.items() if isinstance(terms, Mapping) else ((i, 1) for i in terms)
        for i, c in items:
            if self.degrees[i] != q:
                raise ValueError(f"basis element {i} does not have degree {q}")
            v[self.local[i]] += c
        return Chain(q, tuple(v))

    def terms(self, x: Chain) -> list[tuple[int, int]]:
        """``(basis index, coefficient)`` pairs of a chain."""
        b = self.basis(x.degree)
        return [(b[k], c) for k, c in enumerate(x.coeffs) if c]

    def d(self, x: Chain) -> Chain:
        q = x.degree
        if q == 0:
            raise ValueError("boundary of a degree-0 chain is not defined")
        if len(x.coeffs) != self.rank(q):
            raise ValueError("chain length does not match complex")
        if q > self.top:
            return self.zero(q - 1)
        return Chain(q - 1, matvec(self.boundary_matrices[q], x.coeffs, self.rank(q - 1)))

    def epsilon(self, x: Chain) -> int:
        if x.degree != 0:
            raise ValueError("augmentation is defined on degree 0")
        return sum(c * self.augmentation[i] for i, c in zip(self.basis(0), x.coeffs))

    def iterated_part(self, x: Chain, sign: str, times: int) -> Chain:
        """``(∂^sign)^times x`` where ``∂^+``/``∂^-`` take positive/negative parts."""
        for _ in range(times):
            plus, minus = pos_neg_parts(self.d(x))
            x = plus if sign == "+" else minus
        return x


ADC = AugmentedDirectedComplex


def point() -> AugmentedDirectedComplex:
    return AugmentedDirectedComplex.build([0])


def zero_complex() -> AugmentedDirectedComplex:
    return AugmentedDirectedComplex((), (), ())


# -- basis predicates ----------------------------------------------------

def _acyclic(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    ts = graphlib.TopologicalSorter({n: set() for n in nodes})
    for a, b in edges:
        ts.add(b, a)
    try:
        ts.prepare()
    except graphlib.CycleError:
        return False
    return True


def check_unital(K: AugmentedDirectedComplex) -> bool:
    for i, d in enumerate(K.degrees):
        b = K.basis_chain(i)
        for sign in "-+":
            if K.epsilon(K.iterated_part(b, sign, d)) != 1:
                return False
    return True


def strong_order_edges(K: AugmentedDirectedComplex) -> list[tuple[int, int]]:
    """Generating pairs ``a < b`` of the relation whose acyclicity is strong loop-freeness."""
    edges = []
    for i, terms in enumerate(K.boundary):
        for j, c in terms:
            edges.append((j, i) if c < 0 else (i, j))
    return edges


def check_strongly_loop_free(K: AugmentedDirectedComplex) -> bool:
    return _acyclic(range(len(K)), strong_order_edges(K))


def check_loop_free(K: AugmentedDirectedComplex) -> bool:
    for q in range(K.top + 1):
        nodes = [i for i, d in enumerate(K.degrees) if d >= q]
        edges = []
        for i in nodes:
            k = K.degrees[i] - q
            if k <= 0:
                continue
            b = K.basis_chain(i)
            for j, _ in K.terms(K.iterated_part(b, "-", k)):
                edges.append((j, i))
            for j, _ in K.terms(K.iterated_part(b, "+", k)):
                edges.append((i, j))
        if not _acyclic(nodes, edges):
            return False
    return True


# -- morphisms -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChainMorphism:
    source: AugmentedDirectedComplex
    target: AugmentedDirectedComplex
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        n = self.ndeg
        mats = list(self.matrices)[:n]
        # degrees beyond those supplied are forced to be empty-shaped
        mats += [zeros(self.target.rank(q), self.source.rank(q)) for q in range(len(mats), n)]
        norm = []
        for q, m in enumerate(mats):
            rows, cols = self.target.rank(q), self.source.rank(q)
            m = tuple(tuple(int(x) for x in r) for r in m)
            if rows == 0 or cols == 0:
                if any(any(r) for r in m):
                    raise ShapeMismatch(f"degree {q}: expected an empty {rows}x{cols} matrix")
                m = zeros(rows, cols)
            elif len(m) != rows or any(len(r) != cols for r in m):
                raise ShapeMismatch(f"degree {q}: expected a {rows}x{cols} matrix")
            norm.append(m)
        object.__setattr__(self, "matrices", tuple(norm))

    @property
    def ndeg(self) -> int:
        return max(self.source.top, self.target.top) + 1

    def matrix(self, q: int) -> Matrix:
        if q < len(self.matrices):
            return self.matrices[q]
        return zeros(self.target.rank(q), self.source.rank(q))

    def __eq__(self, other):
        if not isinstance(other, ChainMorphism):
            return NotImplemented
        return (
            self.matrices == other.matrices
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash(self.matrices)

    @classmethod
    def from_images(cls, source, target, images: Mapping[int, Chain | Mapping[int, int] | Iterable[int]]):
        """Build from the image of each source basis element (missing means 0)."""
        n = max(source.top, target.top) + 1
        mats = [[[0] * source.rank(q) for _ in range(target.rank(q))] for q in range(n)]
        for i, img in images.items():
            q = source.degrees[i]
            if not isinstance(img, Chain):
                img = target.chain(q, img)
            for k, c in enumerate(img.coeffs):
                mats[q][k][source.local[i]] = c
        return cls(source, target, tuple(tuple(tuple(r) for r in m) for m in mats))

    @classmethod
    def identity(cls, K: AugmentedDirectedComplex) -> "ChainMorphism":
        return cls(K, K, tuple(identity_matrix(K.rank(q)) for q in range(K.top + 1)))

    def apply(self, x: Chain) -> Chain:
        q = x.degree
        return Chain(q, matvec(self.matrix(q), x.coeffs, self.target.rank(q)))

    def image(self, i: int) -> Chain:
        return self.apply(self.source.basis_chain(i))

    def image_indices(self, i: int) -> tuple[int, ...]:
        """Target basis indices in the image of ``i``, repeated by multiplicity."""
        out = []
        for j, c in self.target.terms(self.image(i)):
            out.extend([j] * c)
        return tuple(out)

    @cached_property
    def sort_key(self) -> tuple:
        return tuple(self.image_indices(i) for i in range(len(self.source)))

    def __repr__(self):
        return f"ChainMorphism({self.sort_key})"


def compose_morphisms(g: ChainMorphism, f: ChainMorphism) -> ChainMorphism:
    """``g ∘ f``."""
    if f.target != g.source:
        raise SourceTargetMismatch("target of f is not the source of g")
    K, M = f.source, g.target
    n = max(K.top, M.top) + 1
    mats = tuple(matmul(g.matrix(q), f.matrix(q), M.rank(q), K.rank(q)) for q in range(n))
    return ChainMorphism(K, M, mats)


def morphism_defect(f: ChainMorphism) -> tuple[type, str] | None:
    """First violated morphism condition as ``(error class, message)``, or None."""
    K, L = f.source, f.target
    for q, m in enumerate(f.matrices):
        if any(x < 0 for row in m for x in row):
            return NegativeEntry, f"negative entry in degree {q}"
    for i in K.basis(0):
        if L.epsilon(f.image(i)) != K.augmentation[i]:
            return NotAugmented, f"augmentation not preserved on basis element {i}"
    for q in range(1, K.top + 1):
        for i in K.basis(q):
            x = K.basis_chain(i)
            if L.d(f.apply(x)) != f.apply(K.d(x)):
                return NotChainMap, f"∂f ≠ f∂ on basis element {i}"
    return None


def validate_morphism_general(source, target, matrices) -> ChainMorphism:
    """Check nonnegativity, the chain-map law and augmentation; return the morphism."""
    f = matrices if isinstance(matrices, ChainMorphism) else ChainMorphism(source, target, tuple(matrices))
    defect = morphism_defect(f)
    if defect:
        raise defect[0](defect[1])
    return f


def is_morphism(f: ChainMorphism) -> bool:
    return morphism_defect(f) is None


def positive_boundary_witness(K: AugmentedDirectedComplex, target: Chain, bound: int) -> Chain | None:
    """A chain ``c`` of degree ``target.degree + 1`` with entries in ``0..bound``
    and ``∂c = target``, found by exhaustive search; None if there is none."""
    q = target.degree + 1
    for v in itertools.product(range(bound + 1), repeat=K.rank(q)):
        c = Chain(q, v)
        if K.d(c) == target:
            return c
    return None


def _columns(L: AugmentedDirectedComplex, q: int, bound: int):
    """All nonnegative columns of degree ``q`` bounded by ``bound``, keyed by
    their augmentation (q = 0) or boundary (q > 0)."""
    groups: dict = {}
    for v in itertools.product(range(bound + 1), repeat=L.rank(q)):
        x = Chain(q, v)
        key = L.epsilon(x) if q == 0 else L.d(x).coeffs
        groups.setdefault(key, []).append(v)
    return groups


def brute_force_hom(K: AugmentedDirectedComplex, L: AugmentedDirectedComplex, bound: int = 1,
                    scale: int = 1) -> list[ChainMorphism]:
    """Every morphism ``K → L`` whose matrix entries lie in ``0..bound``.

    With ``scale`` other than 1 the search returns nonnegative chain maps
    with ``ε∘f = scale·ε`` instead; ``scale=0`` gives the maps killed by ε.

    Exhaustive over all bounded matrices: candidate columns are generated
    in full and filtered one source basis element at a time against the
    augmentation and chain-map conditions.  Sorted by ``sort_key``.
    """
    order = [i for q in range(K.top + 1) for i in K.basis(q)]
    cols = {q: _columns(L, q, bound) for q in range(K.top + 1)}
    chosen: dict[int, tuple[int, ...]] = {}
    out = []

    def image_of_boundary(i):
        q = K.degrees[i]
        acc = [0] * L.rank(q - 1)
        for j, c in K.boundary[i]:
            for k, v in enumerate(chosen[j]):
                acc[k] += c * v
        return tuple(acc)

    def rec(pos):
        if pos == len(order):
            out.append(ChainMorphism.from_images(
                K, L, {i: Chain(K.degrees[i], v) for i, v in chosen.items()}))
            return
        i = order[pos]
        q = K.degrees[i]
        key = scale * K.augmentation[i] if q == 0 else image_of_boundary(i)
        for v in cols[q].get(key, ()):
            chosen[i] = v
            rec(pos + 1)
        chosen.pop(i, None)

    rec(0)
    out.sort(key=lambda f: f.sort_key)
    return out

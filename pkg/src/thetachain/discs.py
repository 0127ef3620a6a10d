"""Finite discs as coaugmented cochain complexes.

The dual of a complex keeps its basis and degrees; the coboundary is the
literal transpose of the boundary and the coaugmentation is the transpose of
the augmentation.  The explicit window description of the coboundary is
provided separately (:func:`window_coboundary`) so it can be checked
against the transpose rather than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .adc import (
    AugmentedDirectedComplex,
    ChainMorphism,
    Matrix,
    identity_matrix,
    matmul,
    matvec,
    transpose,
    zeros,
)
from .errors import InvalidStructure, NegativeEntry, NotCoaugmented, NotCochainMap, ShapeMismatch, SourceTargetMismatch
from .simple import as_simple


@dataclass(frozen=True)
class CoaugmentedCochainComplex:
    """``coboundary[i]`` holds ``(j, c)`` pairs meaning ``δc_i = Σ c·c_j``;
    ``eta`` holds the coefficient of each degree-0 basis element in ``η(1)``."""

    degrees: tuple[int, ...]
    coboundary: tuple[tuple[tuple[int, int], ...], ...]
    eta: tuple[int, ...]

    def __post_init__(self):
        cb = tuple(tuple(sorted((j, c) for j, c in terms if c)) for terms in self.coboundary)
        object.__setattr__(self, "coboundary", cb)
        degs = self.degrees
        if len(cb) != len(degs) or len(self.eta) != len(degs):
            raise InvalidStructure("degrees, coboundary and eta differ in length")
        for i, terms in enumerate(cb):
            for j, _ in terms:
                if degs[j] != degs[i] + 1:
                    raise InvalidStructure(f"coboundary of {i} contains {j} of the wrong degree")
        if any(e and d for e, d in zip(self.eta, degs)):
            raise InvalidStructure("η(1) must lie in degree 0")
        for i in range(len(degs)):
            acc: dict[int, int] = {}
            for j, c in cb[i]:
                for k, c2 in cb[j]:
                    acc[k] = acc.get(k, 0) + c * c2
            if any(acc.values()):
                raise InvalidStructure(f"δδ is nonzero on {i}")
        acc = {}
        for i, e in enumerate(self.eta):
            for j, c in cb[i]:
                acc[j] = acc.get(j, 0) + e * c
        if any(acc.values()):
            raise InvalidStructure("δη is nonzero")

    def __len__(self):
        return len(self.degrees)

    @cached_property
    def top(self) -> int:
        return max(self.degrees, default=-1)

    @cached_property
    def by_degree(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.top + 1)]
        for i, d in enumerate(self.degrees):
            out[d].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def local(self) -> tuple[int, ...]:
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
    def coboundary_matrices(self) -> tuple[Matrix, ...]:
        """Entry ``q`` is the matrix of ``δ: C^q → C^{q+1}``."""
        mats = []
        for q in range(self.top + 1):
            m = [[0] * self.rank(q) for _ in range(self.rank(q + 1))]
            for i in self.basis(q):
                for j, c in self.coboundary[i]:
                    m[self.local[j]][self.local[i]] = c
            mats.append(tuple(tuple(r) for r in m))
        return tuple(mats)

    def delta(self, q: int, v) -> tuple[int, ...]:
        if q > self.top:
            return ()
        return matvec(self.coboundary_matrices[q], v, self.rank(q + 1))

    @property
    def eta_vector(self) -> tuple[int, ...]:
        return tuple(self.eta[i] for i in self.basis(0))


@dataclass(frozen=True)
class CochainMorphism:
    source: CoaugmentedCochainComplex
    target: CoaugmentedCochainComplex
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        n = max(self.source.top, self.target.top) + 1
        mats = list(self.matrices)[:n]
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

    def matrix(self, q: int) -> Matrix:
        if q < len(self.matrices):
            return self.matrices[q]
        return zeros(self.target.rank(q), self.source.rank(q))


def dualize_object(K: AugmentedDirectedComplex) -> CoaugmentedCochainComplex:
    cob: list[list[tuple[int, int]]] = [[] for _ in K.degrees]
    for r, terms in enumerate(K.boundary):
        for q, c in terms:
            cob[q].append((r, c))
    return CoaugmentedCochainComplex(K.degrees, tuple(tuple(t) for t in cob), K.augmentation)


def undualize_object(C: CoaugmentedCochainComplex) -> AugmentedDirectedComplex:
    bd: list[list[tuple[int, int]]] = [[] for _ in C.degrees]
    for q, terms in enumerate(C.coboundary):
        for r, c in terms:
            bd[r].append((q, c))
    return AugmentedDirectedComplex(C.degrees, tuple(tuple(t) for t in bd), C.eta)


def dualize_morphism(f: ChainMorphism) -> CochainMorphism:
    """Transpose ``f: K → L`` to ``f*: L* → K*``."""
    K, L = f.source, f.target
    mats = tuple(transpose(f.matrix(q), L.rank(q), K.rank(q)) for q in range(f.ndeg))
    return CochainMorphism(dualize_object(L), dualize_object(K), mats)


def undualize_morphism(g: CochainMorphism) -> ChainMorphism:
    C, D = g.source, g.target
    n = max(C.top, D.top) + 1
    mats = tuple(transpose(g.matrix(q), D.rank(q), C.rank(q)) for q in range(n))
    return ChainMorphism(undualize_object(D), undualize_object(C), mats)


def identity_cochain(C: CoaugmentedCochainComplex) -> CochainMorphism:
    return CochainMorphism(C, C, tuple(identity_matrix(C.rank(q)) for q in range(C.top + 1)))


def compose_cochain(h: CochainMorphism, g: CochainMorphism) -> CochainMorphism:
    """``h ∘ g``."""
    if g.target != h.source:
        raise SourceTargetMismatch("target of g is not the source of h")
    C, E = g.source, h.target
    n = max(C.top, E.top) + 1
    return CochainMorphism(C, E, tuple(matmul(h.matrix(q), g.matrix(q), E.rank(q), C.rank(q)) for q in range(n)))


def cochain_defect(g: CochainMorphism) -> tuple[type, str] | None:
    C, D = g.source, g.target
    for q, m in enumerate(g.matrices):
        if any(x < 0 for row in m for x in row):
            return NegativeEntry, f"negative entry in degree {q}"
    for q in range(C.top + 1):
        for i in C.basis(q):
            col = tuple(row[C.local[i]] for row in g.matrix(q))
            lhs = D.delta(q, col)
            image_of_delta = [0] * D.rank(q + 1)
            for j, c in C.coboundary[i]:
                for k, row in enumerate(g.matrix(q + 1)):
                    image_of_delta[k] += c * row[C.local[j]]
            if tuple(lhs) != tuple(image_of_delta):
                return NotCochainMap, f"δg ≠ gδ on basis element {i}"
    if matvec(g.matrix(0), C.eta_vector, D.rank(0)) != D.eta_vector:
        return NotCoaugmented, "coaugmentation not preserved"
    return None


def validate_cochain_morphism(source, target, matrices) -> CochainMorphism:
    g = matrices if isinstance(matrices, CochainMorphism) else CochainMorphism(source, target, tuple(matrices))
    defect = cochain_defect(g)
    if defect:
        raise defect[0](defect[1])
    return g


def brute_force_cochain_hom(C: CoaugmentedCochainComplex, D: CoaugmentedCochainComplex, bound: int = 1) -> list[CochainMorphism]:
    """Every cochain morphism ``C → D`` with entries in ``0..bound``.

    Columns are chosen from the top degree down, each filtered by the
    commuting square; coaugmentation is checked on complete choices.
    """
    order = [i for q in reversed(range(C.top + 1)) for i in C.basis(q)]
    groups: dict[int, dict] = {}
    for q in range(C.top + 1):
        g: dict = {}
        for v in itertools.product(range(bound + 1), repeat=D.rank(q)):
            g.setdefault(tuple(D.delta(q, v)), []).append(v)
        groups[q] = g
    chosen: dict[int, tuple[int, ...]] = {}
    out = []

    def build():
        n = max(C.top, D.top) + 1
        mats = []
        for q in range(n):
            cols = [chosen[i] for i in C.basis(q)]
            rows = D.rank(q)
            mats.append(tuple(tuple(c[k] for c in cols) for k in range(rows)) if cols else zeros(rows, 0))
        return CochainMorphism(C, D, tuple(mats))

    def rec(pos):
        if pos == len(order):
            m = build()
            if matvec(m.matrix(0), C.eta_vector, D.rank(0)) == D.eta_vector:
                out.append(m)
            return
        i = order[pos]
        q = C.degrees[i]
        acc = [0] * D.rank(q + 1)
        for j, c in C.coboundary[i]:
            for k, v in enumerate(chosen[j]):
                acc[k] += c * v
        for v in groups[q].get(tuple(acc), ()):
            chosen[i] = v
            rec(pos + 1)
        chosen.pop(i, None)

    rec(0)
    return out


def window_coboundary(K: AugmentedDirectedComplex) -> CoaugmentedCochainComplex:
    """Coboundary of the dual of a simple complex from the window formula.

    Working in the generating order of the basis, ``δ^+ c`` sums the
    (|c|+1)-elements reached backwards from ``c`` through a run of strictly
    higher-dimensional elements and ``δ^- c`` those reached forwards.
    """
    S = as_simple(K)
    dims, order = S.flow_dims, S.order
    cob: list[list[tuple[int, int]]] = [[] for _ in dims]
    for k, i in enumerate(order):
        n = dims[k]
        for step, sign in ((-1, 1), (1, -1)):
            t = k + step
            while 0 <= t < len(dims) and dims[t] > n:
                if dims[t] == n + 1:
                    cob[i].append((order[t], sign))
                t += step
    eta = tuple(1 if d == 0 else 0 for d in S.degrees)
    return CoaugmentedCochainComplex(S.degrees, tuple(tuple(t) for t in cob), eta)


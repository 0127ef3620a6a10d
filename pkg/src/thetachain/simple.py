"""Simple augmented directed complexes and their morphisms.

A simple complex is generated by a continuously graded ordered set: the
degree-0 elements have augmentation 1 and every other element ``x`` has
``∂x = (first (|x|-1)-element after x) - (last (|x|-1)-element before x)``.

The ``order`` of a :class:`SimpleADC` lists its basis indices in that
generating order (the "flow order").  It equals declaration order under
the ``"std"`` convention.  Under ``"swapped"`` the boundary of every element
is negated, which is the same as reading the declared sequence backwards,
so the flow order is the reversed declaration order.  All combinatorics
below (ordered, between, separated, bridging) use flow order.
"""

from __future__ import annotations

import graphlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .adc import (
    AugmentedDirectedComplex,
    ChainMorphism,
    positive_boundary_witness,
    strong_order_edges,
)
from .errors import (
    Condition1Violated,
    Condition2Violated,
    InvalidStructure,
    MixedDegrees,
    NotComparable,
    NotSeparated,
)
from .representations import DimensionSequence, GradedOrderedSet, boundary_positions

CONVENTIONS = ("std", "swapped")


@dataclass(frozen=True, eq=False)
class SimpleADC(AugmentedDirectedComplex):
    order: tuple[int, ...] = ()

    @cached_property
    def pos(self) -> tuple[int, ...]:
        """Flow position of each basis index."""
        p = [0] * len(self.degrees)
        for k, i in enumerate(self.order):
            p[i] = k
        return tuple(p)

    @cached_property
    def flow_dims(self) -> tuple[int, ...]:
        return tuple(self.degrees[i] for i in self.order)

    @property
    def sequence(self) -> DimensionSequence:
        return DimensionSequence(self.flow_dims)

    @property
    def convention(self) -> str:
        if self.order == tuple(range(len(self.order))):
            return "std"
        if self.order == tuple(reversed(range(len(self.order)))):
            return "swapped"
        return "other"

    def flow_sorted(self, seq) -> tuple[int, ...]:
        return tuple(sorted(seq, key=self.pos.__getitem__))

    def between(self, a: int, b: int) -> list[int]:
        """Basis indices strictly between ``a`` and ``b`` in flow order."""
        return [self.order[k] for k in range(self.pos[a] + 1, self.pos[b])]


def from_graded_set(g: GradedOrderedSet, convention: str = "std") -> SimpleADC:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    dims = g.dims
    n = len(dims)
    sign = 1 if convention == "std" else -1
    bd = []
    for i, d in enumerate(dims):
        if d == 0:
            bd.append(())
        else:
            lo, hi = boundary_positions(dims, i)
            bd.append(((lo, -sign), (hi, sign)))
    aug = tuple(1 if d == 0 else 0 for d in dims)
    order = tuple(range(n)) if convention == "std" else tuple(reversed(range(n)))
    return SimpleADC(dims, tuple(bd), aug, g.elements, order)


def from_sequence(dims: DimensionSequence | Sequence[int], convention: str = "std") -> SimpleADC:
    return from_graded_set(GradedOrderedSet.from_sequence(dims), convention)


def recognize_simple(K: AugmentedDirectedComplex) -> SimpleADC | None:
    """Return ``K`` as a :class:`SimpleADC` if it is generated by a simple
    globular set (with some ordering of its basis), else None."""
    n = len(K)
    if n == 0:
        return None
    for i in K.basis(0):
        if K.augmentation[i] != 1:
            return None
    for i, terms in enumerate(K.boundary):
        if K.degrees[i] > 0:
            if len(terms) != 2 or sorted(c for _, c in terms) != [-1, 1]:
                return None
    edges = strong_order_edges(K)
    ts = graphlib.TopologicalSorter({i: set() for i in range(n)})
    for a, b in edges:
        ts.add(b, a)
    try:
        order = tuple(ts.static_order())
    except graphlib.CycleError:
        return None
    # the transitive closure is total iff consecutive elements are related
    edge_set = set(edges)
    if any((order[k], order[k + 1]) not in edge_set for k in range(n - 1)):
        return None
    dims = tuple(K.degrees[i] for i in order)
    try:
        DimensionSequence(dims)
    except ValueError:
        return None
    for k, i in enumerate(order):
        if dims[k] > 0:
            lo, hi = boundary_positions(dims, k)
            if dict(K.boundary[i]) != {order[lo]: -1, order[hi]: 1}:
                return None
    return SimpleADC(K.degrees, K.boundary, K.augmentation, K.names, order)


def as_simple(K: AugmentedDirectedComplex) -> SimpleADC:
    if isinstance(K, SimpleADC):
        return K
    S = recognize_simple(K)
    if S is None:
        raise InvalidStructure("complex is not simple")
    return S


# -- separated and bridging sequences ------------------------------------

def _degree_of(K: SimpleADC, seq: Sequence[int]) -> int | None:
    degs = {K.degrees[i] for i in seq}
    if len(degs) > 1:
        raise MixedDegrees(f"sequence {tuple(seq)} mixes degrees {sorted(degs)}")
    return degs.pop() if degs else None


def is_ordered(K: SimpleADC, seq: Sequence[int]) -> bool:
    return all(K.pos[a] <= K.pos[b] for a, b in zip(seq, seq[1:]))


def is_separated(K: SimpleADC, seq: Sequence[int]) -> bool:
    n = _degree_of(K, seq)
    if n is None:
        return True
    for a, b in zip(seq, seq[1:]):
        if K.pos[a] >= K.pos[b]:
            return False
        if not any(K.degrees[x] < n for x in K.between(a, b)):
            return False
    return True


def separated_leq(K: SimpleADC, lo: Sequence[int], hi: Sequence[int]) -> bool:
    """Combinatorial order: equal length, termwise ``lo_i <= hi_i`` and only
    elements of dimension at least ``n`` strictly between each pair."""
    if len(lo) != len(hi):
        return False
    n = _degree_of(K, list(lo) + list(hi))
    for a, b in zip(lo, hi):
        if K.pos[a] > K.pos[b]:
            return False
        if any(K.degrees[x] < n for x in K.between(a, b)):
            return False
    return True


def separated_leq_via_boundary(K: SimpleADC, lo: Sequence[int], hi: Sequence[int]) -> bool:
    """``hi - lo`` is the boundary of a nonnegative chain one degree up.

    Coefficients of a witness never exceed the length of the sequences (a
    nonnegative solution is a unit flow along the acyclic boundary graph),
    so the exhaustive search is bounded by that length.
    """
    n = _degree_of(K, list(lo) + list(hi))
    if n is None:
        return len(lo) == len(hi)
    target = K.chain(n, hi) - K.chain(n, lo)
    return positive_boundary_witness(K, target, max(1, len(lo))) is not None


def _slots(K: SimpleADC, lo: Sequence[int], hi: Sequence[int]) -> list[tuple[int, int]]:
    """Consecutive pairs ``(a_{i,j-1}, a_{i,j})`` of n-elements in each interval."""
    slots = []
    for a, b in zip(lo, hi):
        n = K.degrees[a]
        chain = [a] + [x for x in K.between(a, b) if K.degrees[x] == n] + ([b] if a != b else [])
        slots.extend(zip(chain, chain[1:]))
    return slots


def bridges(K: SimpleADC, b: Sequence[int], lo: Sequence[int], hi: Sequence[int]) -> bool:
    """``b`` is an ordered sequence of (n+1)-elements with ``∂Σb = Σhi - Σlo``."""
    if not separated_leq(K, lo, hi):
        raise NotComparable(f"{tuple(lo)} is not below {tuple(hi)}")
    n = _degree_of(K, list(lo) + list(hi))
    m = _degree_of(K, b)
    if not b:
        return n is None or K.chain(n, hi) == K.chain(n, lo)
    if n is not None and m != n + 1:
        return False
    if not is_ordered(K, b) or m == 0:
        return False
    dsum = K.d(K.chain(m, b))
    return dsum == K.chain(m - 1, hi) - K.chain(m - 1, lo)


def bridges_interleaving(K: SimpleADC, b: Sequence[int], lo: Sequence[int], hi: Sequence[int]) -> bool:
    """The same predicate through the explicit interleaving description."""
    if not separated_leq(K, lo, hi):
        raise NotComparable(f"{tuple(lo)} is not below {tuple(hi)}")
    slots = _slots(K, lo, hi)
    if len(b) != len(slots):
        return False
    for x, (a0, a1) in zip(b, slots):
        if K.degrees[x] != K.degrees[a0] + 1:
            return False
        if not K.pos[a0] < K.pos[x] < K.pos[a1]:
            return False
    return True


def bridging_sequences(K: SimpleADC, lo: Sequence[int], hi: Sequence[int]) -> list[tuple[int, ...]]:
    """Every sequence bridging ``lo`` and ``hi`` (empty list if ``lo ≰ hi``)."""
    if not separated_leq(K, lo, hi):
        return []
    choices = []
    for a0, a1 in _slots(K, lo, hi):
        n = K.degrees[a0]
        choices.append([x for x in K.between(a0, a1) if K.degrees[x] == n + 1])
    return list(itertools.product(*choices))


def gaps(K: SimpleADC, n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Triples ``(a', a'', (a_1, ..., a_p))``: (n-1)-elements ``a' < a''`` with
    only elements of dimension at least n between them, and the n-elements
    between them in flow order."""
    out = []
    low = [k for k, d in enumerate(K.flow_dims) if d <= n - 1]
    for p, r in zip(low, low[1:]):
        if r - p > 1:
            mid = tuple(K.order[k] for k in range(p + 1, r) if K.flow_dims[k] == n)
            out.append((K.order[p], K.order[r], mid))
    return out


# -- morphisms -----------------------------------------------------------

def _morphism_from_sequences(K: SimpleADC, L: SimpleADC, f: Mapping[int, Sequence[int]]) -> ChainMorphism:
    return ChainMorphism.from_images(K, L, {a: L.chain(K.degrees[a], seq) for a, seq in f.items()})


def validate_simple_morphism(K: SimpleADC, L: SimpleADC, f: Mapping[int, Sequence[int]]) -> ChainMorphism:
    """Accept ``f`` (basis element → sequence of basis elements) iff it
    satisfies both conditions of the combinatorial morphism criterion."""
    for a in range(len(K)):
        if a not in f:
            raise NotSeparated(f"no image given for basis element {a}")
        seq = tuple(f[a])
        if any(not 0 <= x < len(L) for x in seq):
            raise NotSeparated(f"image of {a} refers to unknown elements")
        if any(L.degrees[x] != K.degrees[a] for x in seq):
            raise NotSeparated(f"image of {a} has the wrong dimension")
        if not is_separated(L, seq):
            raise NotSeparated(f"image {seq} of {a} is not separated")

    zeros = [K.order[k] for k, d in enumerate(K.flow_dims) if d == 0]
    for a in zeros:
        if len(f[a]) != 1:
            raise Condition1Violated(f"image of 0-dimensional {a} is not a singleton")
    for a, b in zip(zeros, zeros[1:]):
        if not separated_leq(L, f[a], f[b]):
            raise Condition1Violated(f"images of {a} and {b} are out of order")

    for n in range(1, K.top + 1):
        for lo, hi, mid in gaps(K, n):
            flo, fhi = tuple(f[lo]), tuple(f[hi])
            if not separated_leq(L, flo, fhi):
                raise Condition2Violated(f"images of {lo} and {hi} are not comparable")
            for a in mid:
                if not bridges(L, tuple(f[a]), flo, fhi):
                    raise Condition2Violated(f"image of {a} does not bridge the images of {lo}, {hi}")
            for a, b in zip(mid, mid[1:]):
                if not separated_leq(L, f[a], f[b]):
                    raise Condition2Violated(f"images of {a} and {b} are out of order")
    return _morphism_from_sequences(K, L, f)


def _monotone_chains(items: list, leq, length: int) -> list[tuple]:
    out = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for x in items:
            if not prefix or leq(prefix[-1], x):
                prefix.append(x)
                rec(prefix)
                prefix.pop()

    rec([])
    return out


def enumerate_hom(K: SimpleADC, L: SimpleADC) -> list[ChainMorphism]:
    """All morphisms ``K → L``, built dimension by dimension.

    Degree 0 images are nondecreasing choices of 0-elements; each gap in
    degree n then takes a nondecreasing run of sequences bridging the
    images of its ends.  Sorted by ``ChainMorphism.sort_key``.
    """
    K, L = as_simple(K), as_simple(L)
    bridge_cache: dict = {}
    leq_cache: dict = {}

    def leq(x, y):
        key = (x, y)
        if key not in leq_cache:
            leq_cache[key] = separated_leq(L, x, y)
        return leq_cache[key]

    def bridging(lo, hi):
        key = (lo, hi)
        if key not in bridge_cache:
            bridge_cache[key] = bridging_sequences(L, lo, hi)
        return bridge_cache[key]

    out = []
    images: dict[int, tuple[int, ...]] = {}

    def extend(n):
        if n > K.top:
            out.append(_morphism_from_sequences(K, L, images))
            return
        per_gap = []
        for lo, hi, mid in gaps(K, n):
            opts = _monotone_chains(bridging(images[lo], images[hi]), leq, len(mid))
            if not opts:
                return
            per_gap.append((mid, opts))
        for pick in itertools.product(*(opts for _, opts in per_gap)):
            for (mid, _), run in zip(per_gap, pick):
                images.update(zip(mid, run))
            extend(n + 1)

    zeros_k = [K.order[k] for k, d in enumerate(K.flow_dims) if d == 0]
    zeros_l = [L.order[k] for k, d in enumerate(L.flow_dims) if d == 0]
    for combo in itertools.combinations_with_replacement(zeros_l, len(zeros_k)):
        images.clear()
        images.update((a, (b,)) for a, b in zip(zeros_k, combo))
        extend(1)
    out.sort(key=lambda f: f.sort_key)
    return out


def morphism_sequences(f: ChainMorphism) -> dict[int, tuple[int, ...]]:
    """Image of each source basis element as a flow-ordered index sequence."""
    L = as_simple(f.target)
    return {a: L.flow_sorted(f.image_indices(a)) for a in range(len(f.source))}


def image_is_separated(f: ChainMorphism, b: int) -> bool:
    L = as_simple(f.target)
    img = f.image(b)
    if any(c not in (0, 1) for c in img.coeffs):
        return False
    return is_separated(L, L.flow_sorted(f.image_indices(b)))

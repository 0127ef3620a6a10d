"""Indexing data for simple globular sets.

Four equivalent descriptions are supported, with explicit conversions:

* dimension sequences (the canonical identity of an object),
* up-and-down vectors (maxima and internal minima of the sequence),
* level-trees (planar rooted trees),
* continuously graded ordered sets, which carry the globular structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import (
    EmptySequence,
    EndpointNotZero,
    InvalidUpDown,
    ParseError,
    StepNotOne,
    ZeroDimensional,
)


@dataclass(frozen=True)
class DimensionSequence:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise EmptySequence("dimension sequence is empty")
        if any(d < 0 for d in dims):
            raise StepNotOne(f"negative dimension in {dims}")
        if dims[0] != 0 or dims[-1] != 0:
            raise EndpointNotZero(f"sequence must start and end with 0: {dims}")
        for i in range(1, len(dims)):
            if abs(dims[i] - dims[i - 1]) != 1:
                raise StepNotOne(
                    f"adjacent terms {dims[i - 1]}, {dims[i]} at position {i} do not differ by 1"
                )

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    @property
    def level(self) -> int:
        return max(self.dims)

    def __str__(self):
        return "dims: " + " ".join(map(str, self.dims))


def validate_sequence(dims: Iterable[int]) -> DimensionSequence:
    return DimensionSequence(tuple(dims))


@dataclass(frozen=True)
class UpDownVector:
    """Alternating vector ``(u_0, v_1, u_1, ..., v_k, u_k)`` with ``u > v < u``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if not e:
            raise EmptySequence("up-and-down vector is empty")
        if len(e) % 2 == 0:
            raise InvalidUpDown(f"up-and-down vector must have odd length: {e}")
        if any(x < 0 for x in e):
            raise InvalidUpDown(f"negative entry in {e}")
        for i in range(1, len(e), 2):
            if not (e[i - 1] > e[i] < e[i + 1]):
                raise InvalidUpDown(f"entries {e[i - 1]}, {e[i]}, {e[i + 1]} do not go up and down")

    @property
    def maxima(self) -> tuple[int, ...]:
        return self.entries[0::2]

    @property
    def minima(self) -> tuple[int, ...]:
        return self.entries[1::2]

    def __str__(self):
        return "updown: " + " ".join(map(str, self.entries))


@dataclass(frozen=True)
class LevelTree:
    """Planar rooted tree; the order of ``children`` is significant."""

    children: tuple["LevelTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_depths(self) -> list[int]:
        out = []

        def walk(node, depth):
            if node.is_leaf:
                out.append(depth)
            for c in node.children:
                walk(c, depth + 1)

        walk(self, 0)
        return out

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def __str__(self):
        return "(" + "".join(str(c) for c in self.children) + ")"


def parse_tree(text: str) -> LevelTree:
    s = "".join(text.split())
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(s) or s[pos] != "(":
            raise ParseError(f"expected '(' at offset {pos} in {text!r}")
        pos += 1
        kids = []
        while pos < len(s) and s[pos] == "(":
            kids.append(node())
        if pos >= len(s) or s[pos] != ")":
            raise ParseError(f"expected ')' at offset {pos} in {text!r}")
        pos += 1
        return LevelTree(tuple(kids))

    t = node()
    if pos != len(s):
        raise ParseError(f"trailing characters after tree in {text!r}")
    return t


def _turning_points(dims):
    # dims[i] is a maximum if no neighbour is dims[i] + 1, an internal
    # minimum if both neighbours exist and equal dims[i] + 1
    out = []
    n = len(dims)
    for i, d in enumerate(dims):
        nbrs = [dims[j] for j in (i - 1, i + 1) if 0 <= j < n]
        if all(x != d + 1 for x in nbrs):
            out.append(d)
        elif len(nbrs) == 2 and all(x == d + 1 for x in nbrs):
            out.append(d)
    return out


def seq_to_updown(s: DimensionSequence) -> UpDownVector:
    return UpDownVector(tuple(_turning_points(s.dims)))


def updown_to_seq(u: UpDownVector) -> DimensionSequence:
    dims = [0]
    for target in (*u.entries, 0):
        while dims[-1] != target:
            dims.append(dims[-1] + (1 if target > dims[-1] else -1))
    return DimensionSequence(tuple(dims))


def updown_to_tree(u: UpDownVector) -> LevelTree:
    # Build with mutable child lists, freeze at the end.
    root: list = []
    path = [root]
    for _ in range(u.entries[0]):
        child: list = []
        path[-1].append(child)
        path.append(child)
    for i in range(1, len(u.entries), 2):
        shared, length = u.entries[i], u.entries[i + 1]
        del path[shared + 1:]
        for _ in range(length - shared):
            child = []
            path[-1].append(child)
            path.append(child)

    def freeze(node):
        return LevelTree(tuple(freeze(c) for c in node))

    return freeze(root)


def tree_to_updown(t: LevelTree) -> UpDownVector:
    entries: list[int] = []
    prev_path: list[int] | None = None

    def walk(node, path):
        nonlocal prev_path
        if node.is_leaf:
            if prev_path is not None:
                common = 0
                while common < min(len(path), len(prev_path)) and path[common] == prev_path[common]:
                    common += 1
                entries.append(common)
            entries.append(len(path))
            prev_path = list(path)
        for k, c in enumerate(node.children):
            path.append(k)
            walk(c, path)
            path.pop()

    walk(t, [])
    return UpDownVector(tuple(entries))


def seq_to_tree(s: DimensionSequence) -> LevelTree:
    return updown_to_tree(seq_to_updown(s))


def tree_to_seq(t: LevelTree) -> DimensionSequence:
    return updown_to_seq(tree_to_updown(t))


@dataclass(frozen=True)
class GradedOrderedSet:
    """A continuously graded ordered set.

    ``elements`` are listed in increasing order; by default they are the
    positions ``0..p``.
    """

    dims: tuple[int, ...]
    elements: tuple[Hashable, ...] = field(default=())
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        DimensionSequence(self.dims)
        object.__setattr__(self, "dims", tuple(self.dims))
        if not self.elements:
            object.__setattr__(self, "elements", tuple(range(len(self.dims))))
        if len(self.elements) != len(self.dims):
            raise ValueError("elements and dims differ in length")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})
        if len(self._index) != len(self.elements):
            raise ValueError("elements must be distinct")

    @classmethod
    def from_sequence(cls, s: DimensionSequence | Sequence[int], elements=()):
        dims = s.dims if isinstance(s, DimensionSequence) else tuple(s)
        return cls(dims, tuple(elements))

    @property
    def sequence(self) -> DimensionSequence:
        return DimensionSequence(self.dims)

    def position(self, x) -> int:
        return self._index[x]

    def dim(self, x) -> int:
        return self.dims[self._index[x]]

    def __len__(self):
        return len(self.dims)


def boundary_positions(dims: Sequence[int], i: int) -> tuple[int, int]:
    """Positions of source and target of the element at position ``i``."""
    d = dims[i]
    if d == 0:
        raise ZeroDimensional(f"element at position {i} is zero-dimensional")
    before = next(j for j in range(i - 1, -1, -1) if dims[j] == d - 1)
    after = next(j for j in range(i + 1, len(dims)) if dims[j] == d - 1)
    return before, after


def boundaries(g: GradedOrderedSet, x) -> tuple:
    """Return ``(source, target)`` of ``x``: the last element of dimension
    ``|x| - 1`` before it and the first such element after it."""
    lo, hi = boundary_positions(g.dims, g.position(x))
    return g.elements[lo], g.elements[hi]


def all_sequences(max_length: int) -> list[DimensionSequence]:
    """Every dimension sequence of length at most ``max_length``, shortest
    first and lexicographic within a length."""
    out = []
    frontier = [(0,)]
    while frontier:
        nxt = []
        for seq in frontier:
            if seq[-1] == 0:
                out.append(DimensionSequence(seq))
            if len(seq) < max_length:
                # prune walks that cannot return to 0 in time
                remaining = max_length - len(seq)
                for step in (-1, 1):
                    v = seq[-1] + step
                    if v >= 0 and v <= remaining - 1:
                        nxt.append(seq + (v,))
        frontier = nxt
    out.sort(key=lambda s: (len(s), s.dims))
    return out

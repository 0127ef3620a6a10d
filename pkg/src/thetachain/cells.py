"""Cells of the ω-category νK attached to a complex K.

A cell is a double sequence ``(x_0^-, x_0^+ | x_1^-, x_1^+ | ...)`` of
nonnegative chains with ``ε x_0^± = 1`` and
``x_q^+ - x_q^- = ∂x_{q+1}^- = ∂x_{q+1}^+``.  Levels above the top degree
of K are necessarily zero, so a cell stores exactly ``K.top + 1`` levels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .adc import AugmentedDirectedComplex, Chain, ChainMorphism, check_unital, pos_neg_parts
from .errors import (
    BadAugmentation,
    BoundaryMismatch,
    InfiniteSupport,
    NotComposable,
    NotPositive,
    NotUnital,
)

SIGNS = ("-", "+")


@dataclass(frozen=True)
class Cell:
    complex: AugmentedDirectedComplex = field(compare=False, repr=False)
    levels: tuple[tuple[Chain, Chain], ...]

    @property
    def dimension(self) -> int:
        """Largest degree with nonzero support (the cell is a ∘_m identity there)."""
        top = 0
        for q, (neg, pos) in enumerate(self.levels):
            if neg or pos:
                top = q
        return top

    def part(self, q: int, sign: str) -> Chain:
        if q >= len(self.levels):
            return self.complex.zero(q)
        return self.levels[q][0 if sign == "-" else 1]

    @property
    def key(self) -> tuple:
        return tuple((n.coeffs, p.coeffs) for n, p in self.levels)

    def __str__(self):
        return format_cell(self)


def _as_chain(K, q, x) -> Chain:
    if isinstance(x, Chain):
        return x
    return K.chain(q, x)


def _cell_defect(K, levels) -> tuple[type, str] | None:
    for q, (neg, pos) in enumerate(levels):
        if not (neg.is_positive and pos.is_positive):
            return NotPositive, f"level {q} has a negative coefficient"
    if K.top < 0:
        return BadAugmentation, "the zero complex has no cells"
    for sign, x in zip(SIGNS, levels[0]):
        if K.epsilon(x) != 1:
            return BadAugmentation, f"ε x_0^{sign} = {K.epsilon(x)}, not 1"
    for q in range(K.top + 1):
        diff = levels[q][1] - levels[q][0]
        if q == K.top:
            if diff:
                return BoundaryMismatch, f"x_{q}^+ ≠ x_{q}^- in the top degree"
            continue
        for sign, x in zip(SIGNS, levels[q + 1]):
            if K.d(x) != diff:
                return BoundaryMismatch, f"x_{q}^+ - x_{q}^- differs from ∂x_{q + 1}^{sign}"
    return None


def make_cell(K: AugmentedDirectedComplex, components: Sequence) -> Cell:
    """Validate a double sequence given as ``[(neg, pos), ...]`` by degree.

    Entries may be :class:`Chain` objects, mappings ``{basis index: coeff}``
    or iterables of basis indices.  Missing trailing levels are zero.
    """
    components = list(components)
    levels = []
    for q in range(K.top + 1):
        if q < len(components):
            neg, pos = components[q]
            levels.append((_as_chain(K, q, neg), _as_chain(K, q, pos)))
        else:
            levels.append((K.zero(q), K.zero(q)))
    for q in range(K.top + 1, len(components)):
        neg, pos = components[q]
        if any(_nonzero(x) for x in (neg, pos)):
            raise InfiniteSupport(f"level {q} lies above the top degree {K.top} of the complex")
    defect = _cell_defect(K, levels)
    if defect:
        raise defect[0](defect[1])
    return Cell(K, tuple(levels))


def _nonzero(x) -> bool:
    if isinstance(x, Chain):
        return bool(x)
    if isinstance(x, dict):
        return any(x.values())
    return bool(list(x))


def is_cell(K, levels) -> bool:
    return _cell_defect(K, levels) is None


def d(n: int, sign: str, x: Cell) -> Cell:
    """Left (``-``) or right (``+``) identity of ``x`` for ``∘_n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    K = x.complex
    levels = []
    for q, (neg, pos) in enumerate(x.levels):
        if q < n:
            levels.append((neg, pos))
        elif q == n:
            v = neg if sign == "-" else pos
            levels.append((v, v))
        else:
            levels.append((K.zero(q), K.zero(q)))
    return Cell(K, tuple(levels))


def compose(n: int, x: Cell, y: Cell) -> Cell:
    """``x ∘_n y = x - z + y`` where ``z = d_n^+ x = d_n^- y``."""
    z = d(n, "+", x)
    if z != d(n, "-", y):
        raise NotComposable(f"d_{n}^+ of the first cell is not d_{n}^- of the second")
    levels = tuple(
        (xn - zn + yn, xp - zp + yp)
        for (xn, xp), (zn, zp), (yn, yp) in zip(x.levels, z.levels, y.levels)
    )
    return Cell(x.complex, levels)


def atom(K: AugmentedDirectedComplex, b: int) -> Cell:
    """The cell ``<b>`` built from the iterated boundary parts of ``b``."""
    if not check_unital(K):
        raise NotUnital("atoms need a unital basis")
    n = K.degrees[b]
    x = K.basis_chain(b)
    levels = []
    for q in range(K.top + 1):
        if q < n:
            levels.append((K.iterated_part(x, "-", n - q), K.iterated_part(x, "+", n - q)))
        elif q == n:
            levels.append((x, x))
        else:
            levels.append((K.zero(q), K.zero(q)))
    return Cell(K, tuple(levels))


def check_atom_boundary(K: AugmentedDirectedComplex, b: int) -> bool:
    """``d_{n-1}^± <b> = <∂^± b>`` for an n-dimensional basis element ``b``."""
    n = K.degrees[b]
    if n == 0:
        raise ValueError("basis element must be positive-dimensional")
    plus, minus = [K.terms(p) for p in pos_neg_parts(K.d(K.basis_chain(b)))]
    if len(plus) != 1 or len(minus) != 1 or plus[0][1] != 1 or minus[0][1] != 1:
        return False
    a = atom(K, b)
    return d(n - 1, "-", a) == atom(K, minus[0][0]) and d(n - 1, "+", a) == atom(K, plus[0][0])


def enumerate_cells(K: AugmentedDirectedComplex, cap: int = 1) -> list[Cell]:
    """Every cell of νK whose coefficients are at most ``cap``.

    Works upwards from degree 0: both ``x_{q+1}^±`` range over the bounded
    nonnegative chains whose boundary is ``x_q^+ - x_q^-``, and the
    sequence must close up (``x^+ = x^-``) at the top degree.
    """
    if K.top < 0:
        return []
    by_boundary: list[dict] = [{}]
    for q in range(1, K.top + 1):
        groups: dict = {}
        for v in itertools.product(range(cap + 1), repeat=K.rank(q)):
            c = Chain(q, v)
            groups.setdefault(K.d(c).coeffs, []).append(c)
        by_boundary.append(groups)

    points = [
        Chain(0, v)
        for v in itertools.product(range(cap + 1), repeat=K.rank(0))
        if K.epsilon(Chain(0, v)) == 1
    ]
    out = []

    def rec(levels):
        q = len(levels) - 1
        neg, pos = levels[-1]
        diff = (pos - neg).coeffs
        if q == K.top:
            if not any(diff):
                out.append(Cell(K, tuple(levels)))
            return
        cands = by_boundary[q + 1].get(diff, [])
        for a in cands:
            for b in cands:
                rec(levels + [(a, b)])

    for a in points:
        for b in points:
            rec([(a, b)])
    # lower basis indices first within each dimension
    out.sort(key=lambda c: (c.dimension, tuple(tuple(-k for k in v) for lv in c.key for v in lv)))
    return out


def nu_map(f: ChainMorphism, x: Cell) -> Cell:
    """Apply ``f`` componentwise, giving a cell of ν(target)."""
    L = f.target
    levels = []
    for q in range(L.top + 1):
        levels.append((f.apply(x.part(q, "-")), f.apply(x.part(q, "+"))))
    return Cell(L, tuple(levels))


def format_cell(x: Cell) -> str:
    K = x.complex

    def fmt(c: Chain) -> str:
        terms = K.terms(c)
        if not terms:
            return "0"
        return " + ".join(f"[{K.names[i]}]" if k == 1 else f"{k}*[{K.names[i]}]" for i, k in terms)

    return "; ".join(f"{q}: ({fmt(n)} | {fmt(p)})" for q, (n, p) in enumerate(x.levels))

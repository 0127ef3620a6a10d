"""Wreath products over the simplex category and the suspension functor V.

Objects of the wreath product are pairs ``(m, (K^1, ..., K^m))``; morphisms
``(m, K) → (n, L)`` are pairs ``(φ, f)`` with ``0 ≤ φ(0) ≤ ... ≤ φ(m) ≤ n``
and chain morphisms ``f_i^j: K^i → L^j`` for ``φ(i-1) < j ≤ φ(i)``.

``V(m, K) = Zp^0 ⊕ sK^1 ⊕ Zp^1 ⊕ ... ⊕ sK^m ⊕ Zp^m`` joins suspensions of
the components end to end.  Basis elements of ``V(m, K)`` are named
``(i,)`` for ``p^i`` and ``(i, b)`` for ``s`` of basis element ``b`` of ``K^i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .adc import (
    AugmentedDirectedComplex,
    ChainMorphism,
    brute_force_hom,
    check_loop_free,
    check_unital,
    compose_morphisms,
)
from .errors import ComponentOutsidePhi, SourceTargetMismatch, ThetaError
from .representations import DimensionSequence
from .simple import SimpleADC, enumerate_hom, from_sequence, recognize_simple

HomFn = Callable[[AugmentedDirectedComplex, AugmentedDirectedComplex], list[ChainMorphism]]


@dataclass(frozen=True)
class WreathObject:
    m: int
    components: tuple[AugmentedDirectedComplex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.m < 0 or len(self.components) != self.m:
            raise ThetaError(f"expected {self.m} components, got {len(self.components)}")

    @property
    def v_size(self) -> int:
        return self.m + 1 + sum(len(K) for K in self.components)


def window(phi: tuple[int, ...]) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` of the family ``f`` in its canonical order."""
    return [(i, j) for i in range(1, len(phi)) for j in range(phi[i - 1] + 1, phi[i] + 1)]


@dataclass(frozen=True)
class WreathMorphism:
    source: WreathObject
    target: WreathObject
    phi: tuple[int, ...]
    f: tuple[ChainMorphism, ...] = ()

    def __post_init__(self):
        phi = tuple(self.phi)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "f", tuple(self.f))
        m, n = self.source.m, self.target.m
        if len(phi) != m + 1:
            raise ThetaError(f"φ must have {m + 1} entries")
        if not all(0 <= a <= b <= n for a, b in zip(phi, phi[1:])) or not 0 <= phi[0] <= n:
            raise ThetaError(f"φ = {phi} is not monotone in 0..{n}")
        pairs = window(phi)
        if len(self.f) != len(pairs):
            raise ThetaError(f"expected {len(pairs)} component morphisms, got {len(self.f)}")
        for (i, j), g in zip(pairs, self.f):
            if g.source != self.source.components[i - 1] or g.target != self.target.components[j - 1]:
                raise SourceTargetMismatch(f"f_{i}^{j} has the wrong source or target")

    @cached_property
    def family(self) -> dict[tuple[int, int], ChainMorphism]:
        return dict(zip(window(self.phi), self.f))

    def component(self, i: int, j: int) -> ChainMorphism:
        return self.family[(i, j)]


def wreath_identity(w: WreathObject) -> WreathMorphism:
    return WreathMorphism(w, w, tuple(range(w.m + 1)), tuple(ChainMorphism.identity(K) for K in w.components))


def wreath_compose(psi_g: WreathMorphism, phi_f: WreathMorphism) -> WreathMorphism:
    """``(ψ, g) ∘ (φ, f) = (ψφ, g∘f)`` with ``(g∘f)_i^k = g_j^k ∘ f_i^j``."""
    if phi_f.target != psi_g.source:
        raise SourceTargetMismatch("target of the first morphism is not the source of the second")
    phi, psi = phi_f.phi, psi_g.phi
    comp = tuple(psi[x] for x in phi)
    f = []
    for i, k in window(comp):
        # the unique j with ψ(j-1) < k ≤ ψ(j); it lies in (φ(i-1), φ(i)]
        j = next(j for j in range(phi[i - 1] + 1, phi[i] + 1) if psi[j - 1] < k <= psi[j])
        f.append(compose_morphisms(psi_g.component(j, k), phi_f.component(i, j)))
    return WreathMorphism(phi_f.source, psi_g.target, comp, tuple(f))


# -- the functor V -------------------------------------------------------

def _layout(w: WreathObject) -> tuple[list[int], list[int]]:
    """Index of each ``p^i`` in ``V(w)`` and the offset of each ``sK^i`` block."""
    p_index, s_offset = [0], [0]
    pos = 1
    for K in w.components:
        s_offset.append(pos)
        pos += len(K)
        p_index.append(pos)
        pos += 1
    return p_index, s_offset


def V_object(w: WreathObject) -> AugmentedDirectedComplex:
    p_index, s_offset = _layout(w)
    degrees, boundary, aug, names = [0], [()], [1], [(0,)]
    for i, K in enumerate(w.components, start=1):
        off = s_offset[i]
        for b, d in enumerate(K.degrees):
            degrees.append(d + 1)
            if d == 0:
                e = K.augmentation[b]
                boundary.append(((p_index[i], e), (p_index[i - 1], -e)))
            else:
                boundary.append(tuple((off + j, c) for j, c in K.boundary[b]))
            aug.append(0)
            names.append((i, K.names[b]))
        degrees.append(0)
        boundary.append(())
        aug.append(1)
        names.append((i,))
    return AugmentedDirectedComplex(tuple(degrees), tuple(boundary), tuple(aug), tuple(names))


def V_morphism(wm: WreathMorphism, source: AugmentedDirectedComplex | None = None,
               target: AugmentedDirectedComplex | None = None) -> ChainMorphism:
    """``p^i ↦ p^{φ(i)}`` and ``sx ↦ Σ_{φ(i-1) < j ≤ φ(i)} s f_i^j x``."""
    VK = source if source is not None else V_object(wm.source)
    VL = target if target is not None else V_object(wm.target)
    p_src, s_src = _layout(wm.source)
    p_tgt, s_tgt = _layout(wm.target)
    images: dict[int, dict[int, int]] = {}
    for i, p in enumerate(p_src):
        images[p] = {p_tgt[wm.phi[i]]: 1}
    for i, K in enumerate(wm.source.components, start=1):
        for b in range(len(K)):
            img: dict[int, int] = {}
            for j in range(wm.phi[i - 1] + 1, wm.phi[i] + 1):
                g = wm.component(i, j)
                for t, c in g.target.terms(g.image(b)):
                    img[s_tgt[j] + t] = img.get(s_tgt[j] + t, 0) + c
            images[s_src[i] + b] = img
    return ChainMorphism.from_images(VK, VL, images)


# -- hom-sets and full faithfulness --------------------------------------

def _default_hom(K, L):
    SK, SL = (K if isinstance(K, SimpleADC) else recognize_simple(K)), (L if isinstance(L, SimpleADC) else recognize_simple(L))
    if SK is not None and SL is not None:
        return enumerate_hom(SK, SL)
    return brute_force_hom(K, L, 1)


def enumerate_wreath_hom(w1: WreathObject, w2: WreathObject, hom_fn: HomFn | None = None) -> list[WreathMorphism]:
    """Every ``(φ, f)``: φ over monotone tuples, f over products of component
    hom-sets (supplied by ``hom_fn``).  Ordered by φ, then by ``f``."""
    hom_fn = hom_fn or _default_hom
    cache: dict[tuple[int, int], list[ChainMorphism]] = {}

    def homs(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = hom_fn(w1.components[i - 1], w2.components[j - 1])
        return cache[(i, j)]

    out = []
    for phi in itertools.combinations_with_replacement(range(w2.m + 1), w1.m + 1):
        pairs = window(phi)
        for f in itertools.product(*(homs(i, j) for i, j in pairs)):
            out.append(WreathMorphism(w1, w2, phi, f))
    return out


def in_phi(K: AugmentedDirectedComplex) -> bool:
    """Nonzero with a loop-free unital basis."""
    return len(K) > 0 and check_unital(K) and check_loop_free(K)


@dataclass(frozen=True)
class FullFaithfulnessReport:
    wreath_count: int
    target_count: int
    injective: bool
    image_is_hom_set: bool
    images: tuple = field(default=(), repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.injective and self.image_is_hom_set and self.wreath_count == self.target_count


def fully_faithful_report(w1: WreathObject, w2: WreathObject, hom_fn: HomFn | None = None,
                          target_hom_fn: HomFn | None = None) -> FullFaithfulnessReport:
    for w in (w1, w2):
        for K in w.components:
            if not in_phi(K):
                raise ComponentOutsidePhi("components must be nonzero with loop-free unital bases")
    VK, VL = V_object(w1), V_object(w2)
    wreath_homs = enumerate_wreath_hom(w1, w2, hom_fn)
    images = [V_morphism(wm, VK, VL) for wm in wreath_homs]
    target = (target_hom_fn or _default_hom)(VK, VL)
    image_set = set(images)
    return FullFaithfulnessReport(
        wreath_count=len(wreath_homs),
        target_count=len(target),
        injective=len(image_set) == len(images),
        image_is_hom_set=image_set == set(target),
        images=tuple(images),
    )


def check_fully_faithful(w1: WreathObject, w2: WreathObject, hom_fn: HomFn | None = None) -> bool:
    return fully_faithful_report(w1, w2, hom_fn).ok


# -- the filtration by Θ_n -----------------------------------------------

def theta_level(K: AugmentedDirectedComplex) -> int:
    return K.top


def _tuples(pool: list[SimpleADC], budget: int):
    """Tuples of ``pool`` members where each member costs ``len + 1``."""
    yield ()
    for K in pool:
        cost = len(K) + 1
        if cost <= budget:
            for rest in _tuples(pool, budget - cost):
                yield (K,) + rest


def iterated_wreath_objects(n: int, cap: int, convention: str = "std") -> list[SimpleADC]:
    """Objects of the n-fold iterated wreath product with at most ``cap``
    basis elements, realised as simple complexes by repeated use of V."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    level = [from_sequence((0,), convention)]
    for _ in range(n):
        nxt = []
        for comps in _tuples(level, cap - 1):
            S = recognize_simple(V_object(WreathObject(len(comps), comps)))
            if S is None:
                raise RuntimeError("V produced a complex that is not simple")
            nxt.append(S)
        level = nxt
    level.sort(key=lambda S: (len(S), S.flow_dims))
    return level


def example_sequence(component_dims: list[DimensionSequence]) -> DimensionSequence:
    """``(0, st^1, 0, ..., 0, st^m, 0)`` with each ``st^i`` shifted up by one."""
    dims = [0]
    for t in component_dims:
        dims.extend(d + 1 for d in t)
        dims.append(0)
    return DimensionSequence(tuple(dims))

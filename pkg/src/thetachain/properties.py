"""Named invariant checks shared by the CLI ``suite`` command, the acceptance
tests and the scripts.

Each check takes a :class:`SuiteConfig` and returns a :class:`CheckResult`
holding failure messages plus the cardinalities it observed.  The counts let
a rerun under the other boundary convention be compared number for number.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import defaultdict
from dataclasses import dataclass, field, replace
from typing import Callable

from .adc import (
    ChainMorphism,
    brute_force_hom,
    check_loop_free,
    check_strongly_loop_free,
    check_unital,
    compose_morphisms,
    morphism_defect,
)
from .catalog import CATALOG, LONG_EXAMPLE, LONG_EXAMPLE_UPDOWN
from .cells import Cell, atom, check_atom_boundary, compose, d, enumerate_cells, is_cell, nu_map
from .discs import (
    brute_force_cochain_hom,
    cochain_defect,
    compose_cochain,
    dualize_morphism,
    dualize_object,
    undualize_morphism,
    undualize_object,
    window_coboundary,
)
from .representations import (
    DimensionSequence,
    GradedOrderedSet,
    all_sequences,
    boundaries,
    seq_to_tree,
    seq_to_updown,
    tree_to_seq,
    tree_to_updown,
    updown_to_seq,
    updown_to_tree,
)
from .simple import (
    SimpleADC,
    bridges,
    bridges_interleaving,
    enumerate_hom,
    from_sequence,
    image_is_separated,
    is_separated,
    morphism_sequences,
    separated_leq,
    separated_leq_via_boundary,
    validate_simple_morphism,
)
from .wreath import (
    V_morphism,
    V_object,
    WreathObject,
    enumerate_wreath_hom,
    example_sequence,
    fully_faithful_report,
    iterated_wreath_objects,
    wreath_compose,
    wreath_identity,
)


@dataclass(frozen=True)
class SuiteConfig:
    convention: str = "std"
    cell_cap: int = 1
    seq_length: int = 13
    theta1_max: int = 4
    bound2_max: int = 2
    pair_size: int = 10
    nu_pair_size: int = 20
    wreath_v_size: int = 10
    functor_v_size: int = 7
    filtration_n: int = 3
    filtration_cap: int = 13


@dataclass
class CheckResult:
    name: str
    criterion: int | None
    failures: list[str] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.name} ({self.seconds:.2f}s)"
        if self.failures:
            msg += f": {self.failures[0]}"
            if len(self.failures) > 1:
                msg += f" (+{len(self.failures) - 1} more)"
        return msg


CheckFn = Callable[[SuiteConfig, CheckResult], None]
CHECKS: dict[str, tuple[int | None, CheckFn]] = {}


def check(name: str, criterion: int | None = None):
    def register(fn: CheckFn) -> CheckFn:
        CHECKS[name] = (criterion, fn)
        return fn
    return register


def run_check(name: str, cfg: SuiteConfig | None = None) -> CheckResult:
    cfg = cfg or SuiteConfig()
    criterion, fn = CHECKS[name]
    res = CheckResult(name, criterion)
    start = time.perf_counter()
    try:
        fn(cfg, res)
    except Exception as exc:  # a crash is reported as a failure, not swallowed
        res.failures.append(f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - start
    return res


def run_criterion(criterion: int, cfg: SuiteConfig | None = None) -> list[CheckResult]:
    return [run_check(n, cfg) for n, (c, _) in CHECKS.items() if c == criterion]


def run_all(cfg: SuiteConfig | None = None) -> list[CheckResult]:
    return [run_check(n, cfg) for n in CHECKS]


# -- shared fixtures -------------------------------------------------------

def catalog_objects(cfg: SuiteConfig) -> list[SimpleADC]:
    return [from_sequence(s, cfg.convention) for s in CATALOG.values()]


def arrows(m: int, convention: str = "std") -> SimpleADC:
    """The Θ_1 object with ``m`` one-dimensional elements."""
    return from_sequence((0,) + (1, 0) * m, convention)


def separated_sequences(K: SimpleADC, n: int, max_len: int | None = None) -> list[tuple[int, ...]]:
    elems = [i for i in K.order if K.degrees[i] == n]
    max_len = len(elems) if max_len is None else max_len
    out = []
    for k in range(1, max_len + 1):
        out.extend(c for c in itertools.combinations(elems, k) if is_separated(K, c))
    return out


def wreath_objects(max_v_size: int, convention: str) -> list[WreathObject]:
    """All wreath objects with simple components and ``|V| ≤ max_v_size``."""
    seqs = [from_sequence(s, convention) for s in all_sequences(max_v_size - 2)] if max_v_size >= 3 else []
    out = []

    def rec(prefix, budget):
        out.append(WreathObject(len(prefix), tuple(prefix)))
        for K in seqs:
            if len(K) + 1 <= budget:
                rec(prefix + [K], budget - len(K) - 1)

    rec([], max_v_size - 1)
    return out


def _fail(res: CheckResult, cond: bool, msg: str):
    if not cond:
        res.failures.append(msg)


# -- 1: representations --------------------------------------------------

def _euler_dims(tree) -> tuple[int, ...]:
    """Oracle: depths visited by a depth-first tour of the tree."""
    out: list[int] = []

    def walk(node, depth):
        out.append(depth)
        for child in node.children:
            walk(child, depth + 1)
            out.append(depth)

    walk(tree, 0)
    return tuple(out)


@check("representations.round_trips", 1)
def _representations(cfg, res):
    seqs = all_sequences(cfg.seq_length)
    res.counts["sequences"] = len(seqs)
    catalan = sum(math.comb(2 * k, k) // (k + 1) for k in range((cfg.seq_length - 1) // 2 + 1))
    _fail(res, len(seqs) == catalan, f"{len(seqs)} sequences, expected {catalan}")
    for s in seqs:
        u = seq_to_updown(s)
        t = updown_to_tree(u)
        _fail(res, updown_to_seq(u) == s, f"seq→updown→seq fails on {s}")
        _fail(res, tree_to_updown(t) == u, f"updown→tree→updown fails on {s}")
        _fail(res, tree_to_seq(seq_to_tree(s)) == s, f"seq→tree→seq fails on {s}")
        _fail(res, _euler_dims(t) == s.dims, f"tree of {s} disagrees with its Euler tour")
    long_u = seq_to_updown(DimensionSequence(LONG_EXAMPLE))
    _fail(res, long_u.entries == LONG_EXAMPLE_UPDOWN, f"long example gives {long_u}")
    _fail(res, updown_to_seq(long_u).dims == LONG_EXAMPLE, "long example does not round-trip")


@check("representations.globularity")
def _globularity(cfg, res):
    for s in all_sequences(cfg.seq_length):
        g = GradedOrderedSet.from_sequence(s)
        _fail(res, all(abs(a - b) == 1 for a, b in zip(s, s.dims[1:])), f"{s}: step ≠ 1")
        for x in range(len(s)):
            if s[x] >= 2:
                lo, hi = boundaries(g, x)
                (ll, lh), (hl, hh) = boundaries(g, lo), boundaries(g, hi)
                _fail(res, ll == hl and lh == hh, f"{s}: globularity fails at {x}")


# -- adc_core invariants -----------------------------------------------------

def _generated_complexes(cfg):
    objs = catalog_objects(cfg)
    objs += [V_object(w) for w in wreath_objects(7, cfg.convention)]
    return objs


@check("adc.structure")
def _adc_structure(cfg, res):
    for K in _generated_complexes(cfg):
        for i in range(len(K)):
            x = K.basis_chain(i)
            if K.degrees[i] >= 1:
                dx = K.d(x)
                _fail(res, not K.d(dx) if dx.degree >= 1 else K.epsilon(dx) == 0, f"∂∂ or ε∂ nonzero on {i}")
        if check_strongly_loop_free(K):
            _fail(res, check_loop_free(K), "strongly loop-free but not loop-free")
        if len(K) and check_unital(K):
            _fail(res, bool(K.basis(0)), "unital complex without 0-elements")
            _fail(res, all(K.augmentation[i] == 1 for i in K.basis(0)), "a 0-element has ε ≠ 1")


@check("adc.augmentation_detects_zero")
def _augmentation_zero(cfg, res):
    objs = catalog_objects(cfg)
    for K, L in itertools.product(objs, repeat=2):
        for f in brute_force_hom(K, L, bound=1, scale=0):
            _fail(res, not any(any(any(r) for r in m) for m in f.matrices), "nonzero map with ε∘f = 0")


# -- 2: Θ_1 against the simplex category -----------------------------------

@check("simple.theta1_hom_counts", 2)
def _theta1(cfg, res):
    for m, n in itertools.product(range(cfg.theta1_max + 1), repeat=2):
        K, L = arrows(m, cfg.convention), arrows(n, cfg.convention)
        homs = enumerate_hom(K, L)
        res.counts[f"Hom(O_{m},O_{n})"] = len(homs)
        _fail(res, len(homs) == math.comb(m + n + 1, m + 1), f"|Hom(O_{m}, O_{n})| = {len(homs)}")
        _fail(res, homs == brute_force_hom(K, L, 1), f"oracle disagrees on O_{m} → O_{n}")
        if m <= cfg.bound2_max and n <= cfg.bound2_max:
            _fail(res, homs == brute_force_hom(K, L, 2), f"bound-2 oracle disagrees on O_{m} → O_{n}")


# -- 3: the combinatorial morphism criterion --------------------------------

@check("simple.separated_images", 3)
def _separated_images(cfg, res):
    objs = catalog_objects(cfg)
    total = 0
    for K, L in itertools.product(objs, repeat=2):
        if len(K) + len(L) > cfg.pair_size:
            continue
        for f in enumerate_hom(K, L):
            total += 1
            for b in range(len(K)):
                _fail(res, image_is_separated(f, b), f"image of {b} not separated")
                _fail(res, max(f.image(b).coeffs, default=0) <= 1, f"image of {b} has multiplicity")
            _fail(res, validate_simple_morphism(K, L, morphism_sequences(f)) == f, "validation round trip")
    res.counts["morphisms"] = total


@check("simple.order_characterizations", 3)
def _order_characterizations(cfg, res):
    pairs = bridging = 0
    for K in catalog_objects(cfg):
        for n in range(K.top + 1):
            seqs = separated_sequences(K, n)
            ups = [i for i in K.order if K.degrees[i] == n + 1]
            for lo, hi in itertools.product(seqs, repeat=2):
                if len(lo) != len(hi):
                    continue
                pairs += 1
                leq = separated_leq(K, lo, hi)
                _fail(res, leq == separated_leq_via_boundary(K, lo, hi), f"≤ characterizations differ on {lo}, {hi}")
                if not leq:
                    continue
                for k in range(len(ups) + 1):
                    for b in itertools.combinations_with_replacement(ups, k):
                        b = K.flow_sorted(b)
                        bridging += 1
                        _fail(res, bridges(K, b, lo, hi) == bridges_interleaving(K, b, lo, hi),
                              f"bridging characterizations differ on {b}, {lo}, {hi}")
    res.counts["comparisons"] = pairs
    res.counts["bridging_tests"] = bridging


@check("simple.structure")
def _simple_structure(cfg, res):
    for K in catalog_objects(cfg):
        _fail(res, check_unital(K) and check_loop_free(K) and check_strongly_loop_free(K), f"{K.sequence} not in Φ")
    objs = [K for K in catalog_objects(cfg)]
    for K, L in itertools.product(objs, repeat=2):
        _fail(res, enumerate_hom(K, L) == brute_force_hom(K, L, 1), f"oracle disagrees on {K.sequence} → {L.sequence}")
    small = [K for K in objs if len(K) <= 5]
    for K, L, M in itertools.product(small, repeat=3):
        hom_km = set(enumerate_hom(K, M))
        for f in enumerate_hom(K, L):
            for g in enumerate_hom(L, M):
                _fail(res, compose_morphisms(g, f) in hom_km, "composite not enumerated")


# -- 4: cells -----------------------------------------------------------------

class CellIndex:
    """Cells of one complex grouped by their n-dimensional source and target."""

    def __init__(self, cells: list[Cell]):
        self.cells = cells
        self.K = cells[0].complex if cells else None
        self.by_key = {c.key: c for c in cells}
        self._src: dict[int, dict] = {}
        self._comp: dict = {}

    def starting_at(self, n: int, key) -> list[Cell]:
        if n not in self._src:
            groups = defaultdict(list)
            for c in self.cells:
                groups[d(n, "-", c).key].append(c)
            self._src[n] = groups
        return self._src[n].get(key, [])

    def successors(self, n: int, x: Cell) -> list[Cell]:
        return self.starting_at(n, d(n, "+", x).key)

    def comp(self, n: int, x: Cell, y: Cell) -> Cell:
        k = (n, x.key, y.key)
        if k not in self._comp:
            self._comp[k] = compose(n, x, y)
        return self._comp[k]

    def composable_pairs(self, n: int):
        for x in self.cells:
            for y in self.successors(n, x):
                yield x, y


def _cell_laws(idx: CellIndex, res: CheckResult):
    K = idx.K
    top = K.top
    for x in idx.cells:
        _fail(res, is_cell(K, x.levels), f"enumerated non-cell {x}")
        m = x.dimension
        _fail(res, d(m, "-", x) == x and d(m, "+", x) == x, f"{x} is not an identity in dimension {m}")
        for n, m in itertools.product(range(top + 1), repeat=2):
            for a, b in itertools.product("-+", repeat=2):
                expect = d(m, b, x) if m < n else d(n, a, x)
                _fail(res, d(m, b, d(n, a, x)) == expect, f"d_{m}^{b} d_{n}^{a} law fails on {x}")
    for n in range(top + 1):
        for x, y in idx.composable_pairs(n):
            xy = idx.comp(n, x, y)
            _fail(res, xy.key in idx.by_key, f"∘_{n} leaves the enumerated cells")
            _fail(res, d(n, "-", xy) == d(n, "-", x) and d(n, "+", xy) == d(n, "+", y), f"∘_{n} ends wrong")
            for m in range(n):
                for s in "-+":
                    _fail(res, d(m, s, xy) == d(m, s, x), f"d_{m} of a ∘_{n} composite")
            for z in idx.successors(n, y):
                _fail(res, idx.comp(n, xy, z) == idx.comp(n, x, idx.comp(n, y, z)), f"∘_{n} not associative")
        for x in idx.cells:
            _fail(res, idx.comp(n, d(n, "-", x), x) == x and idx.comp(n, x, d(n, "+", x)) == x,
                  f"unit law for ∘_{n} fails on {x}")
    # interchange: (x ∘_m y) ∘_n (u ∘_m v) = (x ∘_n u) ∘_m (y ∘_n v), m < n
    for n in range(1, top + 1):
        for m in range(n):
            for x, u in idx.composable_pairs(n):
                for y in idx.successors(m, x):
                    for v in idx.successors(n, y):
                        if d(m, "+", u) != d(m, "-", v):
                            continue
                        lhs = idx.comp(n, idx.comp(m, x, y), idx.comp(m, u, v))
                        rhs = idx.comp(m, idx.comp(n, x, u), idx.comp(n, y, v))
                        _fail(res, lhs == rhs, f"interchange fails for m={m}, n={n}")


EXPECTED_CELLS = {(0,): 1, (0, 1, 0): 3, (0, 1, 0, 1, 0): 6, (0, 1, 2, 1, 0): 5}


@check("cells.counts_and_laws", 4)
def _cells(cfg, res):
    for K in catalog_objects(cfg):
        dims = K.degrees  # the declared sequence, identical under both conventions
        cells = enumerate_cells(K, cfg.cell_cap)
        res.counts[f"cells{dims}"] = len(cells)
        if dims in EXPECTED_CELLS:
            _fail(res, len(cells) == EXPECTED_CELLS[dims], f"{len(cells)} cells on {dims}")
        _fail(res, [c.key for c in enumerate_cells(K, cfg.cell_cap + 1)] == [c.key for c in cells],
              f"cell list on {dims} changes with the cap")
        _cell_laws(CellIndex(cells), res)
        for b in range(len(K)):
            _fail(res, is_cell(K, atom(K, b).levels), f"atom of {b} is not a cell")
            if K.degrees[b]:
                _fail(res, check_atom_boundary(K, b), f"atom boundary fails at {b} in {dims}")


@check("cells.nu_functoriality")
def _nu(cfg, res):
    objs = catalog_objects(cfg)
    for K, L in itertools.product(objs, repeat=2):
        if len(K) + len(L) > cfg.nu_pair_size:
            continue
        idx = CellIndex(enumerate_cells(K, cfg.cell_cap))
        targets = {c.key for c in enumerate_cells(L, cfg.cell_cap)}
        for f in enumerate_hom(K, L):
            for x in idx.cells:
                fx = nu_map(f, x)
                _fail(res, fx.key in targets, "ν(f) leaves the cells")
                for n in range(K.top + 1):
                    for s in "-+":
                        _fail(res, nu_map(f, d(n, s, x)) == d(n, s, fx), "ν(f) does not commute with d")
            for n in range(K.top + 1):
                for x, y in idx.composable_pairs(n):
                    _fail(res, nu_map(f, idx.comp(n, x, y)) == compose(n, nu_map(f, x), nu_map(f, y)),
                          "ν(f) does not preserve ∘")


# -- 5: duality -----------------------------------------------------------

@check("discs.duality", 5)
def _duality(cfg, res):
    objs = catalog_objects(cfg)
    homs = {}
    for K in objs:
        C = dualize_object(K)
        _fail(res, window_coboundary(K) == C, f"window formula disagrees on {K.flow_dims}")
        _fail(res, undualize_object(C) == K, "double transpose is not the identity")
    for K, L in itertools.product(objs, repeat=2):
        homs[(K, L)] = hk = enumerate_hom(K, L)
        disc = brute_force_cochain_hom(dualize_object(L), dualize_object(K), 1)
        res.counts[f"Hom{K.degrees}->{L.degrees}"] = len(hk)
        _fail(res, len(disc) == len(hk), f"{len(disc)} disc maps vs {len(hk)} morphisms")
        duals = {dualize_morphism(f).matrices for f in hk}
        _fail(res, duals == {g.matrices for g in disc}, "transposes are not the disc maps")
        for f in hk:
            _fail(res, undualize_morphism(dualize_morphism(f)) == f, "double transpose on morphisms")
            _fail(res, cochain_defect(dualize_morphism(f)) is None, "transpose fails validation")
    small = [K for K in objs if len(K) <= 5]
    for K, L, M in itertools.product(small, repeat=3):
        for f in homs[(K, L)]:
            for g in homs[(L, M)]:
                lhs = dualize_morphism(compose_morphisms(g, f))
                _fail(res, lhs.matrices == compose_cochain(dualize_morphism(f), dualize_morphism(g)).matrices,
                      "transpose is not contravariant")


# -- 6: wreath products and V ----------------------------------------------

@check("wreath.example_and_propagation", 6)
def _wreath_examples(cfg, res):
    conv = cfg.convention
    pt, arrow = from_sequence((0,), conv), from_sequence((0, 1, 0), conv)
    V = V_object(WreathObject(2, (pt, arrow)))
    _fail(res, V.degrees == (0, 1, 0, 1, 2, 1, 0), f"V(2, (point, arrow)) has degrees {V.degrees}")
    objs = catalog_objects(cfg)
    for comps in itertools.chain.from_iterable(itertools.product(objs, repeat=k) for k in range(3)):
        w = WreathObject(len(comps), comps)
        VK = V_object(w)
        expect = example_sequence([DimensionSequence(K.degrees) for K in comps])
        _fail(res, VK.degrees == expect.dims, f"V of {[K.flow_dims for K in comps]} has degrees {VK.degrees}")
        for pred in (check_unital, check_loop_free, check_strongly_loop_free):
            if all(pred(K) for K in comps):
                _fail(res, pred(VK), f"{pred.__name__} not inherited by V")
    one, two = WreathObject(1, (pt,)), WreathObject(2, (pt, pt))
    res.counts["Hom((1,pt),(1,pt))"] = n11 = len(enumerate_wreath_hom(one, one))
    _fail(res, n11 == 3, f"|Hom((1,pt),(1,pt))| = {n11}")
    res.counts["Hom((1,pt),(2,pt pt))"] = n12 = len(enumerate_wreath_hom(one, two))
    _fail(res, n12 == 6, f"|Hom((1,pt),(2,(pt,pt)))| = {n12}")
    for n in range(4):
        target = WreathObject(n, (pt,) * n)
        got = len(enumerate_wreath_hom(WreathObject(0, ()), target))
        _fail(res, got == n + 1, f"|Hom((0,()),({n},...))| = {got}")
        rep = fully_faithful_report(WreathObject(0, ()), target)
        _fail(res, rep.ok and rep.target_count == n + 1, f"full faithfulness at (0,()) → ({n}, ...)")


@check("wreath.functoriality", 6)
def _functoriality(cfg, res):
    ws = wreath_objects(cfg.functor_v_size, cfg.convention)
    homs = {(a, b): enumerate_wreath_hom(x, y) for (a, x), (b, y) in itertools.product(enumerate(ws), repeat=2)}
    Vs = [V_object(w) for w in ws]
    images = {k: [V_morphism(h, Vs[k[0]], Vs[k[1]]) for h in hs] for k, hs in homs.items()}
    pairs = 0
    for a, w in enumerate(ws):
        _fail(res, V_morphism(wreath_identity(w)) == ChainMorphism.identity(Vs[a]), "V does not preserve identities")
    for (a, b), hs in homs.items():
        for c in range(len(ws)):
            for i, f in enumerate(hs):
                for j, g in enumerate(homs[(b, c)]):
                    pairs += 1
                    gf = V_morphism(wreath_compose(g, f), Vs[a], Vs[c])
                    _fail(res, gf == compose_morphisms(images[(b, c)][j], images[(a, b)][i]), "V(g∘f) ≠ V(g)∘V(f)")
    res.counts["composable_pairs"] = pairs
    for fs in images.values():
        for f in fs:
            _fail(res, morphism_defect(f) is None, "V of a wreath morphism is not a morphism")


@check("wreath.fully_faithful", 6)
def _fully_faithful(cfg, res):
    ws = wreath_objects(cfg.wreath_v_size, cfg.convention)
    res.counts["objects"] = len(ws)
    total = 0
    for w1, w2 in itertools.product(ws, repeat=2):
        rep = fully_faithful_report(w1, w2)
        total += rep.wreath_count
        _fail(res, rep.ok, f"V not bijective on hom-sets: {rep.wreath_count} vs {rep.target_count}")
    res.counts["morphisms"] = total


# -- 7: filtration ----------------------------------------------------------

@check("wreath.filtration", 7)
def _filtration(cfg, res):
    seqs = all_sequences(cfg.filtration_cap)
    prev: set = set()
    for n in range(cfg.filtration_n + 1):
        got = [S.flow_dims for S in iterated_wreath_objects(n, cfg.filtration_cap, cfg.convention)]
        want = {s.dims for s in seqs if s.level <= n}
        res.counts[f"Theta_{n}"] = len(got)
        _fail(res, len(got) == len(set(got)), f"duplicates at level {n}")
        _fail(res, set(got) == want, f"level {n} gives {len(set(got))} sequences, expected {len(want)}")
        _fail(res, prev <= set(got), f"level {n - 1} is not contained in level {n}")
        prev = set(got)
    covered = {s.dims for s in CATALOG.values() if len(s) <= cfg.filtration_cap}
    _fail(res, covered <= {s.dims for s in seqs}, "catalog not covered")


# -- 8: convention robustness --------------------------------------------------

def compare_results(std: list[CheckResult], swapped: list[CheckResult]) -> CheckResult:
    """Both runs must pass and report the same cardinalities."""
    res = CheckResult("conventions.identical_counts", 8)
    for ra, rb in zip(std, swapped):
        _fail(res, rb.ok, f"{rb.name} fails under the swapped convention: {rb.failures[:1]}")
        _fail(res, ra.counts == rb.counts, f"{ra.name}: counts differ between conventions")
        res.counts[ra.name] = ra.counts
    return res


def compare_conventions(cfg: SuiteConfig | None = None, criteria=range(2, 8)) -> CheckResult:
    cfg = cfg or SuiteConfig()
    start = time.perf_counter()
    std, swapped = [], []
    for crit in criteria:
        std += run_criterion(crit, replace(cfg, convention="std"))
        swapped += run_criterion(crit, replace(cfg, convention="swapped"))
    res = compare_results(std, swapped)
    res.seconds = time.perf_counter() - start
    return res

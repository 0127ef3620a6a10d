"""Exact chain-complex models of the simple ω-categories and their morphisms."""

from .adc import (
    ADC,
    AugmentedDirectedComplex,
    Chain,
    ChainMorphism,
    brute_force_hom,
    check_loop_free,
    check_strongly_loop_free,
    check_unital,
    compose_morphisms,
    validate_morphism_general,
)
from .catalog import CATALOG
from .cells import Cell, atom, compose, d, enumerate_cells, make_cell, nu_map
from .discs import (
    CoaugmentedCochainComplex,
    CochainMorphism,
    dualize_morphism,
    dualize_object,
    window_coboundary,
)
from .representations import (
    DimensionSequence,
    GradedOrderedSet,
    LevelTree,
    UpDownVector,
    seq_to_tree,
    seq_to_updown,
    tree_to_seq,
    tree_to_updown,
    updown_to_seq,
    updown_to_tree,
)
from .simple import SimpleADC, enumerate_hom, from_sequence, recognize_simple, validate_simple_morphism
from .wreath import (
    V_morphism,
    V_object,
    WreathMorphism,
    WreathObject,
    check_fully_faithful,
    enumerate_wreath_hom,
    iterated_wreath_objects,
    wreath_compose,
)


__all__ = [
    "ADC",
    "AugmentedDirectedComplex",
    "CATALOG",
    "Cell",
    "Chain",
    "ChainMorphism",
    "CoaugmentedCochainComplex",
    "CochainMorphism",
    "DimensionSequence",
    "GradedOrderedSet",
    "LevelTree",
    "SimpleADC",
    "UpDownVector",
    "V_morphism",
    "V_object",
    "WreathMorphism",
    "WreathObject",
    "atom",
    "brute_force_hom",
    "check_fully_faithful",
    "check_loop_free",
    "check_strongly_loop_free",
    "check_unital",
    "compose",
    "compose_morphisms",
    "d",
    "dualize_morphism",
    "dualize_object",
    "enumerate_cells",
    "enumerate_hom",
    "enumerate_wreath_hom",
    "from_sequence",
    "iterated_wreath_objects",
    "make_cell",
    "nu_map",
    "recognize_simple",
    "seq_to_tree",
    "seq_to_updown",
    "tree_to_seq",
    "tree_to_updown",
    "updown_to_seq",
    "updown_to_tree",
    "validate_morphism_general",
    "validate_simple_morphism",
    "window_coboundary",
    "wreath_compose",
]

"""Combinatorial toolkit for monoid presentations: rewriting, non-cancellative
tuples, twins and their second-homotopy chains over the abelian cover."""

from .presentation import (
    Presentation,
    PresentationError,
    classify_presentation,
    load_corpus,
    load_presentation,
    make_presentation,
    parse_presentation,
    yoshinaga_presentation,
)
from .rewrite import ElementaryStep, SearchLimits, Witness, decide_equivalent, enumerate_class, replay_witness
from .graph import build_component, cycle_basis, is_tree
from .nc import NCTuple, Twin, check_nc_tuple, find_twins, search_nc_over_kernel
from .chains import TwoChain, is_cycle, pi_class_chain, twin_chain, unit_equal

__all__ = [
    "Presentation", "PresentationError", "classify_presentation", "load_corpus", "load_presentation",
    "make_presentation", "parse_presentation", "yoshinaga_presentation",
    "ElementaryStep", "SearchLimits", "Witness", "decide_equivalent", "enumerate_class", "replay_witness",
    "build_component", "cycle_basis", "is_tree",
    "NCTuple", "Twin", "check_nc_tuple", "find_twins", "search_nc_over_kernel",
    "TwoChain", "is_cycle", "pi_class_chain", "twin_chain", "unit_equal",
]
__version__ = "0.1.0"

"""Exact rational l1 filling norms on presentation 2-complexes.

The package computes filling norms, certified isoperimetric lower bounds,
disjoint translates, averaged blow-up witnesses, and exact linear constants
for finite groups, all over exact rationals with no floating point in any
computational path.
"""

from . import errors
from .chains import (
    Cell,
    Chain,
    WindowComplex,
    boundary,
    build_window,
    l1_norm,
    load_chain,
    parse_chain,
    serialize_chain,
    support,
    trace_word_edges,
    translate,
    word_edge_chain,
)
from .filling import (
    BlowupTerm,
    BlowupWitness,
    FillingResult,
    IsoperimetricSample,
    blowup_witness,
    blowup_witness_auto,
    blowup_window_radius,
    commutator_cycle,
    commutator_family,
    disjoint_translate,
    extract_superlinear,
    filling_norm,
    filling_program,
    finite_linear_constant,
    finite_linear_constant_sampled,
    image_unit_ball_vertices,
    isoperimetric_lower_bounds,
    measure_cycle_family,
    scaled_commutator_cycle,
    whole_group_window,
)
from .groups import (
    DEFAULT_BALL_CAP,
    Generator,
    GroupElement,
    Presentation,
    Word,
    ball,
    ball_layers,
    format_presentation,
    format_word,
    inv,
    load_presentation,
    mul,
    normal_form,
    parse_presentation,
    parse_word,
    reduce,
)
from .lp import (
    DEFAULT_PIVOT_CAP,
    L1Program,
    LpSolution,
    brute_force_min,
    check_injective,
    simplex_min_l1,
    solve_l1,
)
from .rationals import format_fraction, parse_fraction

__version__ = "0.1.0"

__all__ = [
    "BlowupTerm",
    "BlowupWitness",
    "Cell",
    "Chain",
    "DEFAULT_BALL_CAP",
    "DEFAULT_PIVOT_CAP",
    "FillingResult",
    "Generator",
    "GroupElement",
    "IsoperimetricSample",
    "L1Program",
    "LpSolution",
    "Presentation",
    "WindowComplex",
    "Word",
    "ball",
    "ball_layers",
    "boundary",
    "blowup_witness",
    "blowup_witness_auto",
    "blowup_window_radius",
    "brute_force_min",
    "build_window",
    "check_injective",
    "commutator_cycle",
    "commutator_family",
    "disjoint_translate",
    "errors",
    "extract_superlinear",
    "filling_norm",
    "filling_program",
    "finite_linear_constant",
    "finite_linear_constant_sampled",
    "format_fraction",
    "format_presentation",
    "format_word",
    "image_unit_ball_vertices",
    "inv",
    "isoperimetric_lower_bounds",
    "l1_norm",
    "load_chain",
    "load_presentation",
    "measure_cycle_family",
    "mul",
    "normal_form",
    "parse_chain",
    "parse_fraction",
    "parse_presentation",
    "parse_word",
    "reduce",
    "scaled_commutator_cycle",
    "serialize_chain",
    "simplex_min_l1",
    "solve_l1",
    "support",
    "trace_word_edges",
    "translate",
    "whole_group_window",
    "word_edge_chain",
]

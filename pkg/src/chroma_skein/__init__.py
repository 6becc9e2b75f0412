"""Exact skein-theoretic invariant of oriented colored links.

The invariant takes values ``P / (1 - t)^k`` with ``P`` an integer Laurent
polynomial in ``x, w, t``.  It is computed by a memoized skein recursion
over crossing-labelled diagrams and cross-checked against a Kauffman
bracket implementation of the Jones polynomial.
"""

from .diagram import (
    Component,
    Crossing,
    Diagram,
    DiagramError,
    braid_closure,
    coloration_partition,
    colorations_equivalent,
    connected_sum,
    disjoint_union,
    dump_diagram,
    load_diagram,
    merge_colors,
    mirror,
    parse_braid_word,
    parse_diagram,
    reverse_all,
    set_partitions,
    smooth,
    switch,
    unlink,
)
from .moves import MOVES, find_sites, is_planar, random_move, reidemeister
from .oracle import jones, kauffman_bracket, writhe
from .poly import (
    LaurentPoly,
    PoleError,
    SkeinValue,
    SpecializationError,
    make_y,
    render,
    sv_eval,
    sv_invert_wt,
    sv_substitute_half,
)
from .skein import (
    Evaluator,
    PlanStep,
    all_colorations_F,
    deciding_plan,
    evaluate_F,
    memo_key,
    partition_label,
    unlink_value,
)

__all__ = [
    "Component", "Crossing", "Diagram", "DiagramError", "braid_closure",
    "coloration_partition", "colorations_equivalent", "connected_sum", "disjoint_union",
    "dump_diagram", "load_diagram", "merge_colors", "mirror", "parse_braid_word",
    "parse_diagram", "reverse_all", "set_partitions", "smooth", "switch", "unlink",
    "MOVES", "find_sites", "is_planar", "random_move", "reidemeister",
    "jones", "kauffman_bracket", "writhe",
    "LaurentPoly", "PoleError", "SkeinValue", "SpecializationError", "make_y", "render",
    "sv_eval", "sv_invert_wt", "sv_substitute_half",
    "Evaluator", "PlanStep", "all_colorations_F", "deciding_plan", "evaluate_F",
    "memo_key", "partition_label", "unlink_value",
]

__version__ = "0.1.0"

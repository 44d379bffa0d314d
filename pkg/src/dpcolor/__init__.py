"""Defective DP-colorings of loop-free multigraphs.

Two-fold covers as parity vectors, exhaustive and greedy coloring deciders,
regime potentials with exact arithmetic, the five extremal families with
their non-colorable covers, criticality checking, and minimum-edge mining.
"""

from .constructions import (
    FAMILIES,
    CountMismatch,
    FamilyInstance,
    attach_flag,
    attach_weak_flag,
    build_equal,
    build_family,
    build_iplusone,
    build_large,
    build_mid,
    build_zeroj,
)
from .cover import (
    DEFAULT_MAX_COVERS,
    Cover,
    Parity,
    PhiMap,
    Side,
    all_covers,
    conflict_degree,
    conflict_degrees,
    conflict_total,
    cover_from_index,
    cover_index,
    edge_conflicts,
    format_cover,
    is_valid_coloring,
    load_cover,
    parse_cover,
    save_cover,
)
from .critical import BoundsReport, check_bounds, fdp_search, is_critical
from .graph import (
    BudgetError,
    DefectParams,
    FormatError,
    Multigraph,
    Toughness,
    format_graph,
    load_graph,
    parse_graph,
    save_graph,
)
from .potential import (
    Regime,
    edge_bound,
    potential_threshold,
    regime,
    rho_graph,
    rho_set,
    rho_vertex,
    scalar_constants,
    weight_w,
)
from .solver import (
    brute_force_color,
    exhaustive_color,
    greedy_color,
    is_colorable,
    partition_witness,
)
from .sparsity import guarantee_implies_colorable, sparsity_guarantee, violating_subset

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BudgetError",
    "CountMismatch",
    "Cover",
    "DefectParams",
    "DEFAULT_MAX_COVERS",
    "FAMILIES",
    "FamilyInstance",
    "FormatError",
    "Multigraph",
    "Parity",
    "PhiMap",
    "Regime",
    "Side",
    "Toughness",
    "all_covers",
    "attach_flag",
    "attach_weak_flag",
    "brute_force_color",
    "build_equal",
    "build_family",
    "build_iplusone",
    "build_large",
    "build_mid",
    "build_zeroj",
    "check_bounds",
    "conflict_degree",
    "conflict_degrees",
    "conflict_total",
    "cover_from_index",
    "cover_index",
    "edge_bound",
    "edge_conflicts",
    "exhaustive_color",
    "fdp_search",
    "format_cover",
    "format_graph",
    "greedy_color",
    "guarantee_implies_colorable",
    "is_colorable",
    "is_critical",
    "is_valid_coloring",
    "load_cover",
    "load_graph",
    "parse_cover",
    "parse_graph",
    "partition_witness",
    "potential_threshold",
    "regime",
    "rho_graph",
    "rho_set",
    "rho_vertex",
    "save_cover",
    "save_graph",
    "scalar_constants",
    "sparsity_guarantee",
    "violating_subset",
    "weight_w",
]

"""Graph labelings: values, the kind catalog, search, transforms and matchings."""

from .kinds import (
    EDGE_RULES,
    Color,
    Labeling,
    VerificationReport,
    Violation,
    edge_lookup,
    induce_edge_colors,
)
from .matching import MATCHINGS, verify_matching
from .search import search_labeling
from .transforms import (
    EQUIVALENT_TARGETS,
    JOIN_MODES,
    SET_DUAL_VARIANTS,
    CompositeColoring,
    DualPair,
    dual,
    caterpillar_graceful,
    equivalent_labeling,
    graceful_join,
    magic_dual,
    multi_dimension_compose,
    odd_elegant_from_graceful,
    ordered_sides,
    reciprocal_transform,
    set_dual_matchings,
    set_dual_transform,
    totally_kd_sequential,
)
from .verify import KINDS, KindSpec, catalog, get_kind, kind, register, verify

__all__ = [
    "Color",
    "CompositeColoring",
    "DualPair",
    "EDGE_RULES",
    "EQUIVALENT_TARGETS",
    "JOIN_MODES",
    "KINDS",
    "KindSpec",
    "Labeling",
    "MATCHINGS",
    "SET_DUAL_VARIANTS",
    "VerificationReport",
    "Violation",
    "catalog",
    "caterpillar_graceful",
    "dual",
    "edge_lookup",
    "equivalent_labeling",
    "get_kind",
    "graceful_join",
    "induce_edge_colors",
    "kind",
    "magic_dual",
    "multi_dimension_compose",
    "odd_elegant_from_graceful",
    "ordered_sides",
    "reciprocal_transform",
    "register",
    "search_labeling",
    "set_dual_matchings",
    "set_dual_transform",
    "totally_kd_sequential",
    "verify",
    "verify_matching",
]

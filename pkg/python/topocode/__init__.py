"""topocode - topological coding at desk scale.

Graph labelings, Topcode-matrices and the number-based strings read from
them, put together into topological public and private keys.

This package provides:
- graph: simple graphs, vertex/edge split and coincide, trees, spanning trees
- labelings: the labeling catalog, verification, search, transforms, matchings
- topcode: Topcode-matrices and their algebra
- strings: number-based strings, Vo/Tb line-ways, string groups, partitions
- rla: labelings extended over randomly added leaves
- degseq: degree sequences, their operations, Cds-matrix groups and lattices
- groups: every-zero graphic groups
- networks: self-similar trees by leaf algorithms
- auth: key bundles and topological authentication

The command line lives in ``topocode.cli`` (console script ``topocode``).
"""

from .auth import KeyBundle, TransformSpec, authenticate, authenticate_vector, derive_bundle
from .config import Settings, load_settings
from .errors import (
    BudgetExceeded,
    ConstructionError,
    FormatError,
    InvalidGraphError,
    MatrixShapeError,
    MergeConflictError,
    MissingParameterError,
    PreconditionError,
    SizeLimitError,
    TopocodeError,
    UnknownKindError,
    VerificationError,
)
from .graph import Graph, degree_sequence, is_tree, spanning_tree_count
from .groups import GraphicGroup, build_group, classify_spanning_tree_groups, group_add, verify_group_laws
from .labelings import Labeling, VerificationReport, search_labeling, verify, verify_matching
from .networks import SelfSimilarSpec, leaf_algo_a, leaf_algo_b, leaf_algo_c
from .strings import NumberString, pnbspp_solve, tb_string, vo_string
from .topcode import TopcodeMatrix, from_colored_graph, is_graphicable

# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "BudgetExceeded",
    "ConstructionError",
    "FormatError",
    "Graph",
    "GraphicGroup",
    "InvalidGraphError",
    "KeyBundle",
    "Labeling",
    "MatrixShapeError",
    "MergeConflictError",
    "MissingParameterError",
    "NumberString",
    "PreconditionError",
    "SelfSimilarSpec",
    "Settings",
    "SizeLimitError",
    "TopcodeMatrix",
    "TopocodeError",
    "TransformSpec",
    "UnknownKindError",
    "VerificationError",
    "VerificationReport",
    "authenticate",
    "authenticate_vector",
    "build_group",
    "classify_spanning_tree_groups",
    "degree_sequence",
    "derive_bundle",
    "from_colored_graph",
    "group_add",
    "is_graphicable",
    "is_tree",
    "leaf_algo_a",
    "leaf_algo_b",
    "leaf_algo_c",
    "load_settings",
    "pnbspp_solve",
    "search_labeling",
    "spanning_tree_count",
    "tb_string",
    "verify",
    "verify_group_laws",
    "verify_matching",
    "vo_string",
]
__version__ = "0.1.0"

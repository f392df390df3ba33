"""Sombor index of unicyclic graphs: extremal construction, rewrite moves,
exhaustive enumeration."""

from sombor_unicyclic.canon import CanonicalForm, canonical_form, canonical_graph, is_isomorphic
from sombor_unicyclic.enumeration import (
    SearchReport,
    enumerate_unicyclic,
    enumerate_unicyclic_dense,
    max_so_search,
    verify_theorem,
)
from sombor_unicyclic.graph import (
    EdgeListError,
    Graph,
    GraphError,
    UnicyclicWitness,
    format_edge_list,
    parse_edge_list,
    pendant_count,
    read_edge_list,
    unicyclic_witness,
    write_edge_list,
)
from sombor_unicyclic.kernels import BACKEND
from sombor_unicyclic.sombor import (
    ExtremalParams,
    InvalidParams,
    build_extremal,
    closed_form_so,
    edge_contribution,
    is_extremal_shape,
    sombor_index,
)
from sombor_unicyclic.transforms import (
    AscentTrace,
    MoveDescriptor,
    MoveKind,
    MoveNotApplicable,
    Sign,
    apply_move,
    ascend,
    find_moves,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AscentTrace",
    "CanonicalForm",
    "EdgeListError",
    "ExtremalParams",
    "Graph",
    "GraphError",
    "InvalidParams",
    "MoveDescriptor",
    "MoveKind",
    "MoveNotApplicable",
    "SearchReport",
    "Sign",
    "UnicyclicWitness",
    "apply_move",
    "ascend",
    "build_extremal",
    "canonical_form",
    "canonical_graph",
    "closed_form_so",
    "edge_contribution",
    "enumerate_unicyclic",
    "enumerate_unicyclic_dense",
    "find_moves",
    "format_edge_list",
    "is_extremal_shape",
    "is_isomorphic",
    "max_so_search",
    "parse_edge_list",
    "pendant_count",
    "read_edge_list",
    "sombor_index",
    "unicyclic_witness",
    "verify_theorem",
    "write_edge_list",
]

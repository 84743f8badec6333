"""Hyperedge sets, their intersected graphs, shift groups, colorings and
exact counting."""
from .colorings import (
    KdParams,
    TopcodeMatrix,
    TotalColoring,
    build_topcode_matrix,
    compound_colorings,
    derive_dnei_sets,
    dual_labelling,
    hypergraph_chromatics,
    verify_6c_labeling,
    verify_distinguishing,
    verify_kd_total_coloring,
    verify_set_ordered_graceful,
    verify_w_constraint_hyperedge_set,
)
from .core import (
    Hypergraph,
    StructureReport,
    Verdict,
    complement_set,
    dual_hypergraph,
    graham_reduction,
    power_set,
    self_complementing_permutation,
    structure_report,
    verify_3i,
)
from .errors import HypertopoError, InconsistentFamilyError, PreconditionError, SizeLimitError
from .generators import (
    cyclic_k_uniform,
    enumerate_3i,
    fixed_point_union,
    key_matchings,
    strong_hyperedge_set,
)
from .graph import Graph
from .groups import (
    ShiftFamily,
    combine,
    fixed_point_check,
    generate_hypergraph_group,
    partition_power_set,
    set_colored_graph_group,
    shift_set,
    verify_every_zero,
)
from .intersected import (
    CheckReport,
    HyperCycle,
    SetColoredGraph,
    build_v_intersected,
    check_colored_homomorphism,
    double_graph,
    find_proper_hamiltonian_cycle,
    grow_tree_hyperedge_set,
    hyperedge_coincide,
    hyperedge_connectivity,
    hyperedge_split,
    hypergraph_isomorphic,
    induce_3i_coloring,
    intersected_metrics,
    verify_ve_intersected,
    verify_uniform_cycle,
)
from .treeforest import (
    adding_edge_removing,
    forest_count,
    spanning_tree_count,
    vertex_coincide,
    vertex_split,
)

__all__ = [
    "CheckReport",
    "Graph",
    "HyperCycle",
    "Hypergraph",
    "HypertopoError",
    "InconsistentFamilyError",
    "KdParams",
    "PreconditionError",
    "SetColoredGraph",
    "ShiftFamily",
    "SizeLimitError",
    "StructureReport",
    "TopcodeMatrix",
    "TotalColoring",
    "Verdict",
    "adding_edge_removing",
    "build_topcode_matrix",
    "build_v_intersected",
    "check_colored_homomorphism",
    "combine",
    "complement_set",
    "compound_colorings",
    "cyclic_k_uniform",
    "derive_dnei_sets",
    "double_graph",
    "dual_hypergraph",
    "dual_labelling",
    "enumerate_3i",
    "find_proper_hamiltonian_cycle",
    "fixed_point_check",
    "fixed_point_union",
    "forest_count",
    "generate_hypergraph_group",
    "graham_reduction",
    "grow_tree_hyperedge_set",
    "hyperedge_coincide",
    "hyperedge_connectivity",
    "hyperedge_split",
    "hypergraph_chromatics",
    "hypergraph_isomorphic",
    "induce_3i_coloring",
    "intersected_metrics",
    "key_matchings",
    "partition_power_set",
    "power_set",
    "self_complementing_permutation",
    "set_colored_graph_group",
    "shift_set",
    "spanning_tree_count",
    "strong_hyperedge_set",
    "structure_report",
    "verify_3i",
    "verify_6c_labeling",
    "verify_distinguishing",
    "verify_every_zero",
    "verify_kd_total_coloring",
    "verify_set_ordered_graceful",
    "verify_uniform_cycle",
    "verify_ve_intersected",
    "verify_w_constraint_hyperedge_set",
    "vertex_coincide",
    "vertex_split",
]

"""Neighborhood-balanced k-colorings of graphs.

A coloring of a graph with colors 1..k is *neighborhood-balanced* when every
vertex sees every color equally often among its neighbors.  This package
provides exact verification, arithmetic impossibility screens, constructive
generators for the families known to admit such colorings, composition
operations (products, joins, unions, embeddings), an exact backtracking
solver with CNF export, and the NP-hardness reduction from equal-sum
subsets, all behind one CLI (``nbcolor``).
"""

from .balance import (
    BalanceReport,
    Coloring,
    NecessityReport,
    Refusal,
    RegularityChecks,
    check_necessary,
    cyclic_shift,
    divisor_recolor,
    is_closed_nbkc,
    is_nbkc,
    permute_colors,
    signed_color_value,
    weight,
)
from .cnf import CnfDocument, to_cnf
from .io import (
    ParseError,
    coloring_from_text,
    coloring_to_text,
    graph_from_text,
    graph_to_text,
    report_to_json,
    roles_from_text,
    roles_to_text,
    to_dot,
)
from .families import (
    CirculantSpec,
    HammingSpec,
    circulant_progression_nbc,
    circulant_residue_nbc,
    complete_graph_nbc,
    complete_multipartite_nbc,
    cycle_nbc,
    hamming_nbc,
    hypercube_nbc,
)
from .graph import (
    Graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    graph_from_edges,
    induced_subgraph,
    neighbors,
)
from .products import (
    VertexPairIndex,
    cartesian_product,
    direct_product,
    embed_in_nbkc,
    join_graph,
    join_nbc,
    lexicographic_product,
    product_graph,
    product_nbc,
    strong_product,
    vertex_addition,
)
from .reduction import (
    EssInstance,
    FlawedGadget,
    HouseGadget,
    HousePlacement,
    ReductionInstance,
    decode,
    decode_from_roles,
    ess_brute_force,
    flawed_gadget,
    house,
    house_scheme_coloring,
    index_monochromatic,
    reduce_ess_to_nbc,
)
from .solver import SolveConfig, SolveOutcome, brute_force, count_colorings, solve
from .unions import (
    CongruenceReport,
    UnionSpec,
    cycle_union_nbc,
    is_ideal_dependent_set,
    union_congruence,
    union_nbc_independent,
    union_over_set,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "CirculantSpec",
    "CnfDocument",
    "Coloring",
    "CongruenceReport",
    "EssInstance",
    "FlawedGadget",
    "Graph",
    "HammingSpec",
    "HouseGadget",
    "HousePlacement",
    "NecessityReport",
    "ParseError",
    "ReductionInstance",
    "Refusal",
    "RegularityChecks",
    "SolveConfig",
    "SolveOutcome",
    "UnionSpec",
    "VertexPairIndex",
    "brute_force",
    "cartesian_product",
    "check_necessary",
    "circulant_progression_nbc",
    "circulant_residue_nbc",
    "complete_graph",
    "complete_graph_nbc",
    "complete_multipartite_graph",
    "complete_multipartite_nbc",
    "count_colorings",
    "cycle_graph",
    "cycle_nbc",
    "cycle_union_nbc",
    "cyclic_shift",
    "coloring_from_text",
    "coloring_to_text",
    "decode",
    "decode_from_roles",
    "direct_product",
    "divisor_recolor",
    "embed_in_nbkc",
    "ess_brute_force",
    "flawed_gadget",
    "graph_from_edges",
    "graph_from_text",
    "graph_to_text",
    "hamming_nbc",
    "house",
    "house_scheme_coloring",
    "hypercube_nbc",
    "index_monochromatic",
    "induced_subgraph",
    "is_closed_nbkc",
    "is_ideal_dependent_set",
    "is_nbkc",
    "join_graph",
    "join_nbc",
    "lexicographic_product",
    "neighbors",
    "permute_colors",
    "product_graph",
    "product_nbc",
    "reduce_ess_to_nbc",
    "report_to_json",
    "roles_from_text",
    "roles_to_text",
    "signed_color_value",
    "solve",
    "strong_product",
    "to_cnf",
    "to_dot",
    "union_congruence",
    "union_nbc_independent",
    "union_over_set",
    "vertex_addition",
    "weight",
]

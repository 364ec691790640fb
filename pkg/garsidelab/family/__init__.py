"""The binary-matrix family of rigid braids and its predicted rigid conjugacy graphs."""

from .blocks import (
    ReducedCycle,
    all_rows,
    alpha,
    alpha_row,
    decode_row,
    element_from_braid,
    theta,
    transposing_indices,
)
from .conjugators import (
    cycling_edge,
    forced_prefixes,
    initializer,
    rho_closed_form,
    rho_generator_form,
    rho_path,
    switching_conjugator,
    switching_word,
    switchings,
)
from .graph import (
    GraphStatistics,
    expected_rigid_size,
    family_rigid_graph,
    graph_statistics,
    size_lower_bound,
)
from .matrix import (
    FamilyElement,
    cycling_order,
    is_terminal,
    m0_elements,
    make_element,
    tau_rows,
    transform,
)

__all__ = [
    "FamilyElement",
    "GraphStatistics",
    "ReducedCycle",
    "all_rows",
    "alpha",
    "alpha_row",
    "cycling_edge",
    "cycling_order",
    "decode_row",
    "element_from_braid",
    "expected_rigid_size",
    "family_rigid_graph",
    "forced_prefixes",
    "graph_statistics",
    "initializer",
    "is_terminal",
    "m0_elements",
    "make_element",
    "rho_closed_form",
    "rho_generator_form",
    "rho_path",
    "size_lower_bound",
    "switching_conjugator",
    "switching_word",
    "switchings",
    "tau_rows",
    "theta",
    "transform",
    "transposing_indices",
]

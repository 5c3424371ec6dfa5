"""Exact inertia indices of signed graphs and exhaustive checks of their
lower bounds in terms of cyclomatic number and pendant vertices."""

from .core import (
    SignedGraph,
    SgParseError,
    VertexLocalStats,
    connected_components,
    cyclomatic_number,
    degree,
    delete_vertices,
    format_sg,
    pendant_count,
    parse_sg,
    vertex_local_stats,
)
from .families import CycleSpec, cycle_inertia_formula, is_extremal_family, make_cycle, make_path, path_inertia_formula
from .inertia import (
    Inertia,
    SymmetricExactMatrix,
    adjacency_matrix,
    char_poly,
    graph_inertia,
    inertia_by_congruence,
    inertia_from_char_poly,
    principal_submatrix,
)
from .structure import (
    block_decomposition,
    contraction_tree,
    cycle_sign,
    is_balanced,
    is_cycle_disjoint,
    negate,
    switch,
)

__version__ = "0.1.0"

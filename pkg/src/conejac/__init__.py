"""Exact-arithmetic toolkit for spanning-tree counts, rooted-forest counts,
Jacobian groups and forest groups of finite graphs, with companion-matrix
fast paths for circulant graphs and their cobordisms."""

from .closed_forms import (
    cheb2,
    fibonacci,
    lucas,
    mobius_cone_tree_count,
    prism_cone_tree_count,
    wheel_jacobian,
    wheel_tree_count,
)
from .circulant_fastpath import (
    FastPathResult,
    LaurentPoly,
    cobordism_cone_jacobian,
    companion,
    cone_jacobian_fastpath,
    even_cone_jacobian,
    laurent_at_shift,
    laurent_from_jumps_even,
    odd_cone_jacobian,
    prop1_cokernel,
)
from .exact_linalg import (
    AbelianGroup,
    IntMatrix,
    IntPoly,
    char_poly,
    cokernel,
    determinant,
    eval_poly,
    mat_pow,
    smith_normal_form,
)
from .graph_core import (
    CirculantSpec,
    CobordismSpec,
    Multigraph,
    build_graph,
    circulant,
    cobordism,
    cone,
    graph_from_edge_list,
    join,
    laplacian,
    load_edge_list,
    parse_circulant_spec,
    parse_cobordism_spec,
    parse_graph_spec,
    read_edge_list,
)
from .invariants import (
    cone_jacobian,
    cone_tree_count,
    cone_tree_count_via_charpoly,
    forest_count,
    forest_group,
    jacobian,
    joint_char_poly,
    tree_count,
    tree_count_via_charpoly,
)
from .oracle import (
    BijectionReport,
    EnumerationLimitError,
    bijection_check,
    enumerate_rooted_forests,
    enumerate_spanning_trees,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BijectionReport",
    "CirculantSpec",
    "CobordismSpec",
    "EnumerationLimitError",
    "FastPathResult",
    "IntMatrix",
    "IntPoly",
    "LaurentPoly",
    "Multigraph",
    "bijection_check",
    "build_graph",
    "char_poly",
    "cheb2",
    "circulant",
    "cobordism",
    "cobordism_cone_jacobian",
    "cokernel",
    "companion",
    "cone",
    "cone_jacobian",
    "cone_jacobian_fastpath",
    "cone_tree_count",
    "cone_tree_count_via_charpoly",
    "determinant",
    "enumerate_rooted_forests",
    "enumerate_spanning_trees",
    "eval_poly",
    "even_cone_jacobian",
    "fibonacci",
    "forest_count",
    "forest_group",
    "graph_from_edge_list",
    "jacobian",
    "join",
    "joint_char_poly",
    "laplacian",
    "laurent_at_shift",
    "laurent_from_jumps_even",
    "load_edge_list",
    "lucas",
    "mat_pow",
    "mobius_cone_tree_count",
    "odd_cone_jacobian",
    "parse_circulant_spec",
    "parse_cobordism_spec",
    "parse_graph_spec",
    "prism_cone_tree_count",
    "prop1_cokernel",
    "read_edge_list",
    "smith_normal_form",
    "tree_count",
    "tree_count_via_charpoly",
    "wheel_jacobian",
    "wheel_tree_count",
]

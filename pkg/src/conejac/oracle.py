"""Independent brute-force ground truth for small graphs.

Exhaustive spanning-tree and rooted-spanning-forest enumeration by
union-find backtracking over the edge list, plus an element-wise check
of the explicit correspondence between spanning trees of the cone over
G and rooted spanning forests of G.  Parallel edges are distinguishable
objects, matching how the determinant formulas count multigraphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph_core import Multigraph, cone

DEFAULT_MAX_VERTICES = 10
DEFAULT_MAX_EDGES = 20
DEFAULT_MAX_OBJECTS = 5_000_000


class EnumerationLimitError(ValueError):
    """Raised when a graph exceeds the enumeration size guards."""


def _guard(g: Multigraph, max_vertices: int, max_edges: int) -> None:
    if g.n_vertices > max_vertices:
        raise EnumerationLimitError(
            f"graph has {g.n_vertices} vertices; enumeration limit is {max_vertices}"
        )
    if g.n_edges > max_edges:
        raise EnumerationLimitError(
            f"graph has {g.n_edges} edges; enumeration limit is {max_edges}"
        )


def _edge_arrays(g: Multigraph) -> tuple[np.ndarray, np.ndarray]:
    pairs = g.edge_list()
    eu = np.array([u for u, _ in pairs], dtype=np.int64)
    ev = np.array([v for _, v in pairs], dtype=np.int64)
    return eu, ev


def enumerate_spanning_trees(
    g: Multigraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> int:
    """Count spanning trees by exhaustive backtracking over edge subsets."""
    _guard(g, max_vertices, max_edges)
    eu, ev = _edge_arrays(g)
    return int(_kernels.count_spanning_trees(eu, ev, g.n_vertices))


def enumerate_rooted_forests(
    g: Multigraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> int:
    """Count rooted spanning forests: acyclic spanning subsets weighted by
    the product of component-tree sizes (one root choice per tree)."""
    _guard(g, max_vertices, max_edges)
    eu, ev = _edge_arrays(g)
    return int(_kernels.count_rooted_forests(eu, ev, g.n_vertices))


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of the element-wise tree/rooted-forest correspondence check."""

    cone_tree_count: int
    rooted_forest_count: int
    is_bijection: bool
    unmatched_trees: int  # cone trees whose image is not a rooted forest of g
    unmatched_forests: int  # rooted forests hit by no cone tree


def bijection_check(
    g: Multigraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
    max_objects: int = DEFAULT_MAX_OBJECTS,
) -> BijectionReport:
    """Verify the correspondence between spanning trees of cone(g) and
    rooted spanning forests of g, element by element.

    Each cone tree t maps to the forest t intersected with g, rooted at
    the vertices joined to the apex inside t.  With the cone's edge list
    ordered as (edges of g, then apex edge of vertex v at index m+v), the
    tree's edge bitmask literally *is* the rooted-forest code, so the map
    is checked by comparing the two sorted code multisets.
    """
    _guard(g, max_vertices, max_edges)
    n = g.n_vertices
    m = g.n_edges
    cg = cone(g)

    # cone edge order: g's edges first, then apex edges (v, n) sorted by v
    pairs = g.edge_list() + [(v, n) for v in range(n)]
    eu = np.array([u for u, _ in pairs], dtype=np.int64)
    ev = np.array([v for _, v in pairs], dtype=np.int64)
    n_trees = int(_kernels.count_spanning_trees(eu, ev, cg.n_vertices))

    geu, gev = _edge_arrays(g)
    n_forests = int(_kernels.count_rooted_forests(geu, gev, n))

    if max(n_trees, n_forests) > max_objects:
        raise EnumerationLimitError(
            f"{max(n_trees, n_forests)} objects exceed the materialization "
            f"limit of {max_objects}"
        )

    tree_codes = np.empty(n_trees, dtype=np.int64)
    filled = _kernels.spanning_tree_masks(eu, ev, cg.n_vertices, tree_codes)
    assert filled == n_trees

    forest_codes = np.empty(n_forests, dtype=np.int64)
    filled = _kernels.rooted_forest_codes(geu, gev, n, m, forest_codes)
    assert filled == n_forests

    tree_codes.sort()
    forest_codes.sort()
    # injectivity: tree codes are distinct subsets, hence distinct codes;
    # surjectivity and well-definedness reduce to multiset equality
    trees_only = np.setdiff1d(tree_codes, forest_codes, assume_unique=False)
    forests_only = np.setdiff1d(forest_codes, tree_codes, assume_unique=False)
    ok = (
        n_trees == n_forests
        and trees_only.size == 0
        and forests_only.size == 0
    )
    return BijectionReport(
        cone_tree_count=n_trees,
        rooted_forest_count=n_forests,
        is_bijection=ok,
        unmatched_trees=int(trees_only.size),
        unmatched_forests=int(forests_only.size),
    )

"""Exact balanced domination numbers, layer certificates, and grid/tree analysis.

A balanced dominating function (BDF) labels vertices with -1, 0, 1 so that
every closed neighborhood sums to zero.  ``gamma_bd`` is the largest total
label over all BDFs; a graph is d-balanced when it is 0.
"""

from __future__ import annotations

from .generators import (
    CaterpillarSpec,
    TwoLevelTreeSpec,
    antiprism,
    caterpillar,
    enumerate_full_binary_shapes,
    full_binary_tree,
    grid,
    perfect_shape,
    polytope_d,
    polytope_r2,
    two_level_tree,
)
from .graph import Family, Graph, Labeling, closed_neighborhood, is_bdf, operator_matrix
from .grids import GridLabeling, all_bdfs_by_propagation, classify, gamma_bd_grid
from .layers import LayerPartition, certify_d_balanced, natural_partition
from .solver import (
    GammaResult,
    Limits,
    ResourceLimitError,
    backtracking_oracle,
    enumerate_bdfs,
    gamma_bd,
    kernel,
)
from .trees import caterpillar_mbdf_search, two_level_verdict

__version__ = "0.1.0"

__all__ = [
    "CaterpillarSpec", "TwoLevelTreeSpec", "antiprism", "caterpillar",
    "enumerate_full_binary_shapes", "full_binary_tree", "grid", "perfect_shape",
    "polytope_d", "polytope_r2", "two_level_tree",
    "Family", "Graph", "Labeling", "closed_neighborhood", "is_bdf", "operator_matrix",
    "GridLabeling", "all_bdfs_by_propagation", "classify", "gamma_bd_grid",
    "LayerPartition", "certify_d_balanced", "natural_partition",
    "GammaResult", "Limits", "ResourceLimitError", "backtracking_oracle", "enumerate_bdfs",
    "gamma_bd", "kernel",
    "caterpillar_mbdf_search", "two_level_verdict",
]

"""Two-level rooted trees, full binary trees and caterpillars.

Caterpillars are analysed through modified BDFs (MBDFs): every spine vertex
whose leaf count differs from 1 carries a nonzero label.  On such a labeling
each leaf carries minus its spine neighbour's label, so the leaf counts are
fixed by the spine labels ``x``::

    l_1 = 1 + x_1 x_2,   l_n = 1 + x_{n-1} x_n,   l_i = 1 + x_{i-1} x_i + x_i x_{i+1}

:func:`caterpillar_mbdf_search` therefore enumerates spine labels rather
than caterpillars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .generators import (
    CaterpillarSpec,
    TwoLevelTreeSpec,
    caterpillar,
    enumerate_full_binary_shapes,
    full_binary_internal_vertices,
    full_binary_tree,
)
from .graph import Graph, Labeling, is_bdf
from .solver import GammaResult, Limits, enumerate_bdfs, gamma_bd

__all__ = [
    "TwoLevelVerdict",
    "CaterpillarAnalysis",
    "two_level_verdict",
    "full_binary_root_zero",
    "full_binary_recursive_zero",
    "full_binary_d_balanced",
    "full_binary_sweep",
    "caterpillar_mbdf_search",
    "caterpillar_labeling",
    "caterpillar_gamma",
]


@dataclass(frozen=True)
class TwoLevelVerdict:
    d_balanced: bool
    l_count: int
    gamma_formula: int

    def to_dict(self) -> dict:
        return {"d_balanced": self.d_balanced, "l_count": self.l_count,
                "gamma_formula": self.gamma_formula}


def two_level_verdict(spec: TwoLevelTreeSpec) -> TwoLevelVerdict:
    """Closed-form d-balancedness of a root with ``n >= 2`` children and leaf counts ``l_i``.

    Not d-balanced exactly when every ``l_i`` is 0 or 2 and ``2 * #{l_i = 2} = n - 1``;
    then the root label ``x_0 = -1`` gives weight ``x_0 (1 - n) = n - 1``.
    """
    n = spec.n_children
    l_count = sum(1 for x in spec.child_leaf_counts if x == 2)
    unbalanced = all(x in (0, 2) for x in spec.child_leaf_counts) and 2 * l_count == n - 1
    return TwoLevelVerdict(not unbalanced, l_count, n - 1 if unbalanced else 0)


def full_binary_root_zero(g: Graph, lab: Labeling, root: int = 0) -> bool:
    if not is_bdf(g, lab):
        raise ValueError("labeling is not a BDF")
    return lab[root] == 0


def full_binary_recursive_zero(shape, lab: Labeling) -> bool:
    """Every vertex with two children carries label 0."""
    return all(lab[v] == 0 for v in full_binary_internal_vertices(shape))


def full_binary_d_balanced(shape, limits: Limits | None = None) -> bool:
    """Solver-level check that the zero labeling is the only BDF of the tree."""
    bdfs = enumerate_bdfs(full_binary_tree(shape), limits)
    return len(bdfs) == 1 and bdfs[0].is_zero()


def full_binary_sweep(max_vertices: int, limits: Limits | None = None) -> list[dict]:
    out = []
    for shape in enumerate_full_binary_shapes(max_vertices):
        g = full_binary_tree(shape)
        bdfs = enumerate_bdfs(g, limits)
        out.append({
            "n_vertices": g.n_vertices,
            "bdf_count": len(bdfs),
            "root_zero": all(full_binary_root_zero(g, b) for b in bdfs),
            "recursive_zero": all(full_binary_recursive_zero(shape, b) for b in bdfs),
        })
    return out


@dataclass(frozen=True)
class CaterpillarAnalysis:
    spine_labels: tuple[int, ...]
    leaf_counts: tuple[int, ...]
    # consecutive spine pairs: same sign / opposite sign / containing a zero
    pair_type_counts: tuple[int, int, int]
    pair_sum: int
    weight: int

    @property
    def n(self) -> int:
        return len(self.spine_labels)

    @property
    def total_leaves(self) -> int:
        return sum(self.leaf_counts)

    @property
    def spec(self) -> CaterpillarSpec:
        return CaterpillarSpec.of(self.leaf_counts)

    def satisfies_mod4(self) -> bool:
        return (self.total_leaves - (3 * self.n - 2)) % 4 == 0

    def to_dict(self) -> dict:
        p, q, r = self.pair_type_counts
        return {
            "spine_labels": list(self.spine_labels),
            "leaf_counts": list(self.leaf_counts),
            "total_leaves": self.total_leaves,
            "pair_types": {"same_sign": p, "opposite_sign": q, "with_zero": r},
            "pair_sum": self.pair_sum,
            "weight": self.weight,
            "mod4_ok": self.satisfies_mod4(),
        }


def caterpillar_labeling(spine: tuple[int, ...], leaf_counts: tuple[int, ...]) -> Labeling:
    """Full labeling in :func:`caterpillar` layout: leaves carry ``-x_i``."""
    values = list(spine)
    for x, count in zip(spine, leaf_counts):
        values.extend([-x] * count)
    return Labeling(tuple(values))


def _leaf_counts(x: tuple[int, ...]) -> tuple[int, ...]:
    n = len(x)
    return tuple(
        1 + (x[i - 1] * x[i] if i > 0 else 0) + (x[i] * x[i + 1] if i < n - 1 else 0)
        for i in range(n)
    )


def caterpillar_mbdf_search(n: int) -> list[CaterpillarAnalysis]:
    """All non-zero MBDFs on caterpillars with an ``n``-vertex spine, one per spine labeling.

    Spine labelings are kept when the end labels are nonzero, no two consecutive
    labels are zero, every derived leaf count is non-negative, and the induced
    labeling balances (a zero spine vertex needs ``x_{i-1} = -x_{i+1}``).
    Results are in lexicographic order of the spine labels.
    """
    if n < 2:
        raise ValueError("spine length must be at least 2")
    out = []
    for x in itertools.product((-1, 0, 1), repeat=n):
        if x[0] == 0 or x[-1] == 0:
            continue
        if any(x[i] == 0 and x[i + 1] == 0 for i in range(n - 1)):
            continue
        leaves = _leaf_counts(x)
        if min(leaves) < 0:
            continue
        spec = CaterpillarSpec.of(leaves)
        lab = caterpillar_labeling(x, leaves)
        if not is_bdf(caterpillar(spec), lab):
            continue
        pairs = [x[i] * x[i + 1] for i in range(n - 1)]
        p = pairs.count(1)
        q = pairs.count(-1)
        r = pairs.count(0)
        out.append(CaterpillarAnalysis(x, leaves, (p, q, r), sum(pairs), lab.weight))
    return out


def caterpillar_gamma(spec: CaterpillarSpec, limits: Limits | None = None) -> GammaResult:
    return gamma_bd(caterpillar(spec), limits)

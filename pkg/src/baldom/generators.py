"""Deterministic constructors for the graph families studied here.

Index layouts are part of the public contract because kernel pivots and layer
certificates refer to them:

* polytopes (``antiprism``, ``polytope_d``, ``polytope_r2``): layer-major, the
  ``i``-th vertex of layer ``k`` is ``k * n + i``; ring indices wrap mod ``n``.
* ``grid``: row-major, ``v(i, j) = i * n + j`` (0-based).
* ``caterpillar``: spine first, then the leaves of each spine vertex in order.
* trees: breadth-first order from the root (index 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Family, Graph

__all__ = [
    "CaterpillarSpec",
    "TwoLevelTreeSpec",
    "LEAF",
    "antiprism",
    "polytope_d",
    "polytope_r2",
    "grid",
    "caterpillar",
    "two_level_tree",
    "full_binary_tree",
    "full_binary_internal_vertices",
    "enumerate_full_binary_shapes",
    "shape_size",
    "perfect_shape",
]

# A full binary tree shape is LEAF or a pair (left, right) of shapes.
LEAF: tuple = ()


@dataclass(frozen=True)
class CaterpillarSpec:
    spine_len: int
    leaf_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "leaf_counts", tuple(int(x) for x in self.leaf_counts))
        if self.spine_len < 1:
            raise ValueError("caterpillar spine must have at least one vertex")
        if len(self.leaf_counts) != self.spine_len:
            raise ValueError("need one leaf count per spine vertex")
        if any(x < 0 for x in self.leaf_counts):
            raise ValueError("leaf counts must be non-negative")

    @classmethod
    def of(cls, leaf_counts: Sequence[int]) -> "CaterpillarSpec":
        return cls(len(leaf_counts), tuple(leaf_counts))

    @property
    def n_leaves(self) -> int:
        return sum(self.leaf_counts)

    @property
    def n_vertices(self) -> int:
        return self.spine_len + self.n_leaves


@dataclass(frozen=True)
class TwoLevelTreeSpec:
    n_children: int
    child_leaf_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "child_leaf_counts", tuple(int(x) for x in self.child_leaf_counts))
        if self.n_children < 2:
            raise ValueError("a two-level tree needs at least two children of the root")
        if len(self.child_leaf_counts) != self.n_children:
            raise ValueError("need one leaf count per child of the root")
        if any(x < 0 for x in self.child_leaf_counts):
            raise ValueError("leaf counts must be non-negative")

    @classmethod
    def of(cls, leaf_counts: Sequence[int]) -> "TwoLevelTreeSpec":
        return cls(len(leaf_counts), tuple(leaf_counts))

    @property
    def n_vertices(self) -> int:
        return 1 + self.n_children + sum(self.child_leaf_counts)


def _ring_family(n: int, templates: Sequence[tuple[int, int, int, int]], n_layers: int,
                 name: str) -> Graph:
    # template (layer_u, shift_u, layer_v, shift_v) stands for the edge u_{i+shift_u} v_{i+shift_v}
    if n < 5:
        raise ValueError(f"{name} is defined for n >= 5, got {n}")
    edges = []
    for i in range(n):
        for lu, su, lv, sv in templates:
            edges.append((lu * n + (i + su) % n, lv * n + (i + sv) % n))
    return Graph.from_edges(n_layers * n, edges, Family(name, {"n": n}))


A, B, C, D, E, F = range(6)


def antiprism(n: int) -> Graph:
    """Convex polytope ``A_n``: layers a, b, c; 7 edge templates, 4-regular."""
    templates = [
        (A, 0, A, 1), (B, 0, B, 1), (C, 0, C, 1),
        (A, 0, B, 0), (B, 0, C, 0), (A, 1, B, 0), (B, 1, C, 0),
    ]
    return _ring_family(n, templates, 3, "antiprism")


def polytope_d(n: int) -> Graph:
    """Convex polytope ``D_n``: layers a, b, c, d; 6 edge templates."""
    templates = [
        (A, 0, A, 1), (D, 0, D, 1),
        (A, 0, B, 0), (B, 0, C, 0), (B, 1, C, 0), (C, 0, D, 0),
    ]
    return _ring_family(n, templates, 4, "polytope_d")


def polytope_r2(n: int) -> Graph:
    """Convex polytope ``R''_n``: layers a..f; 9 edge templates."""
    templates = [
        (A, 0, A, 1), (F, 0, F, 1),
        (A, 0, B, 0), (B, 0, C, 0), (C, 0, D, 0), (D, 0, E, 0), (E, 0, F, 0),
        (B, 1, C, 0), (D, 0, E, 1),
    ]
    return _ring_family(n, templates, 6, "polytope_r2")


def grid(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return Graph.from_edges(m * n, edges, Family("grid", {"m": m, "n": n}))


def caterpillar(spec: CaterpillarSpec) -> Graph:
    n = spec.spine_len
    edges = [(i, i + 1) for i in range(n - 1)]
    nxt = n
    for i, count in enumerate(spec.leaf_counts):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges, Family("caterpillar", {"leaf_counts": list(spec.leaf_counts)}))


def two_level_tree(spec: TwoLevelTreeSpec) -> Graph:
    n = spec.n_children
    edges = [(0, i) for i in range(1, n + 1)]
    nxt = n + 1
    for i, count in enumerate(spec.child_leaf_counts, start=1):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(
        nxt, edges, Family("two_level", {"leaf_counts": list(spec.child_leaf_counts)})
    )


def _check_shape(shape) -> None:
    stack = [shape]
    while stack:
        s = stack.pop()
        if not isinstance(s, tuple) or len(s) not in (0, 2):
            raise ValueError(f"malformed full binary shape: {s!r}")
        stack.extend(s)


def shape_size(shape) -> int:
    _check_shape(shape)
    return len(full_binary_internal_vertices(shape)) * 2 + 1


def perfect_shape(depth: int):
    """Perfect full binary shape whose leaves are ``depth`` edges below the root."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    s = LEAF
    for _ in range(depth):
        s = (s, s)
    return s


def _shape_to_json(shape):
    return [] if shape == LEAF else [_shape_to_json(shape[0]), _shape_to_json(shape[1])]


def full_binary_tree(shape) -> Graph:
    """Rooted full binary tree (root index 0, breadth-first indexing)."""
    _check_shape(shape)
    edges = []
    queue = [(shape, 0)]
    nxt = 1
    head = 0
    while head < len(queue):
        s, idx = queue[head]
        head += 1
        if s == LEAF:
            continue
        for child in s:
            edges.append((idx, nxt))
            queue.append((child, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges, Family("full_binary", {"shape": _shape_to_json(shape)}))


def full_binary_internal_vertices(shape) -> list[int]:
    """Indices (in :func:`full_binary_tree` layout) of vertices with two children."""
    _check_shape(shape)
    out = []
    queue = [shape]
    head = 0
    while head < len(queue):
        s = queue[head]
        if s != LEAF:
            out.append(head)
            queue.extend(s)
        head += 1
    return out


def enumerate_full_binary_shapes(max_vertices: int) -> list:
    """All full binary shapes with at most ``max_vertices`` vertices, smallest first."""
    by_size: dict[int, list] = {1: [LEAF]}
    for size in range(3, max_vertices + 1, 2):
        shapes = []
        for left in range(1, size - 1, 2):
            for ls in by_size[left]:
                for rs in by_size[size - 1 - left]:
                    shapes.append((ls, rs))
        by_size[size] = shapes
    return [s for size in sorted(by_size) if size <= max_vertices for s in by_size[size]]

"""Graphs, closed neighborhoods and the operator ``M(G) = A(G) + I``.

A balanced dominating function (BDF) is a labeling ``f: V -> {-1, 0, 1}``
whose sum over every closed neighborhood is zero, i.e. a {-1,0,1} vector in
the kernel of ``M(G)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

__all__ = [
    "Family",
    "Graph",
    "OperatorMatrix",
    "Labeling",
    "closed_neighborhood",
    "operator_matrix",
    "is_bdf",
    "closed_sums",
]


@dataclass(frozen=True)
class Family:
    """Name and parameters of the generator that produced a graph."""

    name: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "params": dict(self.params)}

    def __hash__(self) -> int:
        return hash((self.name, json.dumps(dict(self.params), sort_keys=True)))


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n_vertices-1``.

    Build instances with :meth:`from_edges`; the edge tuple keeps the order in
    which edges were supplied (each stored as ``(min, max)``).
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    family: Family | None = None

    @classmethod
    def from_edges(
        cls,
        n_vertices: int,
        edges: Iterable[Sequence[int]],
        family: Family | None = None,
    ) -> "Graph":
        if n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        seen: set[tuple[int, int]] = set()
        ordered: list[tuple[int, int]] = []
        nbrs: list[list[int]] = [[] for _ in range(n_vertices)]
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if not (0 <= i < n_vertices and 0 <= j < n_vertices):
                raise ValueError(f"edge ({i}, {j}) out of range for {n_vertices} vertices")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            ordered.append(key)
            nbrs[i].append(j)
            nbrs[j].append(i)
        adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n_vertices, tuple(ordered), adjacency, family)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n_vertices == other.n_vertices
            and self.edges == other.edges
            and self.family == other.family
        )

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges, self.family))

    def same_structure(self, other: "Graph") -> bool:
        """Equal vertex count and edge set, ignoring edge order and family."""
        return self.n_vertices == other.n_vertices and set(self.edges) == set(other.edges)

    def bfs_order(self, root: int = 0) -> list[int]:
        """Breadth-first vertex order; every component is visited, lowest index first."""
        order: list[int] = []
        seen = [False] * self.n_vertices
        starts = [root] + list(range(self.n_vertices)) if self.n_vertices else []
        for s in starts:
            if seen[s]:
                continue
            seen[s] = True
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                order.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return order

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n_vertices,
            "edges": [[i, j] for i, j in self.edges],
            "family": self.family.to_dict() if self.family else None,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Graph":
        fam = data.get("family")
        family = Family(fam["name"], dict(fam.get("params", {}))) if fam else None
        return cls.from_edges(int(data["n"]), data.get("edges", []), family)

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, labeling: "Labeling | Sequence[int] | None" = None) -> str:
        """Graphviz source; vertices are named by index, BDF values go in ``label``."""
        values = None
        if labeling is not None:
            values = labeling.values if isinstance(labeling, Labeling) else tuple(labeling)
            if len(values) != self.n_vertices:
                raise ValueError("labeling length does not match graph")
        name = self.family.name if self.family else "G"
        lines = [f'graph "{name}" {{']
        for v in range(self.n_vertices):
            if values is None:
                lines.append(f"  {v};")
            else:
                lines.append(f'  {v} [label="{values[v]}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OperatorMatrix:
    """Sparse 0/1 view of ``M(G)``: ``rows[i]`` lists the unit columns of row ``i``."""

    dim: int
    rows: tuple[tuple[int, ...], ...]

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.dim:
            raise ValueError("vector length does not match matrix dimension")
        return [sum(x[j] for j in row) for row in self.rows]

    def to_dense(self):
        import numpy as np

        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, row in enumerate(self.rows):
            out[i, list(row)] = 1
        return out


@dataclass(frozen=True)
class Labeling:
    """A vector over {-1, 0, 1} indexed by vertices."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        for v in vals:
            if v not in (-1, 0, 1):
                raise ValueError(f"label {v} not in {{-1, 0, 1}}")
        object.__setattr__(self, "values", vals)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __neg__(self) -> "Labeling":
        return Labeling(tuple(-v for v in self.values))

    def __lt__(self, other: "Labeling") -> bool:
        return self.values < other.values

    def is_zero(self) -> bool:
        return not any(self.values)

    @classmethod
    def zeros(cls, n: int) -> "Labeling":
        return cls((0,) * n)


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    if not 0 <= v < g.n_vertices:
        raise ValueError(f"vertex {v} out of range for {g.n_vertices} vertices")
    return set(g.adjacency[v]) | {v}


def operator_matrix(g: Graph) -> OperatorMatrix:
    rows = tuple(tuple(sorted(g.adjacency[i] + (i,))) for i in range(g.n_vertices))
    return OperatorMatrix(g.n_vertices, rows)


def _values(lab: Labeling | Sequence[int]) -> Sequence[int]:
    return lab.values if isinstance(lab, Labeling) else lab


def closed_sums(g: Graph, lab: Labeling | Sequence[int]) -> list[int]:
    """Sum of labels over each closed neighborhood, i.e. ``M(G) @ lab``."""
    vals = _values(lab)
    if len(vals) != g.n_vertices:
        raise ValueError(f"labeling has length {len(vals)}, graph has {g.n_vertices} vertices")
    return [vals[v] + sum(vals[u] for u in g.adjacency[v]) for v in range(g.n_vertices)]


def is_bdf(g: Graph, lab: Labeling | Sequence[int]) -> bool:
    return not any(closed_sums(g, lab))

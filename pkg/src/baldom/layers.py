"""Layer-sum certificates for d-balancedness.

Sum the BDF conditions over each layer of a partition.  If the partition is
equitable (every vertex of layer ``j`` sees the same number ``Q[i][j]`` of
closed-neighborhood members in layer ``i``) the sums collapse to the small
system ``Q @ s = 0`` in the per-layer label sums ``s``.  A nonsingular ``Q``
forces every layer sum, hence every BDF weight, to zero.

The test is sufficient, not necessary: a missing certificate means only that
this partition proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph, Labeling

__all__ = [
    "LayerPartition",
    "LayerCertificate",
    "check_equitable",
    "determinant",
    "certify_d_balanced",
    "certificate_report",
    "natural_partition",
    "layer_sums",
    "CERTIFIED",
    "NOT_EQUITABLE",
    "SINGULAR",
]

CERTIFIED = "certified d-balanced"
NOT_EQUITABLE = "inconclusive (not equitable)"
SINGULAR = "inconclusive (singular quotient)"


@dataclass(frozen=True)
class LayerPartition:
    layers: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "layers", tuple(tuple(int(v) for v in L) for L in self.layers))
        if any(len(L) == 0 for L in self.layers):
            raise ValueError("layers must be non-empty")

    @classmethod
    def of(cls, layers: Sequence[Sequence[int]]) -> "LayerPartition":
        return cls(tuple(tuple(L) for L in layers))

    def __len__(self) -> int:
        return len(self.layers)

    def validate(self, n_vertices: int) -> list[int]:
        """Return the layer index of each vertex; raise if not a partition of the vertices."""
        owner = [-1] * n_vertices
        for k, layer in enumerate(self.layers):
            for v in layer:
                if not 0 <= v < n_vertices:
                    raise ValueError(f"vertex {v} out of range")
                if owner[v] != -1:
                    raise ValueError(f"vertex {v} appears in more than one layer")
                owner[v] = k
        missing = [v for v, k in enumerate(owner) if k == -1]
        if missing:
            raise ValueError(f"partition does not cover vertices {missing[:10]}")
        return owner


@dataclass(frozen=True)
class LayerCertificate:
    partition: LayerPartition
    quotient: tuple[tuple[int, ...], ...]
    determinant: Fraction

    @property
    def nonsingular(self) -> bool:
        return self.determinant != 0

    def to_dict(self) -> dict:
        return {
            "layers": [list(L) for L in self.partition.layers],
            "quotient": [list(r) for r in self.quotient],
            "det": _fraction_str(self.determinant),
            "certified": self.nonsingular,
            "reason": CERTIFIED if self.nonsingular else SINGULAR,
        }


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def check_equitable(g: Graph, p: LayerPartition) -> tuple[tuple[int, ...], ...] | None:
    """Quotient ``Q`` with ``Q[i][j]`` = closed-neighborhood members in layer ``i``
    of any vertex of layer ``j``; ``None`` if some block has non-constant counts."""
    owner = p.validate(g.n_vertices)
    k = len(p)
    Q = [[None] * k for _ in range(k)]
    for j, layer in enumerate(p.layers):
        for v in layer:
            counts = [0] * k
            counts[j] += 1
            for u in g.adjacency[v]:
                counts[owner[u]] += 1
            for i in range(k):
                if Q[i][j] is None:
                    Q[i][j] = counts[i]
                elif Q[i][j] != counts[i]:
                    return None
    return tuple(tuple(r) for r in Q)  # type: ignore[arg-type]


def determinant(mat: Sequence[Sequence[int]]) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1])


def certify_d_balanced(g: Graph, p: LayerPartition) -> LayerCertificate | None:
    Q = check_equitable(g, p)
    if Q is None:
        return None
    det = determinant(Q)
    if det == 0:
        return None
    return LayerCertificate(p, Q, det)


def certificate_report(g: Graph, p: LayerPartition) -> dict:
    """JSON-ready outcome with one of three reasons (certified / not equitable / singular)."""
    Q = check_equitable(g, p)
    layers = [list(L) for L in p.layers]
    if Q is None:
        return {"layers": layers, "quotient": None, "det": None,
                "certified": False, "reason": NOT_EQUITABLE}
    return LayerCertificate(p, Q, determinant(Q)).to_dict()


_LAYER_COUNTS = {"antiprism": 3, "polytope_d": 4, "polytope_r2": 6}


def natural_partition(g: Graph) -> LayerPartition | None:
    """Layer-major partition of a generated polytope graph, from its family tag."""
    if g.family is None or g.family.name not in _LAYER_COUNTS:
        return None
    n = int(g.family.params["n"])
    k = _LAYER_COUNTS[g.family.name]
    return LayerPartition(tuple(tuple(range(i * n, (i + 1) * n)) for i in range(k)))


def layer_sums(p: LayerPartition, lab: Labeling | Sequence[int]) -> list[int]:
    vals = lab.values if isinstance(lab, Labeling) else lab
    return [sum(vals[v] for v in L) for L in p.layers]

"""Exact balanced domination number via the rational kernel of ``M(G)``.

BDFs are exactly the {-1,0,1} vectors in ``ker M(G)``.  The kernel is computed
by exact reduced row echelon form (``fractions.Fraction``, no floats), and
every BDF is recovered by enumerating {-1,0,1} values for the free coordinates:
free coordinates are real vertex labels, so this enumeration is exhaustive.

:func:`backtracking_oracle` reaches the same answer by an unrelated route
(constraint propagation over vertices) and exists for cross-checking.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Mapping, Sequence

from .graph import Graph, Labeling, operator_matrix

__all__ = [
    "Limits",
    "ResourceLimitError",
    "KernelDescription",
    "GammaResult",
    "kernel",
    "enumerate_bdfs",
    "gamma_bd",
    "backtracking_oracle",
    "backtracking_bdfs",
    "summarize",
]

LABELS = (-1, 0, 1)


class ResourceLimitError(RuntimeError):
    """Raised when a search would exceed the configured limits."""

    def __init__(self, message: str, nullity: int | None = None):
        super().__init__(message)
        self.nullity = nullity


@dataclass(frozen=True)
class Limits:
    max_free_enumeration: int = 20
    node_budget: int = 10_000_000
    workers: int = 1
    # fall back to the backtracking search instead of raising when nullity is too large
    fallback: bool = False

    def __post_init__(self) -> None:
        if self.max_free_enumeration < 0 or self.node_budget < 1:
            raise ValueError("limits must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class KernelDescription:
    """RREF data for ``M(G)``.

    ``expression[p]`` is a tuple of ``(free_col, coeff)`` with
    ``x[p] = sum(coeff * x[free_col])`` for every kernel vector ``x``.
    """

    n_vertices: int
    pivot_cols: tuple[int, ...]
    free_cols: tuple[int, ...]
    expression: Mapping[int, tuple[tuple[int, Fraction], ...]]

    @property
    def dim(self) -> int:
        return len(self.free_cols)

    def substitute(self, free_values: Sequence) -> list[Fraction]:
        """Kernel vector with ``free_values[k]`` placed at ``free_cols[k]``."""
        if len(free_values) != self.dim:
            raise ValueError(f"expected {self.dim} free values, got {len(free_values)}")
        x: list[Fraction] = [Fraction(0)] * self.n_vertices
        for col, val in zip(self.free_cols, free_values):
            x[col] = Fraction(val)
        for p in self.pivot_cols:
            x[p] = sum((c * x[f] for f, c in self.expression[p]), Fraction(0))
        return x

    def basis(self) -> list[list[Fraction]]:
        return [self.substitute([int(i == k) for i in range(self.dim)]) for k in range(self.dim)]


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: Labeling
    method: str
    nullity: int | None = None
    bdf_count: int | None = None

    @property
    def d_balanced(self) -> bool:
        return self.gamma == 0

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "d_balanced": self.d_balanced,
            "nullity": self.nullity,
            "bdf_count": self.bdf_count,
            "witness": list(self.witness.values),
            "method": self.method,
        }


# -- kernel ----------------------------------------------------------------


def kernel(g: Graph) -> KernelDescription:
    """Exact RREF of ``M(G)``; pivot = first remaining row with a nonzero in the column.

    Elimination is fraction-free on integer rows (each kept primitive by its
    gcd); rows are normalised to rationals only at the end.  The reduced
    row echelon form is unique, so this equals rational Gauss-Jordan.
    """
    n = g.n_vertices
    rows: list[dict[int, int]] = [{j: 1 for j in r} for r in operator_matrix(g).rows]
    pivot_of: dict[int, dict[int, int]] = {}
    unused = list(range(n))
    free: list[int] = []
    for col in range(n):
        sel = next((k for k, r in enumerate(unused) if rows[r].get(col)), None)
        if sel is None:
            free.append(col)
            continue
        prow = rows[unused.pop(sel)]
        for r in unused:
            _eliminate(rows[r], prow, col)
        for other in pivot_of.values():
            _eliminate(other, prow, col)
        pivot_of[col] = prow
    expression = {}
    for p, row in pivot_of.items():
        lead = row[p]
        expression[p] = tuple((f, Fraction(-row[f], lead)) for f in free if row.get(f))
    return KernelDescription(n, tuple(sorted(pivot_of)), tuple(free), expression)


def _eliminate(row: dict[int, int], prow: dict[int, int], col: int) -> None:
    """``row <- prow[col] * row - row[col] * prow``, then divide out the content."""
    factor = row.get(col)
    if not factor:
        return
    lead = prow[col]
    if lead != 1:
        for j in row:
            row[j] *= lead
    for j, v in prow.items():
        nv = row.get(j, 0) - factor * v
        if nv:
            row[j] = nv
        else:
            row.pop(j, None)
    content = gcd(*row.values()) if row else 1
    if content > 1:
        for j in row:
            row[j] //= content


# -- enumeration over the kernel ------------------------------------------


@dataclass
class _Plan:
    """Integer form of the pivot expressions, grouped by the free position that completes them."""

    kd: KernelDescription
    # checks[k]: pivots whose last free dependency is free_cols[k]; (pivot, [(pos, num)], den)
    checks: list[list[tuple[int, list[tuple[int, int]], int]]] = field(default_factory=list)
    constant_zero: list[int] = field(default_factory=list)


def _plan(kd: KernelDescription) -> _Plan:
    pos = {f: k for k, f in enumerate(kd.free_cols)}
    plan = _Plan(kd, [[] for _ in kd.free_cols])
    for p in kd.pivot_cols:
        terms = kd.expression[p]
        if not terms:
            plan.constant_zero.append(p)
            continue
        den = lcm(*(c.denominator for _, c in terms))
        ints = [(pos[f], int(c * den)) for f, c in terms]
        depth = max(k for k, _ in ints)
        plan.checks[depth].append((p, ints, den))
    return plan


def _walk(plan: _Plan, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Yield complete labelings (as tuples) for every admissible free assignment
    extending ``prefix``, in lexicographic order of the free assignment."""
    kd = plan.kd
    d = kd.dim
    assign = [0] * d
    x = [0] * kd.n_vertices

    def ok(k: int) -> bool:
        for p, ints, den in plan.checks[k]:
            num = 0
            for q, a in ints:
                num += a * assign[q]
            if num == 0:
                x[p] = 0
            elif num == den:
                x[p] = 1
            elif num == -den:
                x[p] = -1
            else:
                return False
        return True

    for k, v in enumerate(prefix):
        assign[k] = v
        x[kd.free_cols[k]] = v
        if not ok(k):
            return

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == d:
            yield tuple(x)
            return
        col = kd.free_cols[k]
        for v in LABELS:
            assign[k] = v
            x[col] = v
            if ok(k):
                yield from rec(k + 1)
        assign[k] = 0
        x[col] = 0

    yield from rec(len(prefix))


def _walk_chunk(args) -> list[tuple[int, ...]]:
    plan, prefix = args
    return list(_walk(plan, prefix))


def _iter_bdf_tuples(kd: KernelDescription, workers: int) -> Iterator[tuple[int, ...]]:
    plan = _plan(kd)
    if workers <= 1 or kd.dim < 4:
        yield from _walk(plan, ())
        return
    # split on a prefix of the free coordinates; prefixes are visited in
    # lexicographic order so the merged stream equals the sequential one
    k = 1
    while 3 ** k < 4 * workers and k < kd.dim - 1:
        k += 1
    prefixes = list(itertools.product(LABELS, repeat=k))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for chunk in ex.map(_walk_chunk, [(plan, p) for p in prefixes]):
            yield from chunk


def _check_nullity(kd: KernelDescription, limits: Limits) -> None:
    if kd.dim > limits.max_free_enumeration:
        raise ResourceLimitError(
            f"kernel nullity {kd.dim} exceeds max_free_enumeration={limits.max_free_enumeration}",
            nullity=kd.dim,
        )


def enumerate_bdfs(g: Graph, limits: Limits | None = None) -> list[Labeling]:
    """Every BDF of ``g`` (zero labeling included), ordered by free-coordinate assignment."""
    limits = limits or Limits()
    kd = kernel(g)
    _check_nullity(kd, limits)
    return [Labeling(t) for t in _iter_bdf_tuples(kd, limits.workers)]


def summarize(labelings: Sequence[Labeling], n_vertices: int, method: str,
              nullity: int | None = None) -> GammaResult:
    """Max-weight BDF with ties broken by the lexicographically smallest labeling."""
    best: Labeling | None = None
    for lab in labelings:
        if best is None or lab.weight > best.weight or (
            lab.weight == best.weight and lab.values < best.values
        ):
            best = lab
    if best is None:
        best = Labeling.zeros(n_vertices)
    return GammaResult(best.weight, best, method, nullity, len(labelings))


def gamma_bd(g: Graph, limits: Limits | None = None) -> GammaResult:
    limits = limits or Limits()
    kd = kernel(g)
    if kd.dim == 0:
        return GammaResult(0, Labeling.zeros(g.n_vertices), "kernel-trivial", 0, 1)
    if kd.dim > limits.max_free_enumeration:
        if limits.fallback:
            res = backtracking_oracle(g, limits)
            return GammaResult(res.gamma, res.witness, res.method, kd.dim, res.bdf_count)
        _check_nullity(kd, limits)
    labs = [Labeling(t) for t in _iter_bdf_tuples(kd, limits.workers)]
    return summarize(labs, g.n_vertices, "kernel-enumeration", kd.dim)


# -- backtracking oracle -------------------------------------------------


class _Search:
    def __init__(self, g: Graph, budget: int, count_all: bool):
        self.g = g
        self.n = g.n_vertices
        self.budget = budget
        self.count_all = count_all
        self.order = g.bfs_order()
        # constraint c is the closed neighborhood of vertex c
        self.members = [tuple(sorted(g.adjacency[c] + (c,))) for c in range(self.n)]
        self.val: list[int | None] = [None] * self.n
        self.csum = [0] * self.n
        self.cfree = [len(m) for m in self.members]
        self.nodes = 0
        self.assigned_weight = 0
        self.solutions: list[tuple[int, ...]] = []
        self.best: tuple[int, ...] | None = None
        self.best_weight = -1

    def _set(self, v: int, x: int, trail: list[int]) -> bool:
        self.val[v] = x
        self.assigned_weight += x
        trail.append(v)
        ok = True
        for c in self.g.adjacency[v] + (v,):
            self.csum[c] += x
            self.cfree[c] -= 1
            if abs(self.csum[c]) > self.cfree[c]:
                ok = False
        return ok

    def _undo(self, trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            v = trail.pop()
            x = self.val[v]
            self.val[v] = None
            self.assigned_weight -= x
            for c in self.g.adjacency[v] + (v,):
                self.csum[c] -= x
                self.cfree[c] += 1

    def _propagate(self, start: int, trail: list[int]) -> bool:
        """Unit propagation: a constraint with one open member forces it."""
        queue = [start]
        while queue:
            v = queue.pop()
            for c in self.g.adjacency[v] + (v,):
                if self.cfree[c] != 1:
                    continue
                forced = -self.csum[c]
                if forced not in LABELS:
                    return False
                u = next(w for w in self.members[c] if self.val[w] is None)
                if not self._set(u, forced, trail):
                    return False
                queue.append(u)
        return True

    def run(self) -> None:
        trail: list[int] = []
        self._rec(0, trail)

    def _rec(self, pos: int, trail: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitError(f"node budget {self.budget} exhausted")
        while pos < self.n and self.val[self.order[pos]] is not None:
            pos += 1
        if pos == self.n:
            sol = tuple(self.val)  # type: ignore[arg-type]
            w = sum(sol)
            if self.count_all:
                self.solutions.append(sol)
            if self.best is None or w > self.best_weight or (
                w == self.best_weight and sol < self.best
            ):
                self.best, self.best_weight = sol, w
            return
        if not self.count_all:
            unassigned = sum(1 for x in self.val if x is None)
            if self.assigned_weight + unassigned < self.best_weight:
                return
        v = self.order[pos]
        for x in LABELS:
            mark = len(trail)
            if self._set(v, x, trail) and self._propagate(v, trail):
                self._rec(pos + 1, trail)
            self._undo(trail, mark)


def backtracking_bdfs(g: Graph, limits: Limits | None = None) -> list[Labeling]:
    """All BDFs found by depth-first search, sorted lexicographically."""
    limits = limits or Limits()
    s = _Search(g, limits.node_budget, count_all=True)
    s.run()
    return sorted(Labeling(t) for t in s.solutions)


def backtracking_oracle(g: Graph, limits: Limits | None = None,
                        count_all: bool = True) -> GammaResult:
    """γ_bd by depth-first labeling in BFS order with unit propagation.

    With ``count_all=False`` the search additionally prunes branches whose
    weight cannot reach the best found so far, and ``bdf_count`` is ``None``.
    """
    limits = limits or Limits()
    s = _Search(g, limits.node_budget, count_all)
    s.run()
    witness = Labeling(s.best) if s.best is not None else Labeling.zeros(g.n_vertices)
    count = len(s.solutions) if count_all else None
    return GammaResult(witness.weight, witness, "backtracking", None, count)

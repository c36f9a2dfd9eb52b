"""BDFs on grid graphs: propagation, canonical blocks and scheme classification.

On ``Grid(m, n)`` the balance condition at ``v(i, j)`` determines the entry to
its right, so a BDF is fixed by its first column and all BDFs are found by
propagating each of the ``3**m`` candidate columns.  Every non-zero BDF is a
vertical stack of one repeated block separated by zero rows:

============  ==================  ===========================
scheme        block               congruences (rows, columns)
============  ==================  ===========================
Type 1        ±B1 alternating     m ≡ 1 (mod 2), n ≡ 2 (mod 3)
Type 2        B2 (or -B2)         m ≡ 2 (mod 3), n ≡ 1 (mod 2)
Type 3        B4(t) (or -B4(t))   m ≡ 4 (mod 5), n ≡ 4 (mod 5)
============  ==================  ===========================

Cells are indexed 0-based in code; the anti-diagonal relations below use
the 1-based ``a(i, j)`` notation of the original derivation.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Labeling
from .solver import GammaResult, ResourceLimitError, summarize

__all__ = [
    "GridLabeling",
    "GridScheme",
    "PATTERNS",
    "SEED_CONFIGURATIONS",
    "propagate_from_first_column",
    "all_bdfs_by_propagation",
    "canonical_block",
    "scheme_layout",
    "applicable_schemes",
    "build_scheme",
    "classify",
    "classify_all",
    "corner_zero_forcing",
    "antidiagonal_violations",
    "verify_antidiagonal_relations",
    "seed_configuration",
    "gamma_bd_grid",
    "nonzero_bdfs",
    "SC_FORMULAS",
]

MAX_ROWS = 17

PATTERNS: dict[int, tuple[tuple[int, ...], ...]] = {
    1: ((0, 1, -1, 0), (-1, 0, 0, 1), (1, 0, 0, -1), (0, -1, 1, 0)),
    2: ((1, -1, 1, -1), (0, -1, 1, 0), (0, 1, -1, 0), (-1, 1, -1, 1)),
    3: ((1, 0, 0, -1), (-1, -1, 1, 1), (1, 1, -1, -1), (-1, 0, 0, 1)),
}

# Labels on the first three anti-diagonals, as (a11, a12, a13, a21, a22, a31).
SEED_CONFIGURATIONS: dict[str, tuple[int, ...]] = {
    "C1": (1, -1, 0, 0, 0, -1),
    "C2": (1, 0, -1, -1, 0, 0),
    "C3": (1, 0, 0, -1, -1, 1),
    "C4": (1, -1, 1, 0, -1, 0),
    "C5": (0, 1, -1, -1, 0, 1),
}


@dataclass(frozen=True)
class GridLabeling:
    m: int
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if len(cells) != self.m or any(len(r) != self.n for r in cells):
            raise ValueError(f"cells do not form a {self.m}x{self.n} array")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_array(cls, arr) -> "GridLabeling":
        arr = np.asarray(arr)
        return cls(arr.shape[0], arr.shape[1], tuple(map(tuple, arr.tolist())))

    @classmethod
    def from_labeling(cls, m: int, n: int, lab: Labeling | Sequence[int]) -> "GridLabeling":
        vals = lab.values if isinstance(lab, Labeling) else tuple(lab)
        if len(vals) != m * n:
            raise ValueError("labeling length does not match grid size")
        return cls(m, n, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(m)))

    @classmethod
    def zeros(cls, m: int, n: int) -> "GridLabeling":
        return cls(m, n, ((0,) * n,) * m)

    def to_labeling(self) -> Labeling:
        return Labeling(tuple(v for row in self.cells for v in row))

    def to_array(self) -> np.ndarray:
        return np.array(self.cells, dtype=np.int64).reshape(self.m, self.n)

    def transpose(self) -> "GridLabeling":
        return GridLabeling(self.n, self.m, tuple(zip(*self.cells)))

    def __neg__(self) -> "GridLabeling":
        return GridLabeling(self.m, self.n, tuple(tuple(-v for v in r) for r in self.cells))

    def a(self, i: int, j: int) -> int:
        """1-based entry; cells outside the grid read as 0."""
        if 1 <= i <= self.m and 1 <= j <= self.n:
            return self.cells[i - 1][j - 1]
        return 0

    @property
    def weight(self) -> int:
        return sum(map(sum, self.cells))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.cells)

    def is_bdf(self) -> bool:
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                s = (self.a(i, j) + self.a(i - 1, j) + self.a(i + 1, j)
                     + self.a(i, j - 1) + self.a(i, j + 1))
                if s:
                    return False
        return True

    def to_text(self) -> str:
        sym = {-1: "-", 0: ".", 1: "+"}
        return "\n".join("".join(sym[v] for v in row) for row in self.cells) + "\n"

    def to_pgm(self) -> str:
        """Plain PGM (P2) with -1, 0, 1 mapped to grey levels 0, 1, 2."""
        lines = ["P2", f"{self.n} {self.m}", "2"]
        lines += [" ".join(str(v + 1) for v in row) for row in self.cells]
        return "\n".join(lines) + "\n"


# -- propagation ------------------------------------------------------------


def propagate_from_first_column(m: int, n: int, col: Sequence[int]) -> GridLabeling | None:
    """Fill columns left to right from the balance conditions; ``None`` if a forced
    entry leaves {-1, 0, 1} or the last column is unbalanced."""
    if len(col) != m:
        raise ValueError(f"first column must have length {m}")
    cols = [list(col)]
    prev = [0] * m
    for _ in range(n):
        cur = cols[-1]
        nxt = [
            -(prev[i] + cur[i] + (cur[i - 1] if i > 0 else 0) + (cur[i + 1] if i < m - 1 else 0))
            for i in range(m)
        ]
        if len(cols) == n:
            if any(nxt):
                return None
            break
        if any(v not in (-1, 0, 1) for v in nxt):
            return None
        prev = cur
        cols.append(nxt)
    return GridLabeling(m, n, tuple(zip(*cols)))


def _propagate_batch(first: np.ndarray, n: int) -> np.ndarray:
    """Vectorised propagation of many first columns; returns surviving grids (K, m, n)."""
    cur = first.astype(np.int8)
    prev = np.zeros_like(cur)
    history = [cur]

    def step(prev, cur):
        s = prev + cur
        s[:, 1:] += cur[:, :-1]
        s[:, :-1] += cur[:, 1:]
        return -s

    for _ in range(1, n):
        nxt = step(prev, cur)
        keep = np.all((nxt >= -1) & (nxt <= 1), axis=1)
        history = [h[keep] for h in history]
        prev, cur = cur[keep], nxt[keep]
        history.append(cur)
    keep = ~np.any(step(prev, cur), axis=1)
    return np.stack([h[keep] for h in history], axis=2)


def _batch_for_prefix(args) -> np.ndarray:
    prefix, m, n = args
    rest = m - len(prefix)
    tail = np.array(list(itertools.product((-1, 0, 1), repeat=rest)), dtype=np.int8).reshape(-1, rest)
    head = np.broadcast_to(np.array(prefix, dtype=np.int8), (tail.shape[0], len(prefix)))
    return _propagate_batch(np.concatenate([head, tail], axis=1), n)


def all_bdfs_by_propagation(m: int, n: int, max_rows: int = MAX_ROWS,
                            workers: int = 1) -> list[GridLabeling]:
    """Every BDF on ``Grid(m, n)`` (zero included), sorted by row-major values.

    The shorter side is enumerated (the grid is transposed when ``m > n``).
    """
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    if m > n:
        return sorted(
            (g.transpose() for g in all_bdfs_by_propagation(n, m, max_rows, workers)),
            key=lambda g: g.cells,
        )
    if m > max_rows:
        raise ResourceLimitError(f"3**{m} first columns exceed the limit of {max_rows} rows")
    split = max(0, m - 12)
    jobs = [(p, m, n) for p in itertools.product((-1, 0, 1), repeat=split)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            batches = list(ex.map(_batch_for_prefix, jobs))
    else:
        batches = [_batch_for_prefix(j) for j in jobs]
    out = [GridLabeling.from_array(a) for b in batches for a in b]
    return sorted(out, key=lambda g: g.cells)


# -- canonical blocks and schemes ---------------------------------------------

_BLOCK_RE = re.compile(r"^(-?)(B1|B2|B4\(([123])\))$")
ZERO_ROW = "0"


def _block_row_count(kind: str) -> int:
    return {"B1": 1, "B2": 2}.get(kind.lstrip("-"), 4)


def canonical_block(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Rows of block ``kind`` (``B1``, ``B2``, ``B4(t)``, optionally negated) of width ``n``."""
    mt = _BLOCK_RE.match(kind)
    if not mt:
        raise ValueError(f"unknown block {kind!r}")
    sign = -1 if mt.group(1) else 1
    base = mt.group(2)
    if base == "B1":
        if n % 3 != 2:
            raise ValueError(f"B1 needs width ≡ 2 (mod 3), got {n}")
        rows = [tuple((1, -1, 0)[j % 3] for j in range(n))]
    elif base == "B2":
        if n % 2 != 1:
            raise ValueError(f"B2 needs odd width, got {n}")
        top = tuple(0 if j % 2 else (1 if j % 4 == 0 else -1) for j in range(n))
        rows = [top, tuple(-v for v in top)]
    else:
        if n % 5 != 4:
            raise ValueError(f"B4 needs width ≡ 4 (mod 5), got {n}")
        pat = PATTERNS[int(mt.group(3))]
        rows = [tuple(0 if j % 5 == 4 else pat[r][j % 5] for j in range(n)) for r in range(4)]
    return tuple(tuple(sign * v for v in row) for row in rows)


@dataclass(frozen=True)
class GridScheme:
    scheme_type: str  # Type1_1, Type1_2, Type2_1, Type2_2, Type3_1, Type3_2
    t: int | None
    row_layout: tuple[str, ...]

    @property
    def name(self) -> str:
        return f"{self.scheme_type}({self.t})" if self.t else self.scheme_type

    def to_dict(self) -> dict:
        return {"type": self.name, "layout": list(self.row_layout)}


_SCHEME_TYPES = ("Type1_1", "Type1_2", "Type2_1", "Type2_2", "Type3_1", "Type3_2")


def scheme_layout(scheme_type: str, m: int, t: int | None = None) -> tuple[str, ...]:
    """Row layout of a scheme on ``m`` rows; raises if ``m`` admits no arrangement."""
    if scheme_type not in _SCHEME_TYPES:
        raise ValueError(f"unknown scheme type {scheme_type!r}")
    family, variant = scheme_type[4], scheme_type[6]
    sign = "" if variant == "1" else "-"
    if family == "1":
        if m % 2 != 1:
            raise ValueError("Type 1 needs an odd number of rows")
        layout = []
        for k in range((m + 1) // 2):
            if k:
                layout.append(ZERO_ROW)
            neg = (k % 2 == 1) != (variant == "2")
            layout.append("-B1" if neg else "B1")
        return tuple(layout)
    if family == "2":
        if m % 3 != 2:
            raise ValueError("Type 2 needs m ≡ 2 (mod 3)")
        block, count = sign + "B2", (m + 1) // 3
    else:
        if t not in (1, 2, 3):
            raise ValueError("Type 3 needs a pattern index t in {1, 2, 3}")
        if m % 5 != 4:
            raise ValueError("Type 3 needs m ≡ 4 (mod 5)")
        block, count = f"{sign}B4({t})", (m + 1) // 5
    layout = []
    for k in range(count):
        if k:
            layout.append(ZERO_ROW)
        layout.append(block)
    return tuple(layout)


def _width_ok(scheme_type: str, n: int) -> bool:
    return {"1": n % 3 == 2, "2": n % 2 == 1, "3": n % 5 == 4}[scheme_type[4]]


def applicable_schemes(m: int, n: int) -> list[GridScheme]:
    """All schemes whose row and column congruences hold for ``Grid(m, n)``."""
    out = []
    for st in _SCHEME_TYPES:
        if not _width_ok(st, n):
            continue
        for t in ((1, 2, 3) if st.startswith("Type3") else (None,)):
            try:
                out.append(GridScheme(st, t, scheme_layout(st, m, t)))
            except ValueError:
                pass
    return out


def build_scheme(scheme: GridScheme, n: int) -> GridLabeling:
    rows: list[tuple[int, ...]] = []
    for item in scheme.row_layout:
        if item == ZERO_ROW:
            rows.append((0,) * n)
        else:
            rows.extend(canonical_block(item, n))
    return GridLabeling(len(rows), n, tuple(rows))


def classify_all(lab: GridLabeling) -> list[GridScheme]:
    """Every scheme whose construction reproduces ``lab`` exactly."""
    if lab.is_zero():
        raise ValueError("the zero labeling has no scheme")
    return [s for s in applicable_schemes(lab.m, lab.n) if build_scheme(s, lab.n) == lab]


def classify(lab: GridLabeling) -> GridScheme | None:
    matches = classify_all(lab)
    return matches[0] if matches else None


# -- corner zero forcing and anti-diagonal relations ----------------------------

_CORNERS = ("top-left", "top-right", "bottom-left", "bottom-right")


def corner_zero_forcing(lab: GridLabeling, corner: str = "top-left") -> bool:
    """Whether "BDF with an all-zero corner neighborhood ⇒ zero labeling" holds here."""
    if corner not in _CORNERS:
        raise ValueError(f"corner must be one of {_CORNERS}")
    i = 1 if corner.startswith("top") else lab.m
    j = 1 if corner.endswith("left") else lab.n
    di = 1 if i == 1 else -1
    dj = 1 if j == 1 else -1
    hood = [lab.a(i, j), lab.a(i + di, j), lab.a(i, j + dj)]
    if not lab.is_bdf() or any(hood):
        return True
    return lab.is_zero()


# s_l(k) = a(k-l, l+1) + a(l+1, k-l) as integer combinations of (a11, a22, a33, a44)
SC_FORMULAS: dict[tuple[int, int], tuple[int, int, int, int]] = {
    (2, 0): (-1, 0, 0, 0),
    (3, 0): (-1, -2, 0, 0),
    (4, 0): (1, 3, 0, 0),
    (4, 1): (1, -1, 0, 0),
    (5, 0): (0, -2, 2, 0),
    (5, 1): (0, 1, -2, 0),
    (6, 0): (0, 3, -5, 0),
    (6, 1): (-1, -4, 3, 0),
    (6, 2): (-1, 1, -1, 0),
    (7, 0): (0, -1, 0, -2),
    (7, 1): (0, 3, 0, 2),
    (7, 2): (1, -1, 0, -2),
    (8, 0): (-1, 5, 0, 7),
    (8, 1): (1, -2, 0, -5),
    (8, 2): (0, 2, 0, 3),
    (8, 3): (1, 1, 0, 0),
}


def antidiagonal_violations(lab: GridLabeling) -> list[str]:
    """Names of the anti-diagonal identities that fail on ``lab`` (empty when all hold).

    Each boundary/interior relation is the balance condition at one vertex on
    anti-diagonal ``k - 1`` and is checked when that vertex lies in the grid.
    The closed forms for ``s_l(k)`` need ``D_1..D_k`` complete, i.e.
    ``min(m, n) >= k``.
    """
    a = lab.a
    m, n = lab.m, lab.n
    bad = []
    for k in range(3, m + n + 1):
        if k - 1 <= m:
            if a(k, 1) + a(k - 1, 2) != -(a(k - 1, 1) + a(k - 2, 1)):
                bad.append(f"BC_{k} first column")
        if k - 1 <= n:
            if a(1, k) + a(2, k - 1) != -(a(1, k - 1) + a(1, k - 2)):
                bad.append(f"BC_{k} first row")
        for i in range(1, k - 2):
            ci, cj = k - i - 1, i + 1
            if not (1 <= ci <= m and 1 <= cj <= n):
                continue
            lhs = a(k - i, i + 1) + a(k - i - 1, i + 2)
            rhs = -(a(k - i - 1, i + 1) + a(k - i - 1, i) + a(k - i - 2, i + 1))
            if lhs != rhs:
                bad.append(f"BC_{k} interior i={i}")
    size = min(m, n)
    diag = (a(1, 1), a(2, 2), a(3, 3), a(4, 4))
    for (k, l), coeffs in SC_FORMULAS.items():
        if size < k:
            continue
        s = a(k - l, l + 1) + a(l + 1, k - l)
        if s != sum(c * d for c, d in zip(coeffs, diag)):
            bad.append(f"SC s_{l}({k})")
    if size >= 4 and (a(1, 1) + a(2, 2) not in (-1, 0, 1) or (a(1, 1) == 0 and a(2, 2) != 0)):
        bad.append("forced a11 + a22")
    if size >= 6 and a(3, 3) != a(2, 2):
        bad.append("forced a33 = a22")
    if size >= 8 and a(4, 4) != -a(2, 2):
        bad.append("forced a44 = -a22")
    return bad


def verify_antidiagonal_relations(lab: GridLabeling) -> bool:
    if not lab.is_bdf():
        raise ValueError("labeling is not a BDF")
    return not antidiagonal_violations(lab)


def seed_configuration(lab: GridLabeling) -> tuple[int, ...]:
    """Labels on anti-diagonals D_1..D_3 as (a11, a12, a13, a21, a22, a31)."""
    a = lab.a
    return (a(1, 1), a(1, 2), a(1, 3), a(2, 1), a(2, 2), a(3, 1))


def gamma_bd_grid(m: int, n: int, max_rows: int = MAX_ROWS, workers: int = 1) -> GammaResult:
    labs = [g.to_labeling() for g in all_bdfs_by_propagation(m, n, max_rows, workers)]
    return summarize(labs, m * n, "propagation")


def nonzero_bdfs(labs: Iterable[GridLabeling]) -> list[GridLabeling]:
    return [g for g in labs if not g.is_zero()]

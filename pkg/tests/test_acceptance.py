"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible under ``pytest``
and when run as ``python3 tests/test_acceptance.py``) before asserting.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from baldom.generators import (
    CaterpillarSpec,
    TwoLevelTreeSpec,
    antiprism,
    caterpillar,
    grid,
    polytope_d,
    polytope_r2,
    two_level_tree,
)
from baldom.graph import is_bdf
from baldom.grids import (
    PATTERNS,
    all_bdfs_by_propagation,
    applicable_schemes,
    build_scheme,
    classify_all,
    gamma_bd_grid,
    verify_antidiagonal_relations,
)
from baldom.layers import certify_d_balanced, check_equitable, natural_partition
from baldom.solver import backtracking_bdfs, backtracking_oracle, enumerate_bdfs, gamma_bd
from baldom.trees import (
    caterpillar_labeling,
    caterpillar_mbdf_search,
    full_binary_sweep,
    two_level_verdict,
)

from oracles import random_tree

Q_A = ((3, 2, 0), (2, 3, 2), (0, 2, 3))
Q_D = ((3, 1, 0, 0), (1, 1, 2, 0), (0, 2, 1, 1), (0, 0, 1, 3))
Q_R = ((3, 1, 0, 0, 0, 0), (1, 1, 2, 0, 0, 0), (0, 2, 1, 1, 0, 0),
       (0, 0, 1, 1, 2, 0), (0, 0, 0, 2, 1, 1), (0, 0, 0, 0, 1, 3))


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, failures: list, detail: str = "") -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f"; first failures: {failures[:3]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def test_criterion_1_polytopes_d_balanced(report):
    failures, slowest = [], 0.0
    cases = ([(antiprism, n) for n in range(5, 11)] + [(polytope_d, n) for n in range(5, 9)]
             + [(polytope_r2, n) for n in range(5, 8)])
    for gen, n in cases:
        t0 = time.perf_counter()
        res = gamma_bd(gen(n))
        elapsed = time.perf_counter() - t0
        slowest = max(slowest, elapsed)
        if res.gamma != 0 or elapsed > 60:
            failures.append((gen.__name__, n, res.gamma, round(elapsed, 2)))
    report(1, "gamma_bd = 0 for A_n (5..10), D_n (5..8), R''_n (5..7)", failures,
           f"{len(cases)} instances, slowest {slowest:.3f}s")


def test_criterion_2_layer_certificates(report):
    failures, slowest = [], 0.0
    for gen, q in ((antiprism, Q_A), (polytope_d, Q_D), (polytope_r2, Q_R)):
        for n in range(5, 13):
            g = gen(n)
            t0 = time.perf_counter()
            p = natural_partition(g)
            quotient = check_equitable(g, p)
            cert = certify_d_balanced(g, p)
            elapsed = time.perf_counter() - t0
            slowest = max(slowest, elapsed)
            if quotient != q or cert is None or cert.determinant == 0 or elapsed >= 1:
                failures.append((gen.__name__, n))
    report(2, "layer certificates with the expected quotients, det != 0", failures,
           f"24 instances, slowest {slowest:.4f}s")


def test_criterion_3_grids_d_balanced(report):
    t0 = time.perf_counter()
    failures = [(m, n) for m in range(1, 9) for n in range(m, 9) if gamma_bd_grid(m, n).gamma != 0]
    elapsed = time.perf_counter() - t0
    if elapsed > 300:
        failures.append(f"sweep took {elapsed:.1f}s")
    report(3, "gamma_bd_grid(m, n) = 0 for 1 <= m <= n <= 8", failures, f"{elapsed:.2f}s")


def test_criterion_4_grid_classification(report):
    failures = []
    for m in range(1, 9):
        for n in range(m, 9):
            nonzero = [x for x in all_bdfs_by_propagation(m, n) if not x.is_zero()]
            failures += [(m, n, x.cells) for x in nonzero if not classify_all(x)]
            if nonzero and not applicable_schemes(m, n):
                failures.append((m, n, "non-zero BDF outside the congruence classes"))
            if applicable_schemes(m, n) and not nonzero:
                failures.append((m, n, "scheme applies but no BDF found"))
    four = {x.cells for x in all_bdfs_by_propagation(4, 4) if not x.is_zero()}
    printed = {tuple(tuple(s * v for v in row) for row in p) for p in PATTERNS.values()
               for s in (1, -1)}
    if four != printed or len(four) != 6:
        failures.append(("grid 4x4", len(four)))
    report(4, "every non-zero grid BDF (m, n <= 8) classified; grid(4,4) = ±P1, ±P2, ±P3",
           failures)


def _same(g, with_propagation: tuple[int, int] | None = None) -> bool:
    kernel_set = sorted(b.values for b in enumerate_bdfs(g))
    search_set = [b.values for b in backtracking_bdfs(g)]
    if kernel_set != search_set:
        return False
    if gamma_bd(g).gamma != backtracking_oracle(g).gamma:
        return False
    if with_propagation is not None:
        m, n = with_propagation
        prop = sorted(x.to_labeling().values for x in all_bdfs_by_propagation(m, n))
        if prop != kernel_set or gamma_bd_grid(m, n).gamma != gamma_bd(g).gamma:
            return False
    return True


def test_criterion_5_oracle_equivalence(report):
    rng = random.Random(20240601)
    failures = []
    for k in range(200):
        g = random_tree(rng.randint(1, 16), rng)
        if not _same(g):
            failures.append(("tree", k, g.edges))
    for m, n in itertools.product(range(1, 5), repeat=2):
        if not _same(grid(m, n), (m, n)):
            failures.append(("grid", m, n))
    cats = 0
    for spine in range(1, 5):
        for ls in itertools.product(range(4), repeat=spine):
            cats += 1
            if not _same(caterpillar(CaterpillarSpec.of(ls))):
                failures.append(("caterpillar", ls))
    report(5, "kernel solver, backtracking and propagation agree", failures,
           f"200 trees, 16 grids, {cats} caterpillars")


def test_criterion_6_two_level_characterization(report):
    failures, count = [], 0
    for n in range(2, 6):
        for ls in itertools.product(range(5), repeat=n):
            count += 1
            spec = TwoLevelTreeSpec.of(ls)
            verdict = two_level_verdict(spec)
            res = gamma_bd(two_level_tree(spec))
            if verdict.d_balanced != (res.gamma == 0):
                failures.append(ls)
            elif not verdict.d_balanced and res.gamma != n - 1:
                failures.append(ls)
    report(6, "two-level verdict <=> gamma_bd = 0, and gamma_bd = n - 1 otherwise", failures,
           f"{count} trees")


def test_criterion_7_full_binary_trees(report):
    rows = full_binary_sweep(15)
    failures = [r for r in rows if r["bdf_count"] != 1 or not r["root_zero"]
                or not r["recursive_zero"]]
    report(7, "full binary trees <= 15 vertices: only the zero BDF, root and internal zero",
           failures, f"{len(rows)} shapes")


def test_criterion_8_caterpillar_condition(report):
    failures, count = [], 0
    for n in range(2, 10):
        for r in caterpillar_mbdf_search(n):
            count += 1
            lab = caterpillar_labeling(r.spine_labels, r.leaf_counts)
            if not r.satisfies_mod4() or r.pair_type_counts[2] % 2:
                failures.append(r.spine_labels)
            elif not is_bdf(caterpillar(r.spec), lab):
                failures.append(("not a BDF", r.spine_labels))
    report(8, "caterpillar MBDFs satisfy L = 3n - 2 (mod 4) with even r", failures,
           f"{count} MBDFs, n = 2..9")


def test_criterion_9_antidiagonal_relations(report):
    failures, count = [], 0
    for m in range(8, 15):
        for n in range(m, 15):
            for s in applicable_schemes(m, n):
                count += 1
                if not verify_antidiagonal_relations(build_scheme(s, n)):
                    failures.append((m, n, s.name))
    report(9, "anti-diagonal relations on scheme BDFs, 8 <= m <= n <= 14", failures,
           f"{count} scheme labelings")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

from __future__ import annotations

import itertools

import pytest

from baldom.generators import (
    LEAF,
    CaterpillarSpec,
    TwoLevelTreeSpec,
    caterpillar,
    enumerate_full_binary_shapes,
    full_binary_tree,
    two_level_tree,
)
from baldom.graph import Labeling, is_bdf
from baldom.solver import backtracking_oracle, enumerate_bdfs, gamma_bd
from baldom.trees import (
    caterpillar_gamma,
    caterpillar_labeling,
    caterpillar_mbdf_search,
    full_binary_d_balanced,
    full_binary_recursive_zero,
    full_binary_root_zero,
    full_binary_sweep,
    two_level_verdict,
)

from oracles import brute_force_bdfs, brute_force_gamma


def test_two_level_examples():
    v = two_level_verdict(TwoLevelTreeSpec.of([2, 0, 0]))
    assert (v.d_balanced, v.l_count, v.gamma_formula) == (False, 1, 2)
    assert brute_force_gamma(two_level_tree(TwoLevelTreeSpec.of([2, 0, 0]))) == 2
    assert two_level_verdict(TwoLevelTreeSpec.of([1, 0, 0])).d_balanced
    assert two_level_verdict(TwoLevelTreeSpec.of([2, 2, 0, 0])).d_balanced
    assert not two_level_verdict(TwoLevelTreeSpec.of([2, 2, 0, 0, 0])).d_balanced


@pytest.mark.parametrize("n", [2, 3, 4])
def test_two_level_sweep_against_brute_force(n):
    for ls in itertools.product(range(3), repeat=n):
        spec = TwoLevelTreeSpec.of(ls)
        g = two_level_tree(spec)
        if g.n_vertices > 11:
            continue
        v = two_level_verdict(spec)
        truth = brute_force_gamma(g)
        assert v.d_balanced == (truth == 0), ls
        assert v.gamma_formula == truth, ls


def test_full_binary_small_examples():
    k1 = full_binary_tree(LEAF)
    assert full_binary_root_zero(k1, Labeling((0,)))
    cherry = full_binary_tree((LEAF, LEAF))
    assert full_binary_root_zero(cherry, Labeling((0, 0, 0)))
    with pytest.raises(ValueError):
        full_binary_root_zero(cherry, Labeling((1, 0, 0)))
    assert full_binary_d_balanced(LEAF) and full_binary_d_balanced((LEAF, LEAF))
    assert brute_force_bdfs(cherry) == [(0, 0, 0)]
    seven = [s for s in enumerate_full_binary_shapes(7) if len(full_binary_tree(s).edges) == 6]
    # 5 ordered shapes (Catalan number C_3), 2 up to mirror symmetry
    assert len(seven) == 5
    for s in seven:
        assert brute_force_bdfs(full_binary_tree(s)) == [(0,) * 7]


def test_full_binary_sweep_to_15():
    rows = full_binary_sweep(15)
    assert len(rows) == 1 + 1 + 2 + 5 + 14 + 42 + 132 + 429
    assert all(r["bdf_count"] == 1 and r["root_zero"] and r["recursive_zero"] for r in rows)


def test_recursive_zero_detects_nonzero_internal():
    shape = ((LEAF, LEAF), LEAF)
    assert not full_binary_recursive_zero(shape, Labeling((0, 1, 0, 0, 0)))
    assert full_binary_recursive_zero(shape, Labeling((0, 0, 0, 1, 0)))


def test_caterpillar_examples():
    by_spine = {a.spine_labels: a for a in caterpillar_mbdf_search(2)}
    a = by_spine[(1, 1)]
    assert a.leaf_counts == (2, 2) and a.total_leaves == 4 and a.weight == -2
    b = by_spine[(1, -1)]
    assert b.leaf_counts == (0, 0) and b.total_leaves == 0 and b.weight == 0
    assert is_bdf(caterpillar(b.spec), caterpillar_labeling(b.spine_labels, b.leaf_counts))
    assert all(a.satisfies_mod4() for a in caterpillar_mbdf_search(6))
    with pytest.raises(ValueError):
        caterpillar_mbdf_search(1)


def test_caterpillar_gamma_examples():
    assert caterpillar_gamma(CaterpillarSpec.of([2, 2])).gamma == 2
    assert caterpillar_gamma(CaterpillarSpec.of([1, 1])).gamma == 0
    spec = CaterpillarSpec.of([2, 3, 0, 2, 4])
    res = caterpillar_gamma(spec)
    assert res.gamma == backtracking_oracle(caterpillar(spec)).gamma


@pytest.mark.parametrize("n", range(2, 10))
def test_caterpillar_search_invariants(n):
    results = caterpillar_mbdf_search(n)
    assert results and [r.spine_labels for r in results] == sorted(r.spine_labels for r in results)
    for r in results:
        p, q, rr = r.pair_type_counts
        assert p + q + rr == n - 1 and rr % 2 == 0
        assert r.pair_sum == p - q
        assert r.total_leaves == n + 2 * r.pair_sum
        assert r.satisfies_mod4()
        g = caterpillar(r.spec)
        lab = caterpillar_labeling(r.spine_labels, r.leaf_counts)
        assert is_bdf(g, lab) and lab.weight == r.weight
        assert r.weight == sum(r.spine_labels) - sum(l * x for l, x in zip(r.leaf_counts,
                                                                            r.spine_labels))


@pytest.mark.parametrize("n", range(2, 6))
def test_caterpillar_search_is_complete(n):
    """Every non-zero BDF with nonzero spine where l_i != 1 appears in the search output."""
    found = {r.spine_labels for r in caterpillar_mbdf_search(n)}
    for ls in itertools.product(range(3), repeat=n):
        spec = CaterpillarSpec.of(ls)
        g = caterpillar(spec)
        for b in enumerate_bdfs(g):
            spine = b.values[:n]
            if b.is_zero() or any(x == 0 and l != 1 for x, l in zip(spine, ls)):
                continue
            if spine[0] == 0 or spine[-1] == 0:
                continue
            if any(spine[i] == spine[i + 1] == 0 for i in range(n - 1)):
                continue
            # MBDF: leaves carry minus their spine label
            if b != caterpillar_labeling(spine, ls):
                continue
            assert spine in found, (ls, spine)


def test_solver_and_oracle_agree_on_small_caterpillars():
    for n in range(1, 4):
        for ls in itertools.product(range(3), repeat=n):
            g = caterpillar(CaterpillarSpec.of(ls))
            assert gamma_bd(g).gamma == backtracking_oracle(g).gamma

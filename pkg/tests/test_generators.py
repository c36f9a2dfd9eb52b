from __future__ import annotations

import re

import pytest

from baldom.generators import (
    LEAF,
    CaterpillarSpec,
    TwoLevelTreeSpec,
    antiprism,
    caterpillar,
    enumerate_full_binary_shapes,
    full_binary_internal_vertices,
    full_binary_tree,
    grid,
    perfect_shape,
    polytope_d,
    polytope_r2,
    two_level_tree,
)

# Edge templates written as vertex-name pairs; parsed independently of the generators.
TEMPLATES = {
    antiprism: (3, "a_i a_{i+1}, b_i b_{i+1}, c_i c_{i+1}, a_i b_i, b_i c_i, a_{i+1} b_i, b_{i+1} c_i"),
    polytope_d: (4, "a_i a_{i+1}, d_i d_{i+1}, a_i b_i, b_i c_i, b_{i+1} c_i, c_i d_i"),
    polytope_r2: (6, "a_i a_{i+1}, f_i f_{i+1}, a_i b_i, b_i c_i, c_i d_i, d_i e_i, e_i f_i, "
                     "b_{i+1} c_i, d_i e_{i+1}"),
}
TOKEN = re.compile(r"([a-f])_(?:i|\{i\+(\d)\})")


def expected_edges(n: int, n_layers: int, text: str) -> set[tuple[int, int]]:
    out = set()
    for pair in text.split(","):
        (lu, su), (lv, sv) = TOKEN.findall(pair)
        for i in range(n):
            u = (ord(lu) - ord("a")) * n + (i + int(su or 0)) % n
            v = (ord(lv) - ord("a")) * n + (i + int(sv or 0)) % n
            out.add((min(u, v), max(u, v)))
    return out


@pytest.mark.parametrize("gen", list(TEMPLATES), ids=lambda f: f.__name__)
@pytest.mark.parametrize("n", range(5, 13))
def test_polytope_template_audit(gen, n):
    layers, text = TEMPLATES[gen]
    g = gen(n)
    edges = expected_edges(n, layers, text)
    assert g.n_vertices == layers * n
    assert set(g.edges) == edges
    assert g.n_edges == len(edges) == len(text.split(",")) * n
    assert g.is_connected()


@pytest.mark.parametrize("gen", list(TEMPLATES), ids=lambda f: f.__name__)
def test_polytopes_reject_small_n(gen):
    with pytest.raises(ValueError):
        gen(4)


def test_polytope_counts_and_degrees():
    assert (antiprism(5).n_vertices, antiprism(5).n_edges) == (15, 35)
    assert (antiprism(6).n_vertices, antiprism(6).n_edges) == (18, 42)
    # a- and c-vertices have degree 4, b-vertices degree 6
    assert [antiprism(5).degree(v) for v in (0, 5, 10)] == [4, 6, 4]
    assert sorted({antiprism(8).degree(v) for v in range(24)}) == [4, 6]
    assert (polytope_d(5).n_vertices, polytope_d(5).n_edges) == (20, 30)
    assert (polytope_d(7).n_vertices, polytope_d(7).n_edges) == (28, 42)
    # every layer of D_n is 3-regular (b_i meets a_i, c_i, c_{i-1})
    assert {polytope_d(7).degree(v) for v in range(28)} == {3}
    assert (polytope_r2(5).n_vertices, polytope_r2(5).n_edges) == (30, 45)
    assert (polytope_r2(6).n_vertices, polytope_r2(6).n_edges) == (36, 54)


def test_generators_are_deterministic():
    assert antiprism(9) == antiprism(9)
    assert antiprism(9).edges == antiprism(9).edges
    assert grid(3, 4).to_json() == grid(3, 4).to_json()


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 3), (4, 4), (3, 7)])
def test_grid_shape(m, n):
    g = grid(m, n)
    assert g.n_vertices == m * n
    assert g.n_edges == m * (n - 1) + n * (m - 1)
    for i, j in g.edges:
        ri, ci, rj, cj = i // n, i % n, j // n, j % n
        assert abs(ri - rj) + abs(ci - cj) == 1


def test_caterpillar_layout():
    g = caterpillar(CaterpillarSpec.of([2, 3, 0, 2, 4]))
    assert g.n_vertices == 16 and g.n_edges == 15 and g.is_connected()
    assert [g.degree(v) for v in range(5)] == [3, 5, 2, 4, 5]
    assert caterpillar(CaterpillarSpec.of([0])).n_vertices == 1
    double_star = caterpillar(CaterpillarSpec.of([2, 2]))
    assert double_star.n_vertices == 6 and double_star.adjacency[0] == (1, 2, 3)


def test_two_level_tree_layout():
    g = two_level_tree(TwoLevelTreeSpec.of([2, 0, 0]))
    assert g.n_vertices == 6 and g.adjacency[0] == (1, 2, 3)
    assert g.adjacency[1] == (0, 4, 5)
    assert two_level_tree(TwoLevelTreeSpec.of([1, 1])).n_vertices == 5
    assert two_level_tree(TwoLevelTreeSpec.of([2, 2, 0, 0, 0])).n_vertices == 10
    with pytest.raises(ValueError):
        TwoLevelTreeSpec.of([3])
    with pytest.raises(ValueError):
        TwoLevelTreeSpec.of([1, -1])


def test_full_binary_trees():
    assert full_binary_tree(LEAF).n_vertices == 1
    assert perfect_shape(0) == LEAF
    cherry = full_binary_tree((LEAF, LEAF))
    assert cherry.adjacency[0] == (1, 2)
    perfect = full_binary_tree(perfect_shape(3))
    assert perfect.n_vertices == 15
    assert sum(1 for v in range(15) if perfect.degree(v) == 1) == 8
    assert full_binary_internal_vertices(perfect_shape(3)) == list(range(7))
    with pytest.raises(ValueError):
        full_binary_tree((LEAF,))


def test_full_binary_shape_counts_are_catalan():
    shapes = enumerate_full_binary_shapes(15)
    sizes = [full_binary_tree(s).n_vertices for s in shapes]
    assert [sizes.count(k) for k in range(1, 16, 2)] == [1, 1, 2, 5, 14, 42, 132, 429]
    for s in shapes:
        g = full_binary_tree(s)
        assert g.n_edges == g.n_vertices - 1 and g.is_connected()
        assert all(g.degree(v) in (1, 3) for v in range(1, g.n_vertices))

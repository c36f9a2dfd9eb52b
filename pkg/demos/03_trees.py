"""
Trees: two-level trees, full binary trees and caterpillars
==========================================================
"""

# %%
import itertools

from baldom import CaterpillarSpec, TwoLevelTreeSpec, caterpillar, gamma_bd, two_level_tree
from baldom.trees import caterpillar_mbdf_search, full_binary_sweep, two_level_verdict

# %% A root with children carrying l_1..l_n leaves.  The closed-form verdict
# agrees with the exact solver on every tree with three children and l_i <= 3.
for ls in itertools.product(range(4), repeat=3):
    spec = TwoLevelTreeSpec.of(ls)
    v = two_level_verdict(spec)
    res = gamma_bd(two_level_tree(spec))
    assert v.gamma_formula == res.gamma
    if not v.d_balanced:
        print(ls, "-> gamma_bd =", res.gamma)

# %% Every full binary tree up to 15 vertices has only the zero BDF.
rows = full_binary_sweep(15)
print(len(rows), "shapes, all d-balanced:", all(r["bdf_count"] == 1 for r in rows))

# %% Caterpillars with a non-zero modified BDF: total leaf count L always
# satisfies L = 3n - 2 (mod 4).
for n in range(2, 6):
    found = caterpillar_mbdf_search(n)
    totals = sorted({a.total_leaves for a in found})
    print(f"n={n}: {len(found)} MBDFs, L in {totals}, 3n-2 mod 4 = {(3 * n - 2) % 4}")

# %% The double star with two leaves per spine vertex is not d-balanced.
print(gamma_bd(caterpillar(CaterpillarSpec.of([2, 2]))).to_dict())

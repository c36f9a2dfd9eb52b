"""
Balanced domination on three convex polytope families
======================================================

Compute the exact balanced domination number of the antiprism-like
polytope A_n and of the families D_n and R''_n, and look at the kernels
that make a few sizes interesting.
"""

# %%
from baldom import antiprism, gamma_bd, kernel, polytope_d, polytope_r2

# %% A balanced dominating function is a vector of ker(A + I) with entries
# in {-1, 0, 1}.  Most sizes have a trivial kernel, so zero is the only one.
for gen, sizes in ((antiprism, range(5, 11)), (polytope_d, range(5, 9)),
                   (polytope_r2, range(5, 8))):
    for n in sizes:
        res = gamma_bd(gen(n))
        print(f"{gen.__name__:12s} n={n:2d}  nullity={res.nullity}  "
              f"BDFs={res.bdf_count}  gamma_bd={res.gamma}")

# %% A_6 has a two-dimensional kernel.  Its non-zero BDFs all have weight 0.
g = antiprism(6)
kd = kernel(g)
print("free coordinates:", kd.free_cols)
for vec in kd.basis():
    print([str(x) for x in vec])

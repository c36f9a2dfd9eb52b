"""
Layer-sum certificates
======================

Summing the balance conditions over each layer of an equitable partition
gives a small integer system.  When its matrix is nonsingular every BDF
has zero total weight, for every n at once.
"""

# %%
from baldom import antiprism, certify_d_balanced, enumerate_bdfs, grid, natural_partition
from baldom.generators import polytope_r2
from baldom.layers import LayerPartition, certificate_report, layer_sums

# %% The three-layer quotient of A_n does not depend on n.
for n in (5, 8, 12):
    g = antiprism(n)
    cert = certify_d_balanced(g, natural_partition(g))
    print(n, cert.quotient, "det =", cert.determinant)

# %% R''_6 has non-zero BDFs, yet every one of them has all six layer sums zero.
g = polytope_r2(6)
p = natural_partition(g)
for b in enumerate_bdfs(g):
    print(b.values[:6], "...", layer_sums(p, b))

# %% Rows of a grid are not an equitable partition: corner and middle
# vertices see different numbers of neighbours in the next row.
print(certificate_report(grid(3, 3), LayerPartition.of([[0, 1, 2], [3, 4, 5], [6, 7, 8]])))

"""
Grid graphs
===========

A BDF on a grid is fixed by its first column, so all of them can be listed
by propagating each of the 3^m possible columns.  Every non-zero one is a
stack of one repeated block separated by zero rows.
"""

# %%
import numpy as np

from baldom.grids import (
    all_bdfs_by_propagation,
    applicable_schemes,
    build_scheme,
    classify_all,
    verify_antidiagonal_relations,
)

# %% The six non-zero BDFs of the 4 x 4 grid.
for x in all_bdfs_by_propagation(4, 4):
    if not x.is_zero():
        print(classify_all(x)[0].name)
        print(x.to_text())

# %% Which grid sizes carry non-zero BDFs?
table = np.zeros((8, 8), dtype=int)
for m in range(1, 9):
    for n in range(1, 9):
        table[m - 1, n - 1] = sum(not x.is_zero() for x in all_bdfs_by_propagation(m, n))
print(table)

# %% Build a Type 1 labeling on a larger grid and audit the anti-diagonal identities.
scheme = next(s for s in applicable_schemes(9, 11) if s.name == "Type1_1")
x = build_scheme(scheme, 11)
print(scheme.row_layout, "weight", x.weight, "relations hold:", verify_antidiagonal_relations(x))
print(x.to_text())

"""
Counting moduli
===============

The graded automorphism group G(w) sends z_i to any polynomial of weighted
degree w_i.  Subtracting its dimension from dim S^d(w) gives the number of
effective parameters of the family of hypersurfaces.
"""

from weighted_links import dim_autgroup, make_weights, moduli_dim

for values, d in [((1, 2, 3, 5), 10), ((1, 3, 5, 7), 15), ((1, 1, 1, 1), 3)]:
    w = make_weights(values)
    g = dim_autgroup(w)
    m = moduli_dim(w, d)
    print(f"G{w}: per coordinate {g.per_coordinate}, dim {g.total}")
    print(f"    dim S^{d} = {m.dim_Sd}, moduli dimension = {m.dim_moduli}")

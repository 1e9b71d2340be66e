"""
Monomial bases of weighted graded pieces
=========================================

The graded piece S^d(w) of C[z0, z1, z2, z3] is spanned by the monomials of
weighted degree d.  We list the bases for the two anticanonical log del
Pezzo surfaces of degree 10 in P(1,2,3,5) and degree 15 in P(1,3,5,7).
"""

from weighted_links import enumerate_monomials, fano_index, make_weights
from weighted_links.wps import monomial_str

for values, d in [((1, 2, 3, 5), 10), ((1, 3, 5, 7), 15)]:
    w = make_weights(values)
    basis = enumerate_monomials(w, d)
    print(f"S^{d}{w}: dimension {len(basis)}, Fano index {fano_index(w, d)}")
    print("   ", ", ".join(monomial_str(m) for m in basis))

# Degree 0 always has the constant monomial, and a degree smaller than every
# weight has nothing at all.
print(enumerate_monomials(make_weights((2, 3, 5, 7)), 0).monomials)
print(enumerate_monomials(make_weights((2, 3, 5, 7)), 1).monomials)

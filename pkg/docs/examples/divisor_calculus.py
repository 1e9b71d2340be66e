"""
Alexander polynomial divisors
=============================

Write L(i) for the divisor of t^i - 1.  These multiply by
L(a) L(b) = gcd(a, b) L(lcm(a, b)), and the divisor of the Alexander
polynomial of a weighted homogeneous link is a product of one factor per
coordinate.
"""

from fractions import Fraction

from weighted_links import betti2, cyclotomic_expand, degree, lam, make_weights, milnor_orlik_divisor
from weighted_links.divisor import ONE, alexander_degree

# The degree-15 link in P(1,3,5,7), by hand and by the library.
by_hand = (lam(15) - ONE) * (Fraction(1, 7) * lam(15) - ONE) * (lam(5) - ONE) * (lam(3) - ONE)
div = milnor_orlik_divisor(make_weights((1, 3, 5, 7)), 15)
print("Div Delta =", div, "| matches hand product:", div == by_hand)
print("degree =", degree(div), " b2 =", betti2(div))

# Delta(t) itself is a product of cyclotomic polynomials Phi_j ** m_j.
mults = cyclotomic_expand(div)
print("multiplicities:", mults, " deg Delta =", alexander_degree(mults))

# The degree-10 case works the same way.
div10 = milnor_orlik_divisor(make_weights((1, 2, 3, 5)), 10)
print("Div Delta_10 =", div10, " b2 =", betti2(div10))

"""Topology and moduli of links of weighted homogeneous surface singularities.

For weights ``w = (w0, w1, w2, w3)`` and degree ``d`` the link of a
quasi-smooth weighted homogeneous polynomial in ``C^4`` is a 5-manifold.
This package computes, in exact arithmetic, its Milnor number, the divisor
of its Alexander polynomial, its second Betti number and Smale type, along
with monomial bases and moduli counts for the corresponding log del Pezzo
surface in ``P(w)``.
"""

from .exact import DomainError, gcd, lcm, reduce_fraction
from .wps import (
    MonomialBasis,
    NonIntegralMilnorNumber,
    Weights,
    WeightsError,
    dim_weighted_space,
    enumerate_monomials,
    fano_index,
    is_well_formed_space,
    make_weights,
    milnor_number,
)
from .divisor import (
    CyclotomicDivisor,
    InconsistentDivisor,
    NonIntegralDivisor,
    betti2,
    cyclotomic_expand,
    degree,
    lam,
    milnor_orlik_divisor,
)
from .moduli import AutGroupDim, ModuliDim, dim_autgroup, moduli_dim
from .classify import DiffeoType, LinkReport, ScanQuery, analyze, scan
from .golden import GoldenCase, load_golden_corpus

__version__ = "0.1.0"

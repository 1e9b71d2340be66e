"""Parameter counts for graded automorphisms and hypersurface moduli.

An automorphism of the graded ring ``C[z0, z1, z2, z3]`` sends each ``z_i``
to an arbitrary weighted homogeneous polynomial of degree ``w_i``, so the
group ``G(w)`` has dimension ``sum_i dim S^{w_i}(w)``.  The moduli count of
degree-``d`` hypersurfaces is ``dim S^d(w) - dim G(w)``, assuming generic
members are quasi-smooth and have finite stabilizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .wps import Weights, dim_weighted_space


@dataclass(frozen=True)
class AutGroupDim:
    per_coordinate: Tuple[int, int, int, int]
    total: int


@dataclass(frozen=True)
class ModuliDim:
    dim_Sd: int
    dim_G: int
    dim_moduli: int


def dim_autgroup(w: Weights) -> AutGroupDim:
    per = tuple(dim_weighted_space(w, wi) for wi in w)
    return AutGroupDim(per, sum(per))


def moduli_dim(w: Weights, d: int) -> ModuliDim:
    """Both counts are taken before projectivizing; the difference is the same."""
    dim_S = dim_weighted_space(w, d)
    dim_G = dim_autgroup(w).total
    return ModuliDim(dim_S, dim_G, dim_S - dim_G)

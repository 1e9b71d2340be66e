"""Assemble the invariants of one link and name its diffeomorphism type.

A link of a weighted homogeneous hypersurface in ``C^4`` is a simply
connected 5-manifold.  When it is additionally spin with torsion-free
``H_2``, Smale's classification identifies it as ``S^5`` or
``k#(S^2 x S^3)`` with ``k = b_2``.  Simple connectivity and spin are taken
as known results and recorded, not computed.  Torsion-freeness is inferred
from well-formedness of the ambient weighted projective space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from functools import reduce
import math
from typing import Dict, FrozenSet, Iterator, List, Optional, Union

from . import divisor as dv
from .divisor import CyclotomicDivisor
from .moduli import moduli_dim
from .wps import (
    Weights,
    fano_index,
    is_well_formed_space,
    milnor_number_exact,
)

NOT_WELL_FORMED = "ambient space not well-formed"
NON_INTEGRAL_MU = "non-integral Milnor number"
NON_INTEGRAL_DIVISOR = "non-integral divisor"
NEGATIVE_B2 = "inconsistent divisor (negative coefficient sum)"
NEGATIVE_MULTIPLICITY = "negative cyclotomic multiplicity"

ASSUME_SIMPLY_CONNECTED = (
    "assumed: simply connected (links of isolated hypersurface singularities "
    "in C^4 are 1-connected); not computed"
)
ASSUME_SPIN = "assumed: spin (known for Sasaki-Einstein links); not computed"
TORSION_FROM_WELL_FORMED = (
    "H2 torsion-free inferred from well-formed ambient space (cited criterion); not computed"
)
Z15_NOTE = (
    "moduli count taken on the open locus where the z1*z2*z3 coefficient is "
    "nonzero; dimension unchanged"
)


@dataclass(frozen=True)
class DiffeoType:
    """``S5``, ``k#(S2xS3)`` or unclassified with a reason."""

    kind: str  # "sphere", "connected_sum" or "unclassified"
    k: int = 0
    reason: str = ""

    @classmethod
    def sphere(cls):
        return cls("sphere")

    @classmethod
    def connected_sum(cls, k: int):
        if k < 1:
            raise ValueError("connected sum needs k >= 1")
        return cls("connected_sum", k=k)

    @classmethod
    def unclassified(cls, reason: str):
        return cls("unclassified", reason=reason)

    @property
    def classified(self) -> bool:
        return self.kind != "unclassified"

    def __str__(self):
        if self.kind == "sphere":
            return "S5"
        if self.kind == "connected_sum":
            return f"{self.k}#(S2xS3)"
        return f"unclassified: {self.reason}"


@dataclass(frozen=True)
class LinkReport:
    weights: Weights
    degree: int
    fano_index: int
    well_formed: bool
    milnor_number: Union[int, Fraction]
    divisor: CyclotomicDivisor
    multiplicities: Optional[Dict[int, int]]
    betti2: Optional[int]
    dim_Sd: int
    dim_G: int
    dim_moduli: int
    diffeo_type: DiffeoType
    diagnostics: List[str] = field(default_factory=list)

    @property
    def milnor_integral(self) -> bool:
        return not isinstance(self.milnor_number, Fraction)

    @property
    def computation_failed(self) -> bool:
        """True for non-integral Milnor number or divisor."""
        return not self.milnor_integral or not self.divisor.is_integral()


def analyze(w: Weights, d: int) -> LinkReport:
    """Compute every invariant of the degree-``d`` link with weights ``w``.

    The diffeomorphism type is only named when all gates pass, checked in
    order: well-formed ambient space, integral Milnor number, integral
    divisor with non-negative coefficient sum, non-negative cyclotomic
    multiplicities.  Otherwise it is unclassified with the first failure.
    """
    well_formed = is_well_formed_space(w)
    mu_exact = milnor_number_exact(w, d)
    mu: Union[int, Fraction] = mu_exact.numerator if mu_exact.denominator == 1 else mu_exact
    div = dv.milnor_orlik_divisor(w, d)
    md = moduli_dim(w, d)

    failures = []
    diagnostics = []
    if not well_formed:
        failures.append(NOT_WELL_FORMED)
    if mu_exact.denominator != 1:
        failures.append(NON_INTEGRAL_MU)
        diagnostics.append(f"Milnor number {mu_exact.numerator}/{mu_exact.denominator} is not an integer")

    b2 = mults = None
    if not div.is_integral():
        failures.append(NON_INTEGRAL_DIVISOR)
        diagnostics.append(f"divisor {div} has non-integral coefficients")
    else:
        mults = dv.cyclotomic_expand(div)
        try:
            b2 = dv.betti2(div)
        except dv.InconsistentDivisor as exc:
            failures.append(NEGATIVE_B2)
            diagnostics.append(str(exc))
        negative = [j for j, m in mults.items() if m < 0]
        if negative:
            failures.append(NEGATIVE_MULTIPLICITY)
            diagnostics.append(f"negative multiplicity for Phi_j, j in {negative}")

    if failures:
        diffeo = DiffeoType.unclassified(failures[0])
    elif b2 == 0:
        diffeo = DiffeoType.sphere()
    else:
        diffeo = DiffeoType.connected_sum(b2)

    diagnostics += [ASSUME_SIMPLY_CONNECTED, ASSUME_SPIN]
    if well_formed:
        diagnostics.append(TORSION_FROM_WELL_FORMED)
    if md.dim_moduli < 0:
        diagnostics.append(f"negative moduli dimension {md.dim_moduli}")
    if tuple(sorted(w)) == (1, 3, 5, 7) and d == 15:
        diagnostics.append(Z15_NOTE)

    return LinkReport(
        weights=w,
        degree=d,
        fano_index=fano_index(w, d),
        well_formed=well_formed,
        milnor_number=mu,
        divisor=div,
        multiplicities=mults,
        betti2=b2,
        dim_Sd=md.dim_Sd,
        dim_G=md.dim_G,
        dim_moduli=md.dim_moduli,
        diffeo_type=diffeo,
        diagnostics=diagnostics,
    )


@dataclass(frozen=True)
class ScanQuery:
    max_weight: int
    fano_indices: FrozenSet[int] = frozenset({1})
    filter_b2: Optional[int] = None
    require_well_formed: bool = True

    def __post_init__(self):
        if self.max_weight < 1:
            raise ValueError(f"max_weight must be >= 1, got {self.max_weight}")
        object.__setattr__(self, "fano_indices", frozenset(self.fano_indices))
        if not self.fano_indices:
            raise ValueError("fano_indices must be non-empty")


def iter_weights(max_weight: int) -> Iterator[Weights]:
    """Reduced ascending 4-tuples with entries in ``1..max_weight``."""
    for values in combinations_with_replacement(range(1, max_weight + 1), 4):
        if reduce(math.gcd, values) == 1:
            yield Weights(values)


def scan(q: ScanQuery) -> List[LinkReport]:
    """Analyze every ascending reduced weight tuple up to ``q.max_weight``.

    Output is ordered by ``(w0, w1, w2, w3, d)``.
    """
    reports = []
    for w in iter_weights(q.max_weight):
        if q.require_well_formed and not is_well_formed_space(w):
            continue
        for d in sorted({w.total - i for i in q.fano_indices}):
            if d < 1:
                continue
            r = analyze(w, d)
            if q.filter_b2 is not None and r.betti2 != q.filter_b2:
                continue
            reports.append(r)
    return reports

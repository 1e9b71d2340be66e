"""Weight vectors, weighted projective spaces and their graded pieces.

Everything here is for four variables ``z0, z1, z2, z3`` with a
``C*``-action of positive integer weights.  A monomial is stored as its
exponent vector ``(a0, a1, a2, a3)``; its weighted degree is
``sum(a_i * w_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
import math
from typing import Iterable, Iterator, Sequence, Tuple

from .exact import DomainError, format_rational

ARITY = 4

ExponentVector = Tuple[int, int, int, int]


class WeightsError(DomainError):
    """Invalid weight vector."""


class NonIntegralMilnorNumber(ArithmeticError):
    """The Milnor number product is not an integer.

    The exact value is kept on ``value`` so callers can report it.
    """

    def __init__(self, value: Fraction):
        self.value = Fraction(value)
        super().__init__(f"non-integral Milnor number {format_rational(self.value)}")


@dataclass(frozen=True)
class Weights:
    """Reduced weight vector ``(w0, w1, w2, w3)`` in the order given."""

    values: Tuple[int, int, int, int]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != ARITY:
            raise WeightsError(f"expected {ARITY} weights, got {len(values)}")
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise WeightsError(f"weights must be integers, got {v!r}")
            if v < 1:
                raise WeightsError(f"weights must be positive, got {v}")
        g = reduce(math.gcd, values)
        if g != 1:
            raise WeightsError(f"weights not reduced (common factor {g})")
        object.__setattr__(self, "values", values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return ARITY

    @property
    def total(self) -> int:
        """``|w| = w0 + w1 + w2 + w3``."""
        return sum(self.values)

    def sorted(self) -> "Weights":
        return Weights(tuple(sorted(self.values)))

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def make_weights(values: Iterable[int]) -> Weights:
    """Build a :class:`Weights`; raises :class:`WeightsError` if invalid."""
    return Weights(tuple(values))


def is_well_formed_space(w: Weights) -> bool:
    """Whether ``P(w)`` is well formed: every three weights are coprime."""
    return all(reduce(math.gcd, triple) == 1 for triple in combinations(w, 3))


def weighted_degree(w: Sequence[int], a: Sequence[int]) -> int:
    return sum(ai * wi for ai, wi in zip(a, w))


@dataclass(frozen=True)
class MonomialBasis:
    """All monomials of weighted degree ``degree``, in canonical order.

    The canonical order is descending lexicographic on the exponent vector,
    so ``z0**degree`` (when present) comes first.
    """

    weights: Weights
    degree: int
    monomials: Tuple[ExponentVector, ...]

    def __len__(self):
        return len(self.monomials)

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(self.monomials)

    def __contains__(self, a):
        return tuple(a) in set(self.monomials)


def _solutions(w: Sequence[int], d: int) -> Iterator[ExponentVector]:
    w0, w1, w2, w3 = w
    for a3 in range(d // w3 + 1):
        r3 = d - a3 * w3
        for a2 in range(r3 // w2 + 1):
            r2 = r3 - a2 * w2
            for a1 in range(r2 // w1 + 1):
                r1 = r2 - a1 * w1
                if r1 % w0 == 0:
                    yield (r1 // w0, a1, a2, a3)


def enumerate_monomials(w: Weights, d: int) -> MonomialBasis:
    """Basis of ``S^d(w)``: every exponent vector of weighted degree ``d``."""
    if d < 0:
        raise DomainError(f"degree must be non-negative, got {d}")
    monomials = tuple(sorted(_solutions(w, d), reverse=True))
    return MonomialBasis(w, d, monomials)


def dim_weighted_space(w: Weights, d: int) -> int:
    """``dim S^d(w)``, the number of monomials of weighted degree ``d``."""
    if d < 0:
        raise DomainError(f"degree must be non-negative, got {d}")
    return sum(1 for _ in _solutions(w, d))


def fano_index(w: Weights, d: int) -> int:
    """``I = |w| - d``; ``I == 1`` is the anticanonical case."""
    return w.total - d


def milnor_number_exact(w: Weights, d: int) -> Fraction:
    """The exact rational ``prod(d/w_i - 1)``, integral or not."""
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    return math.prod((Fraction(d, wi) - 1 for wi in w), start=Fraction(1))


def milnor_number(w: Weights, d: int) -> int:
    """Milnor number of a quasi-smooth hypersurface of degree ``d`` in ``C^4``.

    Raises :class:`NonIntegralMilnorNumber` when the product is not an
    integer, in which case no quasi-smooth member with these data exists.
    """
    mu = milnor_number_exact(w, d)
    if mu.denominator != 1:
        raise NonIntegralMilnorNumber(mu)
    return mu.numerator


def monomial_str(a: Sequence[int]) -> str:
    """Human form, e.g. ``(0, 1, 1, 1) -> 'z1*z2*z3'``."""
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"z{i}")
        elif e > 1:
            parts.append(f"z{i}^{e}")
    return "*".join(parts) or "1"

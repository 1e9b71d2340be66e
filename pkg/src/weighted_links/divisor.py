"""Divisor calculus in the group ring of ``C*``.

``Lambda(i)`` denotes the divisor of ``t**i - 1``, i.e. the formal sum of all
``i``-th roots of unity.  These elements multiply by

    Lambda(a) * Lambda(b) = gcd(a, b) * Lambda(lcm(a, b)),

so ``Lambda(1)`` is the identity.  A :class:`CyclotomicDivisor` is a finite
rational combination of them; the Alexander polynomial of a weighted
homogeneous link is recovered from one via :func:`milnor_orlik_divisor`.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
import math
from typing import Dict, Iterable, Mapping, Tuple

from .exact import DomainError, format_rational, reduce_fraction
from .wps import Weights


class NonIntegralDivisor(ArithmeticError):
    """A divisor with a non-integral coefficient was used where integrality is required."""


class InconsistentDivisor(ArithmeticError):
    """The divisor cannot come from a genuine link (e.g. negative Betti number)."""


class CyclotomicDivisor:
    """Immutable sparse combination ``sum(c_i * Lambda(i))``.

    Zero coefficients are never stored.  Supports ``+``, ``-``, ``*`` (with
    another divisor or a rational scalar) and equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable[Tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, Fraction] = defaultdict(Fraction)
        for i, c in items:
            if isinstance(i, bool) or not isinstance(i, int) or i < 1:
                raise DomainError(f"Lambda index must be a positive integer, got {i!r}")
            acc[i] += Fraction(c)
        self._terms = {i: c for i, c in sorted(acc.items(), reverse=True) if c != 0}
        self._hash = None

    @property
    def terms(self) -> Dict[int, Fraction]:
        """Copy of the ``{index: coefficient}`` map, descending index."""
        return dict(self._terms)

    def coefficient(self, i: int) -> Fraction:
        return self._terms.get(i, Fraction(0))

    def indices(self):
        return list(self._terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, CyclotomicDivisor):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, CyclotomicDivisor):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return CyclotomicDivisor({i: -c for i, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CyclotomicDivisor):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, CyclotomicDivisor):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return CyclotomicDivisor({i: c * other for i, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not defined")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self):
        return f"CyclotomicDivisor({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{format_rational(mag)}*"
            out.append(f"{sign} {coef}L{i}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_triples(self):
        """``[[index, numerator, denominator], ...]`` sorted by descending index."""
        return [[i, c.numerator, c.denominator] for i, c in self._terms.items()]

    @classmethod
    def from_triples(cls, triples):
        return cls((int(i), Fraction(int(p), int(q))) for i, p, q in triples)


ZERO = CyclotomicDivisor()


def lam(i: int) -> CyclotomicDivisor:
    """``Lambda(i)``, the divisor of ``t**i - 1``."""
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise DomainError(f"Lambda index must be a positive integer, got {i!r}")
    return CyclotomicDivisor({i: 1})


ONE = lam(1)


def add(x: CyclotomicDivisor, y: CyclotomicDivisor) -> CyclotomicDivisor:
    acc = x.terms
    for i, c in y._terms.items():
        acc[i] = acc.get(i, 0) + c
    return CyclotomicDivisor(acc)


def mul(x: CyclotomicDivisor, y: CyclotomicDivisor) -> CyclotomicDivisor:
    acc: Dict[int, Fraction] = defaultdict(Fraction)
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            g = math.gcd(a, b)
            acc[a // g * b] += g * ca * cb
    return CyclotomicDivisor(acc)


def degree(x: CyclotomicDivisor) -> Fraction:
    """Number of points, counted with multiplicity: ``sum(c_i * i)``."""
    return sum((c * i for i, c in x._terms.items()), Fraction(0))


def milnor_orlik_factor(d: int, w: int) -> CyclotomicDivisor:
    """``(1/v) Lambda(u) - 1`` where ``d/w = u/v`` in lowest terms."""
    r = reduce_fraction(d, w)
    return CyclotomicDivisor({r.numerator: Fraction(1, r.denominator)}) - ONE


def milnor_orlik_divisor(w: Weights, d: int) -> CyclotomicDivisor:
    """Divisor of the Alexander polynomial of the link of degree ``d``.

    Product over the four coordinates of :func:`milnor_orlik_factor`.  The
    result may carry non-integral coefficients for data that admit no
    quasi-smooth hypersurface; consumers check integrality.
    """
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    result = ONE
    for wi in w:
        result = mul(result, milnor_orlik_factor(d, wi))
    return result


def _require_integral(x: CyclotomicDivisor):
    if not x.is_integral():
        raise NonIntegralDivisor(f"non-integral divisor {x}")


def betti2(x: CyclotomicDivisor) -> int:
    """Second Betti number of the link: the sum of all coefficients.

    The constant ``1`` of the usual ``1 + sum(a_i Lambda_i)`` form is the
    coefficient of ``Lambda(1)``, so no special case is needed.
    """
    _require_integral(x)
    b2 = sum(c.numerator for c in x._terms.values())
    if b2 < 0:
        raise InconsistentDivisor(f"negative coefficient sum {b2} in {x}")
    return b2


def divisors_of(n: int):
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def cyclotomic_expand(x: CyclotomicDivisor) -> Dict[int, int]:
    """Multiplicity ``m_j`` of each cyclotomic factor ``Phi_j`` in ``Delta(t)``.

    Since ``t**i - 1`` is the product of ``Phi_j`` over ``j | i``,
    ``m_j = sum(c_i for i with j | i)``.  Zero multiplicities are omitted;
    negative ones are returned as-is for the caller to flag.
    """
    _require_integral(x)
    mults: Dict[int, int] = defaultdict(int)
    for i, c in x._terms.items():
        for j in divisors_of(i):
            mults[j] += c.numerator
    return {j: m for j, m in sorted(mults.items()) if m != 0}


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def alexander_degree(mults: Mapping[int, int]) -> int:
    """Degree of ``prod(Phi_j ** m_j)``."""
    return sum(m * euler_phi(j) for j, m in mults.items())

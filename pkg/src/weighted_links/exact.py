"""Exact integer and rational helpers.

Python integers are already arbitrary precision and :class:`fractions.Fraction`
keeps itself in lowest terms, so this module only pins down the conventions the
rest of the package relies on (non-negative gcd, strict lcm domain, positive
denominators) and raises :class:`DomainError` on invalid input.
"""

from fractions import Fraction
import math

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


def gcd(a: int, b: int) -> int:
    """Non-negative greatest common divisor, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a <= 0 or b <= 0:
        raise DomainError(f"lcm requires positive arguments, got ({a}, {b})")
    return a // math.gcd(a, b) * b


def reduce_fraction(p: int, q: int) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if q == 0:
        raise DomainError("zero denominator")
    return Fraction(p, q)


def as_integer(x: Fraction):
    """Return ``x`` as an ``int`` if it is integral, else ``None``."""
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return None


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` when integral); never a float."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

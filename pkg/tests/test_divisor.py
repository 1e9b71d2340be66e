from fractions import Fraction
import math

from hypothesis import given, settings, strategies as st
import pytest

from weighted_links.divisor import (
    ONE,
    ZERO,
    CyclotomicDivisor,
    InconsistentDivisor,
    NonIntegralDivisor,
    add,
    alexander_degree,
    betti2,
    cyclotomic_expand,
    degree,
    divisors_of,
    euler_phi,
    lam,
    milnor_orlik_divisor,
    mul,
)
from weighted_links.exact import DomainError
from weighted_links.wps import make_weights

from oracles import milnor_orlik_points, order_multiplicities, points_of_divisor

divisors_st = st.dictionaries(st.integers(1, 60), st.integers(-9, 9), max_size=5).map(CyclotomicDivisor)

L15_DIVISOR = CyclotomicDivisor({15: 9, 5: -1, 3: -1, 1: 1})
L10_DIVISOR = CyclotomicDivisor({10: 9, 5: -1, 2: -1, 1: 1})
SPHERE_DIVISOR = CyclotomicDivisor({6: 1, 3: -1, 2: -1, 1: 1})


def test_lambda():
    assert lam(15).terms == {15: 1}
    assert lam(5).terms == {5: 1}
    assert lam(1) == ONE
    for bad in (0, -3):
        with pytest.raises(DomainError):
            lam(bad)


def test_add():
    assert add(CyclotomicDivisor({15: 9}), CyclotomicDivisor({5: -1})).terms == {15: 9, 5: -1}
    assert add(L15_DIVISOR, ZERO) == L15_DIVISOR
    assert add(lam(3), -lam(3)) == ZERO
    assert not add(lam(3), -lam(3)).terms


def test_mul_examples():
    assert mul(lam(5), lam(3)) == lam(15)
    assert mul(ONE, L15_DIVISOR) == L15_DIVISOR
    x = lam(2) - ONE
    assert mul(x, x) == ONE
    assert mul(lam(15), lam(15)).terms == {15: 15}


def test_l15_stepwise():
    first = (lam(15) - ONE) * (Fraction(1, 7) * lam(15) - ONE)
    assert first == lam(15) + ONE
    second = (lam(5) - ONE) * (lam(3) - ONE)
    assert second == lam(15) - lam(5) - lam(3) + ONE
    assert first * second == L15_DIVISOR


def test_degree():
    assert degree(L15_DIVISOR) == 128
    assert degree(ONE) == 1
    assert degree(ZERO) == 0


@pytest.mark.parametrize("w, d, expected", [
    ((1, 3, 5, 7), 15, L15_DIVISOR),
    ((1, 2, 3, 5), 10, L10_DIVISOR),
    ((1, 1, 1, 1), 2, ONE),
    ((3, 3, 3, 2), 6, SPHERE_DIVISOR),
])
def test_milnor_orlik_divisor(w, d, expected):
    got = milnor_orlik_divisor(make_weights(w), d)
    assert got == expected
    assert points_of_divisor(got.terms) == milnor_orlik_points(w, d)


@pytest.mark.parametrize("x, expected", [(L15_DIVISOR, 8), (ONE, 1), (SPHERE_DIVISOR, 0)])
def test_betti2(x, expected):
    assert betti2(x) == expected


def test_betti2_errors():
    with pytest.raises(NonIntegralDivisor):
        betti2(CyclotomicDivisor({6: Fraction(1, 2)}))
    with pytest.raises(InconsistentDivisor):
        betti2(CyclotomicDivisor({6: 1, 1: -3}))


@pytest.mark.parametrize("x, expected", [
    (L15_DIVISOR, {1: 8, 3: 8, 5: 8, 15: 9}),
    (ONE, {1: 1}),
    (SPHERE_DIVISOR, {6: 1}),
])
def test_cyclotomic_expand(x, expected):
    mults = cyclotomic_expand(x)
    assert mults == expected
    assert mults == order_multiplicities(points_of_divisor(x.terms))
    assert alexander_degree(mults) == degree(x)


def test_cyclotomic_expand_rejects_rationals():
    with pytest.raises(NonIntegralDivisor):
        cyclotomic_expand(CyclotomicDivisor({4: Fraction(2, 3)}))


def test_l15_alexander_degree():
    # 8*phi(1) + 8*phi(3) + 8*phi(5) + 9*phi(15)
    assert alexander_degree({1: 8, 3: 8, 5: 8, 15: 9}) == 8 + 16 + 32 + 72 == 128


def test_helpers():
    assert divisors_of(60) == [1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_normalized_construction():
    x = CyclotomicDivisor([(3, 1), (3, -1), (4, 0), (2, Fraction(1, 2))])
    assert x.terms == {2: Fraction(1, 2)}
    with pytest.raises(DomainError):
        CyclotomicDivisor({0: 1})


def test_serialization_round_trip():
    x = CyclotomicDivisor({6: Fraction(21, 2), 3: Fraction(-1, 2), 1: 1})
    assert x.to_triples() == [[6, 21, 2], [3, -1, 2], [1, 1, 1]]
    assert CyclotomicDivisor.from_triples(x.to_triples()) == x
    assert str(L15_DIVISOR) == "9*L15 - L5 - L3 + L1"
    assert str(-lam(2)) == "-L2"


def test_product_rule_exhaustive():
    for a in range(1, 201):
        for b in range(1, 201):
            g = math.gcd(a, b)
            assert mul(lam(a), lam(b)).terms == {a * b // g: g}


@settings(max_examples=300)
@given(divisors_st, divisors_st, divisors_st)
def test_ring_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert ONE * x == x == x * ONE
    assert x * (y + z) == x * y + x * z
    for r in (x * y, x + y, x * (y + z)):
        assert all(c != 0 for c in r.terms.values())


@settings(max_examples=300)
@given(divisors_st, divisors_st)
def test_degree_multiplicative(x, y):
    assert degree(x * y) == degree(x) * degree(y)


@settings(max_examples=300)
@given(divisors_st)
def test_b2_is_m1(x):
    mults = cyclotomic_expand(x)
    assert sum(x.terms.values()) == mults.get(1, 0)

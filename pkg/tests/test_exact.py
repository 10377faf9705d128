"""Exact-core tests: Bernoulli generator against independent oracles."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from bernbound import exact

# the first eight non-zero even-index values
GOLDEN_EVEN = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
]


def test_golden_even_values():
    for k, expected in enumerate(GOLDEN_EVEN, start=1):
        assert exact.bernoulli(2 * k) == expected


def test_low_indices_and_odd_zero():
    assert exact.bernoulli(0) == 1
    assert exact.bernoulli(1) == Fraction(-1, 2)
    assert exact.bernoulli(7) == 0
    for k in range(1, 40):
        assert exact.bernoulli(2 * k + 1) == 0


def test_sign_alternation():
    for k in range(1, 60):
        value = exact.bernoulli(2 * k)
        assert value != 0
        assert (value > 0) == (k % 2 == 1)


def test_abs_bernoulli_even():
    assert exact.abs_bernoulli_even(1) == Fraction(1, 6)
    assert exact.abs_bernoulli_even(4) == Fraction(1, 30)
    assert exact.abs_bernoulli_even(8) == Fraction(3617, 510)
    with pytest.raises(ValueError):
        exact.abs_bernoulli_even(0)


def test_zeta_even_coefficient():
    assert exact.zeta_even_coefficient(1) == Fraction(1, 6)
    assert exact.zeta_even_coefficient(2) == Fraction(1, 90)
    # defining identity, rearranged
    for k in range(1, 31):
        q = exact.zeta_even_coefficient(k)
        assert q > 0
        assert q * Fraction(2 * exact.factorial(2 * k), 4**k) == exact.abs_bernoulli_even(k)


def test_odd_zeta_coefficient_identity():
    # the odd-denominator series coefficient ties |B_{2k}| to the odd prefactor
    for k in range(1, 25):
        lam = exact.odd_zeta_coefficient(k)
        assert lam == Fraction(4**k - 1, 4**k) * exact.zeta_even_coefficient(k)
        assert exact.abs_bernoulli_even(k) == Fraction(
            2 * exact.factorial(2 * k), 4**k - 1
        ) * lam


def test_von_staudt_clausen_examples():
    assert exact.von_staudt_clausen_denominator(1) == 6
    assert exact.von_staudt_clausen_denominator(3) == 42
    assert exact.von_staudt_clausen_denominator(6) == 2730


def test_von_staudt_clausen_oracle_matches_denominators():
    for k in range(1, 41):
        assert (
            exact.bernoulli(2 * k).denominator
            == exact.von_staudt_clausen_denominator(k)
        )


def test_factorial():
    assert exact.factorial(0) == 1
    assert exact.factorial(4) == 24
    assert exact.factorial(10) == 3628800
    assert exact.factorial(30) == math.factorial(30)
    with pytest.raises(ValueError):
        exact.factorial(-1)


def test_table_invariants():
    table = exact.BernoulliTable()
    values = table.values_up_to(20)
    assert values[0] == 1
    assert values[1] == Fraction(-1, 2)
    assert all(values[2 * k + 1] == 0 for k in range(1, 10))
    for k in range(1, 11):
        assert (values[2 * k] > 0) == (k % 2 == 1)
    # stored reduced with positive denominator (Fraction guarantees, spot-check)
    for v in values.values():
        assert v.denominator > 0
        assert math.gcd(v.numerator, v.denominator) == 1


def test_concurrent_reads_are_consistent():
    table = exact.BernoulliTable()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(table.value, [200] * 16 + list(range(0, 200, 7))))
    assert results[0] == results[1] == exact.bernoulli(200)

"""Exact rational-function-of-pi^2 arithmetic against substitution oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bernbound.pirational import ONE, PI_SQUARED, ZERO, PiRational
from conftest import eval_pirational, machin_pi_bracket


def test_constants_and_powers():
    assert ZERO.is_zero()
    assert ONE.as_rational() == 1
    assert PI_SQUARED.num == (Fraction(0), Fraction(1))
    inv = PiRational.pi_squared_power(-2)
    assert (inv * PiRational.pi_squared_power(2)) == 1


def test_field_ops_match_substitution_oracle():
    # PiRational arithmetic must agree with exact evaluation at any rational
    # point (the operations are field operations in Q(u))
    rng = random.Random(424242)
    u0 = Fraction(355, 113)  # any positive rational stand-in works
    for _ in range(400):
        a = PiRational.from_rational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        b = PI_SQUARED * Fraction(rng.randint(1, 5)) + rng.randint(-3, 3)
        c = PiRational.pi_squared_power(rng.randint(-2, 2))
        expr = (a + b) * c - a / b
        expected = (
            (eval_pirational(a, u0) + eval_pirational(b, u0)) * eval_pirational(c, u0)
            - eval_pirational(a, u0) / eval_pirational(b, u0)
        )
        assert eval_pirational(expr, u0) == expected


def test_reduction_cancels_common_factors():
    u = PI_SQUARED
    numerator = (u + 1) * (u + 2)
    denominator = (u + 1) * (u + 3)
    quotient = numerator / denominator
    assert quotient == (u + 2) / (u + 3)
    assert len(quotient.num) == 2 and len(quotient.den) == 2


def test_rational_detection():
    u = PI_SQUARED
    assert ((u * 36) / (u * 216)).as_rational() == Fraction(1, 6)
    assert (u / u).as_rational() == 1
    assert (u + 1).as_rational() is None
    assert not (u + 1).is_rational()


def test_exact_sign():
    u = PI_SQUARED
    assert ZERO.exact_sign() == 0
    assert (u * 3).exact_sign() == 1
    assert (-2 / u).exact_sign() == -1
    assert (Fraction(5, 7) * PiRational.pi_squared_power(-3)).exact_sign() == 1
    assert (u + 1).exact_sign() is None  # needs pi's value


def test_equality_is_exact():
    u = PI_SQUARED
    assert (9 * (1 - 8 / u)) == (9 - 72 / u)
    assert (9 - 72 / u) / (3 - 24 / u) == 3
    assert (4 * (1 - 6 / u)) - 1 == (3 - 24 / u)
    assert not (9 - 72 / u) == (9 - 71 / u)


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_evaluate_contains_true_value():
    # 3/(2 pi^2) against the independent Machin bracket for pi
    value = Fraction(3, 2) / PI_SQUARED
    enc = value.evaluate(128)
    lo, hi = enc.bounds_as_fractions()
    m_lo, m_hi = machin_pi_bracket(40)
    true_lo = Fraction(3, 2) / (m_hi * m_hi)
    true_hi = Fraction(3, 2) / (m_lo * m_lo)
    assert lo <= true_lo and true_hi <= hi or (lo <= true_hi and true_lo <= hi)
    # nested refinement
    assert enc.contains_enclosure(value.evaluate(256))


def test_evaluate_zero_is_exact():
    enc = ZERO.evaluate(64)
    assert enc.bounds_as_fractions() == (Fraction(0), Fraction(0))

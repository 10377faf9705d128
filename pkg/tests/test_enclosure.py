"""Enclosure engine tests: containment, directed rounding, refinement."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bernbound.enclosure import (
    Comparison,
    DomainError,
    PrecisionPolicy,
    RealEnclosure,
    arith,
    compare,
    exp_enclosure,
    ln_enclosure,
    pi_enclosure,
    pow_enclosure,
    pow_int,
    refine_until,
    root_enclosure,
)
from conftest import machin_pi_bracket


def enc(value, bits=64) -> RealEnclosure:
    return RealEnclosure.from_rational(Fraction(value), bits)


# ---------------------------------------------------------------------------
# pi
# ---------------------------------------------------------------------------


def test_pi_width_contract():
    for bits in (16, 64, 128, 512):
        pi = pi_enclosure(bits)
        assert pi.width_fraction() <= Fraction(2) ** (4 - bits)


def test_pi_coarse_sanity():
    pi = pi_enclosure(32)
    assert pi.lo < Fraction(32, 10) and pi.hi > Fraction(31, 10)


def test_pi_refinement_monotone():
    assert pi_enclosure(256).width_fraction() < pi_enclosure(16).width_fraction()


def test_pi_against_machin_oracle():
    # independent rational bracket from two arctan series
    m_lo, m_hi = machin_pi_bracket(40)
    assert m_hi - m_lo < Fraction(1, 10**40)
    pi = pi_enclosure(128)
    lo, hi = pi.bounds_as_fractions()
    # both enclose pi, so they must overlap; and the MPFR interval must
    # contain the much tighter Machin bracket's midpoint
    assert lo <= m_hi and m_lo <= hi
    assert lo <= (m_lo + m_hi) / 2 <= hi


# ---------------------------------------------------------------------------
# arithmetic containment (exact rational mirror)
# ---------------------------------------------------------------------------


def test_field_ops_contain_exact_results():
    rng = random.Random(20240817)
    for _ in range(2000):
        a = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        b = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        ea, eb = enc(a), enc(b)
        assert (ea + eb).contains(a + b)
        assert (ea - eb).contains(a - b)
        assert (ea * eb).contains(a * b)
        if b != 0:
            assert (ea / eb).contains(a / b)


def test_random_pipelines_contain_exact_value():
    rng = random.Random(7)
    for _ in range(500):
        value = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        e = enc(value)
        for _ in range(6):
            op = rng.choice(("add", "sub", "mul", "div", "pow"))
            operand = Fraction(rng.randint(1, 30), rng.randint(1, 30))
            if op == "add":
                value, e = value + operand, e + operand
            elif op == "sub":
                value, e = value - operand, e - operand
            elif op == "mul":
                value, e = value * operand, e * operand
            elif op == "div":
                value, e = value / operand, e / operand
            else:
                n = rng.randint(0, 3)
                value, e = value**n, pow_int(e, n)
        assert e.contains(value)


def test_pow_int_cases():
    assert pow_int(enc(2), 0).bounds_as_fractions() == (Fraction(1), Fraction(1))
    assert pow_int(enc(3), 5).contains(243)
    assert pow_int(enc(-2), 3).contains(-8)
    assert pow_int(enc(-2), 2).contains(4)
    straddle = RealEnclosure.from_endpoints(Fraction(-2), Fraction(3), 64)
    sq = pow_int(straddle, 2)
    assert sq.contains(0) and sq.contains(9) and sq.contains(4)
    assert pow_int(enc(2), -2).contains(Fraction(1, 4))
    with pytest.raises(DomainError):
        pow_int(straddle, -1)


def test_root_and_domain_errors():
    r = root_enclosure(enc(2), 2)
    assert (r * r).contains(2)
    with pytest.raises(DomainError):
        root_enclosure(enc(-1), 2)
    with pytest.raises(DomainError):
        ln_enclosure(enc(0))
    with pytest.raises(DomainError):
        enc(1) / RealEnclosure.from_endpoints(Fraction(-1), Fraction(1), 64)


def test_exp_ln_round_trip_contains():
    x = enc(5, 128)
    assert exp_enclosure(ln_enclosure(x)).contains(5)
    # ln(1) is exactly zero from both sides
    z = ln_enclosure(enc(1))
    assert z.contains(0)
    lo, hi = z.bounds_as_fractions()
    assert lo == hi == 0


def test_pow_enclosure_matches_integer_powers():
    p = pow_enclosure(enc(3, 128), enc(Fraction(7, 2), 128))
    # 3^3.5 = sqrt(3^7)
    exact = root_enclosure(pow_int(enc(3, 128), 7), 2)
    assert p.intersects(exact)


def test_arith_dispatcher():
    assert arith("add", enc(1), enc(2)).contains(3)
    assert arith("sub", 5, enc(2)).contains(3)
    assert arith("mul", enc(4), Fraction(1, 2)).contains(2)
    assert arith("div", enc(1), enc(3)).contains(Fraction(1, 3))
    assert arith("pow_int", enc(2), 10).contains(1024)
    assert arith("root", enc(16), 4).contains(2)
    assert arith("exp", enc(0)).contains(1)
    assert arith("ln", enc(1)).contains(0)
    with pytest.raises(ValueError):
        arith("sin", enc(1))


# ---------------------------------------------------------------------------
# comparison and refinement
# ---------------------------------------------------------------------------


def test_compare_trichotomy():
    assert compare(enc(1) + enc(0), enc(3)) is Comparison.LESS
    assert compare(enc(5), enc(1)) is Comparison.GREATER
    a = RealEnclosure.from_endpoints(Fraction(1), Fraction(3), 64)
    b = RealEnclosure.from_endpoints(Fraction(2), Fraction(4), 64)
    assert compare(a, b) is Comparison.OVERLAPPING


def test_compare_antisymmetric():
    rng = random.Random(99)
    for _ in range(300):
        a = enc(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        b = enc(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        ab, ba = compare(a, b), compare(b, a)
        if ab is Comparison.LESS:
            assert ba is Comparison.GREATER
        elif ab is Comparison.GREATER:
            assert ba is Comparison.LESS
        else:
            assert ba is Comparison.OVERLAPPING


def test_refine_until_decides_pi_below_315():
    policy = PrecisionPolicy(initial_bits=32, max_bits=1024)
    outcome = refine_until(
        lambda bits: (pi_enclosure(bits), RealEnclosure.from_rational(Fraction(315, 100), bits)),
        lambda pair: Comparison.LESS if compare(*pair) is Comparison.LESS else None,
        policy,
    )
    assert outcome.decided and outcome.result is Comparison.LESS
    assert outcome.precision_bits == 32  # decided at initial precision


def test_refine_until_true_equality_exhausts():
    policy = PrecisionPolicy(initial_bits=32, max_bits=256)
    outcome = refine_until(
        lambda bits: (pi_enclosure(bits), pi_enclosure(bits)),
        lambda pair: None
        if compare(*pair) is Comparison.OVERLAPPING
        else compare(*pair),
        policy,
    )
    assert not outcome.decided
    assert outcome.precision_bits == 256


def test_policy_validation():
    with pytest.raises(ValueError):
        PrecisionPolicy(initial_bits=8)
    with pytest.raises(ValueError):
        PrecisionPolicy(initial_bits=512, max_bits=128)
    with pytest.raises(ValueError):
        PrecisionPolicy(growth=1)
    assert list(PrecisionPolicy(initial_bits=100, max_bits=900).ladder()) == [
        100,
        200,
        400,
        800,
        900,
    ]


def test_enclosure_invariants():
    with pytest.raises(ValueError):
        RealEnclosure.from_endpoints(Fraction(2), Fraction(1), 64)
    e = enc(Fraction(1, 3), 64)
    lo, hi = e.bounds_as_fractions()
    assert lo <= Fraction(1, 3) <= hi and lo < hi

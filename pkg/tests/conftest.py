"""Shared independent oracles for the test suite.

Everything here is deliberately computed by routes the library itself does
not use: Machin's arctan series in pure rationals for pi, exact polynomial
substitution for rational functions, and exact dyadic conversion of mpmath
reference values.
"""

from __future__ import annotations

from fractions import Fraction


def mpf_to_fraction(x) -> Fraction:
    """Exact Fraction of an mpmath mpf (dyadic, lossless)."""
    sign, man, exp, _ = x._mpf_
    value = Fraction(man)
    if exp >= 0:
        value *= 2**exp
    else:
        value /= 2**-exp
    return -value if sign else value


def machin_pi_bracket(terms: int = 40) -> tuple[Fraction, Fraction]:
    """Rational bracket around pi from 16 arctan(1/5) - 4 arctan(1/239).

    Each arctan is an alternating series with strictly decreasing terms, so
    consecutive partial sums bracket the true value.
    """

    def arctan_bracket(x: int) -> tuple[Fraction, Fraction]:
        partial = Fraction(0)
        prev = None
        for i in range(terms):
            partial += Fraction((-1) ** i, (2 * i + 1) * x ** (2 * i + 1))
            if i == terms - 2:
                prev = partial
        return (min(prev, partial), max(prev, partial))

    a5_lo, a5_hi = arctan_bracket(5)
    a239_lo, a239_hi = arctan_bracket(239)
    return (16 * a5_lo - 4 * a239_hi, 16 * a5_hi - 4 * a239_lo)


def eval_poly(coeffs, point: Fraction) -> Fraction:
    """Exact polynomial evaluation (coefficients low degree first)."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def eval_pirational(value, point: Fraction) -> Fraction:
    """Exact evaluation of a PiRational at a rational substitute for pi^2."""
    return eval_poly(value.num, point) / eval_poly(value.den, point)

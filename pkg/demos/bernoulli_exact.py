#!/usr/bin/env python3
"""Exact Bernoulli numbers and their independent correctness oracle.

Walks through the exact-rational layer: the memoised generator, the sign and
vanishing patterns, the prime-product denominator oracle, and the rational
coefficients q_k with zeta(2k) = q_k * pi^(2k).
"""

from fractions import Fraction

from bernbound import (
    abs_bernoulli_even,
    bernoulli,
    von_staudt_clausen_denominator,
    zeta_even_coefficient,
)

print("First even-index Bernoulli numbers")
print("----------------------------------")
for k in range(1, 9):
    print(f"  B_{2 * k:<3} = {bernoulli(2 * k)}")
print(f"  B_1   = {bernoulli(1)}   (odd indices above 1 vanish: B_9 = {bernoulli(9)})")

print()
print("Denominators vs the prime-product oracle (primes p with (p-1) | 2k)")
print("-------------------------------------------------------------------")
for k in (1, 3, 6, 15, 50):
    denom = bernoulli(2 * k).denominator
    oracle = von_staudt_clausen_denominator(k)
    marker = "ok" if denom == oracle else "MISMATCH"
    print(f"  k={k:<3} denominator {denom:<12} oracle {oracle:<12} {marker}")

print()
print("Rational zeta coefficients: zeta(2k) = q_k * pi^(2k)")
print("----------------------------------------------------")
for k in range(1, 6):
    q = zeta_even_coefficient(k)
    print(f"  q_{k} = {q}")

print()
print("The defining identity, rearranged: |B_2k| = q_k * 2 (2k)! / 2^(2k)")
import math

for k in (1, 4, 10):
    lhs = abs_bernoulli_even(k)
    rhs = zeta_even_coefficient(k) * Fraction(2 * math.factorial(2 * k), 4**k)
    print(f"  k={k:<3} |B_2k| = {lhs} == {rhs}: {lhs == rhs}")

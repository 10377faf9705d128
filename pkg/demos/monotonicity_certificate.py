#!/usr/bin/env python3
"""Grid certificate for the strictly decreasing best-constant profile.

The profile 3^x (1 - 1/((1 - 2^(-x)) zeta(x))) interpolates between its
boundary value beta at x=2 and its limit 1 at infinity.  This script
certifies strict decrease across the default quarter-step grid on [2, 40],
prints a few profile values, and checks the per-term negativity underlying
the derivative sign argument.
"""

from fractions import Fraction

from bernbound import (
    best_constant_profile,
    default_profile_grid,
    monotonicity_certificate,
    termwise_negativity_check,
)
from bernbound.render import certified_truncation

print("Profile values (certified 12 digits)")
print("-------------------------------------")
for x in (Fraction(2), Fraction(9, 4), Fraction(3), Fraction(5), Fraction(10), Fraction(40)):
    enclosure = best_constant_profile(x, 128)
    print(f"  profile({str(x):>4}) = {certified_truncation(enclosure, 12)}")

print()
grid = default_profile_grid()
print(f"Certifying strict decrease over {len(grid)} grid points on [2, 40] ...")
certificate = monotonicity_certificate(grid)
print(f"  certified: {certificate.certified}")
print(f"  adjacent pairs checked: {certificate.pairs_checked}")
print(f"  highest precision needed: {certificate.max_precision_bits} bits")

print()
print("A degenerate grid is reported Undecided, never silently accepted")
repeated = monotonicity_certificate([Fraction(2), Fraction(2)])
print(f"  grid [2, 2]: certified={repeated.certified}, pair={repeated.undecided_pair}")

print()
print("Termwise negativity: 1/p^x < (ln p / ln 3)/(p^x - 1) for odd primes p")
print("----------------------------------------------------------------------")
for x in (2, 3, 5, 10):
    flags = termwise_negativity_check(x, 50)
    print(f"  x={x:>2}: first 50 odd primes all certified negative: {all(flags)}")

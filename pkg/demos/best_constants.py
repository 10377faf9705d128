#!/usr/bin/env python3
"""The best-possible constants, certified and proven exactly where rational.

Computes alpha, beta, delta, theta and the generalized beta'(m) as certified
enclosures, and demonstrates the exact identity beta / (2^delta - 1) = 3 via
rational-function-of-pi^2 arithmetic.
"""

from bernbound import compute_constants
from bernbound.render import certified_truncation
from bernbound.zeta import beta_symbolic, two_pow_delta_symbolic

constants = compute_constants(256)

print("Best-possible constants (certified truncated digits)")
print("-----------------------------------------------------")
print(f"  alpha        = {constants.alpha}   (limit value, exact)")
print(f"  theta        = {constants.theta}   (limit value, exact)")
print(f"  beta         = {certified_truncation(constants.beta, 30)}")
print(f"  delta        = {certified_truncation(constants.delta, 30)}")
for m, enclosure in constants.beta_prime.items():
    print(f"  beta_prime({m}) = {certified_truncation(enclosure, 20)}")

print()
print("Exact identity: beta / (2^delta - 1) = 3")
print("------------------------------------------")
ratio = beta_symbolic() / (two_pow_delta_symbolic() - 1)
print(f"  beta      as rational function of u=pi^2: {beta_symbolic()!r}")
print(f"  2^delta   as rational function of u=pi^2: {two_pow_delta_symbolic()!r}")
print(f"  quotient reduces to: {ratio.as_rational()}")

print()
print("Why beta is extreme: the k=1 instance of the upper bound is exact")
print("-------------------------------------------------------------------")
from bernbound import make_spec, symbolic_bound

bound = symbolic_bound(make_spec("best_const_upper_2_7"), 1)
print(f"  upper bound value at k=1 simplifies to {bound.as_rational()} = |B_2|")

print()
print("Enclosure widths shrink geometrically under refinement")
print("--------------------------------------------------------")
for bits in (64, 128, 256, 512):
    width = beta_symbolic().evaluate(bits).width_fraction()
    print(f"  {bits:>4} bits: width < 2^{width.numerator.bit_length() - width.denominator.bit_length() + 1}")

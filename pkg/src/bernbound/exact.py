"""Exact rational arithmetic for Bernoulli numbers and even-zeta coefficients.

Everything in this module is computed over arbitrary-precision rationals
(``fractions.Fraction``, always stored reduced with a positive denominator).
The even-index Bernoulli numbers are generated by the binomial-sum recurrence
derived from the defining power series of x/(e^x - 1):

    sum_{j=0}^{n} C(n+1, j) B_j = 0        (n >= 1, B_1 = -1/2)

restricted to even indices, which skips the vanishing odd terms and halves
the work.  The zeta link used throughout the bound catalogue is

    zeta(2k) = q_k * pi^(2k),   q_k = 2^(2k) |B_{2k}| / (2 * (2k)!),

with q_k an exact positive rational.  The von Staudt-Clausen product of
primes p with (p-1) | 2k supplies a fully independent oracle for the
denominators of B_{2k}.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from . import primes

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "abs_bernoulli_even",
    "zeta_even_coefficient",
    "odd_zeta_coefficient",
    "von_staudt_clausen_denominator",
    "factorial",
]


class BernoulliTable:
    """Memoised Bernoulli numbers B_0, B_1, B_2, ...

    The cache only ever grows; published values are immutable Fractions.
    Extension is serialized behind a lock so concurrent readers are safe.
    """

    def __init__(self) -> None:
        self._even: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...
        self._lock = threading.Lock()

    def _extend_even(self, k: int) -> None:
        """Ensure B_0, B_2, ..., B_{2k} are cached."""
        with self._lock:
            for m in range(len(self._even), k + 1):
                n = 2 * m
                acc = Fraction(0)
                for j in range(m):
                    acc += math.comb(n + 1, 2 * j) * self._even[j]
                acc += Fraction(-(n + 1), 2)  # the j=1 term, B_1 = -1/2
                self._even.append(-acc / (n + 1))

    def value(self, n: int) -> Fraction:
        """Exact B_n."""
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        if n == 1:
            return Fraction(-1, 2)
        if n % 2 == 1:
            return Fraction(0)
        k = n // 2
        if k >= len(self._even):
            self._extend_even(k)
        return self._even[k]

    def values_up_to(self, n: int) -> dict[int, Fraction]:
        """Mapping index -> B_index for all indices 0..n."""
        return {i: self.value(i) for i in range(n + 1)}


_TABLE = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    return _TABLE.value(n)


def abs_bernoulli_even(k: int) -> Fraction:
    """|B_{2k}| = (-1)^(k+1) B_{2k} as an exact positive rational, k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    value = bernoulli(2 * k)
    result = value if k % 2 == 1 else -value
    assert result > 0
    return result


def zeta_even_coefficient(k: int) -> Fraction:
    """Exact q_k > 0 with zeta(2k) = q_k * pi^(2k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return abs_bernoulli_even(k) * Fraction(4**k, 2 * factorial(2 * k))


def odd_zeta_coefficient(k: int) -> Fraction:
    """Exact coefficient of pi^(2k) in the odd-denominator series.

    The sum over odd n of n^(-2k) equals (1 - 2^(-2k)) * zeta(2k), hence its
    rational-in-pi^(2k) coefficient is (4^k - 1)/4^k * q_k.
    """
    return Fraction(4**k - 1, 4**k) * zeta_even_coefficient(k)


def von_staudt_clausen_denominator(k: int) -> int:
    """Product of all primes p with (p-1) | 2k.

    Equals the denominator of B_{2k}; computed from the prime sieve alone,
    never from the recurrence, so it serves as an independent oracle.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k
    product = 1
    count = 8
    while True:
        candidates = primes.all_primes(count)
        if candidates[-1] > n + 1:
            break
        count *= 2
    for p in candidates:
        if p > n + 1:
            break
        if n % (p - 1) == 0:
            product *= p
    return product


def factorial(n: int) -> int:
    """Exact n! (delegates to math.factorial)."""
    if n < 0:
        raise ValueError("factorial of negative integer")
    return math.factorial(n)

"""Deterministic prime generation for Euler-product truncations.

Two prime families appear throughout the bound catalogue: the odd primes
3, 5, 7, 11, ... and the full sequence 2, 3, 5, 7, ....  Both are served from
one growable sieve of Eratosthenes.  The sieve cache is guarded by a lock;
readers get plain immutable tuples.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

__all__ = ["PrimeList", "odd_primes", "all_primes", "nth_odd_prime", "is_prime_trial"]

_lock = threading.Lock()
_primes: list[int] = [2, 3, 5, 7, 11, 13]
_sieved_up_to = 14


def _extend_to_count(count: int) -> None:
    """Grow the cached prime list until it holds at least ``count`` primes."""
    global _sieved_up_to
    with _lock:
        while len(_primes) < count:
            lo = _sieved_up_to
            hi = _sieved_up_to * 2
            segment = bytearray([1]) * (hi - lo)
            for p in _primes:
                if p * p >= hi:
                    break
                start = max(p * p, ((lo + p - 1) // p) * p)
                segment[start - lo :: p] = bytearray(len(range(start, hi, p)))
            # existing primes always reach sqrt(hi) because the sieve at most
            # doubles: hi = 2*lo and lo >= last_prime**?  -- guaranteed for
            # lo >= 14 since primes up to 13 cover sqrt(28..) and growth keeps
            # sqrt(hi) < lo.
            for offset, flag in enumerate(segment):
                if flag:
                    _primes.append(lo + offset)
            _sieved_up_to = hi


@dataclass(frozen=True)
class PrimeList:
    """Ascending run of primes, with or without the prime 2."""

    include_two: bool
    primes: tuple[int, ...]

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __getitem__(self, i):
        return self.primes[i]


def all_primes(count: int) -> PrimeList:
    """First ``count`` primes starting at 2."""
    if count < 1:
        raise ValueError("count must be >= 1")
    _extend_to_count(count)
    return PrimeList(include_two=True, primes=tuple(_primes[:count]))


def odd_primes(count: int) -> PrimeList:
    """First ``count`` odd primes: 3, 5, 7, 11, ..."""
    if count < 1:
        raise ValueError("count must be >= 1")
    _extend_to_count(count + 1)
    return PrimeList(include_two=False, primes=tuple(_primes[1 : count + 1]))


def nth_odd_prime(n: int) -> int:
    """The n-th odd prime, 1-indexed (n=1 -> 3)."""
    return odd_primes(n).primes[-1]


def is_prime_trial(n: int) -> bool:
    """Independent trial-division primality check (test oracle)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True

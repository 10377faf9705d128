"""Prime generation against a trial-division oracle."""

from __future__ import annotations

import pytest

from bernbound import primes


def test_odd_prime_listings():
    assert primes.odd_primes(1).primes == (3,)
    assert primes.odd_primes(2).primes == (3, 5)
    assert primes.odd_primes(6).primes == (3, 5, 7, 11, 13, 17)
    assert not primes.odd_primes(3).include_two


def test_all_prime_listings():
    assert primes.all_primes(1).primes == (2,)
    assert primes.all_primes(3).primes == (2, 3, 5)
    assert primes.all_primes(7).primes == (2, 3, 5, 7, 11, 13, 17)
    assert primes.all_primes(2).include_two


def test_families_agree():
    for m in (1, 5, 20, 100):
        assert primes.odd_primes(m).primes == primes.all_primes(m + 1).primes[1:]


def test_trial_division_oracle():
    listing = primes.all_primes(300)
    assert all(primes.is_prime_trial(p) for p in listing)
    assert list(listing.primes) == sorted(set(listing.primes))
    # no prime missed: everything between consecutive entries is composite
    for a, b in zip(listing.primes, listing.primes[1:]):
        assert not any(primes.is_prime_trial(x) for x in range(a + 1, b))


def test_nth_odd_prime():
    assert primes.nth_odd_prime(1) == 3
    assert primes.nth_odd_prime(4) == 11


def test_rejects_nonpositive_counts():
    with pytest.raises(ValueError):
        primes.odd_primes(0)
    with pytest.raises(ValueError):
        primes.all_primes(0)

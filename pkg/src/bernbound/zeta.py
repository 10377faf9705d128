"""Certified real-argument zeta values and the best-constant profile.

The catalogue's transcendental side needs zeta(x) for real x >= 2.  The
engine is the alternating (eta) series

    eta(x) = sum_{j>=0} (-1)^j (j+1)^(-x),     zeta(x) = eta(x) / (1 - 2^(1-x)),

summed with an exact Chebyshev acceleration.  Writing the alternating sum as
the integral of 1/(1+t) against the positive measure on [0, 1] whose moments
are (j+1)^(-x)  (weight log(1/t)^(x-1)/Gamma(x), valid for x >= 1), one has
for the degree-n shifted Chebyshev polynomial P_n(t) = T_n(1 - 2t):

    eta(x) = (1/d_n) * sum_{j<n} g_j (j+1)^(-x)  +  E_n,   |E_n| <= 1/d_n,

where d_n = T_n(3) and the integers g_j are the coefficients of
(d_n - P_n(t))/(1 + t).  Since |P_n| <= 1 on [0,1] and the measure has total
mass 1, the tail bound is rigorous.  d_n grows like (3 + sqrt(8))^n / 2, so
roughly 0.4 * precision_bits terms give a full-precision enclosure at every
x >= 2 simultaneously -- a plain partial sum with first-omitted-term tail
would need ~10^19 terms for 128-bit accuracy at x = 2.

At even integer arguments, zeta is a known rational multiple of pi^(2k) and
is delegated to the exact core, keeping the certification path free of any
series truncation there.

On top of zeta sits the profile

    profile(x) = 3^x * (1 - 1/((1 - 2^(-x)) * zeta(x))),   x >= 2,

whose boundary value at 2 and limit at infinity are the extreme admissible
constants of the geometric-factor bound family, together with its
m-parameter generalization, a grid monotonicity certificate, and the
per-term negativity check behind the monotonicity argument.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import exact, primes
from .enclosure import (
    Comparison,
    DEFAULT_POLICY,
    DomainError,
    PrecisionPolicy,
    RealEnclosure,
    compare,
    exp_enclosure,
    ln2_enclosure,
    ln_enclosure,
    pi_enclosure,
    pow_int,
    refine_until,
)
from .pirational import PiRational

__all__ = [
    "zeta_enclosure",
    "best_constant_profile",
    "best_constant_profile_general",
    "MonotonicityCertificate",
    "monotonicity_certificate",
    "default_profile_grid",
    "termwise_negativity_check",
    "Constants",
    "compute_constants",
    "delta_enclosure",
    "beta_symbolic",
    "two_pow_delta_symbolic",
    "beta_prime_symbolic",
]

RealArg = Union[int, Fraction, RealEnclosure]

# ---------------------------------------------------------------------------
# Chebyshev acceleration coefficients (exact integers, cached per degree)
# ---------------------------------------------------------------------------

_accel_lock = threading.Lock()
_accel_cache: dict[int, tuple[int, tuple[int, ...], int]] = {}

_LOG2_OVER_LOG_SILVER = 0.39321985067869744  # ln 2 / ln(3 + 2*sqrt(2))


def _chebyshev_at_3(n: int) -> int:
    """T_n(3), the acceleration denominator d_n."""
    t0, t1 = 1, 3
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, 6 * t1 - t0
    return t1


def _acceleration_coefficients(n: int) -> tuple[int, tuple[int, ...], int]:
    """(d_n, (g_0..g_{n-1}), max coefficient bit length).

    Uses the O(n) coefficient recurrence

        c_k = b_k - c_{k-1},   b_{k+1} = 2 (k+n)(k-n) b_k / ((2k+1)(k+1)),

    with b_0 = -1 and c_{-1} = -d_n; all intermediate values are integers
    (asserted).  The equivalence with the polynomial definition above is
    pinned by tests against a direct Chebyshev expansion.
    """
    with _accel_lock:
        cached = _accel_cache.get(n)
        if cached is not None:
            return cached
        d = _chebyshev_at_3(n)
        b = -1
        c = -d
        coeffs: list[int] = []
        for k in range(n):
            c = b - c
            coeffs.append(c)
            numerator = 2 * (k + n) * (k - n) * b
            denominator = (2 * k + 1) * (k + 1)
            assert numerator % denominator == 0
            b = numerator // denominator
        max_bits = max(abs(g).bit_length() for g in coeffs)
        result = (d, tuple(coeffs), max_bits)
        _accel_cache[n] = result
        return result


def _terms_for(bits: int) -> int:
    return max(8, int((bits + 12) * _LOG2_OVER_LOG_SILVER) + 2)


# ---------------------------------------------------------------------------
# zeta(x) for real x >= 2
# ---------------------------------------------------------------------------


def _as_even_integer(x: RealArg) -> Optional[int]:
    if isinstance(x, int):
        value = x
    elif isinstance(x, Fraction) and x.denominator == 1:
        value = int(x)
    else:
        return None
    return value if value % 2 == 0 else None


def _as_enclosure(x: RealArg, bits: int) -> RealEnclosure:
    if isinstance(x, RealEnclosure):
        return x
    return RealEnclosure.from_rational(x, bits)


def _check_domain(x: RealArg) -> None:
    if isinstance(x, RealEnclosure):
        if not x.lo >= 2:
            raise DomainError("argument enclosure extends below 2")
    elif x < 2:
        raise DomainError("argument must be >= 2")


def _eta_enclosure(x: RealArg, bits: int) -> RealEnclosure:
    n = _terms_for(bits)
    d, coeffs, max_bits = _acceleration_coefficients(n)
    # slack for the n-term summation and for coefficients larger than d
    work = bits + 16 + n.bit_length() + max(0, max_bits - d.bit_length())
    xe = _as_enclosure(x, work)
    total = RealEnclosure.from_rational(coeffs[0], work)  # j = 0 term, a_0 = 1
    for j in range(1, n):
        log_base = ln_enclosure(RealEnclosure.from_rational(j + 1, work))
        term = exp_enclosure(-(xe * log_base))
        total = total + term * coeffs[j]
    tail = RealEnclosure.from_endpoints(Fraction(-1, d), Fraction(1, d), work)
    return total / d + tail


def zeta_enclosure(x: RealArg, bits: int) -> RealEnclosure:
    """Certified enclosure of zeta(x) for real x >= 2.

    Even integer arguments take the exact route zeta(2k) = q_k pi^(2k); all
    other arguments use the accelerated alternating series.
    """
    _check_domain(x)
    even = _as_even_integer(x)
    if even is not None:
        k = even // 2
        coeff = exact.zeta_even_coefficient(k)
        return pow_int(pi_enclosure(bits), even) * RealEnclosure.from_rational(coeff, bits)
    eta = _eta_enclosure(x, bits)
    work = eta.precision_bits
    xe = _as_enclosure(x, work)
    # 1 - 2^(1-x); the exponent 1-x <= -1 keeps the denominator >= 1/2
    two_pow = exp_enclosure((1 - xe) * ln2_enclosure(work))
    return eta / (1 - two_pow)


# ---------------------------------------------------------------------------
# The best-constant profile and its generalization
# ---------------------------------------------------------------------------


def _pow_positive(base: Union[int, Fraction], x: RealArg, bits: int) -> RealEnclosure:
    """base**x for a positive rational base and real x, sharp for integer x."""
    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
        return RealEnclosure.from_rational(Fraction(base) ** int(x), bits)
    xe = _as_enclosure(x, bits)
    log_base = ln_enclosure(RealEnclosure.from_rational(base, bits))
    return exp_enclosure(xe * log_base)


def _odd_part_of_zeta(x: RealArg, bits: int) -> RealEnclosure:
    """(1 - 2^(-x)) * zeta(x): the odd-denominator part of the series."""
    z = zeta_enclosure(x, bits)
    work = z.precision_bits
    inv_two_pow = 1 / _pow_positive(2, x, work)
    return (1 - inv_two_pow) * z


def best_constant_profile(x: RealArg, bits: int) -> RealEnclosure:
    """3^x * (1 - 1/((1 - 2^(-x)) zeta(x))) for x >= 2.

    Strictly decreasing in x; its value at 2 is the largest admissible upper
    constant of the single-factor bound family and its limit 1 at infinity is
    the smallest admissible lower constant.
    """
    _check_domain(x)
    core = 1 - 1 / _odd_part_of_zeta(x, bits)
    return _pow_positive(3, x, core.precision_bits) * core


def best_constant_profile_general(m: int, x: RealArg, bits: int) -> RealEnclosure:
    """p_m^x * (1 - (prod_{n<m} p_n^x/(p_n^x - 1)) / ((1 - 2^(-x)) zeta(x))).

    The m-factor analogue of :func:`best_constant_profile` (m >= 2); its
    value at x = 2 is the generalized upper constant beta'(m).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    _check_domain(x)
    odd = _odd_part_of_zeta(x, bits)
    work = odd.precision_bits
    plist = primes.odd_primes(m)
    ratio = 1 / odd
    for p in plist.primes[: m - 1]:
        px = _pow_positive(p, x, work)
        ratio = ratio * (px / (px - 1))
    return _pow_positive(plist.primes[m - 1], x, work) * (1 - ratio)


def default_profile_grid(
    start: Fraction = Fraction(2),
    stop: Fraction = Fraction(40),
    step: Fraction = Fraction(1, 4),
) -> tuple[Fraction, ...]:
    """Ascending rational grid [start, start+step, ..., stop]."""
    if step <= 0 or stop < start:
        raise ValueError("need step > 0 and stop >= start")
    grid = []
    x = Fraction(start)
    while x <= stop:
        grid.append(x)
        x += step
    return tuple(grid)


@dataclass(frozen=True)
class MonotonicityCertificate:
    """Outcome of certifying strict decrease across an ascending grid."""

    certified: bool
    pairs_checked: int
    undecided_pair: Optional[tuple[Fraction, Fraction]]
    max_precision_bits: int


def monotonicity_certificate(
    grid: Sequence[RealArg],
    policy: PrecisionPolicy = DEFAULT_POLICY,
    m: Optional[int] = None,
) -> MonotonicityCertificate:
    """Certify profile(x_i) > profile(x_{i+1}) for every adjacent grid pair.

    Each pair is refined independently; profile values are memoised per
    (point, precision).  ``m`` selects the generalized profile.  Returns an
    undecided verdict (never an error) if some pair cannot be separated at
    the precision cap -- e.g. for a degenerate grid with repeated points.
    """
    points = list(grid)
    cache: dict[tuple[int, int], RealEnclosure] = {}

    def profile_at(i: int, bits: int) -> RealEnclosure:
        key = (i, bits)
        value = cache.get(key)
        if value is None:
            x = points[i]
            if m is None:
                value = best_constant_profile(x, bits)
            else:
                value = best_constant_profile_general(m, x, bits)
            cache[key] = value
        return value

    max_bits = policy.initial_bits
    for i in range(len(points) - 1):
        outcome = refine_until(
            lambda bits, i=i: (profile_at(i, bits), profile_at(i + 1, bits)),
            lambda pair: True if compare(pair[0], pair[1]) is Comparison.GREATER else None,
            policy,
        )
        max_bits = max(max_bits, outcome.precision_bits)
        if not outcome.decided:
            bad = (Fraction(points[i]), Fraction(points[i + 1]))
            return MonotonicityCertificate(False, i, bad, max_bits)
    return MonotonicityCertificate(True, len(points) - 1, None, max_bits)


def termwise_negativity_check(
    x: RealArg,
    m_terms: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> list[bool]:
    """Certify 1/p^x - (ln p / ln 3)/(p^x - 1) < 0 for the first odd primes.

    These are the summands of the derivative sign argument for the profile;
    entry i is True iff the term for the i-th odd prime is certified
    negative at x.
    """
    _check_domain(x)
    results: list[bool] = []
    for p in primes.odd_primes(m_terms):

        def term(bits: int, p: int = p) -> RealEnclosure:
            px = _pow_positive(p, x, bits)
            ln3 = ln_enclosure(RealEnclosure.from_rational(3, bits))
            lnp = ln_enclosure(RealEnclosure.from_rational(p, bits))
            return 1 / px - (lnp / ln3) / (px - 1)

        outcome = refine_until(
            term,
            lambda enc: True
            if enc.strictly_negative()
            else (False if enc.strictly_positive() else None),
            policy,
        )
        results.append(bool(outcome.decided and outcome.result))
    return results


# ---------------------------------------------------------------------------
# The best-possible constants
# ---------------------------------------------------------------------------


def beta_symbolic() -> PiRational:
    """beta = 9 (1 - 8/pi^2) as an exact rational function of pi^2."""
    return 9 * (1 - 8 / PiRational.pi_squared_power(1))


def two_pow_delta_symbolic() -> PiRational:
    """2^delta = 4 (1 - 6/pi^2) exactly, by definition of delta."""
    return 4 * (1 - 6 / PiRational.pi_squared_power(1))


def beta_prime_symbolic(m: int) -> PiRational:
    """beta'(m) = p_m^2 (1 - (8/pi^2) prod_{n<m} p_n^2/(p_n^2 - 1))."""
    if m < 2:
        raise ValueError("m must be >= 2")
    plist = primes.odd_primes(m)
    prod = Fraction(8)
    for p in plist.primes[: m - 1]:
        prod *= Fraction(p * p, p * p - 1)
    pm = plist.primes[m - 1]
    return pm * pm * (1 - prod / PiRational.pi_squared_power(1))


def delta_enclosure(bits: int) -> RealEnclosure:
    """delta = 2 + ln(1 - 6/pi^2)/ln 2, the extreme exponent shift."""
    u = pow_int(pi_enclosure(bits), 2)
    return 2 + ln_enclosure(1 - 6 / u) / ln2_enclosure(bits)


@dataclass(frozen=True)
class Constants:
    """The extreme admissible constants of the bound families.

    alpha and theta are exact (limits 1 and 0); beta, delta and the
    generalized beta'(m) are certified enclosures.
    """

    alpha: Fraction
    theta: Fraction
    beta: RealEnclosure
    delta: RealEnclosure
    beta_prime: dict[int, RealEnclosure]
    precision_bits: int


def compute_constants(bits: int = 128, m_max: int = 5) -> Constants:
    """Enclose beta, delta and beta'(2..m_max); verify the ratio identity.

    Checks both numerically and exactly that beta / (2^delta - 1) = 3:
    numerically the enclosure quotient must contain 3, and symbolically
    (9 - 72/u) / (3 - 24/u) reduces to the constant 3 in Q(u).
    """
    if bits < 64:
        raise ValueError("precision_bits must be >= 64")
    beta = beta_symbolic().evaluate(bits)
    delta = delta_enclosure(bits)
    ratio_sym = beta_symbolic() / (two_pow_delta_symbolic() - 1)
    if ratio_sym.as_rational() != 3:
        raise ArithmeticError("symbolic ratio beta/(2^delta - 1) failed to equal 3")
    two_pow_delta = exp_enclosure(delta * ln2_enclosure(bits))
    ratio = beta / (two_pow_delta - 1)
    if not ratio.contains(3):
        raise ArithmeticError("numeric enclosure of beta/(2^delta - 1) lost 3")
    beta_prime = {
        m: beta_prime_symbolic(m).evaluate(bits) for m in range(2, m_max + 1)
    }
    return Constants(
        alpha=Fraction(1),
        theta=Fraction(0),
        beta=beta,
        delta=delta,
        beta_prime=beta_prime,
        precision_bits=bits,
    )

"""Catalogue of certified lower/upper bounds for |B_{2k}|.

Each entry is a :class:`BoundSpec` naming one inequality family, its side,
its parameters and its validity domain in k.  The evaluator produces
certified enclosures of the bound values; the verifier turns each instance
into a trichotomy verdict:

  * ``HOLDS_STRICTLY``  -- the gap enclosure is strictly on the correct side;
  * ``HOLDS_WITH_EQUALITY`` -- adaptive refinement cannot separate the sides
    and exact arithmetic in Q(pi^2) proves the bound *equals* |B_{2k}|;
  * ``FAILS``           -- the gap enclosure is strictly on the wrong side;
  * ``UNDECIDED``       -- the precision cap was reached without a proof.

All bounds except the two Stirling-formula families are exact rational
functions of pi^2 (see :mod:`bernbound.pirational`), so their gaps are
evaluated with pi as the only approximated quantity and equality cases are
settled exactly.  Equality occurs in exactly four situations: the even-zeta
upper bound at k = n and the three best-constant upper bounds at k = 1
(where the constants delta, beta and beta'(m) are calibrated to touch).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from . import exact, primes
from .enclosure import (
    DEFAULT_POLICY,
    DomainError,
    PrecisionPolicy,
    RealEnclosure,
    exp_enclosure,
    pi_enclosure,
    pow_int,
    refine_until,
    root_enclosure,
)
from .pirational import PiRational
from .zeta import beta_prime_symbolic, beta_symbolic

__all__ = [
    "CATALOG_IDS",
    "Side",
    "VerdictStatus",
    "Verdict",
    "Relation",
    "ParamError",
    "BoundSpec",
    "make_spec",
    "default_catalog",
    "symbolic_bound",
    "evaluate_bound",
    "signed_gap",
    "verify",
    "known_equality",
    "identity_check_fourier",
    "ProductVsSum",
    "product_vs_sum_check",
    "SharpnessMatrix",
    "sharpness_order",
]


class ParamError(ValueError):
    """Missing or invalid bound parameters."""


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


class VerdictStatus(enum.Enum):
    HOLDS_STRICTLY = "HoldsStrictly"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    FAILS = "Fails"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    precision_bits: int
    gap: RealEnclosure


class Relation(enum.Enum):
    TIGHTER_STRICTLY = "TighterStrictly"
    LOOSER = "Looser"
    EQUAL = "Equal"
    UNDECIDED = "Undecided"


ParamA = Union[int, Fraction, RealEnclosure]

# id -> (side, required params, base k_min)
_REGISTRY: dict[str, tuple[Side, frozenset[str], int]] = {
    "classic_lower_1_1": (Side.LOWER, frozenset(), 1),
    "classic_upper_1_1": (Side.UPPER, frozenset(), 1),
    "leeming_lower_1_2": (Side.LOWER, frozenset(), 2),
    "leeming_upper_1_2": (Side.UPPER, frozenset(), 2),
    "daniello_lower_1_4": (Side.LOWER, frozenset(), 1),
    "daniello_stirling_lower_1_5": (Side.LOWER, frozenset(), 1),
    "odd_sum_lower_1_7": (Side.LOWER, frozenset(), 1),
    "alzer_lower_1_9": (Side.LOWER, frozenset(), 1),
    "alzer_upper_1_9": (Side.UPPER, frozenset(), 1),
    "ge_upper_1_10": (Side.UPPER, frozenset({"n"}), 1),
    "partial_sum_lower_1_11": (Side.LOWER, frozenset({"m"}), 1),
    "odd_partial_lower_1_12": (Side.LOWER, frozenset({"m"}), 1),
    "euler_product_lower_2_1": (Side.LOWER, frozenset({"m"}), 1),
    "euler_product0_lower_2_4": (Side.LOWER, frozenset({"m"}), 1),
    "param_a_lower_2_5": (Side.LOWER, frozenset({"a"}), 1),
    "mixed_product_lower_2_6": (Side.LOWER, frozenset({"m", "a"}), 1),
    "best_const_lower_2_7": (Side.LOWER, frozenset(), 1),
    "best_const_upper_2_7": (Side.UPPER, frozenset(), 1),
    "general_lower_2_8": (Side.LOWER, frozenset({"m"}), 1),
    "general_upper_2_8": (Side.UPPER, frozenset({"m"}), 1),
}

CATALOG_IDS: tuple[str, ...] = tuple(_REGISTRY)


@dataclass(frozen=True)
class BoundSpec:
    """One parameterized inequality instance from the catalogue."""

    bound_id: str
    side: Side
    m: Optional[int] = None
    n: Optional[int] = None
    a: Optional[ParamA] = None
    k_min: int = 1

    def in_domain(self, k: int) -> bool:
        return k >= self.k_min

    @property
    def label(self) -> str:
        parts = []
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.a is not None:
            a = self.a
            parts.append(f"a={a}" if not isinstance(a, RealEnclosure) else "a=<enc>")
        return self.bound_id if not parts else f"{self.bound_id}[{','.join(parts)}]"


def _a_lower_bound(a: ParamA) -> Fraction:
    """Exact lower endpoint of the parameter a (for precondition checks)."""
    if isinstance(a, RealEnclosure):
        return a.bounds_as_fractions()[0]
    return Fraction(a)


def make_spec(
    bound_id: str,
    m: Optional[int] = None,
    n: Optional[int] = None,
    a: Optional[ParamA] = None,
) -> BoundSpec:
    """Validated BoundSpec for a catalogue id.

    Raises :class:`ParamError` for missing/extra/invalid parameters; the
    validity preconditions are a >= 3 for the single-parameter bound,
    a >= p_m for the mixed product, m >= 2 for the generalized best-constant
    pair, and m >= 0/1, n >= 1 elsewhere.
    """
    info = _REGISTRY.get(bound_id)
    if info is None:
        raise ParamError(f"unknown catalogue id {bound_id!r}")
    side, required, k_min = info
    provided = {
        name for name, val in (("m", m), ("n", n), ("a", a)) if val is not None
    }
    if provided != required:
        raise ParamError(
            f"{bound_id} requires params {sorted(required)}, got {sorted(provided)}"
        )
    if m is not None:
        min_m = {
            "odd_partial_lower_1_12": 0,
            "euler_product0_lower_2_4": 0,
            "general_lower_2_8": 2,
            "general_upper_2_8": 2,
        }.get(bound_id, 1)
        if m < min_m:
            raise ParamError(f"{bound_id} needs m >= {min_m}")
    if n is not None and n < 1:
        raise ParamError(f"{bound_id} needs n >= 1")
    if a is not None:
        if isinstance(a, int):
            a = Fraction(a)
        threshold = Fraction(3)
        if bound_id == "mixed_product_lower_2_6":
            threshold = Fraction(primes.nth_odd_prime(m))
        if _a_lower_bound(a) < threshold:
            raise ParamError(f"{bound_id} needs a >= {threshold}")
    if bound_id == "ge_upper_1_10":
        k_min = n
    return BoundSpec(bound_id, side, m=m, n=n, a=a, k_min=k_min)


def default_catalog() -> tuple[BoundSpec, ...]:
    """One representative instance per catalogue id.

    Parameter defaults: the reference-table truncation m=1 for the Euler
    products, m=3 / m=1 for the partial sums (the worked instances of their
    families), n=1 for the even-zeta upper bound, a=3 and (m=2, a=6) for the
    parameterized families, and m=2 for the generalized best-constant pair.
    """
    return (
        make_spec("classic_lower_1_1"),
        make_spec("classic_upper_1_1"),
        make_spec("leeming_lower_1_2"),
        make_spec("leeming_upper_1_2"),
        make_spec("daniello_lower_1_4"),
        make_spec("daniello_stirling_lower_1_5"),
        make_spec("odd_sum_lower_1_7"),
        make_spec("alzer_lower_1_9"),
        make_spec("alzer_upper_1_9"),
        make_spec("ge_upper_1_10", n=1),
        make_spec("partial_sum_lower_1_11", m=3),
        make_spec("odd_partial_lower_1_12", m=1),
        make_spec("euler_product_lower_2_1", m=1),
        make_spec("euler_product0_lower_2_4", m=1),
        make_spec("param_a_lower_2_5", a=3),
        make_spec("mixed_product_lower_2_6", m=2, a=6),
        make_spec("best_const_lower_2_7"),
        make_spec("best_const_upper_2_7"),
        make_spec("general_lower_2_8", m=2),
        make_spec("general_upper_2_8", m=2),
    )


# ---------------------------------------------------------------------------
# Symbolic evaluation (exact rational functions of pi^2)
# ---------------------------------------------------------------------------


def _prefactor_even(k: int) -> PiRational:
    """2 (2k)! / (2 pi)^(2k)."""
    return PiRational.from_rational(
        Fraction(2 * exact.factorial(2 * k), 4**k)
    ) * PiRational.pi_squared_power(-k)


def _prefactor_odd(k: int) -> PiRational:
    """2 (2k)! / (pi^(2k) (2^(2k) - 1))."""
    return PiRational.from_rational(
        Fraction(2 * exact.factorial(2 * k), 4**k - 1)
    ) * PiRational.pi_squared_power(-k)


def _odd_prime_product(count: int, k: int) -> Fraction:
    prod = Fraction(1)
    for p in primes.odd_primes(count) if count else ():
        q = p ** (2 * k)
        prod *= Fraction(q, q - 1)
    return prod


def symbolic_bound(spec: BoundSpec, k: int) -> Optional[PiRational]:
    """Exact value of the bound in Q(pi^2), or None for Stirling-type bounds.

    The parameter-a bounds are symbolic only when a is exact rational.
    """
    bid = spec.bound_id
    if bid == "classic_lower_1_1":
        return _prefactor_even(k)
    if bid == "classic_upper_1_1":
        return PiRational.from_rational(
            Fraction(exact.factorial(2 * k), 2 ** (2 * k - 1) - 1)
        ) * PiRational.pi_squared_power(-k)
    if bid == "daniello_lower_1_4":
        return _prefactor_even(k) * (1 + Fraction(1, 4**k))
    if bid == "odd_sum_lower_1_7":
        return _prefactor_odd(k)
    if bid == "alzer_lower_1_9":
        # with the extreme exponent shift 0 the factor 1/(1 - 2^(-2k))
        # collapses the even prefactor onto the odd one
        return _prefactor_odd(k)
    if bid == "alzer_upper_1_9":
        # 2^(delta - 2k) = 4^(1-k) (1 - 6/pi^2) exactly
        shift = Fraction(4) ** (1 - k) * (1 - 6 / PiRational.pi_squared_power(1))
        return _prefactor_even(k) / (1 - shift)
    if bid == "ge_upper_1_10":
        n = spec.n
        zeta_2n = PiRational.from_rational(
            exact.zeta_even_coefficient(n)
        ) * PiRational.pi_squared_power(n)
        return (
            Fraction(2 * (4**n - 1), 4**n)
            * zeta_2n
            * Fraction(exact.factorial(2 * k), 4**k - 1)
            * PiRational.pi_squared_power(-k)
        )
    if bid == "partial_sum_lower_1_11":
        total = sum(Fraction(1, i ** (2 * k)) for i in range(1, spec.m + 1))
        return _prefactor_even(k) * total
    if bid == "odd_partial_lower_1_12":
        total = sum(Fraction(1, (2 * i + 1) ** (2 * k)) for i in range(spec.m + 1))
        return _prefactor_odd(k) * total
    if bid == "euler_product_lower_2_1":
        return _prefactor_odd(k) * _odd_prime_product(spec.m, k)
    if bid == "euler_product0_lower_2_4":
        prod = Fraction(4**k, 4**k - 1) * _odd_prime_product(spec.m, k)
        return _prefactor_even(k) * prod
    if bid in ("param_a_lower_2_5", "mixed_product_lower_2_6"):
        if isinstance(spec.a, RealEnclosure):
            return None
        a_pow = Fraction(spec.a) ** (2 * k)
        value = _prefactor_odd(k) * Fraction(a_pow, 1) / (a_pow - 1)
        if bid == "mixed_product_lower_2_6":
            value = value * _odd_prime_product(spec.m - 1, k)
        return value
    if bid == "best_const_lower_2_7":
        return _prefactor_odd(k) * Fraction(9**k, 9**k - 1)
    if bid == "best_const_upper_2_7":
        return _prefactor_odd(k) * 9**k / (9**k - beta_symbolic())
    if bid == "general_lower_2_8":
        return _prefactor_odd(k) * _odd_prime_product(spec.m, k)
    if bid == "general_upper_2_8":
        pm = primes.nth_odd_prime(spec.m)
        head = _prefactor_odd(k) * _odd_prime_product(spec.m - 1, k)
        return head * pm ** (2 * k) / (pm ** (2 * k) - beta_prime_symbolic(spec.m))
    if bid in ("leeming_lower_1_2", "leeming_upper_1_2", "daniello_stirling_lower_1_5"):
        return None
    raise ParamError(f"unknown catalogue id {bid!r}")


# ---------------------------------------------------------------------------
# Numeric evaluation
# ---------------------------------------------------------------------------


def _stirling_form(k: int, bits: int, scale: int, corrected: bool) -> RealEnclosure:
    """scale * sqrt(pi k) * (k/(pi e))^(2k), optionally * (1 + 4^(-k))."""
    pi = pi_enclosure(bits)
    euler = exp_enclosure(RealEnclosure.from_rational(1, bits))
    value = scale * root_enclosure(pi * k, 2) * pow_int(k / (pi * euler), 2 * k)
    if corrected:
        value = value * (1 + Fraction(1, 4**k))
    return value


def evaluate_bound(spec: BoundSpec, k: int, bits: int) -> RealEnclosure:
    """Certified enclosure of the bound value at k.

    Raises DomainError outside the bound's k-domain.  Rational-in-pi^2 bounds
    go through the exact symbolic form, so only pi itself is approximated.
    """
    if not spec.in_domain(k):
        raise DomainError(f"{spec.label} is stated for k >= {spec.k_min}, got k={k}")
    return _evaluate_unchecked(spec, k, bits)


def _evaluate_unchecked(spec: BoundSpec, k: int, bits: int) -> RealEnclosure:
    sym = symbolic_bound(spec, k)
    if sym is not None:
        return sym.evaluate(bits)
    bid = spec.bound_id
    if bid == "leeming_lower_1_2":
        return _stirling_form(k, bits, 4, corrected=False)
    if bid == "leeming_upper_1_2":
        return _stirling_form(k, bits, 5, corrected=False)
    if bid == "daniello_stirling_lower_1_5":
        return _stirling_form(k, bits, 4, corrected=True)
    # parameter a supplied as an enclosure
    a_pow = pow_int(spec.a, 2 * k)
    value = _prefactor_odd(k).evaluate(bits) * (a_pow / (a_pow - 1))
    if bid == "mixed_product_lower_2_6":
        value = value * _odd_prime_product(spec.m - 1, k)
    return value


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _signed_gap_symbolic(spec: BoundSpec, k: int) -> Optional[PiRational]:
    sym = symbolic_bound(spec, k)
    if sym is None:
        return None
    b = exact.abs_bernoulli_even(k)
    return (b - sym) if spec.side is Side.LOWER else (sym - b)


def _signed_gap_numeric(spec: BoundSpec, k: int, bits: int) -> RealEnclosure:
    bound = _evaluate_unchecked(spec, k, bits)
    b = RealEnclosure.from_rational(exact.abs_bernoulli_even(k), bits)
    return (b - bound) if spec.side is Side.LOWER else (bound - b)


def signed_gap(spec: BoundSpec, k: int, bits: int) -> RealEnclosure:
    """Enclosure of the signed gap (positive iff the inequality holds).

    Lower bounds report |B_{2k}| - bound, upper bounds report
    bound - |B_{2k}|.
    """
    sym = _signed_gap_symbolic(spec, k)
    if sym is not None:
        return sym.evaluate(bits)
    return _signed_gap_numeric(spec, k, bits)


def known_equality(spec: BoundSpec, k: int) -> bool:
    """True for the four calibrated touching points of the catalogue."""
    if spec.bound_id == "ge_upper_1_10":
        return k == spec.n
    if spec.bound_id in ("alzer_upper_1_9", "best_const_upper_2_7", "general_upper_2_8"):
        return k == 1
    return False


def verify(
    spec: BoundSpec,
    k: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    enforce_domain: bool = True,
) -> Verdict:
    """Certified verdict for one (bound, k) instance.

    The signed gap (positive iff the inequality holds) is refined through the
    precision ladder; if it cannot be separated from zero at the cap, exact
    arithmetic in Q(pi^2) decides equality.  ``enforce_domain=False`` allows
    probing a bound outside its stated k-domain (where it may legitimately
    fail).
    """
    if enforce_domain and not spec.in_domain(k):
        raise DomainError(f"{spec.label} is stated for k >= {spec.k_min}, got k={k}")
    gap_sym = _signed_gap_symbolic(spec, k)

    def gap_at(bits: int) -> RealEnclosure:
        if gap_sym is not None:
            return gap_sym.evaluate(bits)
        return _signed_gap_numeric(spec, k, bits)

    def decide(gap: RealEnclosure) -> Optional[VerdictStatus]:
        if gap.strictly_positive():
            return VerdictStatus.HOLDS_STRICTLY
        if gap.strictly_negative():
            return VerdictStatus.FAILS
        return None

    outcome = refine_until(gap_at, decide, policy)
    if outcome.decided:
        return Verdict(outcome.result, outcome.precision_bits, gap_at(outcome.precision_bits))
    if gap_sym is not None and gap_sym.is_zero():
        zero = RealEnclosure.from_rational(0, outcome.precision_bits)
        return Verdict(VerdictStatus.HOLDS_WITH_EQUALITY, outcome.precision_bits, zero)
    return Verdict(VerdictStatus.UNDECIDED, outcome.precision_bits, gap_at(policy.max_bits))


# ---------------------------------------------------------------------------
# Series identity and product-vs-sum checks
# ---------------------------------------------------------------------------


def identity_check_fourier(k: int, truncation: int, bits: int) -> RealEnclosure:
    """Enclosure of 2 (2k)!/(2 pi)^(2k) (sum_{n<=N} n^(-2k) + tail).

    The tail over n > N is bracketed by the integral bounds
    (N+1)^(1-2k)/(2k-1) <= tail <= N^(1-2k)/(2k-1); the result provably
    contains |B_{2k}| and is checked to do so before returning.
    """
    if k < 1 or truncation < 1:
        raise ValueError("need k >= 1 and truncation >= 1")
    partial = RealEnclosure.from_rational(1, bits)
    for i in range(2, truncation + 1):
        partial = partial + 1 / RealEnclosure.from_rational(i ** (2 * k), bits)
    lo_tail = Fraction(1, (truncation + 1) ** (2 * k - 1) * (2 * k - 1))
    hi_tail = Fraction(1, truncation ** (2 * k - 1) * (2 * k - 1))
    tail = RealEnclosure.from_endpoints(lo_tail, hi_tail, bits)
    enclosure = _prefactor_even(k).evaluate(bits) * (partial + tail)
    if not enclosure.contains(exact.abs_bernoulli_even(k)):
        raise ArithmeticError(
            f"series enclosure for k={k}, N={truncation} lost the exact value"
        )
    return enclosure


@dataclass(frozen=True)
class ProductVsSum:
    """Exact comparison prod p_i^(2k)/(p_i^(2k)-1) vs sum (2i+1)^(-2k)."""

    product: Fraction
    total: Fraction
    product_exceeds: bool


def product_vs_sum_check(m: int, k: int) -> ProductVsSum:
    """Exact-rational check that the m-factor product beats the m+1-term sum."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    product = _odd_prime_product(m, k)
    total = sum(Fraction(1, (2 * i + 1) ** (2 * k)) for i in range(m + 1))
    return ProductVsSum(product, total, product > total)


# ---------------------------------------------------------------------------
# Sharpness ordering
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SharpnessMatrix:
    """Pairwise tightness relations over a k-range.

    ``relation(i, j, k)`` answers whether specs[i] is a strictly tighter
    bound than specs[j] at k (same side for all specs).
    """

    specs: tuple[BoundSpec, ...]
    ks: tuple[int, ...]
    entries: dict[tuple[int, int, int], Relation]

    def relation(self, i: int, j: int, k: int) -> Relation:
        return self.entries[(i, j, k)]


def _compare_pair(
    a: BoundSpec, b: BoundSpec, k: int, policy: PrecisionPolicy
) -> Relation:
    """Strict value comparison mapped to tightness for the shared side."""
    sym_a = symbolic_bound(a, k)
    sym_b = symbolic_bound(b, k)
    sign: Optional[int]
    if sym_a is not None and sym_b is not None:
        diff = sym_a - sym_b
        if diff.is_zero():
            return Relation.EQUAL
        sign = diff.exact_sign()  # same-power-of-pi pairs decide rationally
        if sign is None:
            outcome = refine_until(
                diff.evaluate,
                lambda e: 1 if e.strictly_positive() else (-1 if e.strictly_negative() else None),
                policy,
            )
            if not outcome.decided:
                return Relation.UNDECIDED
            sign = outcome.result
    else:
        def diff_at(bits: int) -> RealEnclosure:
            return _evaluate_unchecked(a, k, bits) - _evaluate_unchecked(b, k, bits)

        outcome = refine_until(
            diff_at,
            lambda e: 1 if e.strictly_positive() else (-1 if e.strictly_negative() else None),
            policy,
        )
        if not outcome.decided:
            return Relation.UNDECIDED
        sign = outcome.result
    # larger is tighter for lower bounds, smaller is tighter for upper bounds
    tighter = sign > 0 if a.side is Side.LOWER else sign < 0
    return Relation.TIGHTER_STRICTLY if tighter else Relation.LOOSER


def sharpness_order(
    specs: Sequence[BoundSpec],
    side: Side,
    ks: Iterable[int],
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> SharpnessMatrix:
    """Certified pairwise tightness matrix for same-side bounds."""
    specs = tuple(specs)
    ks = tuple(ks)
    if any(s.side is not side for s in specs):
        raise ValueError("all specs must be on the requested side")
    for s in specs:
        for k in ks:
            if not s.in_domain(k):
                raise DomainError(f"{s.label} undefined at k={k}")
    entries: dict[tuple[int, int, int], Relation] = {}
    for i, a in enumerate(specs):
        for j, b in enumerate(specs):
            if i == j:
                continue
            for k in ks:
                entries[(i, j, k)] = _compare_pair(a, b, k, policy)
    return SharpnessMatrix(specs, ks, entries)

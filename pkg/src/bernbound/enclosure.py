"""Directed-rounded enclosure arithmetic over arbitrary-precision reals.

A :class:`RealEnclosure` is a pair ``[lo, hi]`` of MPFR floats (dyadic
rationals, i.e. integer times a power of two) with the guarantee that the
exact mathematical value of the computation it represents lies inside the
interval.  Every operation rounds the lower endpoint toward -inf and the
upper endpoint toward +inf, so containment is preserved through arbitrary
pipelines:

    x in [x.lo, x.hi]  and  y in [y.lo, y.hi]
        ==>  x (op) y  in  (enclosure op)(X, Y)

MPFR primitives are correctly rounded, so evaluating a monotone function at
directed-rounded endpoints yields a valid enclosure of the true image.  This
is strictly stronger than "faithful" rounding: the directed results provably
bracket the exact value.

Strict inequalities between enclosed quantities are decided by
:func:`compare`; quantities that cannot be separated at a given precision are
re-evaluated at doubled precision by :func:`refine_until` up to a policy cap.
True equalities can never be separated and surface as ``Undecided``; callers
with an exact representation (rational, or rational in pi^2) should resolve
those symbolically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Optional, TypeVar, Union

import gmpy2

__all__ = [
    "DomainError",
    "RealEnclosure",
    "PrecisionPolicy",
    "Comparison",
    "RefineOutcome",
    "arith",
    "compare",
    "refine_until",
    "pi_enclosure",
    "ln_enclosure",
    "exp_enclosure",
    "root_enclosure",
    "pow_int",
    "pow_enclosure",
]

Rational = Union[int, Fraction]
EncLike = Union["RealEnclosure", int, Fraction]


class DomainError(ValueError):
    """Operation applied outside its mathematical domain.

    Raised for division by an interval containing zero, logarithms of
    intervals touching the non-positive axis, and even roots of intervals
    dipping below zero.
    """


# Context cache: building gmpy2 contexts is cheap but not free, and the
# adaptive driver re-uses the same handful of precisions constantly.
_CTX_DOWN: dict[int, gmpy2.context] = {}
_CTX_UP: dict[int, gmpy2.context] = {}

_MPFR_ZERO = gmpy2.mpfr(0)


def _down(bits: int) -> gmpy2.context:
    ctx = _CTX_DOWN.get(bits)
    if ctx is None:
        ctx = gmpy2.context(precision=bits, round=gmpy2.RoundDown)
        _CTX_DOWN[bits] = ctx
    return ctx


def _up(bits: int) -> gmpy2.context:
    ctx = _CTX_UP.get(bits)
    if ctx is None:
        ctx = gmpy2.context(precision=bits, round=gmpy2.RoundUp)
        _CTX_UP[bits] = ctx
    return ctx


def _to_mpq(value: Rational) -> gmpy2.mpq:
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    return gmpy2.mpq(value)


def _neg_exact(x: gmpy2.mpfr) -> gmpy2.mpfr:
    # negation at the operand's own precision is always exact; going through
    # the raw operator would round to the ambient (53-bit) thread context
    return _down(max(x.precision, 2)).minus(x)


@dataclass(frozen=True)
class RealEnclosure:
    """Certified interval ``[lo, hi]`` containing one exact real value.

    ``precision_bits`` records the working precision the enclosure was
    produced at; the endpoints themselves may carry more bits.  Instances are
    immutable and safe to share across threads.
    """

    lo: gmpy2.mpfr
    hi: gmpy2.mpfr
    precision_bits: int

    def __post_init__(self) -> None:
        if not (gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)):
            raise OverflowError("enclosure endpoint overflowed MPFR range")
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value: Rational, bits: int) -> "RealEnclosure":
        """Tightest representable enclosure of an exact rational."""
        q = _to_mpq(value)
        lo = _down(bits).add(q, _MPFR_ZERO)
        hi = _up(bits).add(q, _MPFR_ZERO)
        return RealEnclosure(lo, hi, bits)

    @staticmethod
    def from_endpoints(lo: Rational, hi: Rational, bits: int) -> "RealEnclosure":
        """Enclosure of an unknown value known to lie in ``[lo, hi]``."""
        ql, qh = _to_mpq(lo), _to_mpq(hi)
        if ql > qh:
            raise ValueError("lo > hi")
        return RealEnclosure(
            _down(bits).add(ql, _MPFR_ZERO), _up(bits).add(qh, _MPFR_ZERO), bits
        )

    # ---- inspection ----------------------------------------------------

    def bounds_as_fractions(self) -> tuple[Fraction, Fraction]:
        """Exact endpoints (MPFR values are dyadic, so this is lossless)."""
        lo = gmpy2.mpq(self.lo)
        hi = gmpy2.mpq(self.hi)
        return (
            Fraction(int(lo.numerator), int(lo.denominator)),
            Fraction(int(hi.numerator), int(hi.denominator)),
        )

    def width_fraction(self) -> Fraction:
        lo, hi = self.bounds_as_fractions()
        return hi - lo

    def contains(self, value: Rational) -> bool:
        q = _to_mpq(value)
        return self.lo <= q <= self.hi

    def contains_enclosure(self, other: "RealEnclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "RealEnclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def midpoint_float(self) -> float:
        lo, hi = self.bounds_as_fractions()
        return float((lo + hi) / 2)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"RealEnclosure([{gmpy2.mpfr(self.lo, 24)}, {gmpy2.mpfr(self.hi, 24)}],"
            f" bits={self.precision_bits})"
        )

    # ---- arithmetic ----------------------------------------------------

    def _coerce(self, other: EncLike) -> "RealEnclosure":
        if isinstance(other, RealEnclosure):
            return other
        return RealEnclosure.from_rational(other, self.precision_bits)

    def _bits_with(self, other: "RealEnclosure") -> int:
        return max(self.precision_bits, other.precision_bits)

    def __add__(self, other: EncLike) -> "RealEnclosure":
        o = self._coerce(other)
        p = self._bits_with(o)
        return RealEnclosure(
            _down(p).add(self.lo, o.lo), _up(p).add(self.hi, o.hi), p
        )

    __radd__ = __add__

    def __neg__(self) -> "RealEnclosure":
        return RealEnclosure(_neg_exact(self.hi), _neg_exact(self.lo), self.precision_bits)

    def __sub__(self, other: EncLike) -> "RealEnclosure":
        o = self._coerce(other)
        p = self._bits_with(o)
        return RealEnclosure(
            _down(p).sub(self.lo, o.hi), _up(p).sub(self.hi, o.lo), p
        )

    def __rsub__(self, other: EncLike) -> "RealEnclosure":
        return (-self).__add__(other)

    def __mul__(self, other: EncLike) -> "RealEnclosure":
        o = self._coerce(other)
        p = self._bits_with(o)
        dn, up = _down(p), _up(p)
        los = (
            dn.mul(self.lo, o.lo),
            dn.mul(self.lo, o.hi),
            dn.mul(self.hi, o.lo),
            dn.mul(self.hi, o.hi),
        )
        his = (
            up.mul(self.lo, o.lo),
            up.mul(self.lo, o.hi),
            up.mul(self.hi, o.lo),
            up.mul(self.hi, o.hi),
        )
        return RealEnclosure(min(los), max(his), p)

    __rmul__ = __mul__

    def __truediv__(self, other: EncLike) -> "RealEnclosure":
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise DomainError("division by an enclosure containing zero")
        p = self._bits_with(o)
        dn, up = _down(p), _up(p)
        los = (
            dn.div(self.lo, o.lo),
            dn.div(self.lo, o.hi),
            dn.div(self.hi, o.lo),
            dn.div(self.hi, o.hi),
        )
        his = (
            up.div(self.lo, o.lo),
            up.div(self.lo, o.hi),
            up.div(self.hi, o.lo),
            up.div(self.hi, o.hi),
        )
        return RealEnclosure(min(los), max(his), p)

    def __rtruediv__(self, other: EncLike) -> "RealEnclosure":
        return self._coerce(other).__truediv__(self)


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------


def pow_int(x: RealEnclosure, n: int) -> RealEnclosure:
    """Enclosure of ``x**n`` for integer ``n`` (negative n needs 0 not in x)."""
    p = x.precision_bits
    if n == 0:
        return RealEnclosure.from_rational(1, p)
    if n < 0:
        return 1 / pow_int(x, -n)
    dn, up = _down(p), _up(p)
    if x.lo >= 0:
        return RealEnclosure(dn.pow(x.lo, n), up.pow(x.hi, n), p)
    if x.hi <= 0:
        if n % 2 == 1:
            return RealEnclosure(dn.pow(x.lo, n), up.pow(x.hi, n), p)
        return RealEnclosure(dn.pow(x.hi, n), up.pow(x.lo, n), p)
    # interval straddles zero
    if n % 2 == 1:
        return RealEnclosure(dn.pow(x.lo, n), up.pow(x.hi, n), p)
    return RealEnclosure(gmpy2.mpfr(0), max(up.pow(x.lo, n), up.pow(x.hi, n)), p)


def root_enclosure(x: RealEnclosure, n: int) -> RealEnclosure:
    """Enclosure of the principal n-th root; requires ``x.lo >= 0``, n >= 1."""
    if n < 1:
        raise ValueError("root order must be >= 1")
    if x.lo < 0:
        raise DomainError("root of an enclosure extending below zero")
    p = x.precision_bits
    return RealEnclosure(_down(p).rootn(x.lo, n), _up(p).rootn(x.hi, n), p)


def exp_enclosure(x: RealEnclosure) -> RealEnclosure:
    p = x.precision_bits
    return RealEnclosure(_down(p).exp(x.lo), _up(p).exp(x.hi), p)


def ln_enclosure(x: RealEnclosure) -> RealEnclosure:
    if x.lo <= 0:
        raise DomainError("log of an enclosure touching the non-positive axis")
    p = x.precision_bits
    return RealEnclosure(_down(p).log(x.lo), _up(p).log(x.hi), p)


def pow_enclosure(base: EncLike, expo: EncLike, bits: Optional[int] = None) -> RealEnclosure:
    """Enclosure of ``base ** expo`` for real exponents, via exp(expo*ln base).

    Requires a strictly positive base.  Integer exponents should use
    :func:`pow_int`, which is sharper and has no positivity restriction.
    """
    if bits is None:
        bits = max(
            b.precision_bits for b in (base, expo) if isinstance(b, RealEnclosure)
        )
    b = base if isinstance(base, RealEnclosure) else RealEnclosure.from_rational(base, bits)
    e = expo if isinstance(expo, RealEnclosure) else RealEnclosure.from_rational(expo, bits)
    return exp_enclosure(e * ln_enclosure(b))


_ARITH_BINARY = {"add", "sub", "mul", "div"}


def arith(op: str, *args: EncLike) -> RealEnclosure:
    """Uniform dispatcher over the supported enclosure operations.

    ``op`` is one of ``add, sub, mul, div, pow_int, root, exp, ln``.  Operands
    may be enclosures or exact rationals (exact values are converted to
    tight two-sided enclosures first).
    """
    if op in _ARITH_BINARY:
        x, y = args
        if not isinstance(x, RealEnclosure):
            bits = y.precision_bits if isinstance(y, RealEnclosure) else 64
            x = RealEnclosure.from_rational(x, bits)
        if op == "add":
            return x + y
        if op == "sub":
            return x - y
        if op == "mul":
            return x * y
        return x / y
    if op == "pow_int":
        x, n = args
        return pow_int(x, n)
    if op == "root":
        x, n = args
        return root_enclosure(x, n)
    if op == "exp":
        (x,) = args
        return exp_enclosure(x)
    if op == "ln":
        (x,) = args
        return ln_enclosure(x)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

_PI_CACHE: dict[int, RealEnclosure] = {}
_LN2_CACHE: dict[int, RealEnclosure] = {}


def pi_enclosure(bits: int) -> RealEnclosure:
    """Enclosure of pi with ``hi - lo <= 2**(4 - bits)``.

    MPFR's pi is correctly rounded, so the directed endpoints differ by at
    most one unit in the last place (2**(2-bits) at pi's magnitude), well
    inside the advertised width.
    """
    if bits < 16:
        raise ValueError("precision_bits must be >= 16")
    enc = _PI_CACHE.get(bits)
    if enc is None:
        enc = RealEnclosure(_down(bits).const_pi(), _up(bits).const_pi(), bits)
        _PI_CACHE[bits] = enc
    return enc


def ln2_enclosure(bits: int) -> RealEnclosure:
    enc = _LN2_CACHE.get(bits)
    if enc is None:
        enc = RealEnclosure(_down(bits).const_log2(), _up(bits).const_log2(), bits)
        _LN2_CACHE[bits] = enc
    return enc


# ---------------------------------------------------------------------------
# Comparison and adaptive refinement
# ---------------------------------------------------------------------------


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    OVERLAPPING = "overlapping"


def compare(a: RealEnclosure, b: RealEnclosure) -> Comparison:
    """Certified order of the two enclosed values.

    ``LESS``/``GREATER`` are proofs of strict inequality; ``OVERLAPPING``
    only means this precision cannot separate them.
    """
    if a.hi < b.lo:
        return Comparison.LESS
    if a.lo > b.hi:
        return Comparison.GREATER
    return Comparison.OVERLAPPING


@dataclass(frozen=True)
class PrecisionPolicy:
    """Adaptive-precision schedule: start, multiply, cap."""

    initial_bits: int = 128
    max_bits: int = 16384
    growth: int = 2

    def __post_init__(self) -> None:
        if self.initial_bits < 16:
            raise ValueError("initial_bits must be >= 16")
        if self.initial_bits > self.max_bits:
            raise ValueError("initial_bits must not exceed max_bits")
        if self.growth < 2:
            raise ValueError("growth must be >= 2")

    def ladder(self):
        bits = self.initial_bits
        while bits <= self.max_bits:
            yield bits
            if bits == self.max_bits:
                return
            bits = min(bits * self.growth, self.max_bits)


DEFAULT_POLICY = PrecisionPolicy()

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class RefineOutcome(Generic[R]):
    """Result of an adaptive refinement run.

    ``decided`` distinguishes success from precision exhaustion; ``Undecided``
    is an ordinary value, not an error (true equalities always exhaust).
    """

    decided: bool
    result: Optional[R]
    precision_bits: int


def refine_until(
    computation: Callable[[int], T],
    decision: Callable[[T], Optional[R]],
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> RefineOutcome[R]:
    """Re-run ``computation`` at doubling precision until ``decision`` resolves.

    ``decision`` returns ``None`` while the enclosure is too wide to decide
    and the desired result once it can be certified.
    """
    bits = policy.initial_bits
    for bits in policy.ladder():
        value = computation(bits)
        outcome = decision(value)
        if outcome is not None:
            return RefineOutcome(True, outcome, bits)
    return RefineOutcome(False, None, bits)

"""Exact arithmetic in the field of rational functions of pi^2.

Every catalogued bound except the Stirling-type ones is, after clearing the
defining identities (zeta(2k) = q_k pi^(2k), 2^delta = 4(1 - 6/pi^2)), a
ratio of two polynomials in u = pi^2 with rational coefficients.  Because pi
is transcendental, u satisfies no nonzero polynomial with rational
coefficients, so the evaluation map Q(X) -> R, X |-> pi^2 is injective:

  * two reduced rational functions are equal at u = pi^2  iff  they are the
    same rational function (a polynomial identity, decidable exactly);
  * a rational function takes a rational value at u = pi^2  iff  it is a
    constant.

That turns "does this bound equal |B_{2k}| exactly?" into exact polynomial
arithmetic, which is how the verifier proves its HoldsWithEquality verdicts.
For numeric work, :meth:`PiRational.evaluate` substitutes an enclosure of
pi^2, so only the single transcendental pi is ever approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .enclosure import RealEnclosure, pi_enclosure, pow_int

__all__ = ["PiRational", "PI_SQUARED", "ONE", "ZERO"]

Poly = tuple[Fraction, ...]  # dense coefficients, low degree first, no trailing zeros

_ZERO_POLY: Poly = ()
_ONE_POLY: Poly = (Fraction(1),)


def _trim(coeffs: list[Fraction]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return _ZERO_POLY
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pscale(a: Poly, s: Fraction) -> Poly:
    if s == 0:
        return _ZERO_POLY
    return tuple(c * s for c in a)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    lead = b[-1]
    while len(rem) >= len(b):
        factor = rem[-1] / lead
        shift = len(rem) - len(b)
        quotient[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        del rem[-1]
        while rem and rem[-1] == 0:
            del rem[-1]
    return _trim(quotient), _trim(rem)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return _ZERO_POLY
    return _pscale(a, 1 / a[-1])  # monic


def _peval(a: Poly, u: RealEnclosure, bits: int) -> RealEnclosure:
    acc = RealEnclosure.from_rational(0, bits)
    for c in reversed(a):
        acc = acc * u + c
    return acc


@dataclass(frozen=True)
class PiRational:
    """Reduced ratio of polynomials in u = pi^2 (denominator monic)."""

    num: Poly
    den: Poly

    @staticmethod
    def _make(num: Poly, den: Poly) -> "PiRational":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return PiRational(_ZERO_POLY, _ONE_POLY)
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = _pscale(num, 1 / lead)
            den = _pscale(den, 1 / lead)
        return PiRational(num, den)

    @staticmethod
    def from_rational(value: Union[int, Fraction]) -> "PiRational":
        q = Fraction(value)
        if q == 0:
            return PiRational(_ZERO_POLY, _ONE_POLY)
        return PiRational((q,), _ONE_POLY)

    @staticmethod
    def pi_squared_power(k: int) -> "PiRational":
        """u^k, with u = pi^2; negative k gives 1/u^|k|."""
        if k >= 0:
            return PiRational(tuple([Fraction(0)] * k) + (Fraction(1),), _ONE_POLY)
        return PiRational(_ONE_POLY, tuple([Fraction(0)] * (-k)) + (Fraction(1),))

    # ---- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_rational(self) -> Optional[Fraction]:
        if not self.is_rational():
            return None
        if not self.num:
            return Fraction(0)
        return self.num[0] / self.den[0]

    def exact_sign(self) -> Optional[int]:
        """Sign at u = pi^2 when decidable without approximating pi.

        Returns 0 for the zero function and +-1 when numerator and
        denominator are both monomials (u > 0 makes the sign the ratio of the
        leading coefficients); None otherwise.
        """
        if not self.num:
            return 0

        def monomial_coeff(p: Poly) -> Optional[Fraction]:
            nonzero = [c for c in p if c != 0]
            return nonzero[0] if len(nonzero) == 1 else None

        cn = monomial_coeff(self.num)
        cd = monomial_coeff(self.den)
        if cn is None or cd is None:
            return None
        return 1 if (cn > 0) == (cd > 0) else -1

    # ---- field operations ------------------------------------------------

    def _coerce(self, other) -> "PiRational":
        if isinstance(other, PiRational):
            return other
        return PiRational.from_rational(other)

    def __add__(self, other) -> "PiRational":
        o = self._coerce(other)
        return PiRational._make(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "PiRational":
        return PiRational(_pneg(self.num), self.den)

    def __sub__(self, other) -> "PiRational":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PiRational":
        return (-self) + other

    def __mul__(self, other) -> "PiRational":
        o = self._coerce(other)
        return PiRational._make(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PiRational":
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return PiRational._make(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other) -> "PiRational":
        return self._coerce(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiRational.from_rational(other)
        if not isinstance(other, PiRational):
            return NotImplemented
        # canonical forms: componentwise equality suffices
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # ---- numeric evaluation ----------------------------------------------

    def evaluate(self, bits: int) -> RealEnclosure:
        """Enclosure of the value at u = pi^2.

        Only pi is approximated; all coefficients enter exactly.  Raises
        DomainError if the denominator enclosure straddles zero, which a
        retry at higher precision resolves whenever the denominator does not
        actually vanish at pi^2.
        """
        u = pow_int(pi_enclosure(bits), 2)
        num = _peval(self.num, u, bits)
        den = _peval(self.den, u, bits)
        return num / den

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        def fmt(p: Poly) -> str:
            if not p:
                return "0"
            return " + ".join(
                f"{c}*u^{i}" if i else f"{c}" for i, c in enumerate(p) if c != 0
            )

        return f"PiRational(({fmt(self.num)}) / ({fmt(self.den)}))"


PI_SQUARED = PiRational.pi_squared_power(1)
ONE = PiRational.from_rational(1)
ZERO = PiRational.from_rational(0)

"""Certified decimal rendering and deterministic table emission.

Decimal output follows a truncation (floor-of-significand) convention: the
printed digits are the leading digits of the exact value, never rounded up.
A digit string is only emitted when the enclosure proves it: both endpoints
must truncate to the same significand, which in particular forces the
enclosure width below one unit in the last printed place.  All digit
extraction happens on exact rational endpoints (MPFR endpoints are dyadic),
so the renderer cannot itself introduce error.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .enclosure import DEFAULT_POLICY, PrecisionPolicy, RealEnclosure, refine_until

__all__ = [
    "PrecisionShortfall",
    "certified_truncation",
    "truncate_with_refinement",
    "format_fraction",
    "format_fraction_decimal",
    "render_rows",
]


class PrecisionShortfall(ArithmeticError):
    """Enclosure too wide to certify the requested digits."""


def _floor_log10(value: Fraction) -> int:
    """Largest e with 10^e <= value, for value > 0."""
    assert value > 0
    e = len(str(value.numerator)) - len(str(value.denominator))
    while Fraction(10) ** e > value:
        e -= 1
    while Fraction(10) ** (e + 1) <= value:
        e += 1
    return e


def _truncate_positive(lo: Fraction, hi: Fraction, sig_digits: int) -> str:
    """Certified truncated scientific string for a positive enclosure."""
    e = _floor_log10(hi)
    for exponent in (e, e - 1):
        scale = Fraction(10) ** (sig_digits - 1 - exponent)
        m_lo = (lo * scale).numerator // (lo * scale).denominator
        m_hi = (hi * scale).numerator // (hi * scale).denominator
        if m_lo != m_hi:
            raise PrecisionShortfall(
                f"cannot certify {sig_digits} digits: mantissa {m_lo} vs {m_hi}"
            )
        if 10 ** (sig_digits - 1) <= m_lo < 10**sig_digits:
            digits = str(m_lo)
            mantissa = digits[0] if sig_digits == 1 else f"{digits[0]}.{digits[1:]}"
            return f"{mantissa}e{exponent}"
    raise PrecisionShortfall("mantissa escaped expected range")


def certified_truncation(enclosure: RealEnclosure, sig_digits: int) -> str:
    """Truncated significand + exponent, certified by the enclosure.

    The sign must be certified too; an enclosure straddling zero renders only
    if it is exactly [0, 0] (printed as "0").
    """
    if sig_digits < 1:
        raise ValueError("sig_digits must be >= 1")
    lo, hi = enclosure.bounds_as_fractions()
    if lo == 0 and hi == 0:
        return "0"
    if lo > 0:
        return _truncate_positive(lo, hi, sig_digits)
    if hi < 0:
        return "-" + _truncate_positive(-hi, -lo, sig_digits)
    raise PrecisionShortfall("sign not certified by enclosure")


def truncate_with_refinement(
    compute: Callable[[int], RealEnclosure],
    sig_digits: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> str:
    """Certified truncation, re-evaluating at higher precision as needed."""

    def attempt(bits: int) -> Optional[str]:
        try:
            return certified_truncation(compute(bits), sig_digits)
        except PrecisionShortfall:
            return None

    outcome = refine_until(attempt, lambda s: s, policy)
    if not outcome.decided:
        raise PrecisionShortfall(
            f"{sig_digits} digits not certifiable within {policy.max_bits} bits"
        )
    return outcome.result


def format_fraction(value: Fraction) -> str:
    """Exact rational as a string, integer form when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_fraction_decimal(value: Fraction, decimals: int) -> str:
    """Exact decimal expansion of a rational, truncated toward zero."""
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**decimals
    units = scaled.numerator // scaled.denominator
    digits = str(units).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def render_rows(
    rows: Sequence[dict],
    columns: Sequence[str],
    fmt: str,
) -> str:
    """Render rows as markdown, CSV or JSON (byte-deterministic)."""
    if fmt == "md":
        widths = [
            max(len(col), *(len(str(row[col])) for row in rows)) if rows else len(col)
            for col in columns
        ]
        header = "| " + " | ".join(c.ljust(w) for c, w in zip(columns, widths)) + " |"
        rule = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
        lines = [header, rule]
        for row in rows:
            lines.append(
                "| "
                + " | ".join(str(row[c]).ljust(w) for c, w in zip(columns, widths))
                + " |"
            )
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
        return buffer.getvalue()
    if fmt == "json":
        payload = [{c: row[c] for c in columns} for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

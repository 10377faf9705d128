"""Certified truncation rendering and table emission."""

from __future__ import annotations

from fractions import Fraction

import pytest

from bernbound.enclosure import PrecisionPolicy, RealEnclosure, pi_enclosure
from bernbound.render import (
    PrecisionShortfall,
    certified_truncation,
    format_fraction,
    format_fraction_decimal,
    render_rows,
    truncate_with_refinement,
)


def tight(value, bits=128):
    return RealEnclosure.from_rational(Fraction(value), bits)


def test_truncation_not_rounding():
    # 4.6692... must print 4.66, never the rounded 4.67
    assert certified_truncation(tight(Fraction("4.66927")), 3) == "4.66e0"
    assert certified_truncation(tight(Fraction("1.9287e-10")), 3) == "1.92e-10"
    assert certified_truncation(tight(Fraction("8.0292e-9")), 3) == "8.02e-9"


def test_truncation_basic_forms():
    assert certified_truncation(tight(Fraction(1, 6)), 3) == "1.66e-1"
    assert certified_truncation(tight(529), 3) == "5.29e2"
    assert certified_truncation(tight(Fraction(-1, 30)), 2) == "-3.3e-2"
    assert certified_truncation(tight(1), 3) == "1.00e0"
    assert certified_truncation(tight(0), 5) == "0"
    assert certified_truncation(tight(Fraction(999999, 1000000)), 3) == "9.99e-1"
    assert certified_truncation(pi_enclosure(128), 1) == "3e0"


def test_truncation_requires_certification():
    wide = RealEnclosure.from_endpoints(Fraction("1.461"), Fraction("1.469"), 64)
    assert certified_truncation(wide, 3) == "1.46e0"
    too_wide = RealEnclosure.from_endpoints(Fraction("1.46"), Fraction("1.48"), 64)
    with pytest.raises(PrecisionShortfall):
        certified_truncation(too_wide, 3)
    straddles_zero = RealEnclosure.from_endpoints(Fraction(-1), Fraction(1), 64)
    with pytest.raises(PrecisionShortfall):
        certified_truncation(straddles_zero, 2)


def test_truncation_with_refinement():
    text = truncate_with_refinement(
        lambda bits: pi_enclosure(bits), 20, PrecisionPolicy(initial_bits=16, max_bits=256)
    )
    assert text == "3.1415926535897932384e0"
    # pinning digits of an exact boundary value can never be certified by
    # truncation: [3-eps, 3+eps] straddles the 2.999/3.000 boundary
    with pytest.raises(PrecisionShortfall):
        truncate_with_refinement(
            lambda bits: RealEnclosure.from_endpoints(
                Fraction(3) - Fraction(1, 2**bits), Fraction(3) + Fraction(1, 2**bits), bits
            ),
            3,
            PrecisionPolicy(initial_bits=16, max_bits=64),
        )


def test_fraction_formatting():
    assert format_fraction(Fraction(-691, 2730)) == "-691/2730"
    assert format_fraction(Fraction(7)) == "7"
    assert format_fraction_decimal(Fraction(3), 6) == "3.000000"
    assert format_fraction_decimal(Fraction(1, 3), 5) == "0.33333"
    assert format_fraction_decimal(Fraction(-1, 8), 3) == "-0.125"
    assert format_fraction_decimal(Fraction(5), 0) == "5"


def test_render_rows_formats():
    rows = [{"k": 1, "v": "1/6"}, {"k": 2, "v": "-1/30"}]
    md = render_rows(rows, ["k", "v"], "md")
    assert md.splitlines()[0].startswith("| k")
    assert "| -1/30" in md
    csv_text = render_rows(rows, ["k", "v"], "csv")
    assert csv_text == "k,v\n1,1/6\n2,-1/30\n"
    json_text = render_rows(rows, ["k", "v"], "json")
    assert '"v": "1/6"' in json_text
    with pytest.raises(ValueError):
        render_rows(rows, ["k"], "xml")


def test_render_is_deterministic():
    rows = [{"a": "x", "b": "y"}]
    assert render_rows(rows, ["a", "b"], "md") == render_rows(rows, ["a", "b"], "md")
    assert render_rows(rows, ["a", "b"], "json") == render_rows(rows, ["a", "b"], "json")

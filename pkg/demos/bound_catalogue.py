#!/usr/bin/env python3
"""Tour of the bound catalogue and the verdict machinery.

Evaluates every catalogued bound at small k, shows the certified verdicts
including the four exact equality cases, and probes one bound outside its
stated domain to demonstrate an honest Fails verdict.
"""

from bernbound import default_catalog, evaluate_bound, make_spec, verify
from bernbound.catalog import VerdictStatus

print("Catalogue at k = 2 (enclosure midpoints, certified verdicts)")
print("------------------------------------------------------------")
for spec in default_catalog():
    if not spec.in_domain(2):
        continue
    enclosure = evaluate_bound(spec, 2, 128)
    verdict = verify(spec, 2)
    side = "lower" if spec.side.value == "lower" else "upper"
    print(f"  {spec.label:<34} {side}  {enclosure.midpoint_float():.12f}  {verdict.status.value}")
print("  (|B_4| = 1/30 = 0.033333...)")

print()
print("Equality cases: calibrated constants touch |B_{2k}| exactly")
print("------------------------------------------------------------")
for spec, k in [
    (make_spec("ge_upper_1_10", n=3), 3),
    (make_spec("alzer_upper_1_9"), 1),
    (make_spec("best_const_upper_2_7"), 1),
    (make_spec("general_upper_2_8", m=4), 1),
]:
    verdict = verify(spec, k)
    assert verdict.status is VerdictStatus.HOLDS_WITH_EQUALITY
    lo, hi = verdict.gap.bounds_as_fractions()
    print(f"  {spec.label:<34} k={k}: {verdict.status.value}, gap exactly [{lo}, {hi}]")

print()
print("Out-of-domain probe: the Stirling upper bound genuinely fails at k=1")
print("---------------------------------------------------------------------")
leeming = make_spec("leeming_upper_1_2")
verdict = verify(leeming, 1, enforce_domain=False)
print(f"  {leeming.label} at k=1 (domain starts at 2): {verdict.status.value}")
print(f"  signed gap upper endpoint: {float(verdict.gap.bounds_as_fractions()[1]):.6f}")

print()
print("Adaptive precision: strict cases decide at the initial rung,")
print("equality cases exhaust the ladder and fall back to exact arithmetic")
print("--------------------------------------------------------------------")
strict = verify(make_spec("odd_sum_lower_1_7"), 10)
equal = verify(make_spec("best_const_upper_2_7"), 1)
print(f"  strict verdict decided at {strict.precision_bits} bits")
print(f"  equality verdict certified after exhausting {equal.precision_bits} bits")

"""Certified bounds for the non-zero Bernoulli numbers.

Exact rational Bernoulli numbers, directed-rounded enclosure arithmetic, a
catalogue of lower/upper bounds for |B_{2k}| with machine-checked verdicts
(strict / equality / fails / undecided), and the best-possible constants of
the geometric-factor bound families.
"""

from .enclosure import (
    Comparison,
    DomainError,
    PrecisionPolicy,
    RealEnclosure,
    RefineOutcome,
    arith,
    compare,
    pi_enclosure,
    refine_until,
)
from .exact import (
    BernoulliTable,
    abs_bernoulli_even,
    bernoulli,
    factorial,
    von_staudt_clausen_denominator,
    zeta_even_coefficient,
)
from .primes import PrimeList, all_primes, odd_primes
from .pirational import PiRational
from .catalog import (
    CATALOG_IDS,
    BoundSpec,
    ParamError,
    Relation,
    Side,
    Verdict,
    VerdictStatus,
    default_catalog,
    evaluate_bound,
    identity_check_fourier,
    make_spec,
    product_vs_sum_check,
    sharpness_order,
    signed_gap,
    symbolic_bound,
    verify,
)
from .zeta import (
    Constants,
    MonotonicityCertificate,
    best_constant_profile,
    best_constant_profile_general,
    compute_constants,
    default_profile_grid,
    monotonicity_certificate,
    termwise_negativity_check,
    zeta_enclosure,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # enclosure engine
    "RealEnclosure",
    "PrecisionPolicy",
    "Comparison",
    "RefineOutcome",
    "DomainError",
    "arith",
    "compare",
    "refine_until",
    "pi_enclosure",
    # exact core
    "BernoulliTable",
    "bernoulli",
    "abs_bernoulli_even",
    "zeta_even_coefficient",
    "von_staudt_clausen_denominator",
    "factorial",
    # primes
    "PrimeList",
    "odd_primes",
    "all_primes",
    # symbolic layer
    "PiRational",
    # catalogue
    "CATALOG_IDS",
    "BoundSpec",
    "Side",
    "Verdict",
    "VerdictStatus",
    "Relation",
    "ParamError",
    "make_spec",
    "default_catalog",
    "symbolic_bound",
    "evaluate_bound",
    "signed_gap",
    "verify",
    "identity_check_fourier",
    "product_vs_sum_check",
    "sharpness_order",
    # analysis
    "zeta_enclosure",
    "best_constant_profile",
    "best_constant_profile_general",
    "monotonicity_certificate",
    "default_profile_grid",
    "termwise_negativity_check",
    "MonotonicityCertificate",
    "Constants",
    "compute_constants",
]

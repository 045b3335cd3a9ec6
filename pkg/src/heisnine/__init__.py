"""Census of nonic Heisenberg fields by discriminant, the exact
character-sum evaluator behind it, and the numeric pipeline for the
leading constant of its asymptotic."""

from .charspace import (
    SupportFunction,
    ZERO_FUNCTION,
    chi_eval,
    conductor,
    delta,
    enumerate_V,
    enumerate_deltas,
    is_linearly_independent,
    linear_combination,
)
from .constants import (
    CancellationSum,
    ConstantReport,
    RatioRow,
    TruncationParams,
    char_cancellation,
    char_cancellation_profile,
    constant_report,
    euler_product_P,
    h_constants,
    lambda_delta,
    ratio_report,
)
from .counting import (
    CountReport,
    SubsumClass,
    TermRecord,
    WeightMode,
    X_MAX,
    big_d,
    enumerate_terms,
    heis_subsum,
    heis_total,
    indicator,
    mu,
    mu_d,
    s_sum,
)
from .eisenstein import (
    CharValue,
    EisensteinInt,
    ROOT,
    StandardPrime,
    ZERO,
    chi_nine,
    chi_p,
    cubic_symbol,
    divrem,
    eis_gcd,
    is_primary,
    primary_associate,
    standard_decompose,
    standard_primes_up_to,
)
from .ksum import alpha_ell, k_direct, psi_ell
from .lfunctions import l_one, l_one_cubic, l_one_series
from .verify import SUITE_NAMES, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "SupportFunction",
    "ZERO_FUNCTION",
    "chi_eval",
    "conductor",
    "delta",
    "enumerate_V",
    "enumerate_deltas",
    "is_linearly_independent",
    "linear_combination",
    "CancellationSum",
    "ConstantReport",
    "RatioRow",
    "TruncationParams",
    "char_cancellation",
    "char_cancellation_profile",
    "constant_report",
    "euler_product_P",
    "h_constants",
    "lambda_delta",
    "ratio_report",
    "CountReport",
    "SubsumClass",
    "TermRecord",
    "WeightMode",
    "X_MAX",
    "big_d",
    "enumerate_terms",
    "heis_subsum",
    "heis_total",
    "indicator",
    "mu",
    "mu_d",
    "s_sum",
    "CharValue",
    "EisensteinInt",
    "ROOT",
    "StandardPrime",
    "ZERO",
    "chi_nine",
    "chi_p",
    "cubic_symbol",
    "divrem",
    "eis_gcd",
    "is_primary",
    "primary_associate",
    "standard_decompose",
    "standard_primes_up_to",
    "alpha_ell",
    "k_direct",
    "psi_ell",
    "l_one",
    "l_one_cubic",
    "l_one_series",
    "SUITE_NAMES",
    "SuiteResult",
    "run_suite",
]

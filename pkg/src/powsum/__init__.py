"""Streaming computation of time-index powered weighted sums.

A cascade of K+1 running-sum registers consumes a sequence one sample at
a time; after the last sample, K+1 constant multiplications combine the
register values into sum(n**K * v[n]). No buffering of the input, no
multiplication inside the streaming loop, and exact integer arithmetic
end to end.
"""

from .cascade import Cascade, FloatCascade, MomentRequest
from .coeffs import (
    CoefficientSet,
    IntPolynomial,
    coefficient_polynomials,
    coefficients_closed,
    coefficients_stirling,
)
from .costmodel import (
    ComplexityReport,
    OpCount,
    complexity_table,
    measure_baseline,
    measure_cascade,
    predict_baseline,
    predict_baseline_chain_mults,
    predict_cascade,
    write_csv,
)
from .exactmath import (
    ExactInt,
    alternating_power_sum,
    binomial,
    factorial,
    rising_factorial,
    stirling2,
    stirling_power_sum,
)
from .oracle import AdditionChain, baseline_sum, chain_power, direct_sum, optimal_chain
from .selfcheck import run_selfcheck

__version__ = "0.1.0"

__all__ = [
    "AdditionChain",
    "Cascade",
    "CoefficientSet",
    "ComplexityReport",
    "ExactInt",
    "FloatCascade",
    "IntPolynomial",
    "MomentRequest",
    "OpCount",
    "alternating_power_sum",
    "baseline_sum",
    "binomial",
    "chain_power",
    "coefficient_polynomials",
    "coefficients_closed",
    "coefficients_stirling",
    "complexity_table",
    "direct_sum",
    "factorial",
    "measure_baseline",
    "measure_cascade",
    "optimal_chain",
    "predict_baseline",
    "predict_baseline_chain_mults",
    "predict_cascade",
    "rising_factorial",
    "run_selfcheck",
    "stirling2",
    "stirling_power_sum",
    "write_csv",
    "__version__",
]

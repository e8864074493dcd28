"""Randomized cross-checks of the whole pipeline, behind the ``selfcheck``
CLI command.

Every check compares two independent routes to the same value and reports
the first counterexample it finds. Given the same seed, the run is fully
deterministic.
"""

from __future__ import annotations

import random
from typing import Any, Callable

from .cascade import Cascade
from .coeffs import CoefficientSet, coefficients_closed, coefficients_stirling
from .exactmath import (
    alternating_power_sum,
    binomial,
    rising_factorial,
    stirling2,
    stirling_power_sum,
)
from .oracle import direct_sum

CoefficientFn = Callable[[int, int], CoefficientSet]

SAMPLE_MAGNITUDE = 10**6


def _check_cascade_matches_direct_sum(
    rng: random.Random, trials: int, closed_fn: CoefficientFn
) -> dict[str, Any]:
    for _ in range(trials):
        K = rng.randint(0, 8)
        N = rng.randint(1, 48)
        v = [rng.randint(-SAMPLE_MAGNITUDE, SAMPLE_MAGNITUDE) for _ in range(N)]
        cascade = Cascade(K)
        for sample in v:
            cascade.push(sample)
        streamed = cascade.finalize(closed_fn(K, N))
        expected = direct_sum(v, K)
        if streamed != expected:
            return {
                "name": "cascade_matches_direct_sum",
                "passed": False,
                "cases": trials,
                "counterexample": {"K": K, "N": N, "v": v, "streamed": str(streamed), "expected": str(expected)},
            }
    return {"name": "cascade_matches_direct_sum", "passed": True, "cases": trials}


def _check_coefficient_paths_agree(
    rng: random.Random, trials: int, closed_fn: CoefficientFn, stirling_fn: CoefficientFn
) -> dict[str, Any]:
    for _ in range(trials):
        K = rng.randint(0, 10)
        N = rng.randint(1, 50)
        closed = closed_fn(K, N).coeffs
        stirling = stirling_fn(K, N).coeffs
        if closed != stirling:
            return {
                "name": "coefficient_paths_agree",
                "passed": False,
                "cases": trials,
                "counterexample": {
                    "K": K,
                    "N": N,
                    "closed": [str(c) for c in closed],
                    "stirling": [str(c) for c in stirling],
                },
            }
    return {"name": "coefficient_paths_agree", "passed": True, "cases": trials}


def _check_power_sum_identity() -> dict[str, Any]:
    cases = 0
    for m in range(13):
        for k in range(1, 14):
            cases += 1
            if alternating_power_sum(m, k) != stirling_power_sum(m, k):
                return {
                    "name": "power_sum_identity",
                    "passed": False,
                    "cases": cases,
                    "counterexample": {"m": m, "k": k},
                }
    return {"name": "power_sum_identity", "passed": True, "cases": cases}


def _check_impulse_response() -> dict[str, Any]:
    cases = 0
    for K in range(7):
        for m in range(6):
            for N in range(m + 1, m + 7):
                impulse = [1 if n == m else 0 for n in range(N)]
                cascade = Cascade(K)
                for sample in impulse:
                    cascade.push(sample)
                cases += 1
                expected = [binomial(N - 1 - m + k - 1, k - 1) for k in range(1, K + 2)]
                if cascade.snapshot() != expected:
                    return {
                        "name": "impulse_response",
                        "passed": False,
                        "cases": cases,
                        "counterexample": {"K": K, "N": N, "v": impulse},
                    }
    return {"name": "impulse_response", "passed": True, "cases": cases}


def _check_monomial_expansion() -> dict[str, Any]:
    cases = 0
    for m in range(13):
        for x in range(13):
            cases += 1
            expansion = sum(
                stirling2(m, j) * (-1) ** (m - j) * rising_factorial(x, j) for j in range(m + 1)
            )
            if expansion != x**m:
                return {
                    "name": "monomial_expansion",
                    "passed": False,
                    "cases": cases,
                    "counterexample": {"m": m, "x": x},
                }
    return {"name": "monomial_expansion", "passed": True, "cases": cases}


def run_selfcheck(
    seed: int = 0,
    trials: int = 60,
    closed_fn: CoefficientFn | None = None,
    stirling_fn: CoefficientFn | None = None,
) -> dict[str, Any]:
    """Run every consistency check and return a JSON-ready report.

    ``closed_fn``/``stirling_fn`` default to the real coefficient
    generators; tests inject corrupted ones to exercise the failure path.
    """
    closed_fn = closed_fn or coefficients_closed
    stirling_fn = stirling_fn or coefficients_stirling
    rng = random.Random(seed)
    checks = [
        _check_cascade_matches_direct_sum(rng, trials, closed_fn),
        _check_coefficient_paths_agree(rng, trials, closed_fn, stirling_fn),
        _check_power_sum_identity(),
        _check_impulse_response(),
        _check_monomial_expansion(),
    ]
    return {
        "seed": seed,
        "all_passed": all(check["passed"] for check in checks),
        "checks": checks,
    }

"""Operation accounting: closed-form cost predictions, instrumented
measurements of real runs, and the report table comparing the streaming
cascade against runtime exponentiation.

Counting conventions (shared with the instrumented code paths):

* an addition into a still-zeroed register at the very first sample is
  free, so a cascade over N samples costs exactly (K+1)N - 1 additions
  including the K additions of the final combination;
* coefficient precomputation is not counted -- the coefficients depend
  only on (K, N) and are evaluated once, outside the streaming loop;
* the exponentiation baseline pays, per sample, the optimal-chain cost
  of n^K plus one general multiplication by v[n]. Complexity figures for
  such baselines are quoted both with and without the multiplication by
  v[n], so reports carry both the chain-only and the inclusive totals.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import IO, Iterable, Iterator, Sequence


@dataclass
class OpCount:
    """Tally of general multiplications, constant multiplications, additions.

    General multiplications take two arbitrary operands; constant
    multiplications have one fixed, precomputable operand (realizable with
    shifts and adds in hardware). Instrumented code mutates the fields in
    place; ``+`` combines tallies field-wise.
    """

    general_mults: int = 0
    constant_mults: int = 0
    additions: int = 0

    def __post_init__(self) -> None:
        if min(self.general_mults, self.constant_mults, self.additions) < 0:
            raise ValueError("operation counts cannot be negative")

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(
            self.general_mults + other.general_mults,
            self.constant_mults + other.constant_mults,
            self.additions + other.additions,
        )

    def copy(self) -> "OpCount":
        return replace(self)


def _check_domain(K: int, N: int) -> None:
    if K < 0:
        raise ValueError("power K must be non-negative")
    if N < 1:
        raise ValueError("sample count N must be positive")


@lru_cache(maxsize=None)
def _chain_length(K: int) -> int:
    # local import: oracle imports OpCount from this module
    from .oracle import optimal_chain

    return len(optimal_chain(K).steps)


def predict_cascade(K: int, N: int) -> OpCount:
    """Cost of the streaming cascade: K+1 constant multiplications (one per
    register, independent of N) and (K+1)N - 1 additions."""
    _check_domain(K, N)
    return OpCount(general_mults=0, constant_mults=K + 1, additions=(K + 1) * N - 1)


def predict_baseline(K: int, N: int) -> OpCount:
    """Cost of computing every n^K at runtime by optimal addition chain.

    General multiplications: N * (chain_length(K) + 1) for K >= 1 -- the
    chain steps plus the multiplication by v[n] -- and none at all for
    K = 0, where the sum needs no multiplications. Additions: N - 1.
    """
    _check_domain(K, N)
    general = N * (_chain_length(K) + 1) if K >= 1 else 0
    return OpCount(general_mults=general, constant_mults=0, additions=N - 1)


def predict_baseline_chain_mults(K: int, N: int) -> int:
    """Chain-only baseline multiplication count N * chain_length(K),
    excluding the per-sample multiplication by v[n]."""
    _check_domain(K, N)
    return N * _chain_length(K) if K >= 1 else 0


def measure_cascade(v: Sequence[int], K: int) -> OpCount:
    """Run the streaming cascade over ``v`` and return its counted
    operations (pushes plus one final combination). Empty input measures
    as all zeros."""
    from .cascade import Cascade  # local import: cascade imports OpCount
    from .coeffs import coefficients_closed

    cascade = Cascade(K)
    for sample in v:
        cascade.push(sample)
    ops = cascade.ops.copy()
    if cascade.samples_seen:
        cascade.finalize(coefficients_closed(K, cascade.samples_seen), ops=ops)
    return ops


def measure_baseline(v: Sequence[int], K: int) -> OpCount:
    """Run the exponentiation baseline over ``v`` and return its counted
    operations."""
    from .oracle import baseline_sum  # local import, as above

    _, ops = baseline_sum(v, K)
    return ops


@dataclass(frozen=True)
class ComplexityReport:
    """Cost comparison for one (K, N) point."""

    K: int
    N: int
    cascade: OpCount
    baseline: OpCount
    baseline_chain_only_mults: int

    def __post_init__(self) -> None:
        if self.cascade.general_mults != 0 or self.cascade.constant_mults != self.K + 1:
            raise ValueError("cascade multiplication counts violate the cost model")
        if self.cascade.additions != (self.K + 1) * self.N - 1:
            raise ValueError("cascade addition count violates the cost model")


def complexity_table(Ks: Iterable[int], Ns: Iterable[int]) -> list[ComplexityReport]:
    """Cross-product of predictions, one report per (K, N), suitable for
    plotting cost-versus-length curves. Axis scaling and any weighting of
    additions against multiplications are left to the consumer."""
    return [
        ComplexityReport(
            K=K,
            N=N,
            cascade=predict_cascade(K, N),
            baseline=predict_baseline(K, N),
            baseline_chain_only_mults=predict_baseline_chain_mults(K, N),
        )
        for K in Ks
        for N in Ns
    ]


CSV_HEADER = ("K", "N", "method", "general_mults", "constant_mults", "additions")


def csv_rows(reports: Iterable[ComplexityReport]) -> Iterator[tuple[int, int, str, int, int, int]]:
    """Flatten reports into per-method rows matching CSV_HEADER.

    Each report yields three rows: the cascade, the baseline with the
    inclusive multiplication count, and the baseline counted chain-only.
    """
    for r in reports:
        yield (r.K, r.N, "cascade", r.cascade.general_mults, r.cascade.constant_mults, r.cascade.additions)
        yield (r.K, r.N, "baseline", r.baseline.general_mults, r.baseline.constant_mults, r.baseline.additions)
        yield (r.K, r.N, "baseline_chain_only", r.baseline_chain_only_mults, 0, r.baseline.additions)


def write_csv(reports: Iterable[ComplexityReport], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(csv_rows(reports))

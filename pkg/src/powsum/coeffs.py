"""Coefficients that turn cascaded-accumulator outputs into powered sums.

Two independent numeric routes produce the K+1 combination coefficients
for a concrete (K, N): a Stirling-number form and an alternating binomial
closed form. A third, symbolic route produces the same coefficients as
integer polynomials in the sequence length N. All three agree everywhere;
the test suite never lets them drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import ExactInt, binomial, factorial, stirling2


def _check_domain(K: int, N: int) -> None:
    if K < 0:
        raise ValueError("power K must be non-negative")
    if N < 1:
        raise ValueError("sequence length N must be positive")


@dataclass(frozen=True)
class CoefficientSet:
    """The K+1 combination coefficients for a concrete power K and length N.

    The mathematical indexing c_1..c_{K+1} is one-based; storage is
    zero-based, so ``coeffs[i]`` holds c_{i+1}. Use :meth:`c` when the
    one-based view reads better.
    """

    K: int
    N: int
    coeffs: tuple[ExactInt, ...]

    def __post_init__(self) -> None:
        _check_domain(self.K, self.N)
        if len(self.coeffs) != self.K + 1:
            raise ValueError(f"need exactly {self.K + 1} coefficients, got {len(self.coeffs)}")

    def c(self, k: int) -> ExactInt:
        """One-based accessor: c(k) for 1 <= k <= K+1."""
        if not 1 <= k <= self.K + 1:
            raise IndexError(f"k must be in [1, {self.K + 1}]")
        return self.coeffs[k - 1]


def coefficients_closed(K: int, N: int) -> CoefficientSet:
    """Combination coefficients via the alternating binomial closed form.

    c_k = sum_{j=0}^{k-1} (-1)^j C(k-1, j) (N+j)^K for k = 1..K+1.
    """
    _check_domain(K, N)
    cs = []
    for k in range(1, K + 2):
        total = 0
        for j in range(k):
            term = binomial(k - 1, j) * (N + j) ** K
            total = total - term if j % 2 else total + term
        cs.append(total)
    return CoefficientSet(K, N, tuple(cs))


def coefficients_stirling(K: int, N: int) -> CoefficientSet:
    """Combination coefficients via Stirling numbers of the second kind.

    c_k = (-1)^(k-1) (k-1)! sum_{m=k-1}^{K} C(K, m) N^(K-m) S(m, k-1).

    Returns the same values as :func:`coefficients_closed` by an entirely
    different computation; keeping both paths alive is the strongest
    cross-check on the whole coefficient derivation.
    """
    _check_domain(K, N)
    cs = []
    for k in range(1, K + 2):
        sign = -1 if (k - 1) % 2 else 1
        total = 0
        for m in range(k - 1, K + 1):
            total += binomial(K, m) * N ** (K - m) * stirling2(m, k - 1)
        cs.append(sign * factorial(k - 1) * total)
    return CoefficientSet(K, N, tuple(cs))


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in N; ``coefficients[i]`` multiplies N**i.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is the empty tuple and has degree -1.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, n: int) -> int:
        """Value at an integer point, by Horner's rule."""
        total = 0
        for c in reversed(self.coefficients):
            total = total * n + c
        return total

    def __str__(self) -> str:
        """Canonical form: descending powers, explicit signs, no spaces.

        Examples: ``N^2``, ``-2N-1``, ``12N^2+24N+14``, ``0``.
        """
        if self.degree < 0:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "N" if power == 1 else f"N^{power}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            sign = "-" if c < 0 else ("" if not parts else "+")
            parts.append(sign + body)
        return "".join(parts)


def coefficient_polynomials(K: int) -> list[IntPolynomial]:
    """All K+1 combination coefficients as integer polynomials in N.

    Built by binomial-theorem expansion of (N+j)^K inside the closed-form
    alternating sum, collected coefficient-wise. The degrees fall as
    K - (k-1): the alternating sum acts as a finite-difference operator on
    N and annihilates the higher powers.
    """
    if K < 0:
        raise ValueError("power K must be non-negative")
    polys = []
    for k in range(1, K + 2):
        coeffs = [0] * (K + 1)
        for j in range(k):
            weight = binomial(k - 1, j)
            if j % 2:
                weight = -weight
            for i in range(K + 1):
                coeffs[i] += weight * binomial(K, i) * j ** (K - i)
        polys.append(IntPolynomial(tuple(coeffs)))
    return polys

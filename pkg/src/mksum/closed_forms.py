"""Closed forms for k-bonacci block sums.

Two independent closed forms are implemented for the sum of the first m*k
k-bonacci terms. The first is the alternating binomial sum of Parks and
Wills for the prefix sum through index n,

    sum_{j=0}^{floor(n/(k+1))} (-1)^j C(n - j*k, j) 2^(n - j(k+1)),

specialized at n = m*k - 1. The second is the Stirling double sum

    sum_{i=1}^{m} sum_{j=1}^{i}
        2^((m-i+1)k) (-1)^(j-1) k^(j-1) S(i, j) (m-i+1)^(j-1)
        / ((i-1)! 2^i),

whose inner sums are degree-(i-1) polynomials in k, one per power-of-two
block; ``sum_formula`` materializes those polynomials symbolically and
``build_pyramid`` (in :mod:`mksum.pyramid`) arranges their coefficients into
the mk-sum pyramid.

The bridge between the two forms is block by block: once the binomial sum's
bound is extended from the floor limit to m - 1 (legitimate because the
extra binomials vanish) and reindexed by i = j + 1, the block-i coefficient
of 2^((m-i+1)k) / 2^i on the binomial side is (-1)^(i-1) C((m-i+1)k - 1, i-1),
and ``termwise_identity`` checks that this equals the inner Stirling sum.
Every quantity is exact; the only divisions are by (i-1)! 2^i, and the fact
that each total reduces to an integer is asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, factorial
from .polynomial import KPolynomial
from .stirling import stirling_unsigned

__all__ = [
    "InternalInconsistencyError",
    "SumFormula",
    "parks_wills_prefix",
    "mk_sum_parks_wills",
    "mk_sum_stirling",
    "coefficient_polynomial",
    "sum_formula",
    "evaluate_sum_formula",
    "termwise_identity",
]


class InternalInconsistencyError(RuntimeError):
    """An exact computation produced a value its own theory forbids."""


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")


def parks_wills_prefix(n: int, k: int) -> int:
    """Binomial closed form for f(0) + ... + f(n).

    Within the floor bound every binomial is nonzero and every power of two
    has a nonnegative exponent, so the terms are plain integers.
    """
    _check_k(k)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = 0
    for j in range(n // (k + 1) + 1):
        term = binomial(n - j * k, j) << (n - j * (k + 1))
        total += term if j % 2 == 0 else -term
    return total


def mk_sum_parks_wills(k: int, m: int, *, extended_bound: bool = False) -> int:
    """Sum of the first m*k terms via the binomial form at n = m*k - 1.

    With ``extended_bound`` the outer index runs to m - 1 instead of the
    floor limit floor((m*k - 1)/(k + 1)). The extra terms vanish through the
    C(n, j) = 0 convention, so both bounds give the same value; the sweep in
    :mod:`mksum.verify` confirms that pair by pair.
    """
    _check_k(k)
    _check_m(m)
    n = m * k - 1
    if not extended_bound:
        return parks_wills_prefix(n, k)
    total = 0
    for j in range(m):
        b = binomial(n - j * k, j)
        if b == 0:
            continue
        # n - j(k+1) >= 0 whenever the binomial above is nonzero
        term = b << (n - j * (k + 1))
        total += term if j % 2 == 0 else -term
    return total


def mk_sum_stirling(k: int, m: int) -> int:
    """Sum of the first m*k terms via the Stirling double sum.

    Accumulates in exact rational arithmetic; the total provably reduces to
    an integer and that reduction is asserted.
    """
    _check_k(k)
    _check_m(m)
    total = Fraction(0)
    for i in range(1, m + 1):
        block = 1 << ((m - i + 1) * k)
        denominator = factorial(i - 1) * (1 << i)
        inner = Fraction(0)
        for j in range(1, i + 1):
            term = Fraction(
                stirling_unsigned(i, j) * k ** (j - 1) * (m - i + 1) ** (j - 1),
                denominator,
            )
            inner += term if j % 2 == 1 else -term
        total += block * inner
    if total.denominator != 1:
        raise InternalInconsistencyError(
            f"Stirling double sum at k={k}, m={m} is not an integer: {total}"
        )
    return total.numerator


def coefficient_polynomial(m: int, i: int) -> KPolynomial:
    """The degree-(i-1) polynomial in k multiplying 2^((m-i+1)k).

    Its coefficient of k^(j-1) is
    (-1)^(j-1) S(i, j) (m-i+1)^(j-1) / ((i-1)! 2^i), so the constant term is
    always 1/2^i and the block structure never degenerates for i <= m.
    """
    _check_m(m)
    if not 1 <= i <= m:
        raise ValueError(f"block index i must be in 1..{m}, got {i}")
    denominator = factorial(i - 1) * (1 << i)
    coeffs = []
    for j in range(1, i + 1):
        c = Fraction(stirling_unsigned(i, j) * (m - i + 1) ** (j - 1), denominator)
        coeffs.append(c if j % 2 == 1 else -c)
    return KPolynomial(coeffs)


@dataclass(frozen=True)
class SumFormula:
    """Symbolic closed form for a fixed m.

    ``blocks`` pairs each block index i = 1..m with the polynomial in k that
    multiplies 2^((m-i+1)k).
    """

    m: int
    blocks: tuple[tuple[int, KPolynomial], ...]


def sum_formula(m: int) -> SumFormula:
    """All m coefficient polynomials, block-indexed."""
    _check_m(m)
    return SumFormula(
        m, tuple((i, coefficient_polynomial(m, i)) for i in range(1, m + 1))
    )


def evaluate_sum_formula(formula: SumFormula, k: int) -> int:
    """Specialize a symbolic formula at a concrete k, exactly."""
    _check_k(k)
    total = Fraction(0)
    for i, poly in formula.blocks:
        total += poly.evaluate(k) * (1 << ((formula.m - i + 1) * k))
    if total.denominator != 1:
        raise InternalInconsistencyError(
            f"formula for m={formula.m} at k={k} is not an integer: {total}"
        )
    return total.numerator


def termwise_identity(m: int, i: int, k: int) -> tuple[Fraction, Fraction, bool]:
    """Evaluate both sides of the block-i bridge identity.

    Left side, from the binomial form: (-1)^(i-1) C((m-i+1)k - 1, i-1).
    Right side, the inner Stirling sum with the power-of-two weights
    stripped: sum_{j=1}^{i} (-1)^(j-1) S(i, j) ((m-i+1)k)^(j-1) / (i-1)!.
    Returns (left, right, left == right).
    """
    _check_m(m)
    _check_k(k)
    if not 1 <= i <= m:
        raise ValueError(f"block index i must be in 1..{m}, got {i}")
    c = m - i + 1
    lhs = Fraction(binomial(c * k - 1, i - 1))
    if (i - 1) % 2:
        lhs = -lhs
    ck = c * k
    den = factorial(i - 1)
    rhs = Fraction(0)
    for j in range(1, i + 1):
        term = Fraction(stirling_unsigned(i, j) * ck ** (j - 1), den)
        rhs += term if j % 2 == 1 else -term
    return lhs, rhs, lhs == rhs

"""Stirling numbers of the first kind and falling-factorial expansions.

The unsigned numbers S(n, j) count permutations of n elements with j cycles
and satisfy

    S(n, j) = (n - 1) * S(n - 1, j) + S(n - 1, j - 1)

with S(0, 0) = 1, S(n, 0) = 0 for n >= 1, and S(n, j) = 0 for j > n. The
signed numbers s(n, j) = (-1)^(n-j) * S(n, j) are the coefficients of the
falling factorial (x)_n = x(x-1)...(x-n+1). Published statements sometimes
write S for values that are actually signed; this module keeps the two
spellings strictly apart.

``falling_factorial_coeffs`` and ``shifted_falling_poly`` expand their
products by direct polynomial multiplication, deliberately independent of
the table recurrence, so each route can be tested against the other.
"""

from __future__ import annotations

from functools import lru_cache

from .polynomial import KPolynomial

__all__ = [
    "StirlingTable",
    "stirling_unsigned",
    "stirling_signed",
    "stirling_row",
    "falling_factorial_coeffs",
    "falling_factorial_value",
    "shifted_falling_poly",
]


@lru_cache(maxsize=None)
def _unsigned_row(n: int) -> tuple[int, ...]:
    """Row n of the unsigned triangle, entries j = 0..n."""
    if n == 0:
        return (1,)
    prev = _unsigned_row(n - 1)
    row = [0] * (n + 1)
    for j in range(1, n + 1):
        above = prev[j] if j < n else 0
        row[j] = (n - 1) * above + prev[j - 1]
    return tuple(row)


def _check_nonnegative(value: int, name: str) -> None:
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


def stirling_unsigned(n: int, j: int) -> int:
    """Unsigned Stirling number of the first kind S(n, j)."""
    _check_nonnegative(n, "n")
    _check_nonnegative(j, "j")
    if j > n:
        return 0
    return _unsigned_row(n)[j]


def stirling_signed(n: int, j: int) -> int:
    """Signed Stirling number s(n, j) = (-1)^(n-j) * S(n, j)."""
    value = stirling_unsigned(n, j)
    return -value if (n - j) % 2 else value


def stirling_row(n: int) -> list[int]:
    """[S(n, 1), ..., S(n, n)] for n >= 1; [1] (the S(0, 0) entry) for n = 0."""
    _check_nonnegative(n, "n")
    if n == 0:
        return [1]
    return list(_unsigned_row(n)[1:])


class StirlingTable:
    """Unsigned triangle up to a fixed row, built once and then immutable.

    The module-level functions above memoize rows process-wide; this class
    is for callers that want an explicit, bounded table object to hold on to
    or hand across threads.
    """

    def __init__(self, max_n: int):
        _check_nonnegative(max_n, "max_n")
        self.max_n = max_n
        self.rows: tuple[tuple[int, ...], ...] = tuple(
            _unsigned_row(n) for n in range(max_n + 1)
        )

    def unsigned(self, n: int, j: int) -> int:
        _check_nonnegative(j, "j")
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n must be in 0..{self.max_n}, got {n}")
        if j > n:
            return 0
        return self.rows[n][j]

    def signed(self, n: int, j: int) -> int:
        value = self.unsigned(n, j)
        return -value if (n - j) % 2 else value

    def row(self, n: int) -> list[int]:
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n must be in 0..{self.max_n}, got {n}")
        if n == 0:
            return [1]
        return list(self.rows[n][1:])


def falling_factorial_value(x: int, n: int) -> int:
    """The falling factorial (x)_n = x(x-1)...(x-n+1) as an exact integer."""
    _check_nonnegative(n, "n")
    value = 1
    for t in range(n):
        value *= x - t
    return value


def falling_factorial_coeffs(n: int) -> KPolynomial:
    """Expand (x)_n = x(x-1)...(x-n+1) by multiplying the factors out.

    The coefficient of x^j is the signed Stirling number s(n, j); the
    expansion here never consults the table recurrence, so comparing the two
    is a real check of that duality.
    """
    _check_nonnegative(n, "n")
    poly = KPolynomial([1])
    for t in range(n):
        poly = poly * KPolynomial([-t, 1])
    return poly


def shifted_falling_poly(i: int, c: int) -> KPolynomial:
    """Expand (c*k - 1)(c*k - 2)...(c*k - (i-1)) as a polynomial in k.

    This is the falling factorial (c*k)_i with its leading factor c*k
    dropped, so the coefficient of k^(j-1) is s(i, j) * c^(j-1) for
    j = 1..i. The empty product (i = 1) is the constant 1.
    """
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    poly = KPolynomial([1])
    for t in range(1, i):
        poly = poly * KPolynomial([-t, c])
    return poly

"""Exact integer and rational substrate for the rest of the library.

Python integers are already arbitrary precision, and ``fractions.Fraction``
keeps rationals normalized (gcd 1, positive denominator, zero as 0/1), so
this module only pins down the conventions everything else relies on:
factorials over nonnegative integers, and binomial coefficients that vanish
when the lower index exceeds the upper one.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["Rational", "rational_make", "factorial", "binomial"]

# Exact rational type used throughout; plain ints serve as the unbounded
# integers.
Rational = Fraction


def rational_make(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms, sign carried on the numerator.

    Raises ValueError for a zero denominator.
    """
    if den == 0:
        raise ValueError("rational with zero denominator")
    return Fraction(num, den)


def factorial(n: int) -> int:
    """n! for n >= 0; raises ValueError on negative n."""
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, j: int) -> int:
    """C(n, j), with C(n, j) = 0 whenever j > n.

    The vanishing convention is what lets summation bounds be extended past
    their floor limits without changing the total. Negative arguments are
    rejected rather than mapped to zero: no identity in this library produces
    them, so one showing up means the caller has a bug.
    """
    if n < 0 or j < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {j})")
    return math.comb(n, j)

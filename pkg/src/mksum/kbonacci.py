"""k-generalized Fibonacci sequences and their exact prefix sums.

Each term is the sum of the k terms before it, with a single 1 seeded at
index 0 and zeros before that:

    f(n) = 0 for n < 0,    f(0) = 1,    f(n) = f(n-1) + ... + f(n-k) otherwise.

For k = 2 this gives 1, 1, 2, 3, 5, 8, ... and for k = 1 the constant-1
sequence. Terms come out of a sliding-window running sum, one addition and
one subtraction per term, so generation is linear in the number of terms and
needs only the last k terms in memory. ``prefix_sum_oracle`` is the ground
truth the closed forms in :mod:`mksum.closed_forms` are verified against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

__all__ = [
    "KbonacciSequence",
    "kbonacci_term",
    "kbonacci_sequence",
    "prefix_sum_oracle",
]


@dataclass(frozen=True)
class KbonacciSequence:
    """The first ``len(terms)`` k-bonacci terms, index 0 upward."""

    k: int
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _check_count(count: int) -> None:
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")


def _term_stream(k: int) -> Iterator[int]:
    """Yield f(0), f(1), ... via the k-wide window sum."""
    recent: deque[int] = deque()
    window = 0
    n = 0
    while True:
        term = 1 if n == 0 else window
        yield term
        recent.append(term)
        window += term
        if len(recent) > k:
            window -= recent.popleft()
        n += 1


def kbonacci_term(k: int, n: int) -> int:
    """Return f(n) for any integer n; negative indices give 0."""
    _check_k(k)
    if n < 0:
        return 0
    return next(islice(_term_stream(k), n, None))


def kbonacci_sequence(k: int, count: int) -> KbonacciSequence:
    """Generate the first ``count`` terms."""
    _check_k(k)
    _check_count(count)
    return KbonacciSequence(k, tuple(islice(_term_stream(k), count)))


def prefix_sum_oracle(k: int, count: int) -> int:
    """Exact f(0) + f(1) + ... + f(count-1); the empty sum is 0.

    This is the brute-force reference value: the binomial and Stirling
    closed forms are checked against it, never the other way round.
    """
    _check_k(k)
    _check_count(count)
    return sum(islice(_term_stream(k), count))

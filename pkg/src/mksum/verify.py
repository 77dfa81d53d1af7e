"""Sweep harness: cross-checks, identity sweeps, and the errata audit.

Every sweep returns a :class:`VerificationReport`, a flat list of named
checks with pass/fail status and both compared values as text. Reports are
deterministic: identical inputs serialize to identical bytes, and checks are
assembled in canonical (k, m, i) order even when they run concurrently.

Two operations here fail on purpose in a healthy installation:
``audit_published_formulas`` flags the misprinted block of the published
4k-sum example formula, and ``printed_lemma_probe`` records that the
published bridging lemma, evaluated exactly as printed, has unequal sides.
Those failures document misprints in the source publication; their absence
would mean this library no longer detects them.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .closed_forms import (
    coefficient_polynomial,
    mk_sum_parks_wills,
    mk_sum_stirling,
    termwise_identity,
)
from .exact import factorial
from .kbonacci import prefix_sum_oracle
from .polynomial import KPolynomial
from .stirling import falling_factorial_value, stirling_unsigned

__all__ = [
    "Check",
    "VerificationReport",
    "cross_check",
    "lemma_sweep",
    "printed_lemma_probe",
    "bound_equivalence_check",
    "audit_published_formulas",
    "WORKERS_ENV",
]

T = TypeVar("T")

# Caps how many checks may run at once; unset or 1 means serial.
WORKERS_ENV = "MKSUM_MAX_WORKERS"


@dataclass
class Check:
    """One named comparison with its parameters and both values as text."""

    name: str
    parameters: dict[str, int]
    status: str  # "pass" or "fail"
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class VerificationReport:
    """An ordered list of checks plus derived summary counts."""

    checks: list[Check]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    def all_passed(self) -> bool:
        return self.failed == 0

    def merged(self, *others: "VerificationReport") -> "VerificationReport":
        checks = list(self.checks)
        for other in others:
            checks.extend(other.checks)
        return VerificationReport(checks)

    def to_json(self) -> str:
        payload = {
            "checks": [
                {
                    "name": c.name,
                    "parameters": c.parameters,
                    "status": c.status,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
            "passed": self.passed,
            "failed": self.failed,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_table(self) -> str:
        headers = ("check", "parameters", "status", "expected", "actual")
        rows = [
            (
                c.name,
                " ".join(f"{key}={value}" for key, value in c.parameters.items()),
                c.status,
                c.expected,
                c.actual,
            )
            for c in self.checks
        ]
        widths = [
            max(len(headers[col]), *(len(r[col]) for r in rows)) if rows else len(headers[col])
            for col in range(len(headers))
        ]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*headers).rstrip()]
        lines.extend(fmt.format(*r).rstrip() for r in rows)
        lines.append(f"passed {self.passed}  failed {self.failed}")
        return "\n".join(lines)


def _max_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_all(fn: Callable[[T], Check], items: Sequence[T]) -> list[Check]:
    """Run one check per item, preserving item order in the result."""
    workers = _max_workers()
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _check_bound(value: int, name: str) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def cross_check(k_max: int, m_max: int) -> VerificationReport:
    """Oracle vs binomial vs Stirling sums on every (k, m) pair."""
    _check_bound(k_max, "k_max")
    _check_bound(m_max, "m_max")
    pairs = [(k, m) for k in range(1, k_max + 1) for m in range(1, m_max + 1)]

    def one(pair: tuple[int, int]) -> Check:
        k, m = pair
        oracle = prefix_sum_oracle(k, m * k)
        pw = mk_sum_parks_wills(k, m)
        st = mk_sum_stirling(k, m)
        ok = oracle == pw == st
        return Check(
            name="three_way_sum_equality",
            parameters={"k": k, "m": m},
            status="pass" if ok else "fail",
            expected=str(oracle),
            actual=f"parks_wills={pw} stirling={st}",
        )

    return VerificationReport(_run_all(one, pairs))


def lemma_sweep(k_max: int, m_max: int) -> VerificationReport:
    """The corrected block-bridge identity over all (k, m, i) triples."""
    _check_bound(k_max, "k_max")
    _check_bound(m_max, "m_max")
    triples = [
        (k, m, i)
        for k in range(1, k_max + 1)
        for m in range(1, m_max + 1)
        for i in range(1, m + 1)
    ]

    def one(triple: tuple[int, int, int]) -> Check:
        k, m, i = triple
        lhs, rhs, equal = termwise_identity(m, i, k)
        return Check(
            name="termwise_block_identity",
            parameters={"k": k, "m": m, "i": i},
            status="pass" if equal else "fail",
            expected=str(lhs),
            actual=str(rhs),
        )

    return VerificationReport(_run_all(one, triples))


def printed_lemma_probe(m: int = 2, k: int = 2) -> VerificationReport:
    """Evaluate the published bridging lemma exactly as printed.

    The published statement carries (m-i)^j / (i-1)! on its Stirling side
    where the proven block identity needs (m-i+1)^(j-1). As printed, the two
    sides already disagree at m = 2, k = 2 (left side 0, right side 1), and
    the failing check produced here is the point: it records that misprint.
    """
    _check_bound(m, "m")
    _check_bound(k, "k")
    lhs = Fraction(0)
    for j in range(m):
        term = Fraction(falling_factorial_value((m - j) * k - 1, j), factorial(j))
        lhs += term if j % 2 == 0 else -term
    rhs = Fraction(0)
    for i in range(1, m + 1):
        den = factorial(i - 1)
        for j in range(1, i + 1):
            term = Fraction(
                stirling_unsigned(i, j) * k ** (j - 1) * (m - i) ** j, den
            )
            rhs += term if j % 2 == 1 else -term
    equal = lhs == rhs
    check = Check(
        name="printed_lemma_sides_equal",
        parameters={"k": k, "m": m},
        status="pass" if equal else "fail",
        expected=str(lhs),
        actual=str(rhs),
    )
    return VerificationReport([check])


def bound_equivalence_check(k_max: int, m_max: int) -> VerificationReport:
    """Floor-bounded vs extended binomial sums on every (k, m) pair."""
    _check_bound(k_max, "k_max")
    _check_bound(m_max, "m_max")
    pairs = [(k, m) for k in range(1, k_max + 1) for m in range(1, m_max + 1)]

    def one(pair: tuple[int, int]) -> Check:
        k, m = pair
        truncated = mk_sum_parks_wills(k, m)
        extended = mk_sum_parks_wills(k, m, extended_bound=True)
        return Check(
            name="parks_wills_bound_equivalence",
            parameters={"k": k, "m": m},
            status="pass" if truncated == extended else "fail",
            expected=str(truncated),
            actual=str(extended),
        )

    return VerificationReport(_run_all(one, pairs))


# The published 2k-, 3k-, and 4k-sum example formulas, transcribed block by
# block in descending powers of k, exactly as printed. The second block of
# the 4k formula is misprinted (it reads k + 1/4 where the closed form gives
# -3/4*k + 1/4); the audit below exists to flag exactly that, so these
# fixtures test the publication, not the implementation.
_PUBLISHED_FORMULAS: dict[int, list[tuple[str, ...]]] = {
    2: [("1/2",), ("-1/4", "1/4")],
    3: [("1/2",), ("-1/2", "1/4"), ("1/16", "-3/16", "1/8")],
    4: [
        ("1/2",),
        ("1", "1/4"),
        ("1/4", "-3/8", "1/8"),
        ("-1/96", "1/16", "-11/96", "1/16"),
    ],
}


def _poly_from_descending(coeffs: Iterable[str]) -> KPolynomial:
    return KPolynomial([Fraction(c) for c in reversed(list(coeffs))])


def audit_published_formulas() -> VerificationReport:
    """Compare every printed example-formula block with the computed one.

    Expected: the 2k and 3k formulas pass block for block, and the 4k
    formula passes except for its 8^k block, which is flagged.
    """
    checks = []
    for m in sorted(_PUBLISHED_FORMULAS):
        for i, printed_coeffs in enumerate(_PUBLISHED_FORMULAS[m], start=1):
            printed = _poly_from_descending(printed_coeffs)
            computed = coefficient_polynomial(m, i)
            checks.append(
                Check(
                    name="published_block_coefficients",
                    parameters={"m": m, "i": i},
                    status="pass" if printed == computed else "fail",
                    expected=computed.format_text(),
                    actual=printed.format_text(),
                )
            )
    return VerificationReport(checks)

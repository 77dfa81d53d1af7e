"""Wall-clock comparison of the three mk-sum evaluation strategies.

Correctness comes first: the three results are compared for exact equality
and any mismatch raises before a single timing is reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from time import perf_counter

from .closed_forms import (
    InternalInconsistencyError,
    mk_sum_parks_wills,
    mk_sum_stirling,
)
from .kbonacci import prefix_sum_oracle

__all__ = ["METHODS", "BenchReport", "run_bench"]

METHODS = ("oracle", "parks_wills", "stirling")


@dataclass
class BenchReport:
    """Agreed value plus best-of-N wall time per method, in seconds."""

    k: int
    m: int
    repetitions: int
    value: int
    seconds: dict[str, float]

    @property
    def digits(self) -> int:
        return len(str(abs(self.value)))

    def to_text(self) -> str:
        lines = [
            f"k={self.k} m={self.m} terms={self.k * self.m} repetitions={self.repetitions}",
            f"all methods agree; value has {self.digits} digits",
        ]
        for method in METHODS:
            lines.append(f"{method:<12} {self.seconds[method]:.6f} s")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "k": self.k,
            "m": self.m,
            "repetitions": self.repetitions,
            "digits": self.digits,
            "value": str(self.value),
            "seconds": {method: self.seconds[method] for method in METHODS},
        }
        return json.dumps(payload, indent=2)


def run_bench(k: int, m: int, repetitions: int = 3) -> BenchReport:
    """Time each strategy on the (k, m) block sum, best of ``repetitions``.

    Raises InternalInconsistencyError if the methods disagree; wrong answers
    never get timings.
    """
    if k < 1 or m < 1:
        raise ValueError(f"k and m must be positive, got ({k}, {m})")
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive, got {repetitions}")
    runners = {
        "oracle": lambda: prefix_sum_oracle(k, m * k),
        "parks_wills": lambda: mk_sum_parks_wills(k, m),
        "stirling": lambda: mk_sum_stirling(k, m),
    }
    values: dict[str, int] = {}
    seconds: dict[str, float] = {}
    for method in METHODS:
        run = runners[method]
        best = float("inf")
        for _ in range(repetitions):
            start = perf_counter()
            value = run()
            best = min(best, perf_counter() - start)
        values[method] = value
        seconds[method] = best
    if not (values["oracle"] == values["parks_wills"] == values["stirling"]):
        raise InternalInconsistencyError(
            f"methods disagree at k={k}, m={m}: "
            + ", ".join(f"{name}={values[name]}" for name in METHODS)
        )
    return BenchReport(k, m, repetitions, values["oracle"], seconds)

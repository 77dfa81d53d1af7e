"""Exact k-bonacci block sums and their Stirling-number structure.

The k-bonacci sequence starts with a single 1 and lets every later term be
the sum of the k terms before it. The sum of its first m*k terms has two
closed forms: an alternating binomial sum and a double sum over unsigned
Stirling numbers of the first kind whose rational coefficients arrange into
the triangular "mk-sum pyramid". This package evaluates the sum three ways
in exact arithmetic (direct recurrence, binomial form, Stirling form),
builds and renders the pyramid, and ships verification sweeps for every
identity involved, including an audit that flags a misprint in the published
4k example formula and in the published bridging lemma.
"""

from .bench import BenchReport, run_bench
from .closed_forms import (
    InternalInconsistencyError,
    SumFormula,
    coefficient_polynomial,
    evaluate_sum_formula,
    mk_sum_parks_wills,
    mk_sum_stirling,
    parks_wills_prefix,
    sum_formula,
    termwise_identity,
)
from .exact import Rational, binomial, factorial, rational_make
from .kbonacci import (
    KbonacciSequence,
    kbonacci_sequence,
    kbonacci_term,
    prefix_sum_oracle,
)
from .polynomial import KPolynomial
from .pyramid import (
    NumeratorRow,
    Pyramid,
    build_pyramid,
    canonical_denominator,
    diagonal_constants,
    render_pyramid,
    row_numerators,
    stitched_numerator_sequence,
)
from .stirling import (
    StirlingTable,
    falling_factorial_coeffs,
    falling_factorial_value,
    shifted_falling_poly,
    stirling_row,
    stirling_signed,
    stirling_unsigned,
)
from .verify import (
    Check,
    VerificationReport,
    audit_published_formulas,
    bound_equivalence_check,
    cross_check,
    lemma_sweep,
    printed_lemma_probe,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "Check",
    "InternalInconsistencyError",
    "KPolynomial",
    "KbonacciSequence",
    "NumeratorRow",
    "Pyramid",
    "Rational",
    "StirlingTable",
    "SumFormula",
    "VerificationReport",
    "audit_published_formulas",
    "binomial",
    "bound_equivalence_check",
    "build_pyramid",
    "canonical_denominator",
    "coefficient_polynomial",
    "cross_check",
    "diagonal_constants",
    "evaluate_sum_formula",
    "factorial",
    "falling_factorial_coeffs",
    "falling_factorial_value",
    "kbonacci_sequence",
    "kbonacci_term",
    "lemma_sweep",
    "mk_sum_parks_wills",
    "mk_sum_stirling",
    "parks_wills_prefix",
    "prefix_sum_oracle",
    "printed_lemma_probe",
    "rational_make",
    "render_pyramid",
    "row_numerators",
    "run_bench",
    "shifted_falling_poly",
    "stirling_row",
    "stirling_signed",
    "stirling_unsigned",
    "stitched_numerator_sequence",
    "sum_formula",
    "termwise_identity",
]

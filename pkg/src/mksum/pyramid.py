"""The mk-sum pyramid of rational coefficients and its renderings.

Row r of the pyramid (1-based, r = 1..m) holds the r coefficients of the
block-r polynomial from the closed form for the mk-sum, written left to
right by descending power of k, leading coefficient first. That is the
order the pyramid is conventionally displayed in, and the order every
function here preserves; ``stitched_numerator_sequence`` keeps it too, which
is what makes the Stirling triangle (rows reversed) appear in the stitched
numerators.

Every entry of row r becomes an integer when multiplied by the canonical
row denominator (r-1)! * 2^r. For r = m that denominator is also the least
common denominator of the row (the diagonal entry's numerator is 1); for
r < m a smaller one may exist, so only divisibility is guaranteed in
general.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import InternalInconsistencyError, coefficient_polynomial
from .exact import factorial

__all__ = [
    "Pyramid",
    "NumeratorRow",
    "build_pyramid",
    "canonical_denominator",
    "row_numerators",
    "stitched_numerator_sequence",
    "diagonal_constants",
    "render_pyramid",
    "RENDER_FORMATS",
]

RENDER_FORMATS = ("plain", "latex", "markdown", "csv", "json")


@dataclass(frozen=True)
class Pyramid:
    """Rows 1..m of rational constants, descending powers left to right."""

    m: int
    rows: tuple[tuple[Fraction, ...], ...]

    def row(self, r: int) -> tuple[Fraction, ...]:
        if not 1 <= r <= self.m:
            raise ValueError(f"row index must be in 1..{self.m}, got {r}")
        return self.rows[r - 1]


@dataclass(frozen=True)
class NumeratorRow:
    """One pyramid row scaled to integers over the canonical denominator."""

    r: int
    denominator: int
    numerators: tuple[int, ...]


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")


def build_pyramid(m: int) -> Pyramid:
    """Arrange the closed form's coefficients for a given m into a pyramid."""
    _check_m(m)
    rows = []
    for r in range(1, m + 1):
        poly = coefficient_polynomial(m, r)
        rows.append(tuple(poly.coefficient(p) for p in range(r - 1, -1, -1)))
    return Pyramid(m, tuple(rows))


def canonical_denominator(r: int) -> int:
    """(r-1)! * 2^r, a common denominator for every entry of row r."""
    if r < 1:
        raise ValueError(f"row index must be positive, got {r}")
    return factorial(r - 1) * (1 << r)


def row_numerators(m: int, r: int) -> NumeratorRow:
    """Row r of the m-pyramid scaled by (r-1)! * 2^r to signed integers."""
    pyramid = build_pyramid(m)
    if not 1 <= r <= m:
        raise ValueError(f"row index must be in 1..{m}, got {r}")
    den = canonical_denominator(r)
    numerators = []
    for entry in pyramid.row(r):
        scaled = entry * den
        if scaled.denominator != 1:
            raise InternalInconsistencyError(
                f"entry {entry} of row {r} is not divisible by 1/{den}"
            )
        numerators.append(scaled.numerator)
    return NumeratorRow(r, den, tuple(numerators))


def stitched_numerator_sequence(m_max: int) -> list[int]:
    """Absolute numerators of row m of each m-pyramid, stitched for m = 1..m_max.

    Each row keeps its display order (descending powers), which for the
    diagonal row works out to the reversed unsigned Stirling row; the
    stitched result is therefore the Stirling triangle read right to left,
    row by row: 1, 1, 1, 1, 3, 2, 1, 6, 11, 6, ...
    """
    _check_m(m_max)
    sequence: list[int] = []
    for m in range(1, m_max + 1):
        sequence.extend(abs(v) for v in row_numerators(m, m).numerators)
    return sequence


def diagonal_constants(m: int) -> list[Fraction]:
    """Rightmost entry of each row, read off the built pyramid.

    These are the constant terms of the block polynomials and come out as
    1/2, 1/4, ..., 1/2^m regardless of m.
    """
    pyramid = build_pyramid(m)
    return [pyramid.row(r)[-1] for r in range(1, m + 1)]


# -- rendering ---------------------------------------------------------------


def _latex_fraction(value: Fraction) -> str:
    sign = "-" if value < 0 else ""
    mag = abs(value)
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}"
    return rf"{sign}\frac{{{mag.numerator}}}{{{mag.denominator}}}"


def _render_plain(pyramid: Pyramid) -> str:
    cells = [[str(v) for v in row] for row in pyramid.rows]
    width = max(len(c) for row in cells for c in row)
    total = pyramid.m * width + (pyramid.m - 1)
    lines = []
    for row in cells:
        line = " ".join(c.center(width) for c in row)
        lines.append(line.center(total).rstrip())
    return "\n".join(lines)


def _render_latex(pyramid: Pyramid) -> str:
    m = pyramid.m
    ncols = 2 * m - 1
    lines = [r"\begin{tabular}{r" + "c" * ncols + "}"]
    for r in range(1, m + 1):
        cells = [""] * ncols
        start = m - r
        for offset, value in enumerate(pyramid.row(r)):
            cells[start + 2 * offset] = f"${_latex_fraction(value)}$"
        lines.append(f"$r_{{{r}}}$: & " + " & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def _render_markdown(pyramid: Pyramid) -> str:
    m = pyramid.m
    headers = ["row"] + [f"k^{d}" if d > 1 else ("k" if d == 1 else "1") for d in range(m - 1, -1, -1)]
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    for r in range(1, m + 1):
        row = pyramid.row(r)
        cells = [""] * (m - r) + [str(v) for v in row]
        lines.append("| " + " | ".join([str(r)] + cells) + " |")
    return "\n".join(lines)


def _render_csv(pyramid: Pyramid) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "position", "value"])
    for r in range(1, pyramid.m + 1):
        for position, value in enumerate(pyramid.row(r), start=1):
            writer.writerow([r, position, str(value)])
    return buf.getvalue().rstrip("\n")


def _render_json(pyramid: Pyramid) -> str:
    payload = {"m": pyramid.m, "rows": [[str(v) for v in row] for row in pyramid.rows]}
    return json.dumps(payload)


_RENDERERS = {
    "plain": _render_plain,
    "latex": _render_latex,
    "markdown": _render_markdown,
    "csv": _render_csv,
    "json": _render_json,
}


def render_pyramid(pyramid: Pyramid, format: str = "plain") -> str:
    """Render a pyramid as text; ``format`` is one of RENDER_FORMATS.

    Fractions appear in lowest terms with the sign on the numerator; the
    output is deterministic for a given pyramid and format.
    """
    try:
        renderer = _RENDERERS[format]
    except KeyError:
        raise ValueError(
            f"unknown format {format!r}; expected one of {', '.join(RENDER_FORMATS)}"
        ) from None
    return renderer(pyramid)

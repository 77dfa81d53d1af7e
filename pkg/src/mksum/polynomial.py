"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

__all__ = ["KPolynomial"]

Scalar = Union[int, Fraction]


class KPolynomial:
    """Polynomial in one indeterminate, stored dense.

    ``coefficients[p]`` is the coefficient of the p-th power. Trailing zeros
    are stripped on construction, so the zero polynomial has an empty
    coefficient tuple and every other polynomial has a nonzero leading
    coefficient. Instances are immutable and hashable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> "KPolynomial":
        return cls([value])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of the given power, 0 outside the stored range."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at x, by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "KPolynomial") -> "KPolynomial":
        if not isinstance(other, KPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for p, c in enumerate(b):
            summed[p] += c
        return KPolynomial(summed)

    def __neg__(self) -> "KPolynomial":
        return KPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "KPolynomial") -> "KPolynomial":
        if not isinstance(other, KPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["KPolynomial", Scalar]) -> "KPolynomial":
        if isinstance(other, KPolynomial):
            if not self.coefficients or not other.coefficients:
                return KPolynomial()
            prod = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for p, a in enumerate(self.coefficients):
                for q, b in enumerate(other.coefficients):
                    prod[p + q] += a * b
            return KPolynomial(prod)
        if isinstance(other, (int, Fraction)):
            return KPolynomial([c * other for c in self.coefficients])
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "KPolynomial":
        return self.__mul__(other)

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    # -- rendering -----------------------------------------------------------

    def format_text(self, var: str = "k") -> str:
        """Human-readable form in descending powers, e.g. ``-5/4*k + 1/4``."""
        if not self.coefficients:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                vp = var if power == 1 else f"{var}^{power}"
                body = vp if mag == 1 else f"{mag}*{vp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def format_latex(self, var: str = "k") -> str:
        """LaTeX form in descending powers, e.g. ``-\\frac{5}{4}k + \\frac{1}{4}``."""
        if not self.coefficients:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            mag = abs(c)
            mag_tex = str(mag.numerator) if mag.denominator == 1 else rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if power == 0:
                body = mag_tex
            else:
                vp = var if power == 1 else f"{var}^{{{power}}}"
                body = vp if mag == 1 else f"{mag_tex}{vp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format_text()

    def __repr__(self) -> str:
        return f"KPolynomial([{', '.join(str(c) for c in self.coefficients)}])"

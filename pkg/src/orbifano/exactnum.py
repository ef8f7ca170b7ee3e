"""Exact rationals and dense truncated power series in ``q``.

Rationals are :class:`fractions.Fraction`, which already keeps values
reduced over Python's unbounded ``int``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

DEFAULT_ORDER = 100

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and float notation is rejected."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients of ``q^0 .. q^order``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        if not coefficients:
            raise ValueError("a truncated series keeps at least the constant term")
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m):
        return self.coefficients[m]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def tolist(self) -> list[int]:
        return list(self.coefficients)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((1,) + (0,) * order)

    def times_one_minus(self, k: int) -> TruncatedSeries:
        """Multiply by ``1 - q^k``."""
        c = list(self.coefficients)
        for m in range(len(c) - 1, k - 1, -1):
            c[m] -= c[m - k]
        return TruncatedSeries(c)

    def divide_one_minus(self, k: int) -> TruncatedSeries:
        """Multiply by ``1/(1 - q^k) = sum_n q^(kn)``."""
        c = list(self.coefficients)
        for m in range(k, len(c)):
            c[m] += c[m - k]
        return TruncatedSeries(c)

    def shift(self, d: int) -> TruncatedSeries:
        """Multiply by ``q^d``, dropping whatever falls past the order."""
        n = len(self.coefficients)
        return TruncatedSeries((0,) * min(d, n) + self.coefficients[: max(n - d, 0)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if self.order != other.order:
            raise ValueError("series truncated at different orders")
        return TruncatedSeries(a - b for a, b in zip(self, other))


def expand_rational_series(
    numerator_exponents: Iterable[int],
    denominator_exponents: Iterable[int],
    N: int,
) -> TruncatedSeries:
    """Coefficients up to ``q^N`` of ``prod(1 - q^d) / prod(1 - q^a)``."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    numerator_exponents = list(numerator_exponents)
    denominator_exponents = list(denominator_exponents)
    if any(k < 1 for k in numerator_exponents + denominator_exponents):
        raise ValueError("exponents must be positive")
    series = TruncatedSeries.one(N)
    for d in numerator_exponents:
        series = series.times_one_minus(d)
    for a in denominator_exponents:
        series = series.divide_one_minus(a)
    return series


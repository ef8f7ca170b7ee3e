"""Anti-plurigenera of a terminal Fano 3-fold from its volume and basket.

For ``m >= 0``::

    h0(-mK) = m(m+1)(2m+1)/12 * (-K)^3 + (2m+1) - l(m+1)

where ``l`` sums the per-point contributions of :func:`basket.l_contribution`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basket import Basket, l_contribution
from .errors import NegativeGenus, NonPositiveVolume, NotAnInteger


@dataclass(frozen=True)
class FanoNumericalType:
    volume: Fraction
    basket: Basket

    def __post_init__(self):
        object.__setattr__(self, "volume", Fraction(self.volume))
        if self.volume <= 0:
            raise NonPositiveVolume(self.volume)


def l_value(basket: Basket, n: int) -> Fraction:
    return sum((l_contribution(p, n) for p in basket), Fraction(0))


def euler_characteristic(t: FanoNumericalType, m: int) -> Fraction:
    """The exact, possibly non-integral, right-hand side of the formula."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return Fraction(m * (m + 1) * (2 * m + 1), 12) * t.volume + (2 * m + 1) - l_value(t.basket, m + 1)


def plurigenus(t: FanoNumericalType, m: int) -> int:
    value = euler_characteristic(t, m)
    if value.denominator != 1:
        raise NotAnInteger(m, value)
    if value < 0:
        raise NegativeGenus(m, value)
    return value.numerator


def genus_sequence(t: FanoNumericalType, N: int) -> list[int]:
    """``[h0(0), ..., h0(-NK)]``; the first failing ``m`` is carried on the raised error."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return [plurigenus(t, m) for m in range(N + 1)]


def volume_from_genus(h0: int, basket: Basket) -> Fraction:
    """Solve the ``m = 1`` case for the volume: ``2 * (h0 - 3 + l(2))``."""
    if h0 < 0:
        raise ValueError("h0 must be non-negative")
    v = 2 * (h0 - 3 + l_value(basket, 2))
    if v <= 0:
        raise NonPositiveVolume(v)
    return v

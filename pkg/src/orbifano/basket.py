"""Terminal cyclic quotient points ``1/r(1, -1, b)`` and Reid baskets.

A point is stored as the canonical pair ``(b, r)`` with ``0 < b <= r/2`` and
``gcd(b, r) == 1``. A :class:`Basket` is a multiset of such points kept in
ascending ``(r, b)`` order, so two baskets compare equal exactly when they
hold the same points with the same multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

from .errors import AmbiguousType, BasketSyntaxError, NonCoprime, NotTerminalType


@dataclass(frozen=True)
class OrbifoldPoint:
    b: int
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"index r={self.r} must be at least 2")
        if gcd(self.b, self.r) != 1:
            raise NonCoprime(f"{self.b} is not coprime to {self.r}")
        if not 0 < self.b <= self.r // 2:
            raise ValueError(f"({self.b}, {self.r}) is not canonical; use canonical_pair")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.r, self.b)

    def __lt__(self, other: OrbifoldPoint) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.b}/{self.r}"


def canonical_pair(b: int, r: int) -> OrbifoldPoint:
    """Reduce ``b`` mod ``r`` and pick the smaller of ``b`` and ``r - b``."""
    if r < 2:
        raise ValueError(f"index r={r} must be at least 2")
    b = b % r
    if b == 0 or gcd(b, r) != 1:
        raise NonCoprime(f"{b} is not a unit modulo {r}")
    return OrbifoldPoint(min(b, r - b), r)


def units(r: int) -> list[int]:
    return [u for u in range(1, r) if gcd(u, r) == 1]


def normalize_cyclic_quotient(w1: int, w2: int, w3: int, r: int) -> OrbifoldPoint:
    """Identify ``1/r(w1, w2, w3)`` as a terminal type ``1/r(1, -1, b)``.

    Every unit ``u`` mod ``r`` is tried; ``u`` works when the scaled weights
    contain both ``1`` and ``r - 1`` and the leftover weight is a unit.
    Raises :class:`NotTerminalType` if no unit works, and
    :class:`AmbiguousType` if two units disagree on the resulting type.
    """
    if r < 2:
        raise ValueError(f"index r={r} must be at least 2")
    weights = (w1 % r, w2 % r, w3 % r)
    if 0 in weights:
        raise NotTerminalType(f"1/{r}{tuple(weights)} has a weight divisible by {r}")
    found = None
    for u in units(r):
        scaled = [u * w % r for w in weights]
        if 1 not in scaled:
            continue
        scaled.remove(1)
        if r - 1 not in scaled:
            continue
        scaled.remove(r - 1)
        b = scaled[0]
        if gcd(b, r) != 1:
            continue
        point = canonical_pair(b, r)
        if found is None:
            found = point
        elif point != found:
            raise AmbiguousType(
                f"1/{r}{weights} normalizes to both {found} and {point}"
            )
    if found is None:
        raise NotTerminalType(f"1/{r}{weights} is not of type 1/r(1,-1,b)")
    return found


def gamma_of(p: OrbifoldPoint) -> Fraction:
    """The weight ``r - 1/r`` used to bound baskets of terminal Fano 3-folds."""
    return Fraction(p.r) - Fraction(1, p.r)


@lru_cache(maxsize=None)
def _period_prefix(b: int, r: int) -> tuple[Fraction, ...]:
    # prefix[s] = sum over j = 1..s of jb(r - jb) / 2r, for s = 0..r
    prefix = [Fraction(0)]
    for j in range(1, r + 1):
        jb = j * b % r
        prefix.append(prefix[-1] + Fraction(jb * (r - jb), 2 * r))
    return tuple(prefix)


def l_contribution(p: OrbifoldPoint, n: int) -> Fraction:
    """Sum of ``jb(r - jb) / 2r`` over ``j = 1 .. n-1``, ``jb`` the residue of ``j*b`` mod ``r``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    prefix = _period_prefix(p.b, p.r)
    periods, rest = divmod(n - 1, p.r)
    return periods * prefix[p.r] + prefix[rest]


class Basket:
    """An immutable multiset of :class:`OrbifoldPoint`, sorted by ``(r, b)``."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[OrbifoldPoint] = ()):
        self._points = tuple(sorted(points, key=lambda p: p.sort_key))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Basket:
        return cls(canonical_pair(b, r) for b, r in pairs)

    @classmethod
    def parse(cls, text: str) -> Basket:
        """Parse the ``b/r,b/r,...`` syntax; whitespace is ignored, empty text is the empty basket."""
        text = "".join(text.split())
        if not text:
            return cls()
        points = []
        for token in text.split(","):
            parts = token.split("/")
            if len(parts) != 2 or not all(part.isdigit() for part in parts):
                raise BasketSyntaxError(token)
            b, r = int(parts[0]), int(parts[1])
            if r < 2:
                raise BasketSyntaxError(token, "index r must be at least 2")
            try:
                points.append(canonical_pair(b, r))
            except NonCoprime:
                raise BasketSyntaxError(token, "b must be coprime to r") from None
        return cls(points)

    @property
    def points(self) -> tuple[OrbifoldPoint, ...]:
        return self._points

    def pairs(self) -> list[tuple[int, int]]:
        return [(p.b, p.r) for p in self._points]

    def gamma(self) -> Fraction:
        return sum((gamma_of(p) for p in self._points), Fraction(0))

    def __iter__(self) -> Iterator[OrbifoldPoint]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __add__(self, other: Basket) -> Basket:
        return Basket(self._points + tuple(other))

    def __eq__(self, other):
        if not isinstance(other, Basket):
            return NotImplemented
        return self._points == other._points

    def __lt__(self, other: Basket) -> bool:
        return [p.sort_key for p in self] < [p.sort_key for p in other]

    def __hash__(self):
        return hash(self._points)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._points)

    def __repr__(self) -> str:
        return f"Basket.parse({str(self)!r})"

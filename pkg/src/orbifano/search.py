"""Enumerate every basket numerically compatible with a given volume.

A basket survives when

* its gamma-sum ``sum(r - 1/r)`` stays strictly below ``gamma_bound``,
* its ``l(2)`` equals ``v/2 + 3 - h0(-K)`` for some admissible ``h0(-K)``, and
* the Riemann-Roch value of ``h0(-mK)`` is a non-negative integer for
  ``m = 1 .. depth``.

The depth-first search walks point types in ascending ``(r, b)`` order and
only ever appends types at or after the last one used, so each multiset is
visited once. Both prunes are monotone: every point adds a positive amount
to the gamma-sum and to ``l(2)``, so a partial basket that already exceeds
either bound has no valid completion.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .basket import Basket, OrbifoldPoint, gamma_of, l_contribution
from .errors import OrbifanoError
from .riemann_roch import FanoNumericalType, l_value, plurigenus

DEFAULT_GAMMA_BOUND = Fraction(24)
DEFAULT_DEPTH = 20


@dataclass(frozen=True)
class SearchConfig:
    volume: Fraction
    gamma_bound: Fraction = DEFAULT_GAMMA_BOUND
    depth: int = DEFAULT_DEPTH
    # optional cap on the index r, used to restrict the space in tests
    max_r: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "volume", Fraction(self.volume))
        object.__setattr__(self, "gamma_bound", Fraction(self.gamma_bound))
        if self.volume <= 0:
            raise ValueError("volume must be positive")
        if self.gamma_bound < 0:
            raise ValueError("gamma bound must be non-negative")
        if self.depth < 1:
            raise ValueError("integrality depth must be at least 1")

    @property
    def max_points(self) -> int:
        return math.floor(self.gamma_bound / Fraction(3, 2))


def l2_targets(volume: Fraction) -> list[Fraction]:
    """Admissible values of ``l(2)``, one per ``h0(-K)`` in ``0 .. floor(v/2 + 3)``, descending."""
    volume = Fraction(volume)
    if volume <= 0:
        raise ValueError("volume must be positive")
    top = volume / 2 + 3
    return [top - h0 for h0 in range(math.floor(top) + 1)]


def point_types(gamma_bound: Fraction, max_r: int | None = None) -> list[OrbifoldPoint]:
    """Canonical types whose own gamma is below the bound, ascending ``(r, b)``."""
    types = []
    r = 2
    while Fraction(r) - Fraction(1, r) < gamma_bound and (max_r is None or r <= max_r):
        types.extend(OrbifoldPoint(b, r) for b in range(1, r // 2 + 1) if math.gcd(b, r) == 1)
        r += 1
    return types


@dataclass
class _Searcher:
    config: SearchConfig

    def __post_init__(self):
        cfg = self.config
        self.types = point_types(cfg.gamma_bound, cfg.max_r)
        self.gammas = [gamma_of(p) for p in self.types]
        self.l2 = [l_contribution(p, 2) for p in self.types]
        self.targets = set(l2_targets(cfg.volume))
        self.l2_cap = max(self.targets)
        # l_tables[k][m] = l-contribution of type k at argument m + 1
        self.l_tables = [
            [l_contribution(p, m + 1) for m in range(cfg.depth + 1)] for p in self.types
        ]
        self.leading = [
            Fraction(m * (m + 1) * (2 * m + 1), 12) * cfg.volume + (2 * m + 1)
            for m in range(cfg.depth + 1)
        ]

    def accepts(self, chosen: list[int], l2: Fraction) -> bool:
        if l2 not in self.targets:
            return False
        for m in range(1, self.config.depth + 1):
            value = self.leading[m] - sum(self.l_tables[k][m] for k in chosen)
            if value.denominator != 1 or value < 0:
                return False
        return True

    def walk(self, start: int, chosen: list[int], gamma: Fraction, l2: Fraction, out: list):
        if self.accepts(chosen, l2):
            out.append(Basket(self.types[k] for k in chosen))
        if len(chosen) >= self.config.max_points:
            return
        for k in range(start, len(self.types)):
            g = gamma + self.gammas[k]
            if g >= self.config.gamma_bound:
                # gammas are non-decreasing along the type order
                break
            l = l2 + self.l2[k]
            if l > self.l2_cap:
                continue
            chosen.append(k)
            self.walk(k, chosen, g, l, out)
            chosen.pop()

    def subtree(self, k: int) -> list[Basket]:
        out: list[Basket] = []
        g, l = self.gammas[k], self.l2[k]
        if g < self.config.gamma_bound and l <= self.l2_cap and self.config.max_points >= 1:
            self.walk(k, [k], g, l, out)
        return out


def _run_subtree(config: SearchConfig, k: int) -> list[Basket]:
    return _Searcher(config).subtree(k)


def enumerate_baskets(config: SearchConfig, workers: int = 1) -> list[Basket]:
    """All surviving baskets in canonical order.

    With ``workers > 1`` the subtrees below each first point type are
    searched in separate processes; the output is identical either way.
    """
    searcher = _Searcher(config)
    found: list[Basket] = []
    if config.gamma_bound <= 0:
        return found
    if searcher.accepts([], Fraction(0)):
        found.append(Basket())
    roots = range(len(searcher.types))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_subtree, [config] * len(roots), roots):
                found.extend(part)
    else:
        for k in roots:
            found.extend(searcher.subtree(k))
    return sorted(found)


def verify_candidate(volume: Fraction, basket: Basket, depth: int) -> bool:
    """Recheck a survivor through the Riemann-Roch module rather than the search tables."""
    t = FanoNumericalType(volume, basket)
    try:
        for m in range(1, depth + 1):
            plurigenus(t, m)
    except OrbifanoError:
        return False
    return True


@dataclass(frozen=True)
class Survivor:
    basket: Basket
    h0_anticanonical: int
    gamma: Fraction


@dataclass
class SearchResult:
    config: SearchConfig
    survivors: list[Survivor] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return len(self.survivors) == 1

    def contains(self, basket: Basket) -> bool:
        return any(s.basket == basket for s in self.survivors)


def run_search(config: SearchConfig, workers: int = 1) -> SearchResult:
    result = SearchResult(config)
    for basket in enumerate_baskets(config, workers):
        if not verify_candidate(config.volume, basket, config.depth):
            raise AssertionError(f"search emitted {basket}, which fails the recheck")
        h0 = config.volume / 2 + 3 - l_value(basket, 2)
        result.survivors.append(Survivor(basket, int(h0), basket.gamma()))
    return result

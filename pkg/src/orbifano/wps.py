"""General quasi-smooth hypersurfaces ``X_d`` in ``P(a0, ..., a4)``.

The hypersurface is always the *general* member: every monomial of degree
``d`` is taken to appear with a generic nonzero coefficient, so the
singularities can be read off from the weights alone. Points with nontrivial
stabilizer live on coordinate vertices and coordinate edges; higher strata
are not analysed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Sequence

from .basket import Basket, OrbifoldPoint, normalize_cyclic_quotient
from .errors import (
    AmbiguousType,
    EdgeContained,
    NonIntegralOrbitCount,
    NotQuasiSmoothAtVertex,
    NotTerminalType,
    NotWellFormed,
    Unsupported,
)


def well_formed(weights: Sequence[int]) -> bool:
    """True iff every four of the five weights are coprime as a set."""
    if any(a < 1 for a in weights):
        raise ValueError("weights must be positive")
    return all(gcd(*sub) == 1 for sub in combinations(weights, len(weights) - 1))


@dataclass(frozen=True)
class WeightedHypersurface:
    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        weights = tuple(int(a) for a in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != 5:
            raise ValueError(f"expected 5 weights, got {len(weights)}")
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if not well_formed(weights):
            raise NotWellFormed(f"P{weights} is not well formed")
        if self.amplitude < 1:
            raise ValueError(
                f"amplitude {self.amplitude} < 1: X_{self.degree} in P{weights} is not Fano"
            )

    @property
    def amplitude(self) -> int:
        return sum(self.weights) - self.degree

    def __str__(self):
        return f"X_{self.degree} in P{self.weights}"


def volume(X: WeightedHypersurface) -> Fraction:
    """``(-K)^3 = alpha^3 d / prod(a_i)`` with ``alpha = sum(a_i) - d``."""
    return Fraction(X.amplitude**3 * X.degree, prod(X.weights))


def monomial_count(weights: Sequence[int], d: int) -> int:
    """Number of monomials of weighted degree ``d``, by the coin-change table."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    table = [1] + [0] * d
    for a in weights:
        for m in range(a, d + 1):
            table[m] += table[m - a]
    return table[d]


def _others(n: int, *skip: int) -> list[int]:
    return [k for k in range(n) if k not in skip]


def vertex_singularities(X: WeightedHypersurface) -> list[OrbifoldPoint]:
    a, d = X.weights, X.degree
    points = []
    for i, r in enumerate(a):
        if r == 1 or d % r == 0:
            continue
        tangents = [j for j in _others(5, i) if a[j] % r == d % r and a[j] <= d]
        if not tangents:
            raise NotQuasiSmoothAtVertex(
                f"{X}: no monomial x{i}^k*x_j of degree {d} at the weight-{r} vertex"
            )
        first, *alternatives = tangents
        point = normalize_cyclic_quotient(*(a[k] for k in _others(5, i, first)), r)
        for j in alternatives:
            try:
                other = normalize_cyclic_quotient(*(a[k] for k in _others(5, i, j)), r)
            except NotTerminalType:
                continue
            if other != point:
                raise AmbiguousType(f"{X}: weight-{r} vertex reads as {point} and {other}")
        points.append(point)
    return points


def edge_exponents(X: WeightedHypersurface, i: int, j: int) -> list[tuple[int, int]]:
    """All ``(p, q)`` with ``p*a_i + q*a_j = d``."""
    ai, aj, d = X.weights[i], X.weights[j], X.degree
    return [((d - q * aj) // ai, q) for q in range(d // aj + 1) if (d - q * aj) % ai == 0]


def edge_singularities(X: WeightedHypersurface) -> list[tuple[OrbifoldPoint, int]]:
    """Types and counts of the singular points in the interiors of coordinate edges."""
    a = X.weights
    found = []
    for i, j in combinations(range(5), 2):
        r = gcd(a[i], a[j])
        if r == 1:
            continue
        rest = [a[k] for k in _others(5, i, j)]
        if any(gcd(r, w) != 1 for w in rest):
            raise Unsupported(
                f"{X}: edge ({a[i]}, {a[j]}) has stabilizer {r} shared with a third weight"
            )
        exps = edge_exponents(X, i, j)
        if not exps:
            raise EdgeContained(f"{X} contains the edge ({a[i]}, {a[j]})")
        qs = [q for _, q in exps]
        span = (max(qs) - min(qs)) * r
        if span % a[i]:
            raise NonIntegralOrbitCount(
                f"{X}: edge ({a[i]}, {a[j]}) gives {span}/{a[i]} points"
            )
        count = span // a[i]
        if count:
            found.append((normalize_cyclic_quotient(*rest, r), count))
    return found


def basket_of(X: WeightedHypersurface) -> Basket:
    points = list(vertex_singularities(X))
    for point, count in edge_singularities(X):
        points.extend([point] * count)
    return Basket(points)

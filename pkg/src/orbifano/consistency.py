"""Compare Riemann-Roch plurigenera with the Hilbert series of ``X_d``.

When ``O(1)`` restricted to ``X_d`` is ``-K`` (amplitude one), the Hilbert
series ``(1 - q^d) / prod(1 - q^a_i)`` must agree term by term with the
anti-plurigenera computed from the volume and basket. Differences between
the monomial count and ``h0`` in a given degree count the relations that
the coordinate ring has in that degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .basket import Basket
from .errors import AmplitudeNotOne, OrbifanoError
from .exactnum import DEFAULT_ORDER, TruncatedSeries, expand_rational_series
from .riemann_roch import FanoNumericalType, euler_characteristic, plurigenus
from .wps import WeightedHypersurface, basket_of, monomial_count, volume


@dataclass(frozen=True)
class RelationProbe:
    degree: int
    monomials: int
    h0: int

    @property
    def deficit(self) -> int:
        return self.monomials - self.h0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.monomials, self.h0, self.deficit)


@dataclass
class ConsistencyReport:
    name: str
    volume: Optional[Fraction]
    basket: Optional[Basket]
    checked_order: int
    first_mismatch: Optional[tuple[int, Fraction, int]] = None
    relation_deficits: list[RelationProbe] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def match(self) -> bool:
        return self.error is None and self.first_mismatch is None


def _require_amplitude_one(X: WeightedHypersurface) -> None:
    if X.amplitude != 1:
        raise AmplitudeNotOne(f"{X} has amplitude {X.amplitude}; O(1) is not -K")


def hypersurface_series(X: WeightedHypersurface, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    _require_amplitude_one(X)
    return expand_rational_series([X.degree], X.weights, N)


def relation_probe(X: WeightedHypersurface, m: int, basket: Basket | None = None) -> RelationProbe:
    _require_amplitude_one(X)
    if m < 0:
        raise ValueError("degree must be non-negative")
    t = FanoNumericalType(volume(X), basket_of(X) if basket is None else basket)
    return RelationProbe(m, monomial_count(X.weights, m), plurigenus(t, m))


def cross_check(
    X: WeightedHypersurface,
    N: int = DEFAULT_ORDER,
    *,
    name: str | None = None,
    basket: Basket | None = None,
) -> ConsistencyReport:
    """Compare ``h0(-mK)`` with the Hilbert coefficient for ``m = 0..N``.

    ``basket`` overrides the extracted basket, which is how a wrong candidate
    basket can be tested against a known hypersurface. Extraction failures
    end up in ``report.error`` rather than propagating.
    """
    report = ConsistencyReport(name or str(X), None, None, N)
    try:
        _require_amplitude_one(X)
        report.volume = volume(X)
        report.basket = basket_of(X) if basket is None else basket
        t = FanoNumericalType(report.volume, report.basket)
        hilbert = hypersurface_series(X, N)
        for m in range(N + 1):
            chi = euler_characteristic(t, m)
            if chi != hilbert[m]:
                report.first_mismatch = (m, chi, hilbert[m])
                break
        if report.first_mismatch is None:
            for m in range(min(N, X.degree) + 1):
                probe = RelationProbe(m, monomial_count(X.weights, m), hilbert[m])
                if probe.deficit or m == X.degree:
                    report.relation_deficits.append(probe)
    except OrbifanoError as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    return report

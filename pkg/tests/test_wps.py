import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import pytest

from orbifano.basket import Basket, OrbifoldPoint
from orbifano.catalog import shipped_catalog
from orbifano.errors import (
    EdgeContained,
    NotQuasiSmoothAtVertex,
    NotWellFormed,
    Unsupported,
)
from orbifano.exactnum import expand_rational_series
from orbifano.wps import (
    WeightedHypersurface,
    basket_of,
    edge_exponents,
    edge_singularities,
    monomial_count,
    vertex_singularities,
    volume,
    well_formed,
)

X66 = WeightedHypersurface((1, 5, 6, 22, 33), 66)
X12 = WeightedHypersurface((1, 1, 1, 4, 6), 12)
QUARTIC = WeightedHypersurface((1, 1, 1, 1, 1), 4)


def test_well_formed():
    assert well_formed((1, 5, 6, 22, 33))
    assert not well_formed((2, 4, 6, 10, 15))
    assert well_formed((1, 1, 1, 1, 1))
    with pytest.raises(NotWellFormed):
        WeightedHypersurface((2, 4, 6, 10, 15), 36)


def test_construction_checks():
    with pytest.raises(ValueError):
        WeightedHypersurface((1, 1, 1, 1), 3)
    with pytest.raises(ValueError):
        WeightedHypersurface((1, 1, 1, 1, 1), 5)  # amplitude 0
    assert WeightedHypersurface((1, 1, 1, 1, 1), 3).amplitude == 2


def test_volume():
    assert volume(X66) == Fraction(1, 330)
    assert volume(QUARTIC) == 4
    assert volume(X12) == Fraction(1, 2)
    assert volume(WeightedHypersurface((1, 1, 1, 1, 1), 3)) == 24


def test_monomial_count():
    assert monomial_count((1, 5, 6, 22, 33), 66) == 173
    assert monomial_count((1, 5, 6, 22, 33), 0) == 1
    assert monomial_count((1, 1, 1, 1, 1), 2) == 15


def brute_force_count(weights, m):
    ranges = [range(m // a + 1) for a in weights]
    return sum(1 for ns in product(*ranges) if sum(a * n for a, n in zip(weights, ns)) == m)


def test_monomial_count_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        weights = [rng.randint(1, 9) for _ in range(rng.randint(1, 5))]
        m = rng.randint(0, 25)
        assert monomial_count(weights, m) == brute_force_count(weights, m)


def test_vertices():
    assert vertex_singularities(X66) == [OrbifoldPoint(2, 5)]
    assert vertex_singularities(X12) == []
    assert vertex_singularities(QUARTIC) == []


def test_vertex_not_quasismooth():
    with pytest.raises(NotQuasiSmoothAtVertex):
        vertex_singularities(WeightedHypersurface((1, 1, 1, 1, 3), 5))


def test_edges():
    assert edge_singularities(X66) == [
        (OrbifoldPoint(1, 2), 1),
        (OrbifoldPoint(1, 3), 1),
        (OrbifoldPoint(2, 11), 1),
    ]
    assert edge_exponents(X66, 2, 3) == [(11, 0), (0, 3)]
    assert edge_exponents(X66, 3, 4) == [(3, 0), (0, 2)]
    assert edge_singularities(X12) == [(OrbifoldPoint(1, 2), 1)]
    assert edge_singularities(QUARTIC) == []


def test_edge_errors():
    with pytest.raises(EdgeContained):
        edge_singularities(WeightedHypersurface((1, 1, 2, 2, 3), 5))
    with pytest.raises(Unsupported):
        edge_singularities(WeightedHypersurface((1, 2, 4, 6, 3), 12))


def test_basket_of():
    assert basket_of(X66) == Basket.parse("1/2,1/3,2/5,2/11")
    assert basket_of(X12) == Basket.parse("1/2")
    assert basket_of(QUARTIC) == Basket()
    assert basket_of(X66).gamma() == Fraction(6559, 330) < 24


def test_multiple_edge_points():
    X = WeightedHypersurface((1, 1, 2, 2, 3), 6)
    # edge (2,2): p*2 + q*2 = 6 gives q in 0..3, so 3 points of type 1/2(1,1,1)
    assert edge_singularities(X) == [(OrbifoldPoint(1, 2), 3)]
    assert vertex_singularities(X) == []  # weight-3 vertex: 3 | 6
    assert basket_of(X) == Basket.parse("1/2,1/2,1/2")


def _edge_spans(X):
    a = X.weights
    for i, j in combinations(range(5), 2):
        r = gcd(a[i], a[j])
        if r == 1:
            continue
        exps = edge_exponents(X, i, j)
        if not exps:
            continue
        ps = [p for p, _ in exps]
        qs = [q for _, q in exps]
        yield (max(qs) - min(qs)) * r, a[i], (max(ps) - min(ps)) * r, a[j]


def _symmetric(X):
    for q_span, ai, p_span, aj in _edge_spans(X):
        assert q_span * aj == p_span * ai


@pytest.mark.parametrize("entry", shipped_catalog(), ids=lambda e: e.name)
def test_edge_count_symmetry_catalog(entry):
    _symmetric(WeightedHypersurface(entry.weights, entry.degree))


def test_edge_count_symmetry_random():
    rng = random.Random(11)
    checked = 0
    while checked < 200:
        weights = tuple(rng.randint(1, 12) for _ in range(5))
        if not well_formed(weights):
            continue
        d = rng.randint(1, sum(weights) - 1)
        _symmetric(WeightedHypersurface(weights, d))
        checked += 1


def test_count_matches_series_random():
    rng = random.Random(2024)
    for _ in range(200):
        weights = [rng.randint(1, 40) for _ in range(5)]
        m = rng.randint(0, 150)
        series = expand_rational_series([], weights, m)
        assert monomial_count(weights, m) == series[m]

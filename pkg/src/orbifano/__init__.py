"""Exact numerics for terminal Fano 3-folds: orbifold Riemann-Roch,
baskets of weighted hypersurfaces, Hilbert series and basket search."""

from .basket import (
    Basket,
    OrbifoldPoint,
    canonical_pair,
    gamma_of,
    l_contribution,
    normalize_cyclic_quotient,
)
from .catalog import CatalogEntry, parse_catalog, shipped_catalog, verify_entry
from .consistency import ConsistencyReport, cross_check, hypersurface_series, relation_probe
from .exactnum import Rational, TruncatedSeries, expand_rational_series
from .riemann_roch import FanoNumericalType, genus_sequence, l_value, plurigenus, volume_from_genus
from .search import SearchConfig, enumerate_baskets, l2_targets, run_search
from .wps import (
    WeightedHypersurface,
    basket_of,
    edge_singularities,
    monomial_count,
    vertex_singularities,
    volume,
    well_formed,
)

__version__ = "0.1.0"

"""Catalogs of hypersurface families and the end-to-end ``verify`` workflow.

A catalog is a JSON array of objects::

    {"name": "X66", "weights": [1, 5, 6, 22, 33], "degree": 66,
     "expected_volume": "1/330", "expected_basket": "1/2,2/5,1/3,2/11",
     "expected_genus_prefix": [1, 1, 1, 1, 1, 2, 3]}

Only ``name``, ``weights`` and ``degree`` are required.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .basket import Basket
from .consistency import ConsistencyReport, cross_check
from .errors import (
    BasketSyntaxError,
    DuplicateName,
    IoFailure,
    MalformedEntry,
    OrbifanoError,
)
from .exactnum import DEFAULT_ORDER, format_rational, parse_rational
from .riemann_roch import FanoNumericalType, genus_sequence
from .wps import WeightedHypersurface, well_formed

_KNOWN_KEYS = {
    "name",
    "weights",
    "degree",
    "expected_volume",
    "expected_basket",
    "expected_genus_prefix",
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    weights: tuple[int, ...]
    degree: int
    expected_volume: Optional[Fraction] = None
    expected_basket: Optional[Basket] = None
    expected_genus_prefix: Optional[tuple[int, ...]] = None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _entry_from_json(index: int, obj) -> CatalogEntry:
    if not isinstance(obj, dict):
        raise MalformedEntry(index, "<entry>", "expected an object")
    unknown = set(obj) - _KNOWN_KEYS
    if unknown:
        raise MalformedEntry(index, sorted(unknown)[0], "unknown key")
    for key in ("name", "weights", "degree"):
        if key not in obj:
            raise MalformedEntry(index, key, "missing")

    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise MalformedEntry(index, "name", "must be a non-empty string")
    weights = obj["weights"]
    if not isinstance(weights, list) or len(weights) != 5:
        raise MalformedEntry(index, "weights", "must be a list of exactly 5 integers")
    if not all(_is_int(a) and a >= 1 for a in weights):
        raise MalformedEntry(index, "weights", "weights must be positive integers")
    degree = obj["degree"]
    if not _is_int(degree) or degree < 1:
        raise MalformedEntry(index, "degree", "must be a positive integer")

    volume = None
    if "expected_volume" in obj:
        raw = obj["expected_volume"]
        try:
            volume = parse_rational(raw) if isinstance(raw, str) else None
        except ValueError:
            volume = None
        if volume is None or volume <= 0:
            raise MalformedEntry(index, "expected_volume", f"not a positive 'p/q' string: {raw!r}")
    basket = None
    if "expected_basket" in obj:
        raw = obj["expected_basket"]
        if not isinstance(raw, str):
            raise MalformedEntry(index, "expected_basket", "must be a 'b/r,...' string")
        try:
            basket = Basket.parse(raw)
        except BasketSyntaxError as exc:
            raise MalformedEntry(index, "expected_basket", str(exc)) from None
    prefix = None
    if "expected_genus_prefix" in obj:
        raw = obj["expected_genus_prefix"]
        if not isinstance(raw, list) or not all(_is_int(h) and h >= 0 for h in raw):
            raise MalformedEntry(index, "expected_genus_prefix", "must be a list of non-negative integers")
        prefix = tuple(raw)
    return CatalogEntry(name, tuple(weights), degree, volume, basket, prefix)


def load_catalog(data) -> list[CatalogEntry]:
    """Validate already-decoded JSON data."""
    if not isinstance(data, list):
        raise MalformedEntry(0, "<root>", "catalog must be a JSON array")
    entries = []
    seen = set()
    for index, obj in enumerate(data):
        entry = _entry_from_json(index, obj)
        if entry.name in seen:
            raise DuplicateName(f"catalog entry #{index}: name {entry.name!r} already used")
        seen.add(entry.name)
        entries.append(entry)
    return entries


def parse_catalog(path) -> list[CatalogEntry]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read catalog {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedEntry(0, "<json>", f"line {exc.lineno}: {exc.msg}") from None
    return load_catalog(data)


def shipped_catalog() -> list[CatalogEntry]:
    text = resources.files("orbifano").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return load_catalog(json.loads(text))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    entry: CatalogEntry
    consistency: Optional[ConsistencyReport] = None
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)


def verify_entry(entry: CatalogEntry, N: int = DEFAULT_ORDER) -> VerificationReport:
    """Run every check on one entry. Failures are recorded, never raised."""
    report = VerificationReport(entry)
    if not report.check("well_formed", well_formed(entry.weights), f"P{entry.weights}"):
        return report
    try:
        X = WeightedHypersurface(entry.weights, entry.degree)
    except (OrbifanoError, ValueError) as exc:
        report.check("hypersurface", False, str(exc))
        return report

    cc = cross_check(X, N, name=entry.name)
    report.consistency = cc
    if cc.error is not None:
        report.check("extraction", False, cc.error)
        return report

    if entry.expected_volume is not None:
        report.check(
            "expected_volume",
            cc.volume == entry.expected_volume,
            f"computed {format_rational(cc.volume)}, expected {format_rational(entry.expected_volume)}",
        )
    if entry.expected_basket is not None:
        report.check(
            "expected_basket",
            cc.basket == entry.expected_basket,
            f"computed {{{cc.basket}}}, expected {{{entry.expected_basket}}}",
        )
    mismatch = ""
    if cc.first_mismatch is not None:
        m, rr, hilb = cc.first_mismatch
        mismatch = f"first mismatch at m={m}: Riemann-Roch {rr}, Hilbert {hilb}"
    report.check("series_match", cc.match, mismatch or f"equal up to order {N}")

    if entry.expected_genus_prefix is not None:
        prefix = list(entry.expected_genus_prefix)
        try:
            got = genus_sequence(FanoNumericalType(cc.volume, cc.basket), len(prefix) - 1) if prefix else []
        except OrbifanoError as exc:
            report.check("expected_genus_prefix", False, str(exc))
        else:
            report.check("expected_genus_prefix", got == prefix, f"computed {got}, expected {prefix}")

    if cc.match:
        if entry.degree <= N:
            at_d = [p for p in cc.relation_deficits if p.degree == entry.degree]
            below = [p for p in cc.relation_deficits if p.degree < entry.degree]
            report.check(
                "relation_below_degree",
                not below,
                "no relations below degree %d" % entry.degree
                if not below
                else "relations in degrees %s" % [p.degree for p in below],
            )
            deficit = at_d[0].deficit if at_d else None
            report.check(
                "relation_at_degree",
                deficit == 1,
                f"deficit {deficit} in degree {entry.degree}",
            )
        else:
            report.check("relation_at_degree", False, f"degree {entry.degree} exceeds order {N}")
    return report


def verify_catalog(entries: list[CatalogEntry], N: int = DEFAULT_ORDER) -> list[VerificationReport]:
    return [verify_entry(e, N) for e in entries]

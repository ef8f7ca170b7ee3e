"""Command line entry point: ``orbifano {rr,hilbert,basket,count,verify,search}``.

Each subcommand builds a plain dict payload. ``--json`` dumps it as is;
otherwise a small per-command renderer prints tab-delimited lines. Exit
status is 0 on success, 1 when a check fails or the numerics are
inconsistent, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as catalog_mod
from .basket import Basket
from .consistency import hypersurface_series
from .errors import BasketSyntaxError, DuplicateName, IoFailure, MalformedEntry, OrbifanoError
from .exactnum import DEFAULT_ORDER, format_rational, parse_rational
from .riemann_roch import FanoNumericalType, genus_sequence, plurigenus
from .search import DEFAULT_DEPTH, DEFAULT_GAMMA_BOUND, SearchConfig, run_search
from .wps import (
    WeightedHypersurface,
    basket_of,
    edge_singularities,
    monomial_count,
    vertex_singularities,
    volume,
)

TRUNCATE_ENV = "ORBIFANO_TRUNCATE"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get(TRUNCATE_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{TRUNCATE_ENV}={raw!r} is not an integer") from None
    if value < 0:
        raise UsageError(f"{TRUNCATE_ENV}={raw!r} must be non-negative")
    return value


# argument types; argparse turns ValueError/ArgumentTypeError into exit 2


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_rational(text: str) -> Fraction:
    value = _rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def _nonneg_rational(text: str) -> Fraction:
    value = _rational(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be non-negative")
    return value


def _basket(text: str) -> Basket:
    try:
        return Basket.parse(text)
    except BasketSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weights(text: str) -> tuple[int, ...]:
    out = []
    for token in "".join(text.split()).split(","):
        if not token.isdigit() or int(token) < 1:
            raise argparse.ArgumentTypeError(f"bad weight {token!r}: expected a positive integer")
        out.append(int(token))
    return tuple(out)


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be non-negative")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def _hypersurface(args) -> WeightedHypersurface:
    if len(args.weights) != 5:
        raise UsageError(f"--weights: expected exactly 5 weights, got {len(args.weights)}")
    return WeightedHypersurface(args.weights, args.degree)


# subcommands: each returns (payload, exit status)


def cmd_rr(args):
    t = FanoNumericalType(args.volume, args.basket)
    payload = {"volume": format_rational(t.volume), "basket": str(t.basket)}
    if args.upto is not None:
        payload["h0"] = genus_sequence(t, args.upto)
    else:
        m = 1 if args.m is None else args.m
        payload["m"] = m
        payload["h0"] = plurigenus(t, m)
    return payload, EXIT_OK


def render_rr(p):
    if isinstance(p["h0"], list):
        return [f"{m}\t{h}" for m, h in enumerate(p["h0"])]
    return [str(p["h0"])]


def cmd_hilbert(args):
    X = _hypersurface(args)
    N = default_order() if args.truncate is None else args.truncate
    series = hypersurface_series(X, N)
    return {"weights": list(X.weights), "degree": X.degree, "order": N, "coefficients": series.tolist()}, EXIT_OK


def render_hilbert(p):
    return [f"{m}\t{c}" for m, c in enumerate(p["coefficients"])]


def cmd_basket(args):
    X = _hypersurface(args)
    payload = {
        "weights": list(X.weights),
        "degree": X.degree,
        "volume": format_rational(volume(X)),
        "basket": str(basket_of(X)),
        "vertices": [str(p) for p in vertex_singularities(X)],
        "edges": [[str(p), n] for p, n in edge_singularities(X)],
    }
    payload["gamma"] = format_rational(Basket.parse(payload["basket"]).gamma())
    return payload, EXIT_OK


def render_basket(p):
    lines = [f"volume\t{p['volume']}", f"basket\t{p['basket']}", f"gamma\t{p['gamma']}"]
    lines += [f"vertex\t{v}" for v in p["vertices"]]
    lines += [f"edge\t{t}\t{n}" for t, n in p["edges"]]
    return lines


def cmd_count(args):
    return {"weights": list(args.weights), "degree": args.degree,
            "count": monomial_count(args.weights, args.degree)}, EXIT_OK


def render_count(p):
    return [str(p["count"])]


def _report_payload(rep: catalog_mod.VerificationReport):
    cc = rep.consistency
    out = {
        "name": rep.entry.name,
        "weights": list(rep.entry.weights),
        "degree": rep.entry.degree,
        "passed": rep.passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks],
    }
    if cc is not None:
        out["consistency"] = {
            "volume": None if cc.volume is None else format_rational(cc.volume),
            "basket": None if cc.basket is None else str(cc.basket),
            "checked_order": cc.checked_order,
            "match": cc.match,
            "first_mismatch": None
            if cc.first_mismatch is None
            else [cc.first_mismatch[0], format_rational(cc.first_mismatch[1]), cc.first_mismatch[2]],
            "relation_deficits": [[p.degree, p.monomials, p.h0, p.deficit] for p in cc.relation_deficits],
            "error": cc.error,
        }
    return out


def cmd_verify(args):
    N = default_order() if args.truncate is None else args.truncate
    if args.catalog is None:
        entries = catalog_mod.shipped_catalog()
    else:
        entries = catalog_mod.parse_catalog(args.catalog)
    reports = catalog_mod.verify_catalog(entries, N)
    payload = {"order": N, "entries": [_report_payload(r) for r in reports]}
    payload["passed"] = all(r.passed for r in reports)
    return payload, EXIT_OK if payload["passed"] else EXIT_FAIL


def render_verify(p):
    lines = []
    for e in p["entries"]:
        lines.append(f"entry\t{e['name']}\t{'PASS' if e['passed'] else 'FAIL'}")
        cc = e.get("consistency")
        if cc is not None:
            lines.append(f"  volume\t{cc['volume']}")
            lines.append(f"  basket\t{cc['basket']}")
            for d, mon, h0, deficit in cc["relation_deficits"]:
                lines.append(f"  relations\tdegree {d}\tmonomials {mon}\th0 {h0}\tdeficit {deficit}")
        for c in e["checks"]:
            lines.append(f"  {'ok' if c['passed'] else 'FAILED'}\t{c['name']}\t{c['detail']}")
    lines.append(f"order\t{p['order']}")
    lines.append(f"result\t{'PASS' if p['passed'] else 'FAIL'}")
    return lines


def cmd_search(args):
    config = SearchConfig(args.volume, args.gamma_bound, args.depth)
    result = run_search(config, workers=args.workers)
    payload = {
        "volume": format_rational(config.volume),
        "gamma_bound": format_rational(config.gamma_bound),
        "depth": config.depth,
        "survivors": [
            {"basket": str(s.basket), "h0": s.h0_anticanonical, "gamma": format_rational(s.gamma)}
            for s in result.survivors
        ],
        "unique": result.unique,
    }
    return payload, EXIT_OK


def render_search(p):
    lines = [f"volume\t{p['volume']}", f"gamma_bound\t{p['gamma_bound']}", f"depth\t{p['depth']}"]
    for s in p["survivors"]:
        lines.append(f"basket\t{s['basket']}\th0(-K)\t{s['h0']}\tgamma\t{s['gamma']}")
    lines.append(f"survivors\t{len(p['survivors'])}")
    lines.append(f"unique\t{'yes' if p['unique'] else 'no'}")
    return lines


RENDERERS = {
    "rr": render_rr,
    "hilbert": render_hilbert,
    "basket": render_basket,
    "count": render_count,
    "verify": render_verify,
    "search": render_search,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbifano",
        description="Numerical invariants of terminal Fano 3-folds and weighted hypersurfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rr", help="anti-plurigenera from volume and basket")
    p.add_argument("--volume", type=_positive_rational, required=True, help="(-K)^3 as p/q")
    p.add_argument("--basket", type=_basket, required=True, help="comma-separated b/r tokens")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--m", type=_nonneg_int, help="single multiple m (default 1)")
    group.add_argument("--upto", type=_nonneg_int, metavar="N", help="all m = 0..N")
    p.set_defaults(func=cmd_rr)

    for name, func, helptext in (
        ("hilbert", cmd_hilbert, "Hilbert series coefficients of X_d"),
        ("basket", cmd_basket, "volume and singularity basket of X_d"),
        ("count", cmd_count, "number of monomials of a given degree"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--weights", type=_weights, required=True, help="comma-separated weights")
        p.add_argument("--degree", type=_nonneg_int if name == "count" else _positive_int, required=True)
        if name == "hilbert":
            p.add_argument("--truncate", type=_nonneg_int, metavar="N",
                           help=f"truncation order (default {DEFAULT_ORDER} or ${TRUNCATE_ENV})")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run all checks over a catalog file")
    p.add_argument("--catalog", help="JSON catalog (default: the shipped catalog)")
    p.add_argument("--truncate", type=_nonneg_int, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="enumerate baskets compatible with a volume")
    p.add_argument("--volume", type=_positive_rational, required=True)
    p.add_argument("--gamma-bound", type=_nonneg_rational, default=DEFAULT_GAMMA_BOUND)
    p.add_argument("--depth", type=_positive_int, default=DEFAULT_DEPTH)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_search)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        payload, status = args.func(args)
    except (UsageError, IoFailure, MalformedEntry, DuplicateName) as exc:
        print(f"orbifano {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OrbifanoError, ValueError) as exc:
        print(f"orbifano {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(RENDERERS[args.command](payload)))
    return status


if __name__ == "__main__":
    sys.exit(main())

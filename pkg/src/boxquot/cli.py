"""Command-line front end.

Exit codes: 0 = all identities match, 1 = mismatch found, 2 = error.
Output is byte-deterministic for a fixed configuration; the worker count
never affects it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import verify
from .descriptions import (DescriptionError, fixture, parse_module_description,
                           parse_module_file)
from .modules import ext1, ideal_presentation
from .oracle import DEFAULT_PRIMES, OracleError
from .quot import colored_quot_series, quot_series
from .series import TruncSeries


@dataclass
class RunConfig:
    order: int = 6
    n_max: int = 2
    primes: tuple = DEFAULT_PRIMES
    workers: int = 1
    fmt: str = "json"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        primes = tuple(dict.fromkeys(self.primes))
        if len(primes) != len(self.primes):
            raise ValueError("primes must be distinct")
        if any(p < 2 for p in primes):
            raise ValueError("primes must be >= 2")
        if len(primes) < 3:
            raise ValueError("need at least 3 primes for the oracle")


def _add_common(parser):
    parser.add_argument("--order", "-N", type=int, default=6,
                        help="truncation order (default 6)")
    parser.add_argument("--n-max", type=int, default=2,
                        help="oracle length cap (default 2)")
    parser.add_argument("--primes", type=str, default="2,3,5,7",
                        help="comma-separated primes for the oracle")
    parser.add_argument("--workers", type=int,
                        default=int(os.environ.get("BOXQUOT_WORKERS", "1")),
                        help="worker count (env BOXQUOT_WORKERS)")
    parser.add_argument("--format", dest="fmt", choices=("json", "table"),
                        default="json")


def _add_module_source(parser, flag="--module"):
    parser.add_argument(flag, type=str, default=None,
                        help="path to a module-description JSON file")
    parser.add_argument("--fixture", type=str, default=None,
                        help="built-in fixture: line | two-axes | fat-line | "
                             "rank2-R | free-r2")


def _load_description(args, flag="module"):
    path = getattr(args, flag, None)
    if path is not None:
        return parse_module_file(path)
    if args.fixture is not None:
        return fixture(args.fixture)
    raise DescriptionError(f"need --{flag.replace('_', '-')} or --fixture")


def _config(args):
    primes = tuple(int(p) for p in args.primes.split(",") if p.strip())
    return RunConfig(order=args.order, n_max=args.n_max, primes=primes,
                     workers=args.workers, fmt=args.fmt)


def _emit_series(series, cfg):
    if cfg.fmt == "json":
        print(json.dumps(series.to_json(), sort_keys=True))
    else:
        print(str(series))


def _emit_report(report, cfg):
    if cfg.fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.to_table())
    return 0 if report.match else 1


def _cmd_hilb(args):
    cfg = _config(args)
    series = colored_quot_series(args.rank, cfg.order, workers=cfg.workers)
    _emit_series(series, cfg)
    return 0


def _cmd_quot(args):
    cfg = _config(args)
    desc = _load_description(args)
    source = verify._lhs_box_module(desc, cfg.order)
    if source is None:
        series, _ = verify._series_by_any_route(
            desc.payload, cfg.order, cfg.n_max, cfg.primes, cfg.workers,
            "quot", [])
    else:
        series = quot_series(source, cfg.order, workers=cfg.workers)
    _emit_series(series, cfg)
    return 0


def _cmd_ext1(args):
    cfg = _config(args)
    desc = _load_description(args)
    module = verify._ext1_module(desc, bound=cfg.order)
    out = {
        "kind": "finite_boxes" if module.is_finite else "truncated_boxes",
        "truncation_bound": module.truncation_bound,
        "boxes": [{"weight": list(b.weight), "color": b.color, "slot": b.slot}
                  for b in module.boxes],
        "edges": [sorted([list(e) for e in es]) for es in module.edges],
    }
    print(json.dumps(out, sort_keys=True))
    return 0


def _cmd_check_main(args):
    cfg = _config(args)
    desc = _load_description(args)
    report = verify.check_main(desc, cfg.order, n_max=cfg.n_max,
                               primes=cfg.primes, workers=cfg.workers)
    return _emit_report(report, cfg)


def _cmd_check_dtpt(args):
    cfg = _config(args)
    if args.curve is not None:
        desc = parse_module_file(args.curve)
    elif args.fixture is not None:
        desc = fixture(args.fixture)
    else:
        raise DescriptionError("need --curve or --fixture")
    report = verify.check_dtpt(desc, cfg.order, workers=cfg.workers)
    return _emit_report(report, cfg)


def _cmd_check_cor(args):
    cfg = _config(args)
    desc = _load_description(args)
    if args.dual_module is not None:
        dual = parse_module_file(args.dual_module)
    else:
        dual = desc  # self-dual presentation by default
    report = verify.check_cor(desc, dual, bound=max(cfg.order, 4))
    return _emit_report(report, cfg)


def _cmd_check_dual(args):
    cfg = _config(args)
    desc = _load_description(args)
    report = verify.check_dual(desc)
    return _emit_report(report, cfg)


def _cmd_check_locfree(args):
    cfg = _config(args)
    report = verify.check_locfree(args.rank, cfg.order, workers=cfg.workers)
    return _emit_report(report, cfg)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="boxquot",
        description="Exact Quot-scheme Euler-characteristic series and "
                    "identity checks over C[x,y,z]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilb", help="punctual Hilbert/Quot series of O^r")
    p.add_argument("--rank", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_hilb)

    p = sub.add_parser("quot", help="Quot series of a described module")
    _add_module_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_quot)

    p = sub.add_parser("ext1", help="Ext^1(M, A) as a box module")
    _add_module_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_ext1)

    p = sub.add_parser("check-main",
                       help="Quot series of M vs MacMahon^r times Ext^1 side")
    _add_module_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_check_main)

    p = sub.add_parser("check-dtpt", help="DT/PT on a fixed monomial curve")
    p.add_argument("--curve", type=str, default=None,
                   help="path to a curve-profile JSON file")
    p.add_argument("--fixture", type=str, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_check_dtpt)

    p = sub.add_parser("check-cor",
                       help="reciprocity of the Ext^1 Quot polynomial")
    _add_module_source(p)
    p.add_argument("--dual-module", type=str, default=None,
                   help="description of the dual presentation (defaults to "
                        "the module itself)")
    _add_common(p)
    p.set_defaults(func=_cmd_check_cor)

    p = sub.add_parser("check-dual",
                       help="length reciprocity under the Matlis dual")
    _add_module_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_check_dual)

    p = sub.add_parser("check-locfree",
                       help="colored Quot series vs MacMahon power")
    p.add_argument("--rank", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_check_locfree)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DescriptionError, OracleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

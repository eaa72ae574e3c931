"""Command-line front end.

Subcommands: compute, catalog, verify, classify, enumerate,
dump-catalog.  Exit codes: 0 success / verification matched,
1 verification mismatch, 2 usage error, 3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import families  # noqa: F401  (registers the catalog)
from .catalog import (
    catalog_dump,
    crosscheck,
    family_ids,
    get_family,
    verification_grid,
)
from .classifier import (
    EnumerationSpec,
    classification_ids,
    classify_by_cardinality,
    enumerate_normalized_sets,
    get_classification,
    verify_classification,
    verify_containment,
)
from .config import FORMATS, load_config
from .engine import restricted_sumset
from .errors import ResourceLimitError
from .intset import make_set
from .reports import (
    render_classification,
    render_compute,
    render_containment,
    render_coverage,
    render_sets,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default plain)")
    parser.add_argument("--output", default=None, help="write to file instead of stdout")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for exhaustive sweeps")
    parser.add_argument("--naive-cap", type=int, default=None, dest="naive_cap",
                        help="subset-count cap for the brute-force oracle")
    parser.add_argument("--bitwindow-cap", type=int, default=None, dest="bitwindow_cap",
                        help="bitmap window cap for the DP engine")
    parser.add_argument("--config", default=None, help="key=value config file")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock fields in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsumset",
        description="Exact restricted h-fold sumsets, formula catalog, and extremal-set verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="h-fold sumset of one set")
    p.add_argument("--set", required=True, dest="set_text",
                   help="comma-separated integers, e.g. 0,1,3,7")
    p.add_argument("--h", required=True, type=int)
    p.add_argument("--repeats", action="store_true",
                   help="allow repeated summands instead of distinct ones")
    p.add_argument("--naive", action="store_true",
                   help="use the brute-force subset oracle instead of the DP")
    _common_options(p)

    p = sub.add_parser("catalog", help="crosscheck formula families against the engine")
    p.add_argument("--family", default=None, help="family id (default: all)")
    p.add_argument("--h", default=None, help="h value or range, e.g. 3 or 3..5")
    p.add_argument("--k", default=None, help="k value or range, e.g. 10..14")
    p.add_argument("--k-max", type=int, default=None, dest="k_max",
                   help="sweep from each family threshold up to this k")
    _common_options(p)

    p = sub.add_parser("verify", help="reproduce a classification exhaustively")
    p.add_argument("--theorem", required=True,
                   help="one of: " + ", ".join(classification_ids()) + ", containment")
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--c", type=int, default=None, help="containment part: 2, 3, or 4")
    p.add_argument("--margin", type=int, default=3,
                   help="extra diameter beyond the asserted interval end")
    p.add_argument("--no-prune", action="store_true")
    _common_options(p)

    p = sub.add_parser("classify", help="all normalized sets hitting a target cardinality")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True,
                   help="integer, or hk-h2+C / hk-h2-C symbolic form")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--no-gcd-filter", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    _common_options(p)

    p = sub.add_parser("enumerate", help="stream the normalized search space")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--no-gcd-filter", action="store_true")
    _common_options(p)

    p = sub.add_parser("dump-catalog", help="the formula catalog as JSON")
    _common_options(p)

    return parser


def _emit(text: str, cfg) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_target(expr: str, h: int, k: int) -> int:
    """Literal integer or the symbolic near-minimum form hk-h2(+|-)C."""
    expr = expr.strip()
    try:
        return int(expr)
    except ValueError:
        pass
    m = re.fullmatch(r"hk-h2(?:([+-])(\d+))?", expr.replace(" ", ""))
    if not m:
        raise ValueError(
            f"cannot parse target {expr!r}: expected an integer or hk-h2+C"
        )
    base = h * k - h * h
    if m.group(1):
        delta = int(m.group(2))
        base = base + delta if m.group(1) == "+" else base - delta
    return base


def _parse_range(spec: str, what: str) -> list[int]:
    m = re.fullmatch(r"(-?\d+)(?:\.\.(-?\d+))?", spec.strip())
    if not m:
        raise ValueError(f"cannot parse {what} range {spec!r}: expected N or N..M")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise ValueError(f"empty {what} range {spec!r}")
    return list(range(lo, hi + 1))


def _cmd_compute(args, cfg) -> int:
    text = args.set_text.strip()
    if text:
        try:
            raw = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(
                f"cannot parse set {args.set_text!r}: expected comma-separated integers"
            ) from None
    else:
        raw = []
    A, dropped = make_set(raw)
    if dropped:
        print("note: duplicate elements dropped", file=sys.stderr)
    if args.repeats and args.naive:
        raise ValueError("--repeats and --naive are mutually exclusive")
    if args.repeats:
        from .engine import unrestricted_sumset

        result = unrestricted_sumset(A, args.h, window_cap=cfg.bitwindow_cap)
    elif args.naive:
        from .engine import restricted_sumset_naive

        result = restricted_sumset_naive(A, args.h, cap=cfg.naive_cap)
    else:
        result = restricted_sumset(A, args.h, window_cap=cfg.bitwindow_cap)
    _emit(render_compute(A, args.h, result, cfg.format), cfg)
    return EXIT_OK


def _cmd_catalog(args, cfg) -> int:
    ids = [args.family] if args.family else family_ids()
    reports = []
    skipped = []
    for fid in ids:
        fam = get_family(fid)
        if args.h is not None:
            h_values = _parse_range(args.h, "h")
        else:
            h_values = [h for h in (3, 4, 5, 6)
                        if h >= fam.h_min and (fam.h_max is None or h <= fam.h_max)]
        for h in h_values:
            if h < fam.h_min or (fam.h_max is not None and h > fam.h_max):
                skipped.append(f"{fid} h={h}: outside regime {fam.h_regime()}")
                continue
            kmin = fam.k_min(h)
            if args.k is not None:
                k_values = _parse_range(args.k, "k")
            elif args.k_max is not None:
                k_values = list(range(kmin, args.k_max + 1))
            else:
                k_values = sorted({kmin, kmin + 2})
            for k in k_values:
                if k < kmin:
                    skipped.append(f"{fid} h={h} k={k}: below threshold {fam.k_min_label}={kmin}")
                    continue
                reports.append(crosscheck(fid, h, k, window_cap=cfg.bitwindow_cap))
    for note in skipped:
        print(f"skipped {note}", file=sys.stderr)
    _emit(render_coverage(reports, cfg.format, cfg.timing), cfg)
    bad = any(r.mismatches or r.ambiguous for r in reports)
    return EXIT_MISMATCH if bad else EXIT_OK


def _cmd_verify(args, cfg) -> int:
    if args.theorem == "containment":
        if args.c is None:
            raise ValueError("containment needs --c (2, 3, or 4)")
        if args.h is None:
            raise ValueError("containment needs --h")
        report = verify_containment(
            args.h, args.k, args.c, args.dmax,
            margin=args.margin, prune=not args.no_prune,
            threads=cfg.threads, window_cap=cfg.bitwindow_cap,
        )
        _emit(render_containment(report, cfg.format, cfg.timing), cfg)
        return EXIT_OK if report.ok else EXIT_MISMATCH
    cls = get_classification(args.theorem)
    h = args.h
    if h is None:
        if cls.h_max == cls.h_min:
            h = cls.h_min
        else:
            raise ValueError(f"theorem {cls.id} needs --h (stated for h >= {cls.h_min})")
    report = verify_classification(
        args.theorem, h, args.k, args.dmax,
        margin=args.margin, prune=not args.no_prune,
        threads=cfg.threads, window_cap=cfg.bitwindow_cap,
    )
    _emit(render_classification(report, cfg.format, cfg.timing), cfg)
    return EXIT_OK if report.verdict == "exact-match" else EXIT_MISMATCH


def _cmd_classify(args, cfg) -> int:
    target = parse_target(args.target, args.h, args.k)
    report = classify_by_cardinality(
        args.h, args.k, target, args.dmax,
        gcd_filter=not args.no_gcd_filter, prune=not args.no_prune,
        threads=cfg.threads, window_cap=cfg.bitwindow_cap,
    )
    _emit(render_classification(report, cfg.format, cfg.timing), cfg)
    return EXIT_OK


def _cmd_enumerate(args, cfg) -> int:
    spec = EnumerationSpec(args.k, args.dmax, gcd_filter=not args.no_gcd_filter)
    sets = list(enumerate_normalized_sets(spec))
    _emit(render_sets(sets, cfg.format), cfg)
    return EXIT_OK


def _cmd_dump_catalog(args, cfg) -> int:
    _emit(json.dumps(catalog_dump(), indent=2) + "\n", cfg)
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "dump-catalog": _cmd_dump_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(
            {
                "threads": getattr(args, "threads", None),
                "naive_cap": getattr(args, "naive_cap", None),
                "bitwindow_cap": getattr(args, "bitwindow_cap", None),
                "format": getattr(args, "format", None),
                "output": getattr(args, "output", None),
            },
            config_path=getattr(args, "config", None),
        )
        cfg.timing = bool(getattr(args, "timing", False))
        return _COMMANDS[args.command](args, cfg)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: classify, synth, verify, brute, fallback, xray.

Exit status 0 means success (or certified), 1 a verification failure, 2 a
malformed input file or bad arguments. Reports go to stdout as JSON.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .body import normalize
from .classifier import classify
from .files import (
    FormatError,
    certificate_summary,
    direction_file,
    emit_directions,
    fmt,
    parse_body,
    parse_directions,
    points_json,
    report_json,
    trace_summary,
)
from .synthesizer import SynthesisError, fallback_grid, synthesize, xray_report
from .verifier import brute_min_illumination, verify_set

OK, FAILED, MALFORMED = 0, 1, 2


class _Malformed(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as err:
        raise _Malformed(f"{path}: {err.strerror}") from None


def _load_body(path: str):
    try:
        return parse_body(_read(path))
    except FormatError as err:
        raise _Malformed(f"{path}:{err}") from None


def _load_dirs(path: str):
    try:
        return parse_directions(_read(path))
    except FormatError as err:
        raise _Malformed(f"{path}:{err}") from None


def _classify(args) -> int:
    body = _load_body(args.body)
    normalized, scale = normalize(body)
    report, env = classify(normalized)
    out = {
        "n": report.n,
        "scale": [fmt(v) for v in scale],
        "is_parallelepiped": report.is_parallelepiped,
        "cubelike": report.cubelike,
        "missing_axes": list(report.missing_axes),
        "pairs": sorted(sorted(p) for p in report.pairs),
        "all_n2_subcubes": report.all_n2_subcubes,
        "case_id": report.case_id,
        "permutation": list(report.permutation),
        "params": {k: fmt(v) for k, v in env.as_dict().items()},
    }
    sys.stdout.write(report_json(out))
    return OK


def _synth(args) -> int:
    body = _load_body(args.body)
    try:
        ds, trace = synthesize(body, budget=args.budget)
    except SynthesisError as err:
        out = {"error": str(err), "witness": points_json([err.witness]) if err.witness else None}
        sys.stdout.write(report_json(out))
        return FAILED
    extra = {"certificate": certificate_summary(verify_set(body, ds.directions))}
    if args.trace:
        extra["trace"] = trace_summary(trace)
    sys.stdout.write(emit_directions(direction_file(ds, **extra)))
    return OK


def _verify(args) -> int:
    body = _load_body(args.body)
    dirs = _load_dirs(args.dirs)
    if dirs.dim != body.dim:
        raise _Malformed(f"{args.dirs}: directions have dimension {dirs.dim}, body has {body.dim}")
    if not dirs.directions:
        raise _Malformed(f"{args.dirs}: no directions")
    cert = verify_set(body, dirs.directions)
    sys.stdout.write(report_json(certificate_summary(cert)))
    return OK if cert.ok else FAILED


def _brute(args) -> int:
    body = _load_body(args.body)
    if args.grid:
        grid = _load_dirs(args.grid).directions
    else:
        grid = fallback_grid(body.dim).directions
    try:
        k, witness = brute_min_illumination(body, grid, args.cap)
    except ValueError as err:
        sys.stdout.write(report_json({"k": None, "error": str(err)}))
        return FAILED
    out = {"k": k, "cap": args.cap, "grid_size": len(grid),
           "witness": points_json(witness) if witness else None}
    sys.stdout.write(report_json(out))
    return OK if k is not None else FAILED


def _fallback(args) -> int:
    body = _load_body(args.body)
    ds = fallback_grid(body.dim)
    cert = verify_set(body, ds.directions)
    sys.stdout.write(emit_directions(direction_file(ds, certificate=certificate_summary(cert))))
    return OK if cert.ok else FAILED


def _xray(args) -> int:
    dirs = _load_dirs(args.dirs)
    if not dirs.directions:
        raise _Malformed(f"{args.dirs}: no directions")
    sys.stdout.write(report_json(xray_report(dirs.as_set())))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="illumination",
        description="Exact illuminating direction sets for 1-unconditional polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="subcube profile and case of a body")
    p.add_argument("body")
    p.set_defaults(run=_classify)

    p = sub.add_parser("synth", help="synthesize and certify a direction set")
    p.add_argument("body")
    p.add_argument("--trace", action="store_true", help="include parameter provenance")
    p.add_argument("--budget", type=int, default=24, help="maximum parameter halvings")
    p.set_defaults(run=_synth)

    p = sub.add_parser("verify", help="check that a direction set illuminates a body")
    p.add_argument("body")
    p.add_argument("dirs")
    p.set_defaults(run=_verify)

    p = sub.add_parser("brute", help="smallest illuminating subset of a grid")
    p.add_argument("body")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--grid", help="direction file to search (default: all sign vectors)")
    p.set_defaults(run=_brute)

    p = sub.add_parser("fallback", help="emit and certify all 3^n - 1 sign vectors")
    p.add_argument("body")
    p.set_defaults(run=_fallback)

    p = sub.add_parser("xray", help="negation-pair report of a direction file")
    p.add_argument("dirs")
    p.set_defaults(run=_xray)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except _Malformed as err:
        print(f"error: {err}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())

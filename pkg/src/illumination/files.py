"""JSON file formats for bodies, direction sets and reports.

Every rational is written as a string "p" or "p/q" in lowest terms, never as a
JSON number. Emission is canonical (fixed key order, two-space indent, trailing
newline), so emit(parse(text)) == text for any canonical file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .body import BodyError, Point, UnconditionalBody
from .synthesizer import CaseTrace, DirectionSet
from .verifier import IlluminationCertificate

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class FormatError(ValueError):
    """Malformed input; carries a 1-based line and column into the source text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise ValueError(f"expected a rational string like \"3\" or \"-2/5\", got {s!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(s)


class _Cursor:
    """Tracks a search position in the source so errors point at the offending token."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def seek(self, raw: str) -> None:
        hit = self.text.find(raw, self.pos)
        if hit >= 0:
            self.pos = hit

    def error(self, message: str) -> FormatError:
        line = self.text.count("\n", 0, self.pos) + 1
        column = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        return FormatError(message, line, column)


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(err.msg, err.lineno, err.colno) from None


def _render(obj: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (list, dict)) for v in obj):
            # vectors stay on one line
            return json.dumps(obj)
        items = [pad + _render(v, depth + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
    return json.dumps(obj)


def _dump(obj: Any) -> str:
    return _render(obj, 0) + "\n"


def _vectors(data: Any, key: str, cur: _Cursor, dim: int | None) -> list[Point]:
    cur.seek(f'"{key}"')
    rows = data.get(key) if isinstance(data, dict) else None
    if not isinstance(rows, list):
        raise cur.error(f"'{key}' must be a list of coordinate lists")
    cur.seek("[")
    cur.pos += 1
    out = []
    for row in rows:
        cur.seek("[")
        if not isinstance(row, list):
            raise cur.error("each entry must be a list of coordinates")
        coords = []
        for v in row:
            cur.seek(json.dumps(v))
            try:
                coords.append(parse_rational(v))
            except ValueError as err:
                raise cur.error(str(err)) from None
        if dim is not None and len(coords) != dim:
            raise cur.error(f"expected {dim} coordinates, got {len(coords)}")
        out.append(tuple(coords))
        cur.seek("]")
    return out


def _dim(data: Any, cur: _Cursor) -> int:
    if not isinstance(data, dict):
        raise cur.error("top level must be a JSON object")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        cur.seek('"dim"')
        raise cur.error("'dim' must be an integer >= 2")
    return dim


def parse_body(text: str) -> UnconditionalBody:
    cur = _Cursor(text)
    data = _load(text)
    dim = _dim(data, cur)
    gens = _vectors(data, "generators", cur, dim)
    try:
        return UnconditionalBody(gens, dim=dim)
    except BodyError as err:
        raise cur.error(str(err)) from None


def emit_body(body: UnconditionalBody) -> str:
    return _dump({
        "dim": body.dim,
        "generators": [[fmt(v) for v in g] for g in body.generators],
    })


@dataclass
class DirectionFile:
    """A direction set with whatever metadata travelled with it; rationals stay as strings."""

    dim: int
    directions: list[Point]
    case_id: str = ""
    params: dict[str, str] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)

    def as_set(self) -> DirectionSet:
        params = {k: Fraction(v) for k, v in self.params.items()}
        return DirectionSet(self.dim, list(self.directions), self.case_id, params)


def parse_directions(text: str) -> DirectionFile:
    cur = _Cursor(text)
    data = _load(text)
    dim = _dim(data, cur)
    dirs = _vectors(data, "directions", cur, dim)
    case_id = data.get("case_id", "")
    params = data.get("params", {})
    if not isinstance(case_id, str):
        raise cur.error("'case_id' must be a string")
    if not isinstance(params, dict) or not all(isinstance(v, str) for v in params.values()):
        cur.seek('"params"')
        raise cur.error("'params' must map names to rational strings")
    extra = {k: v for k, v in data.items() if k not in ("dim", "case_id", "directions", "params")}
    return DirectionFile(dim, dirs, case_id, dict(params), extra)


def emit_directions(f: DirectionFile) -> str:
    obj: dict[str, Any] = {"dim": f.dim}
    if f.case_id:
        obj["case_id"] = f.case_id
    obj["directions"] = [[fmt(v) for v in d] for d in f.directions]
    if f.params:
        obj["params"] = dict(sorted(f.params.items()))
    obj.update(f.extra)
    return _dump(obj)


def certificate_summary(cert: IlluminationCertificate) -> dict[str, Any]:
    out: dict[str, Any] = {
        "certified": cert.ok,
        "size": cert.size,
        "pairs": cert.pair_count,
    }
    if cert.ok:
        worst = cert.worst_margin
        out["worst_margin"] = fmt(worst) if worst is not None else None
        out["covers"] = [
            {"point": [fmt(v) for v in c.point], "direction": c.direction_index,
             "margin": fmt(c.margin)}
            for c in cert.covers
        ]
    else:
        out["witness"] = [fmt(v) for v in cert.witness] if cert.witness else None
    return out


def trace_summary(trace: CaseTrace) -> dict[str, Any]:
    out: dict[str, Any] = {
        "case_id": trace.case_id,
        "permutation": list(trace.permutation),
        "scale": [fmt(v) for v in trace.scale],
        "params": {k: fmt(v) for k, v in sorted(trace.params.items())},
        "provenance": dict(sorted(trace.provenance.items())),
        "iterations": trace.iterations,
        "recursion": trace.recursion,
        "notes": trace.notes,
    }
    if trace.sub is not None:
        out["sub"] = trace_summary(trace.sub)
    return out


def direction_file(ds: DirectionSet, **extra: Any) -> DirectionFile:
    params = {k: fmt(v) for k, v in ds.params.items()}
    return DirectionFile(ds.n, list(ds.directions), ds.case_id, params, extra)


def report_json(obj: dict[str, Any]) -> str:
    return _dump(obj)


def points_json(points: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [[fmt(v) for v in p] for p in points]

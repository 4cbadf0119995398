"""Polyline files: ``x,y`` CSV and a JSON document with ``vertices``, ``claims``, ``report``.

Coordinates are written with ``repr``, the shortest string that parses back
to the same double, so reading a written file gives the identical polyline.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Optional, Tuple

from .geometry import Polyline


class PolylineParseError(ValueError):
    pass


def _num(x: float) -> str:
    return repr(float(x))


def parse_csv(text: str, source: str = "<csv>") -> Polyline:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise PolylineParseError(f"{source}:{lineno}: expected 'x,y', got {raw!r}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise PolylineParseError(f"{source}:{lineno}: not a number in {raw!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PolylineParseError(f"{source}:{lineno}: non-finite coordinate")
        pts.append((x, y))
    return _build(pts, source)


def _build(pts, source) -> Polyline:
    if not pts:
        raise PolylineParseError(f"{source}: no vertices")
    try:
        return Polyline(pts)
    except ValueError as exc:
        raise PolylineParseError(f"{source}: {exc}") from None


def format_csv(P: Polyline) -> str:
    return "".join(f"{_num(x)},{_num(y)}\n" for x, y in P)


def parse_document(text: str, source: str = "<json>") -> Tuple[Polyline, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolylineParseError(f"{source}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise PolylineParseError(f"{source}: document needs a 'vertices' field")
    pts = []
    for k, v in enumerate(doc["vertices"]):
        if not (isinstance(v, (list, tuple)) and len(v) == 2):
            raise PolylineParseError(f"{source}: vertex {k} is not an [x, y] pair")
        try:
            pts.append((float(v[0]), float(v[1])))
        except (TypeError, ValueError):
            raise PolylineParseError(f"{source}: vertex {k} is not numeric") from None
    return _build(pts, source), doc


def format_document(P: Polyline, claims: Optional[list] = None, report: Optional[dict] = None) -> str:
    doc = {"vertices": [[x, y] for x, y in P]}
    if claims is not None:
        doc["claims"] = claims
    if report is not None:
        doc["report"] = report
    return dumps(doc) + "\n"


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """Indented JSON with lists of scalars kept on one line.

    ``json`` writes floats with ``repr``, which round-trips exactly.
    """
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return json.dumps(list(obj))
        items = [inner + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def read_polyline(path) -> Tuple[Polyline, Optional[dict]]:
    """Read a CSV or JSON polyline; JSON is recognised by suffix or a leading ``{``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return parse_document(text, str(path))
    return parse_csv(text, str(path)), None

"""JSON ingestion (polytope files, PolyDB records) and report serialization.

Polytope file::

    {"name": "sq", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}
    {"name": "t", "inequalities": [{"normal": [1, 0], "rhs": 0}, ...]}

Inequalities mean ``<normal, x> >= rhs``. Integers may be JSON numbers or
decimal strings. PolyDB records carry homogeneous rows: ``FACETS`` rows
``[b, a1, ..., an]`` meaning ``b + <a, x> >= 0`` and ``VERTICES`` rows
``[1, x1, ..., xn]``.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .geometry import Polytope


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(path, "expected an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise SchemaError(path, f"expected an integer, got {value!r}")


def _vector(value: Any, path: str, dim: int | None = None) -> list[int]:
    if not isinstance(value, list) or not value:
        raise SchemaError(path, "expected a nonempty list of integers")
    out = [_int(x, f"{path}[{i}]") for i, x in enumerate(value)]
    if dim is not None and len(out) != dim:
        raise SchemaError(path, f"expected length {dim}, got {len(out)}")
    return out


def polytope_from_dict(data: Any) -> Polytope:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("$.name", "expected a string")
    has_v, has_h = "vertices" in data, "inequalities" in data
    if has_v == has_h:
        raise SchemaError("$", "exactly one of 'vertices' or 'inequalities' is required")
    if has_v:
        rows = data["vertices"]
        if not isinstance(rows, list) or not rows:
            raise SchemaError("$.vertices", "expected a nonempty list")
        dim = len(rows[0]) if isinstance(rows[0], list) else None
        verts = [_vector(r, f"$.vertices[{i}]", dim) for i, r in enumerate(rows)]
        return Polytope.from_vertices(verts, name)
    rows = data["inequalities"]
    if not isinstance(rows, list) or not rows:
        raise SchemaError("$.inequalities", "expected a nonempty list")
    ineqs = []
    dim = None
    for i, r in enumerate(rows):
        path = f"$.inequalities[{i}]"
        if not isinstance(r, dict) or "normal" not in r or "rhs" not in r:
            raise SchemaError(path, "expected an object with 'normal' and 'rhs'")
        a = _vector(r["normal"], path + ".normal", dim)
        dim = len(a)
        ineqs.append((a, _int(r["rhs"], path + ".rhs")))
    return Polytope.from_inequalities(ineqs, name)


def parse_polytope(source: str | Path) -> Polytope:
    """Read a polytope JSON file (or a JSON string)."""
    text = Path(source).read_text() if _is_path(source) else str(source)
    return polytope_from_dict(json.loads(text))


def _is_path(source) -> bool:
    if isinstance(source, Path):
        return True
    return not str(source).lstrip().startswith(("{", "["))


def polytope_to_dict(p: Polytope) -> dict:
    return {"name": p.name, "vertices": [list(v) for v in p.vertices]}


def parse_polydb_record(record: dict | str | Path) -> Polytope:
    """Build a polytope from a PolyDB-style record, cross-checking both representations."""
    if not isinstance(record, dict):
        text = Path(record).read_text() if _is_path(record) else str(record)
        record = json.loads(text)
    ident = record.get("_id") or record.get("id") or record.get("name")
    if not ident:
        raise SchemaError("$.id", "record id missing")
    facets = record.get("FACETS")
    verts = record.get("VERTICES")
    if facets is None and verts is None:
        raise SchemaError("$", "record needs FACETS or VERTICES")
    from_h = from_v = None
    if facets is not None:
        ineqs = []
        for i, row in enumerate(facets):
            row = _vector(row, f"$.FACETS[{i}]")
            ineqs.append((row[1:], -row[0]))
        from_h = Polytope.from_inequalities(ineqs, ident)
    if verts is not None:
        pts = []
        for i, row in enumerate(verts):
            row = _vector(row, f"$.VERTICES[{i}]")
            if row[0] != 1:
                raise SchemaError(f"$.VERTICES[{i}][0]", "leading homogeneous coordinate must be 1")
            pts.append(row[1:])
        from_v = Polytope.from_vertices(pts, ident)
    if from_h is not None and from_v is not None:
        if not from_h.same_as(from_v) or set(from_h.inequalities) != set(from_v.inequalities):
            raise ValueError(f"{ident}: FACETS and VERTICES describe different polytopes")
        if len(from_h.inequalities) != len(facets):
            raise ValueError(f"{ident}: FACETS contains redundant rows")
    return from_h if from_h is not None else from_v


def polydb_record(p: Polytope, ident: str) -> dict:
    """Inverse of :func:`parse_polydb_record` for lattice polytopes."""
    facets = []
    for f in p.inequalities:
        if Fraction(f.rhs).denominator != 1:
            raise ValueError("rational facet offsets have no integer homogeneous row")
        facets.append([-int(f.rhs), *f.normal])
    return {"_id": ident, "FACETS": facets, "VERTICES": [[1, *v] for v in p.vertices]}


def _jsonable(obj: Any) -> Any:
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for extra in ("is_idp_pair", "holds", "normal", "verdict"):
            if hasattr(type(obj), extra) and isinstance(getattr(type(obj), extra), property):
                out[extra] = _jsonable(getattr(obj, extra))
        return out
    if isinstance(obj, Polytope):
        return polytope_to_dict(obj)
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        items = [(_key(k), _jsonable(v)) for k, v in obj.items()]
        return dict(sorted(items))
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(x) for x in obj)
    return obj


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(_jsonable(x)) for x in k)
    return str(k)


def to_jsonable(report: Any) -> Any:
    return _jsonable(report)


def emit_report(report: Any, fmt: str = "text") -> bytes:
    """Deterministic serialization: sorted keys, points in stored (sorted) order."""
    data = _jsonable(report)
    if fmt == "json":
        return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines: list[str] = []
    _text(data, "", lines)
    return ("\n".join(lines) + "\n").encode()


def _text(data: Any, prefix: str, lines: list[str]) -> None:
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, dict) and v:
                lines.append(f"{prefix}{k}:")
                _text(v, prefix + "  ", lines)
            else:
                lines.append(f"{prefix}{k}: {_short(v)}")
    else:
        lines.append(f"{prefix}{_short(data)}")


def _short(v: Any, limit: int = 12) -> str:
    if isinstance(v, list) and len(v) > limit:
        head = ", ".join(json.dumps(x) for x in v[:limit])
        return f"[{head}, ... ({len(v)} total)]"
    return json.dumps(v)

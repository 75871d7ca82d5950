"""JSON encodings shared by the CLI.

Scalars are strings (``"1/2"``, ``"0-1/2*sqrt3"``); elements are
``{"coords": [8 scalars]}``; affine points and lines carry a ``kind`` tag;
Veronese vectors are ``{"x": [3 elements], "lambda": [3 scalars]}``; linear
maps are row-major lists of 64 scalars (floats for numeric maps) and triples
are ``{"A": map, "B": map, "C": map}``.
"""
from __future__ import annotations

import numpy as np

from .affine import (
    INFINITY,
    LINE_AT_INFINITY,
    AtInfinity,
    Finite,
    InfinityPoint,
    LineAtInfinity,
    Sloped,
    Vertical,
)
from .algebra import DIM, OkuboElement
from .collineation import LinearMap, TrialityTriple
from .projective import VeroneseVector
from .scalar import FieldScalar, format_scalar, parse_scalar


class FormatError(ValueError):
    """Malformed JSON document."""


def scalar_to_json(x: FieldScalar) -> str:
    return format_scalar(x)


def scalar_from_json(obj) -> FieldScalar:
    if isinstance(obj, bool):
        raise FormatError("booleans are not scalars")
    if isinstance(obj, int):
        return FieldScalar(obj)
    if not isinstance(obj, str):
        raise FormatError(f"scalar must be a string, got {obj!r}")
    try:
        return parse_scalar(obj)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def element_to_json(x: OkuboElement) -> dict:
    return {"coords": [format_scalar(c) for c in x.coords]}


def element_from_json(obj) -> OkuboElement:
    coords = obj.get("coords") if isinstance(obj, dict) else obj
    if not isinstance(coords, list) or len(coords) != DIM:
        raise FormatError(f"element needs {DIM} coordinates")
    return OkuboElement(scalar_from_json(c) for c in coords)


def point_to_json(p) -> dict:
    if isinstance(p, Finite):
        return {"kind": "finite", "x": element_to_json(p.x), "y": element_to_json(p.y)}
    if isinstance(p, AtInfinity):
        return {"kind": "slope", "s": element_to_json(p.s)}
    if isinstance(p, InfinityPoint):
        return {"kind": "infinity"}
    raise TypeError(f"not an affine point: {p!r}")


def _field(obj: dict, key: str):
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    return element_from_json(obj[key])


def point_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError("point must be an object")
    kind = obj.get("kind")
    if kind == "finite":
        return Finite(_field(obj, "x"), _field(obj, "y"))
    if kind == "slope":
        return AtInfinity(_field(obj, "s"))
    if kind == "infinity":
        return INFINITY
    raise FormatError(f"unknown point kind {kind!r}")


def line_to_json(l) -> dict:
    if isinstance(l, Sloped):
        return {"kind": "sloped", "s": element_to_json(l.s), "t": element_to_json(l.t)}
    if isinstance(l, Vertical):
        return {"kind": "vertical", "c": element_to_json(l.c)}
    if isinstance(l, LineAtInfinity):
        return {"kind": "line_at_infinity"}
    raise TypeError(f"not an affine line: {l!r}")


def line_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError("line must be an object")
    kind = obj.get("kind")
    if kind == "sloped":
        return Sloped(_field(obj, "s"), _field(obj, "t"))
    if kind == "vertical":
        return Vertical(_field(obj, "c"))
    if kind == "line_at_infinity":
        return LINE_AT_INFINITY
    raise FormatError(f"unknown line kind {kind!r}")


def is_point_json(obj) -> bool:
    return isinstance(obj, dict) and obj.get("kind") in ("finite", "slope", "infinity")


def is_line_json(obj) -> bool:
    return isinstance(obj, dict) and obj.get("kind") in ("sloped", "vertical", "line_at_infinity")


def veronese_to_json(v: VeroneseVector) -> dict:
    return {
        "x": [element_to_json(x) for x in v.xs],
        "lambda": [format_scalar(c) for c in v.lams],
    }


def veronese_from_json(obj) -> VeroneseVector:
    if not isinstance(obj, dict) or "x" not in obj or "lambda" not in obj:
        raise FormatError("Veronese vector needs 'x' and 'lambda'")
    xs, lams = obj["x"], obj["lambda"]
    if not isinstance(xs, list) or len(xs) != 3 or not isinstance(lams, list) or len(lams) != 3:
        raise FormatError("Veronese vector needs three elements and three scalars")
    return VeroneseVector.make([element_from_json(x) for x in xs], [scalar_from_json(c) for c in lams])


def map_to_json(m) -> list:
    if isinstance(m, LinearMap):
        return [format_scalar(v) for row in m.matrix for v in row]
    arr = np.asarray(m, dtype=float)
    return [float(v) for v in arr.reshape(-1)]


def map_from_json(obj):
    if not isinstance(obj, list) or len(obj) != DIM * DIM:
        raise FormatError(f"linear map needs {DIM * DIM} entries")
    if all(isinstance(v, float) for v in obj):
        return np.array(obj, dtype=float).reshape(DIM, DIM)
    vals = [scalar_from_json(v) for v in obj]
    return LinearMap([vals[r * DIM:(r + 1) * DIM] for r in range(DIM)])


def triple_to_json(T: TrialityTriple) -> dict:
    return {"A": map_to_json(T.A), "B": map_to_json(T.B), "C": map_to_json(T.C)}


def triple_from_json(obj) -> TrialityTriple:
    if not isinstance(obj, dict) or any(k not in obj for k in "ABC"):
        raise FormatError("triple needs keys 'A', 'B', 'C'")
    return TrialityTriple(map_from_json(obj["A"]), map_from_json(obj["B"]), map_from_json(obj["C"]))

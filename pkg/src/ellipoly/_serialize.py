"""Deterministic JSON/CSV emission helpers for the command-line interface.

Complex numbers serialize as [re, im] pairs, matrices row-major as nested
lists, dataclass-like objects as plain dicts.  Output is stable across runs:
keys are sorted and nothing time- or path-dependent is ever included.
"""

from __future__ import annotations

import dataclasses
import io
import json
from enum import Enum

import numpy as np

from .geometry import EllipseParams, Measure

__all__ = ["to_jsonable", "dumps", "write_csv", "params_dict"]


def params_dict(p: EllipseParams) -> dict:
    return {"a": p.a, "b": p.b, "c": p.c, "R": p.R, "r": p.r, "x_star": p.x_star}


def to_jsonable(obj):
    """Recursively convert to JSON-encodable structures."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return float(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, np.complexfloating):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(row) for row in obj.tolist()] if obj.ndim > 1 \
            else [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, EllipseParams):
        return params_dict(obj)
    if isinstance(obj, Measure):
        return {"kind": obj.kind.value, "params": params_dict(obj.params),
                "alpha": obj.alpha, "normalized": obj.normalized}
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload: dict) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def write_csv(header: list[str], rows: list[tuple]) -> str:
    """Minimal deterministic CSV (numbers via repr, no quoting needed)."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(repr(x) if isinstance(x, float) else str(x)
                           for x in row) + "\n")
    return buf.getvalue()

"""Deterministic JSON text with fixed-decimal floats."""

from __future__ import annotations

import json
import math

DEFAULT_PRECISION = 10


def fmt_float(x: float, precision: int = DEFAULT_PRECISION) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be written as JSON")
    text = f"{x:.{precision}f}"
    # no "-0.000..." in output
    if float(text) == 0.0:
        text = text.lstrip("-")
    return text


def dumps(obj, precision: int = DEFAULT_PRECISION, indent: int | None = None, _level: int = 0) -> str:
    """Like ``json.dumps`` but every float is printed with ``precision`` decimals."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj, precision)
    if hasattr(obj, "item") and not isinstance(obj, (list, tuple, dict)):  # numpy scalars
        return dumps(obj.item(), precision, indent, _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, precision, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, precision, indent, _level + 1) for v in obj]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")

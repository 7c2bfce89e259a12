"""Element files and JSON envelopes.

An element file is ``{"n": N, "field": "Q" | "Q(i)", "entries": [[...], ...]}``
with every entry a scalar string such as ``"3/4"`` or ``"1/2-1*i"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ArgumentError
from .linalg import Matrix, format_scalar, parse_scalar

FIELDS = ("Q", "Q(i)")


def element_to_dict(m: Matrix) -> dict:
    return {
        "n": m.rows,
        "field": m.field,
        "entries": [[format_scalar(v) for v in row] for row in m.tolist()],
    }


def element_from_dict(d: dict) -> Matrix:
    try:
        n = int(d["n"])
        fld = d.get("field", "Q")
        rows = d["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError(f"malformed element file: {exc}") from None
    if fld not in FIELDS:
        raise ArgumentError(f"unknown field {fld!r}")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ArgumentError(f"entries are not a {n}x{n} grid")
    try:
        vals = [[parse_scalar(str(v)) for v in r] for r in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentError(f"bad scalar: {exc}") from None
    m = Matrix.from_rows(vals)
    if fld == "Q" and not m.is_rational:
        raise ArgumentError("non-real entries in a file declared over Q")
    return m


def load_element(path) -> Matrix:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ArgumentError(f"cannot read {path}: {exc}") from None
    return element_from_dict(data)


def save_element(m: Matrix, path):
    Path(path).write_text(json.dumps(element_to_dict(m), indent=1) + "\n")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)

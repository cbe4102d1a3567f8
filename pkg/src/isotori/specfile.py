"""JSON spec files.

    {
      "name": "ex3-2-t22-projected",
      "n": 4, "l": 2, "m": 2,
      "r_squared": ["1/4", "1/4", "1/4", "1/4"],
      "E": [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]],
      "F": [["1", "0"], ["0", "1"], ["-2", "-1"], ["1", "0"]]
    }

All defining numbers are rational strings, so nothing passes through a
float on the way in.  Errors name the offending field (``E[3][1]``).
"""

from __future__ import annotations

import json
from pathlib import Path

from .ratmath import RatMat, format_rat, parse_rat
from .torus import TorusSpec


class SpecParseError(ValueError):
    pass


def _int_field(doc: dict, key: str) -> int:
    if key not in doc:
        raise SpecParseError(f"missing field {key!r}")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecParseError(f"field {key!r} must be an integer, got {v!r}")
    return v


def _rat(value, where: str):
    try:
        return parse_rat(value)
    except ValueError as exc:
        raise SpecParseError(f"{where}: {exc}") from None


def _matrix(doc: dict, key: str, nrows: int, ncols: int) -> RatMat:
    if key not in doc:
        raise SpecParseError(f"missing field {key!r}")
    rows = doc[key]
    if not isinstance(rows, list) or len(rows) != nrows:
        raise SpecParseError(f"field {key!r} must be a list of n={nrows} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise SpecParseError(f"{key}[{i}] must be a list of {ncols} rational strings")
        out.append([_rat(v, f"{key}[{i}][{j}]") for j, v in enumerate(row)])
    return RatMat(tuple(tuple(r) for r in out), ncols)


def spec_from_dict(doc: dict) -> TorusSpec:
    """Parse only; invariants are checked by :func:`isotori.torus.validate`."""
    if not isinstance(doc, dict):
        raise SpecParseError("spec document must be a JSON object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SpecParseError("field 'name' must be a string")
    n, l, m = (_int_field(doc, k) for k in ("n", "l", "m"))
    if n < 1 or l < 0 or m < 0:
        raise SpecParseError(f"need n >= 1 and l, m >= 0, got n={n}, l={l}, m={m}")
    r = doc.get("r_squared")
    if not isinstance(r, list) or len(r) != n:
        raise SpecParseError(f"field 'r_squared' must be a list of n={n} rational strings")
    r_sq = tuple(_rat(v, f"r_squared[{i}]") for i, v in enumerate(r))
    return TorusSpec(n, l, m, r_sq, _matrix(doc, "E", n, l), _matrix(doc, "F", n, m), name)


def loads(text: str) -> TorusSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return spec_from_dict(doc)


def load(path) -> TorusSpec:
    return loads(Path(path).read_text())


def spec_to_dict(spec: TorusSpec) -> dict:
    return {
        "name": spec.name,
        "n": spec.n,
        "l": spec.l,
        "m": spec.m,
        "r_squared": [format_rat(q) for q in spec.r_sq],
        "E": [[format_rat(q) for q in row] for row in spec.E.rows],
        "F": [[format_rat(q) for q in row] for row in spec.F.rows],
    }


def dumps(spec: TorusSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2) + "\n"

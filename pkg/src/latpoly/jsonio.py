"""JSON documents for polytopes, zonotopes and reports.  Rationals travel as ``"p/q"`` strings."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Union

from .polytopes import VPolytope
from .zonotopes import Zonotope

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class InputError(ValueError):
    """Malformed input document."""


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x.strip()):
        num, _, den = x.strip().partition("/")
        if den and int(den) == 0:
            raise InputError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den or 1))
    raise InputError(f"not an exact rational: {x!r}")


def parse_integer(x: Any) -> int:
    q = parse_rational(x)
    if q.denominator != 1:
        raise InputError(f"not an integer: {x!r}")
    return int(q)


def fmt(q) -> str:
    return str(Fraction(q))


def number(q: Fraction) -> Union[int, str]:
    return int(q) if q.denominator == 1 else fmt(q)


def _rows(doc: dict, key: str, parse) -> tuple[int, list[tuple]]:
    if not isinstance(doc, dict) or key not in doc or "ambient_dim" not in doc:
        raise InputError(f"expected an object with 'ambient_dim' and '{key}'")
    n = parse_integer(doc["ambient_dim"])
    if n < 1:
        raise InputError("ambient_dim must be positive")
    rows = doc[key]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"'{key}' must be a list of lists")
    out = []
    for r in rows:
        if len(r) != n:
            raise InputError(f"entry of length {len(r)} in dimension {n}")
        out.append(tuple(parse(x) for x in r))
    return n, out


def load_polytope(doc: dict) -> VPolytope:
    _, verts = _rows(doc, "vertices", parse_rational)
    if not verts:
        raise InputError("no vertices")
    return VPolytope.from_points(verts)


def load_zonotope(doc: dict) -> Zonotope:
    n, gens = _rows(doc, "generators", parse_integer)
    return Zonotope(n, tuple(gens))


def load_body(doc: dict) -> Union[VPolytope, Zonotope]:
    """A polytope or zonotope document, told apart by its keys."""
    if isinstance(doc, dict) and "generators" in doc:
        return load_zonotope(doc)
    return load_polytope(doc)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def dump_polytope(P: VPolytope) -> dict:
    return {"ambient_dim": P.ambient_dim,
            "vertices": [[number(x) for x in v] for v in P.vertices]}


def dump_zonotope(Z: Zonotope) -> dict:
    return {"ambient_dim": Z.ambient_dim, "generators": [list(v) for v in Z.generators]}


def dump_minima(res) -> dict:
    return {"lambdas": [fmt(x) for x in res.lambdas],
            "witnesses": [list(w) for w in res.witnesses]}


def dump_report(P: VPolytope, report) -> dict:
    """Serialize a :class:`~latpoly.conjecture.BoundReport`."""
    bounds = []
    for r in report.records:
        rec = {"i": r.i, "name": r.name, "g": fmt(r.g), "bound": fmt(r.bound), "holds": r.holds}
        if r.squared:
            rec["squared"] = True
        bounds.append(rec)
    fb = report.floor_bound
    out = {
        "polytope": dump_polytope(P),
        "ehrhart": [fmt(c) for c in report.ehrhart.coefficients],
        "minima": [fmt(x) for x in report.minima.lambdas],
        "bounds": bounds,
        "floor_bound": {"bound": fb.bound, "count": fb.count, "holds": fb.holds},
        "L": fmt(report.l_value),
        "L_equals_sigma_sum": report.l_matches_sigma_sum,
    }
    out.update(report.extra)
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"

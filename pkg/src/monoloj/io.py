"""JSON readers and writers for ideals, filtrations, families, polynomial maps and divisor tables.

Rationals are written as ``"a/b"`` strings (or integer strings) and read back
from strings or JSON integers.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .arith import InvalidInput, fmt, rat
from .exponent import LinearForms, Power, Product
from .families import FamilyCandidate, FamilySpec, Surd
from .geometry import MonomialIdeal, NewtonPolyhedron
from .infinity import DivisorRow, PolyMap


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc


def _field(obj: dict, key: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"missing field {key!r}")
    return obj[key]


def _int_vec(v) -> tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        raise InvalidInput(f"expected a list of integers, got {v!r}")
    return tuple(v)


def ideal_from_json(obj: dict) -> MonomialIdeal:
    dim = _field(obj, "dim")
    gens = [_int_vec(g) for g in _field(obj, "gens")]
    if not isinstance(dim, int) or dim < 1:
        raise InvalidInput("dim must be a positive integer")
    return MonomialIdeal(tuple(gens), dim)


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"dim": ideal.dim, "gens": [list(g) for g in ideal.gens]}


def filtration_from_json(obj: dict):
    kind = _field(obj, "kind")
    if kind == "power":
        return Power(ideal_from_json(_field(obj, "ideal")))
    if kind == "linear":
        cons = tuple((_int_vec(_field(c, "w")), rat(_field(c, "c"))) for c in _field(obj, "constraints"))
        return LinearForms(_field(obj, "dim"), cons)
    if kind == "product":
        return Product(tuple((ideal_from_json(_field(f, "ideal")), rat(_field(f, "lambda")))
                             for f in _field(obj, "factors")))
    raise InvalidInput(f"unknown filtration kind {kind!r}")


def filtration_to_json(spec) -> dict:
    if isinstance(spec, Power):
        return {"kind": "power", "ideal": ideal_to_json(spec.ideal)}
    if isinstance(spec, LinearForms):
        return {"kind": "linear", "dim": spec.dim,
                "constraints": [{"w": list(w), "c": fmt(c)} for w, c in spec.constraints]}
    return {"kind": "product",
            "factors": [{"ideal": ideal_to_json(i), "lambda": fmt(l)} for i, l in spec.factors]}


def family_from_json(obj: dict) -> FamilySpec:
    cands = []
    for c in _field(obj, "candidates"):
        label = _field(c, "label")
        label = label if isinstance(label, str) else _int_vec(label)
        cands.append(FamilyCandidate(label, *(rat(_field(c, k)) for k in ("a0", "a1", "b0", "b1"))))
    return FamilySpec(tuple(cands))


def family_to_json(spec: FamilySpec) -> dict:
    return {"candidates": [
        {"label": label_json(c.label), "a0": fmt(c.a0), "a1": fmt(c.a1), "b0": fmt(c.b0), "b1": fmt(c.b1)}
        for c in spec.candidates
    ]}


def map_from_json(obj: dict) -> PolyMap:
    n = _field(obj, "n")
    comps = []
    for comp in _field(obj, "components"):
        comps.append(tuple((_int_vec(_field(t, "exp")), rat(_field(t, "coeff"))) for t in comp))
    return PolyMap(n, tuple(comps))


def table_from_json(obj: dict) -> list[DivisorRow]:
    rows = []
    for r in _field(obj, "rows"):
        ox, oy = _field(r, "ordX"), _field(r, "ordY")
        if not all(isinstance(v, int) and v >= 0 for v in (ox, oy)):
            raise InvalidInput("divisor orders must be nonnegative integers")
        rows.append(DivisorRow(str(r.get("label", f"E{len(rows) + 1}")), ox, oy))
    return rows


def label_json(label):
    return label if isinstance(label, str) else list(label)


def point_json(p) -> list[str]:
    return [fmt(c) for c in p]


def surd_json(x: Surd) -> str:
    return str(x)


def polyhedron_to_json(poly: NewtonPolyhedron) -> dict:
    return {
        "dim": poly.dim,
        "vertices": [point_json(v) for v in poly.vertices],
        "facets": [{"normal": list(f.normal), "offset": fmt(f.offset), "compact": f.compact}
                   for f in poly.facets],
    }

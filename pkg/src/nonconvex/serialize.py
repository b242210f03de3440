"""JSON forms of instances, decompositions, certificates and reports.

Every coordinate is an exact rational written as the string ``"p/q"`` in
lowest terms.  Field order is fixed so output can be compared byte for byte.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .cells import ConvexCell
from .decompose.base import Decomposition
from .errors import InvalidInput
from .geom import Point, Polygon, Segment
from .invisibility import Certificate
from .region import PuncturedRegion, normalize

# ---------------------------------------------------------------- scalars


def q(x) -> str:
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_q(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise InvalidInput("inexact coordinate %r; use a 'p/q' string" % (s,))
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InvalidInput("coordinate %r is not a rational string" % (s,))
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInput("bad rational %r" % (s,)) from e


def point_json(p: Point) -> list:
    return [q(p.x), q(p.y)]


def parse_point(raw) -> Point:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise InvalidInput("point must be a pair, got %r" % (raw,))
    return Point(parse_q(raw[0]), parse_q(raw[1]))


def segment_json(s: Segment) -> dict:
    if s.a == s.b:
        return {"type": "point", "at": point_json(s.a)}
    return {"type": "segment", "a": point_json(s.a), "b": point_json(s.b), "closure": s.closure}


def parse_segment(raw) -> Segment:
    if not isinstance(raw, dict):
        raise InvalidInput("feature must be an object")
    kind = raw.get("type", "segment" if "a" in raw else "point")
    if kind == "point":
        p = parse_point(raw.get("at"))
        return Segment(p, p)
    if kind == "segment":
        return Segment(parse_point(raw.get("a")), parse_point(raw.get("b")),
                       raw.get("closure", "closed"))
    raise InvalidInput("unknown feature type %r" % (kind,))

# ---------------------------------------------------------------- instances


def instance_to_dict(X: PuncturedRegion, witnesses=None, extra: Optional[dict] = None) -> dict:
    out: dict = {}
    if len(X.components) == 1:
        out["polygon"] = [point_json(p) for p in X.components[0].vertices]
    else:
        out["polygons"] = [[point_json(p) for p in P.vertices] for P in X.components]
    out["missing"] = [segment_json(f.segment) for f in X.features]
    out["antennae"] = [{"a": point_json(s.a), "b": point_json(s.b)} for s in X.antennae]
    if witnesses:
        out["witnesses"] = [point_json(p) for p in witnesses]
    if extra:
        out.update(extra)
    return out


def instance_from_dict(d: Any) -> tuple:
    """(X, witnesses or None) from an instance object."""
    if not isinstance(d, dict):
        raise InvalidInput("instance must be a JSON object")
    if "polygon" in d:
        polys = [d["polygon"]]
    elif "polygons" in d:
        polys = d["polygons"]
    else:
        raise InvalidInput("instance needs 'polygon' or 'polygons'")
    comps = []
    for raw in polys:
        if not isinstance(raw, list) or len(raw) < 3:
            raise InvalidInput("polygon needs at least three vertices")
        comps.append(Polygon([parse_point(v) for v in raw]))
    missing = [parse_segment(m) for m in d.get("missing", [])]
    ants = []
    for a in d.get("antennae", []):
        if isinstance(a, dict):
            ants.append(Segment(parse_point(a.get("a")), parse_point(a.get("b"))))
        else:
            ants.append(Segment(parse_point(a[0]), parse_point(a[1])))
    X = normalize(comps, missing, ants)
    W = d.get("witnesses")
    return X, ([parse_point(p) for p in W] if W else None)

# ---------------------------------------------------------------- cells


def cell_to_dict(c: ConvexCell) -> dict:
    return {"label": c.label,
            "vertices": [point_json(p) for p in c.base],
            "exclusions": [segment_json(s) for s in c.exclusions]}


def cell_from_dict(d: dict) -> ConvexCell:
    try:
        base = tuple(parse_point(p) for p in d["vertices"])
    except (KeyError, TypeError) as e:
        raise InvalidInput("cell needs 'vertices'") from e
    ex = tuple(parse_segment(s) for s in d.get("exclusions", []))
    return ConvexCell(base, ex, d.get("label", ""))


def decomposition_to_dict(dec: Decomposition, X: Optional[PuncturedRegion] = None,
                          witnesses=None) -> dict:
    out: dict = {"case_tag": dec.case_tag, "claimed_bound": dec.claimed_bound,
                 "cells": [cell_to_dict(c) for c in dec.cells],
                 "notes": [str(n) for n in dec.notes]}
    if X is not None:
        out["instance"] = instance_to_dict(X, witnesses)
    return out


def decomposition_from_dict(d: Any) -> Decomposition:
    if not isinstance(d, dict) or "cells" not in d:
        raise InvalidInput("decomposition needs 'cells'")
    cells = [cell_from_dict(c) for c in d["cells"]]
    return Decomposition(cells, str(d.get("case_tag", "")), int(d.get("claimed_bound", len(cells))),
                         notes=list(d.get("notes", [])))

# ---------------------------------------------------------------- certificates


def _plain(v):
    if isinstance(v, Certificate):
        return certificate_to_dict(v)
    if isinstance(v, Point):
        return point_json(v)
    if isinstance(v, Fraction):
        return q(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def certificate_to_dict(c) -> dict:
    if isinstance(c, dict):
        return _plain(c)
    return {"kind": c.kind, "measure": c.measure, "value": c.value,
            "points": [point_json(p) for p in c.points], "data": _plain(c.data)}


def certificate_from_dict(d: dict) -> Certificate:
    pts = tuple(parse_point(p) for p in d.get("points", []))
    data = dict(d.get("data", {}))
    if "rays" in data:
        data["rays"] = tuple(parse_point(p) for p in data["rays"])
    if "sector_certificates" in data:
        data["sector_certificates"] = tuple(
            None if s is None else certificate_from_dict(s) for s in data["sector_certificates"])
    return Certificate(d["kind"], pts, d["measure"], int(d["value"]), data)


def report_to_dict(rep) -> dict:
    return {"ok": rep.ok,
            "violations": [{"kind": v["kind"], "detail": v["detail"],
                            "point": None if v["point"] is None else _plain(v["point"])}
                           for v in rep.violations]}

# ---------------------------------------------------------------- text


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput("malformed JSON: %s" % e) from e

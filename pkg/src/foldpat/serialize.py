"""JSON documents for every record type.

A document is ``{"version": ..., "kind": ..., "payload": ...}`` with kind one
of ``pattern``, ``cobordism``, ``state``, ``interface`` or ``moves``.
Tuples become lists on the way out and are restored on the way in, so
``load(dump(x)) == x``.
"""

from __future__ import annotations

import json
from dataclasses import fields

from .divide import moves as mv
from .divide.state import Curve, Cusp, DivideState, Face
from .gluing import CobordismPattern, InterfaceMap
from .model import BoundaryCircle, BoundaryPattern, Matching, Pattern, Side, Surface

VERSION = "1"
KINDS = ("pattern", "cobordism", "state", "interface", "moves")


class DocumentError(ValueError):
    pass


def _tup(x):
    return tuple(_tup(i) for i in x) if isinstance(x, list) else x


def pattern_to_dict(p: Pattern) -> dict:
    return {
        "surface": {"orientable": p.surface.orientable, "genus": p.surface.genus,
                    "boundary_circle_ids": list(p.surface.boundary_circle_ids)},
        "boundary": [{"id": c.id, "points": list(c.points),
                      "iota": [[x, c.iota[x]] for x in c.points if x in c.iota]
                      + [[x, s] for x, s in c.iota.items() if x not in c.points],
                      "first_arc_sigma_preserving": c.first_arc_sigma_preserving,
                      "winding_plus": c.winding_plus, "winding_minus": c.winding_minus}
                     for c in p.boundary.circles],
        "phi": [list(pair) for pair in p.phi.sorted_pairs()],
    }


def pattern_from_dict(d: dict) -> Pattern:
    s = d["surface"]
    surface = Surface(bool(s["orientable"]), int(s["genus"]), tuple(s["boundary_circle_ids"]))
    circles = tuple(
        BoundaryCircle(c["id"], tuple(c.get("points", ())), {x: v for x, v in c.get("iota", [])},
                       bool(c.get("first_arc_sigma_preserving", True)),
                       int(c.get("winding_plus", 0)), int(c.get("winding_minus", 0)))
        for c in d["boundary"])
    return Pattern(surface, BoundaryPattern(circles), Matching.of(tuple(p) for p in d.get("phi", [])))


def cobordism_to_dict(c: CobordismPattern) -> dict:
    return {"pattern": pattern_to_dict(c.pattern), "incoming": list(c.incoming),
            "outgoing": list(c.outgoing)}


def cobordism_from_dict(d: dict) -> CobordismPattern:
    return CobordismPattern(pattern_from_dict(d["pattern"]), tuple(d.get("incoming", ())),
                            tuple(d.get("outgoing", ())))


def interface_to_dict(m: InterfaceMap) -> dict:
    return {"circle_pairs": [[a, b] for a, b in m.circle_pairs.items()],
            "point_map": [[a, b] for a, b in m.point_map.items()],
            "orientation_compatible": m.orientation_compatible}


def interface_from_dict(d: dict) -> InterfaceMap:
    return InterfaceMap({a: b for a, b in d["circle_pairs"]}, {a: b for a, b in d.get("point_map", [])},
                        bool(d.get("orientation_compatible", True)))


def state_to_dict(s: DivideState) -> dict:
    return {
        "pattern": pattern_to_dict(s.pattern),
        "faces": [{"id": f.id, "color": f.color.value, "genus": f.genus,
                   "boundary_cycles": [[list(item) for item in cyc] for cyc in f.boundary_cycles]}
                  for f in s.faces],
        "curves": [{"id": c.id, "kind": c.kind,
                    "endpoints": list(c.endpoints) if c.endpoints is not None else None,
                    "cusps": [{"id": k.id, "pointing": k.pointing.value} for k in c.cusps],
                    "face_plus": c.face_plus, "face_minus": c.face_minus}
                   for c in s.curves],
    }


def state_from_dict(d: dict) -> DivideState:
    faces = tuple(Face(f["id"], Side(f["color"]), int(f["genus"]), _tup(f["boundary_cycles"]))
                  for f in d["faces"])
    curves = tuple(Curve(c["id"], c["kind"],
                         tuple(c["endpoints"]) if c.get("endpoints") is not None else None,
                         tuple(Cusp(k["id"], Side(k["pointing"])) for k in c.get("cusps", [])),
                         c.get("face_plus"), c.get("face_minus"))
                   for c in d["curves"])
    return DivideState(pattern_from_dict(d["pattern"]), faces, curves)


_MOVES = {cls.kind: cls for cls in mv.MOVE_TYPES}


def _surgery_to_dict(s: mv.Surgery) -> dict:
    return {"separating": s.separating, "genus_first": s.genus_first,
            "cycles_first": [[list(i) for i in cyc] for cyc in s.cycles_first],
            "cusps_first": list(s.cusps_first)}


def _surgery_from_dict(d: dict) -> mv.Surgery:
    return mv.Surgery(bool(d.get("separating", True)), int(d.get("genus_first", 0)),
                      _tup(d.get("cycles_first", [])), tuple(d.get("cusps_first", ())))


def move_to_dict(m) -> dict:
    out = {"kind": m.kind}
    for f in fields(m):
        v = getattr(m, f.name)
        if isinstance(v, mv.Surgery):
            v = _surgery_to_dict(v)
        elif isinstance(v, Side):
            v = v.value
        out[f.name] = v
    return out


def move_from_dict(d: dict):
    try:
        cls = _MOVES[d["kind"]]
    except KeyError:
        raise DocumentError(f"unknown move kind {d.get('kind')!r}") from None
    kw = {}
    for f in fields(cls):
        if f.name not in d:
            continue
        v = d[f.name]
        if f.name == "surgery" and v is not None:
            v = _surgery_from_dict(v)
        elif f.name == "side":
            v = Side(v)
        kw[f.name] = v
    return cls(**kw)


_ENCODE = {
    "pattern": (Pattern, pattern_to_dict),
    "cobordism": (CobordismPattern, cobordism_to_dict),
    "state": (DivideState, state_to_dict),
    "interface": (InterfaceMap, interface_to_dict),
}
_DECODE = {
    "pattern": pattern_from_dict,
    "cobordism": cobordism_from_dict,
    "state": state_from_dict,
    "interface": interface_from_dict,
    "moves": lambda payload: [move_from_dict(m) for m in payload],
}


def to_document(obj, kind: str | None = None) -> dict:
    if kind is None:
        for k, (cls, _) in _ENCODE.items():
            if isinstance(obj, cls):
                kind = k
                break
        else:
            if isinstance(obj, (list, tuple)):
                kind = "moves"
            else:
                raise DocumentError(f"cannot serialize {type(obj).__name__}")
    if kind == "moves":
        payload = [move_to_dict(m) for m in obj]
    else:
        payload = _ENCODE[kind][1](obj)
    return {"version": VERSION, "kind": kind, "payload": payload}


def from_document(doc: dict, expect: str | None = None):
    if not isinstance(doc, dict) or "kind" not in doc or "payload" not in doc:
        raise DocumentError("document needs 'kind' and 'payload'")
    kind = doc["kind"]
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    if expect is not None and kind != expect:
        raise DocumentError(f"expected a {expect} document, got {kind}")
    if str(doc.get("version", VERSION)) != VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    try:
        return _DECODE[kind](doc["payload"])
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"malformed {kind} payload: {e}") from None


def dumps(obj, kind: str | None = None) -> str:
    return json.dumps(to_document(obj, kind), indent=2, sort_keys=True)


def loads(text: str, expect: str | None = None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from None
    return from_document(doc, expect)

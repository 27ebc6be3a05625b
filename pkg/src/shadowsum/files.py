"""Readers and writers for the link and shadow file formats (JSON, UTF-8).

Link files:
    { "t0": real, "level": int,
      "loops": [ { "vertices": [[x, y, theta], ...],   # closing vertex repeated
                   "color": half-integer, "framing": int, "vertical": bool } ] }

Shadow files:
    { "faces": [ { "chi": int, "gleam": number|null, "z": int } ],
      "edges": [ { "color": half-integer, "left": faceId, "right": faceId } ],
      "vertices": [ { "e1": half-integer, "e2": half-integer,
                      "j": faceId, "k": faceId, "m": faceId, "n": faceId } ] }

Parsers reject NaN/Inf and non-closing loops with ParseError; violated
structural invariants of the parsed objects raise InvariantViolation.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import InvariantViolation, ParseError
from .geometry import Link, Loop, make_loop
from .shadow import Shadow, ShadowEdge, ShadowFace, ShadowVertex, check_shadow

__all__ = ["loads_link", "load_link", "loads_shadow", "load_shadow",
           "dumps_link", "dumps_shadow"]


def _reject_specials(name):
    raise ParseError(f"non-finite number {name!r} in input")


def _load_json(text: str):
    try:
        return json.loads(text, parse_constant=_reject_specials)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _number(obj, what: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise ParseError(f"{what} must be a number, got {obj!r}")
    val = float(obj)
    if not math.isfinite(val):
        raise ParseError(f"{what} is not finite")
    return val


def _integer(obj, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(f"{what} must be an integer, got {obj!r}")
    return obj


def _half_integer(obj, what: str) -> Fraction:
    val = _number(obj, what)
    doubled = val * 2
    if abs(doubled - round(doubled)) > 1e-9:
        raise ParseError(f"{what} must be a half-integer, got {obj!r}")
    return Fraction(round(doubled), 2)


def loads_link(text: str) -> Link:
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise ParseError("link file must contain a JSON object")
    missing = {"t0", "level", "loops"} - obj.keys()
    if missing:
        raise ParseError(f"link file missing fields {sorted(missing)}")
    t0 = _number(obj["t0"], "t0")
    level = _integer(obj["level"], "level")
    if not isinstance(obj["loops"], list):
        raise ParseError("loops must be a list")
    loops = []
    for i, rec in enumerate(obj["loops"]):
        if not isinstance(rec, dict) or "vertices" not in rec:
            raise ParseError(f"loop {i} must be an object with vertices")
        verts = rec["vertices"]
        if not isinstance(verts, list) or any(
            not isinstance(v, list) or len(v) != 3 for v in verts
        ):
            raise ParseError(f"loop {i} vertices must be [x, y, theta] triples")
        triples = [tuple(_number(c, f"loop {i} vertex coordinate") for c in v) for v in verts]
        color = _half_integer(rec.get("color", 0.5), f"loop {i} color")
        framing = _integer(rec.get("framing", 0), f"loop {i} framing")
        vertical = rec.get("vertical", False)
        if not isinstance(vertical, bool):
            raise ParseError(f"loop {i} vertical flag must be a boolean")
        try:
            loops.append(make_loop(triples, color=color, framing=framing, vertical=vertical))
        except InvariantViolation as exc:
            raise ParseError(f"loop {i}: {exc}") from exc
    return Link(loops=tuple(loops), t0=t0, level=level)


def load_link(path) -> Link:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_link(fh.read())


def loads_shadow(text: str) -> Shadow:
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise ParseError("shadow file must contain a JSON object")
    if "faces" not in obj or "edges" not in obj:
        raise ParseError("shadow file needs faces and edges")
    faces = []
    for i, rec in enumerate(obj["faces"]):
        if not isinstance(rec, dict) or "chi" not in rec:
            raise ParseError(f"face {i} must be an object with chi")
        gleam = rec.get("gleam")
        faces.append(ShadowFace(
            chi=_integer(rec["chi"], f"face {i} chi"),
            gleam=None if gleam is None else _half_integer(gleam, f"face {i} gleam"),
            z=_integer(rec.get("z", 0), f"face {i} z"),
        ))
    edges = []
    for i, rec in enumerate(obj["edges"]):
        if not isinstance(rec, dict) or {"color", "left", "right"} - rec.keys():
            raise ParseError(f"edge {i} must carry color, left, right")
        color = _half_integer(rec["color"], f"edge {i} color")
        if color < 0:
            raise ParseError(f"edge {i} color must be non-negative")
        edges.append(ShadowEdge(
            color2=int(color * 2),
            left=_integer(rec["left"], f"edge {i} left"),
            right=_integer(rec["right"], f"edge {i} right"),
        ))
    vertices = []
    for i, rec in enumerate(obj.get("vertices", [])):
        if not isinstance(rec, dict) or {"e1", "e2", "j", "k", "m", "n"} - rec.keys():
            raise ParseError(f"vertex {i} must carry e1, e2, j, k, m, n")
        vertices.append(ShadowVertex(
            e1_2=int(_half_integer(rec["e1"], f"vertex {i} e1") * 2),
            e2_2=int(_half_integer(rec["e2"], f"vertex {i} e2") * 2),
            j=_integer(rec["j"], f"vertex {i} j"),
            k=_integer(rec["k"], f"vertex {i} k"),
            m=_integer(rec["m"], f"vertex {i} m"),
            n=_integer(rec["n"], f"vertex {i} n"),
        ))
    shadow = Shadow(faces=tuple(faces), edges=tuple(edges), vertices=tuple(vertices))
    check_shadow(shadow)
    return shadow


def load_shadow(path) -> Shadow:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_shadow(fh.read())


def dumps_link(link: Link) -> str:
    obj = {
        "t0": link.t0,
        "level": link.level,
        "loops": [
            {
                "vertices": [[x, y, t] for x, y, t in lp.vertices],
                "color": float(lp.color),
                "framing": lp.framing,
                "vertical": lp.vertical,
            }
            for lp in link.loops
        ],
    }
    return json.dumps(obj, indent=1, sort_keys=True)


def dumps_shadow(shadow: Shadow) -> str:
    obj = {
        "faces": [
            {"chi": f.chi, "gleam": None if f.gleam is None else float(f.gleam), "z": f.z}
            for f in shadow.faces
        ],
        "edges": [
            {"color": e.color2 / 2, "left": e.left, "right": e.right}
            for e in shadow.edges
        ],
        "vertices": [
            {"e1": v.e1_2 / 2, "e2": v.e2_2 / 2, "j": v.j, "k": v.k, "m": v.m, "n": v.n}
            for v in shadow.vertices
        ],
    }
    return json.dumps(obj, indent=1, sort_keys=True)

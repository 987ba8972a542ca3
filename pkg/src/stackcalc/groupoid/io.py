"""JSON documents for single-component groupoid presentations and framed algebroids.

Groupoid document::

    {"name": ..., "parameters": ["l0", ...],
     "base_chart": {"affine": [...], "circles": [[angle, cos, sin], ...]},
     "arrow_chart": ..., "g2_chart": ..., "g3_chart": ...,
     "maps": {"s": {gen: prefix, ...}, "t": ..., "u": ..., "i": ..., "m": ...,
              "pr1": ..., "pr2": ..., "q1": ..., "q2": ..., "q3": ...},
     "base_block": {base gen: arrow gen}, "fiber": [...]}

Algebroid document::

    {"name": ..., "parameters": [...], "base_chart": ..., "frame": ["e", ...],
     "anchor": {frame name: {derivation: prefix}},
     "structure_functions": [{"pair": [ei, ej], "coefficients": {ek: prefix}}]}
"""

from __future__ import annotations

import json
from pathlib import Path

from ..symcore import Chart, ChartError, ExprError, MapError, Space, SpaceMap, SmoothMap, scalar_field
from .presentation import GroupoidPresentation, PresentationError

# map name -> (source space key, target space key)
MAP_ROLES = {
    "s": ("G", "M"), "t": ("G", "M"), "u": ("M", "G"), "i": ("G", "G"),
    "m": ("G2", "G"), "pr1": ("G2", "G"), "pr2": ("G2", "G"),
    "q1": ("G3", "G"), "q2": ("G3", "G"), "q3": ("G3", "G"),
}
_REQUIRED = tuple(MAP_ROLES)  # axiom validation needs all of them
_CHART_KEYS = {"M": "base_chart", "G": "arrow_chart", "G2": "g2_chart", "G3": "g3_chart"}


class FormatError(ValueError):
    """Malformed document; the CLI maps this to exit status 2."""


def chart_to_json(chart: Chart) -> dict:
    return {"affine": list(chart.affine), "circles": [list(c) for c in chart.circles]}


def chart_from_json(doc, field, name: str = "") -> Chart:
    if not isinstance(doc, dict):
        raise FormatError(f"chart {name!r} must be an object")
    unknown = set(doc) - {"affine", "circles", "name"}
    if unknown:
        raise FormatError(f"chart {name!r}: unknown keys {sorted(unknown)}")
    circles = doc.get("circles", [])
    for c in circles:
        if not (isinstance(c, list) and len(c) == 3 and all(isinstance(x, str) for x in c)):
            raise FormatError(f"chart {name!r}: circles are [angle, cos, sin] triples")
    affine = doc.get("affine", [])
    if not all(isinstance(a, str) for a in affine):
        raise FormatError(f"chart {name!r}: affine coordinates must be strings")
    try:
        return Chart(affine, [tuple(c) for c in circles], field=field, name=doc.get("name", name))
    except ChartError as e:
        raise FormatError(str(e)) from None


def _parameters(doc) -> tuple[str, ...]:
    params = doc.get("parameters", [])
    if isinstance(params, dict):
        params = sorted(params)
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise FormatError("parameters must be a list of names")
    return tuple(params)


def groupoid_to_json(P: GroupoidPresentation) -> dict:
    """Canonical document; charts and maps are printed from normal forms."""
    spaces = {"M": P.Mspace, "G": P.G, "G2": P.G2, "G3": P.G3}
    for key, S in spaces.items():
        if S is not None and len(S) != 1:
            raise PresentationError(f"{P.name}: only single-component presentations can be written")
    doc = {"name": P.name, "parameters": list(P.M.field.params)}
    for key, S in spaces.items():
        if S is not None:
            doc[_CHART_KEYS[key]] = chart_to_json(S.chart)
    maps = {}
    for nm in MAP_ROLES:
        f = getattr(P, nm)
        if f is None:
            continue
        sm = f.parts[0][1]
        maps[nm] = {g: v.to_prefix() for g, v in zip(sm.target.gens, sm.images)}
    doc["maps"] = maps
    if P.base_block is not None:
        doc["base_block"] = dict(P.base_block)
    if P.fiber is not None:
        doc["fiber"] = list(P.fiber)
    return doc


def groupoid_from_json(doc) -> GroupoidPresentation:
    if not isinstance(doc, dict):
        raise FormatError("groupoid document must be a JSON object")
    for key in ("name", "maps", *_CHART_KEYS.values()):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    field = scalar_field(_parameters(doc))
    spaces = {}
    for key, jkey in _CHART_KEYS.items():
        if jkey in doc:
            spaces[key] = Space.single(chart_from_json(doc[jkey], field, key), name=key)
    maps = doc["maps"]
    if not isinstance(maps, dict):
        raise FormatError("maps must be an object")
    unknown = set(maps) - set(MAP_ROLES)
    if unknown:
        raise FormatError(f"unknown maps {sorted(unknown)}")
    missing = [m for m in _REQUIRED if m not in maps]
    if missing:
        raise FormatError(f"missing maps {missing}")
    built = {}
    for nm, images in maps.items():
        src, dst = MAP_ROLES[nm]
        if src not in spaces or dst not in spaces:
            raise FormatError(f"map {nm} needs charts for {src} and {dst}")
        if not isinstance(images, dict) or not all(isinstance(v, (str, int)) for v in images.values()):
            raise FormatError(f"map {nm}: images must be prefix expressions")
        try:
            sm = SmoothMap(spaces[src].chart, spaces[dst].chart, images, name=nm)
        except (ExprError, ChartError, MapError) as e:
            raise FormatError(f"map {nm}: {e}") from None
        built[nm] = SpaceMap.single(spaces[src], spaces[dst], sm, name=nm)
    M = spaces["M"].chart
    return GroupoidPresentation(
        doc["name"], M, spaces["G"], built["s"], built["t"], built["u"], built["i"],
        G2=spaces.get("G2"), m=built.get("m"), pr1=built.get("pr1"), pr2=built.get("pr2"),
        G3=spaces.get("G3"), q1=built.get("q1"), q2=built.get("q2"), q3=built.get("q3"),
        base_block=doc.get("base_block"), fiber=doc.get("fiber"))


def algebroid_to_json(A) -> dict:
    r = A.rank
    structure = []
    for i in range(r):
        for j in range(i + 1, r):
            c = A.structure[(i, j)]
            if any(c):
                structure.append({"pair": [A.frame[i], A.frame[j]],
                                  "coefficients": {A.frame[k]: c[k].to_prefix()
                                                   for k in range(r) if c[k]}})
    return {"name": A.name, "parameters": list(A.M.field.params),
            "base_chart": chart_to_json(A.M), "frame": list(A.frame),
            "anchor": {A.frame[k]: A.anchor_fields[k].to_prefix() for k in range(r)},
            "structure_functions": structure}


def algebroid_from_json(doc):
    from ..algebroid.core import AlgebroidError, AlgebroidPresentation

    if not isinstance(doc, dict):
        raise FormatError("algebroid document must be a JSON object")
    for key in ("base_chart", "frame", "anchor"):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    field = scalar_field(_parameters(doc))
    M = chart_from_json(doc["base_chart"], field, "M")
    frame = doc["frame"]
    anchor = doc["anchor"]
    if not isinstance(anchor, dict) or set(anchor) != set(frame):
        raise FormatError("anchor must give one field per frame element")
    structure = {}
    for entry in doc.get("structure_functions", []):
        try:
            structure[tuple(entry["pair"])] = entry["coefficients"]
        except (KeyError, TypeError):
            raise FormatError("structure entries are {pair, coefficients}") from None
    try:
        return AlgebroidPresentation(M, frame, anchor, structure, name=doc.get("name", ""))
    except (AlgebroidError, ExprError, ChartError, KeyError) as e:
        raise FormatError(str(e)) from None


def load_document(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(f"{path}: {e}") from None


def load(path):
    """Groupoid or algebroid presentation from a file (algebroids have a frame)."""
    doc = load_document(path)
    if isinstance(doc, dict) and "frame" in doc and "arrow_chart" not in doc:
        return algebroid_from_json(doc)
    return groupoid_from_json(doc)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

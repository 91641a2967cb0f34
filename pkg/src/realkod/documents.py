"""JSON surface documents and blow-up scripts.

A *surface document* is a direct serialisation of a :class:`RealSNCPair`.
A *script document* describes a pair as P^2 with some curves followed by a
list of blow-ups; replaying it produces the pair.  Field names are stable.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from .birational import STRICT, TOTAL, BlowUpError, Center, blow_up
from .pair import (REAL_FINITE, REAL_INFINITE, Component, Edge, RealSNCPair,
                   conjugate_of, projective_plane, validate)


class DocumentError(ValueError):
    """Malformed document; ``where`` names the offending field."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _need(obj: dict, key: str, where: str, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(where, f"missing field {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise DocumentError(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


# -- surface documents -------------------------------------------------------

def _reality_out(c: Component):
    return {"conjugate": c.reality.partner} if c.reality.kind == "conjugate" else c.reality.kind


def to_document(pair: RealSNCPair) -> dict:
    doc = {
        "name": pair.name,
        "picard_rank": pair.picard_rank,
        "k_self": pair.k_self,
        "components": [
            {"id": c.id, "name": c.name, "weight": c.weight, "genus": c.genus, "delta": c.delta,
             "reality": _reality_out(c), "in_boundary": c.in_boundary,
             **({"class": list(c.picard_class)} if c.picard_class is not None else {})}
            for c in pair.components.values()],
        "edges": [
            {"id": e.id, "a": e.a, "b": e.b, "mult": e.mult,
             "point": "real" if e.conjugate is None else {"conjugate": e.conjugate},
             **({"label": e.label} if e.label else {})}
            for e in pair.edges.values()],
    }
    if pair.basis_sigma is not None:
        doc["basis_sigma"] = list(pair.basis_sigma)
    if pair.provenance is not None:
        doc["provenance"] = pair.provenance
    return doc


def from_document(doc: dict) -> RealSNCPair:
    if not isinstance(doc, dict):
        raise DocumentError("document", "expected a JSON object")
    comps: Dict[int, Component] = {}
    for i, c in enumerate(_need(doc, "components", "document", list)):
        where = f"components[{i}]"
        cid = _need(c, "id", where, int)
        reality = c.get("reality", "real_infinite")
        if reality == "real_infinite":
            r = REAL_INFINITE
        elif reality == "real_finite":
            r = REAL_FINITE
        elif isinstance(reality, dict) and isinstance(reality.get("conjugate"), int):
            r = conjugate_of(reality["conjugate"])
        else:
            raise DocumentError(f"{where}.reality", f"bad value {reality!r}")
        cls = c.get("class")
        if cls is not None and not (isinstance(cls, list) and all(isinstance(x, int) for x in cls)):
            raise DocumentError(f"{where}.class", "expected a list of integers")
        if cid in comps:
            raise DocumentError(f"{where}.id", f"duplicate id {cid}")
        comps[cid] = Component(cid, str(c.get("name", f"C{cid}")), _need(c, "weight", where, int), r,
                               bool(c.get("in_boundary", True)), int(c.get("genus", 0)),
                               int(c.get("delta", 0)), None if cls is None else tuple(cls))
    edges: Dict[int, Edge] = {}
    for i, e in enumerate(_need(doc, "edges", "document", list)):
        where = f"edges[{i}]"
        eid = e.get("id", i) if isinstance(e, dict) else i
        point = e.get("point", "real") if isinstance(e, dict) else None
        if point == "real":
            conj = None
        elif isinstance(point, dict) and isinstance(point.get("conjugate"), int):
            conj = point["conjugate"]
        else:
            raise DocumentError(f"{where}.point", f"bad value {point!r}")
        a, b = _need(e, "a", where, int), _need(e, "b", where, int)
        for end in (a, b):
            if end not in comps:
                raise DocumentError(where, f"unknown component id {end}")
        if eid in edges:
            raise DocumentError(f"{where}.id", f"duplicate id {eid}")
        edges[eid] = Edge(eid, a, b, int(e.get("mult", 1)), conj, e.get("label"))
    sigma = doc.get("basis_sigma")
    return RealSNCPair(comps, edges, picard_rank=_need(doc, "picard_rank", "document", int),
                       k_self=_need(doc, "k_self", "document", int), name=str(doc.get("name", "")),
                       basis_sigma=None if sigma is None else tuple(sigma),
                       provenance=doc.get("provenance"))


# -- script documents ------------------------------------------------------

def _edge_ref(pair: RealSNCPair, ref, where: str) -> int:
    if not (isinstance(ref, list) and len(ref) in (2, 3)):
        raise DocumentError(where, "edge reference must be [curve, curve] or [curve, curve, label]")
    try:
        a, b = pair.ids(ref[0], ref[1])
    except KeyError as exc:
        raise DocumentError(where, f"unknown curve {exc.args[0]!r}") from None
    found = pair.edges_between(a, b)
    if len(ref) == 3:
        found = [e for e in found if e.label == ref[2]]
    if len(found) != 1:
        raise DocumentError(where, f"{len(found)} intersection points match {ref}")
    return found[0].id


def _curve_reality(value, names: Dict[str, int], where: str):
    if value in (None, "real_infinite"):
        return REAL_INFINITE
    if value == "real_finite":
        return REAL_FINITE
    if isinstance(value, dict) and value.get("conjugate") in names:
        return conjugate_of(names[value["conjugate"]])
    raise DocumentError(where, f"bad reality {value!r}")


def run_script(script: dict) -> RealSNCPair:
    """Replay a script document into a validated pair."""
    if not isinstance(script, dict):
        raise DocumentError("script", "expected a JSON object")
    if script.get("base", "P2") != "P2":
        raise DocumentError("script.base", "only P2 is supported")
    curves = _need(script, "curves", "script", list)
    names = {}
    for i, c in enumerate(curves):
        n = _need(c, "name", f"curves[{i}]", str)
        if n in names:
            raise DocumentError(f"curves[{i}].name", f"duplicate curve {n!r}")
        names[n] = i
    specs = []
    for i, c in enumerate(curves):
        where = f"curves[{i}]"
        deg = _need(c, "degree", where, int)
        cusps = c.get("cusps", [])
        delta = sum(m * (m - 1) // 2 for seq in cusps for m in seq)
        genus = (deg - 1) * (deg - 2) // 2 - delta
        if genus < 0:
            raise DocumentError(f"{where}.cusps", "singularities exceed the arithmetic genus")
        specs.append({"name": c["name"], "degree": deg, "genus": genus, "delta": delta,
                      "reality": _curve_reality(c.get("reality"), names, f"{where}.reality"),
                      "in_boundary": bool(c.get("in_boundary", True))})
    pair = projective_plane(specs, name=str(script.get("name", "")))
    pair.provenance[0]["curves"] = curves

    # intersection points; conjugate partners are matched by label
    raw = []
    for i, c in enumerate(curves):
        for j, m in enumerate(c.get("meets", [])):
            where = f"curves[{i}].meets[{j}]"
            other = _need(m, "curve", where, str)
            if other not in names:
                raise DocumentError(where, f"unknown curve {other!r}")
            raw.append((where, names[c["name"]], names[other], int(m.get("mult", 1)),
                        m.get("label"), m.get("conjugate")))
    labels = {r[4]: k for k, r in enumerate(raw) if r[4] is not None}
    for k, (where, a, b, mult, label, conj) in enumerate(raw):
        partner = None
        if conj is not None:
            if conj not in labels:
                raise DocumentError(f"{where}.conjugate", f"unknown point label {conj!r}")
            partner = labels[conj]
        pair.edges[k] = Edge(k, a, b, mult, partner, label)
    problems = validate(pair)
    if problems:
        raise DocumentError("script.curves", "; ".join(problems))

    for i, op in enumerate(script.get("ops", [])):
        where = f"ops[{i}]"
        through = op.get("through", {})
        try:
            center = Center(
                through=tuple((pair.by_name(n).id, int(m)) for n, m in through.items()),
                edges=tuple(_edge_ref(pair, r, f"{where}.edges") for r in op.get("edges", [])),
                conjugate=bool(op.get("conjugate", False)),
                policy=op.get("policy", TOTAL), names=tuple(op.get("names", ())))
            pair = blow_up(pair, center)
        except KeyError as exc:
            raise DocumentError(f"{where}.through", f"unknown curve {exc.args[0]!r}") from None
        except BlowUpError as exc:
            raise DocumentError(where, str(exc)) from None

    if "boundary" in script:
        wanted = set(script["boundary"])
        unknown = wanted - {c.name for c in pair.components.values()}
        if unknown:
            raise DocumentError("script.boundary", f"unknown curves {sorted(unknown)}")
        import dataclasses
        pair.components = {cid: dataclasses.replace(c, in_boundary=c.name in wanted)
                           for cid, c in pair.components.items()}
    problems = validate(pair)
    if problems:
        raise DocumentError("script", "; ".join(problems))
    return pair


def script_of(pair: RealSNCPair) -> dict:
    """Script reproducing ``pair`` from its blow-up history."""
    prov = pair.provenance
    if not prov or prov[0].get("base") != "P2" or "curves" not in prov[0]:
        raise ValueError("pair has no replayable history")
    return {"name": pair.name, "base": "P2", "curves": prov[0]["curves"],
            "ops": [dict(step) for step in prov[1:]],
            "boundary": [pair[c].name for c in pair.boundary_ids()]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)

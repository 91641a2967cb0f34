"""Blow-ups of real pairs, the three elementary links, and loop elimination."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .pair import (REAL_INFINITE, Component, Edge, RealSNCPair, conjugate_of,
                   detect_imaginary_loops, is_snc, real_boundary, validate)

TOTAL = "total"    # exceptional curve joins the boundary when the centre lies on it
STRICT = "strict"  # exceptional curve never joins the boundary


class BlowUpError(ValueError):
    pass


@dataclass(frozen=True)
class Center:
    """A point (or a conjugate pair of points) to blow up.

    ``through`` lists the tracked components passing through the point with
    their multiplicity there; ``edges`` lists the recorded intersection
    points located at it.  For a conjugate pair these describe the point
    ``q``; the point ``q̄`` is obtained by conjugation.
    """

    through: Tuple[Tuple[int, int], ...] = ()
    edges: Tuple[int, ...] = ()
    conjugate: bool = False
    policy: str = TOTAL
    names: Tuple[str, ...] = ()

    @property
    def multiplicities(self) -> Dict[int, int]:
        return dict(self.through)


def free_real(policy: str = TOTAL, name: str = "") -> Center:
    return Center(policy=policy, names=(name,) if name else ())


def on_component(cid: int, m: int = 1, policy: str = TOTAL, name: str = "") -> Center:
    return Center(through=((cid, m),), policy=policy, names=(name,) if name else ())


def on_edge(pair: RealSNCPair, eid: int, m1: int = 1, m2: int = 1,
            policy: str = TOTAL, name: str = "") -> Center:
    e = pair.edges[eid]
    return Center(through=((e.a, m1), (e.b, m2)), edges=(eid,), policy=policy,
                  names=(name,) if name else ())


def conjugate_pair_of(center: Center, names: Sequence[str] = ()) -> Center:
    return dataclasses.replace(center, conjugate=True, names=tuple(names) or center.names)


def _check_center(pair: RealSNCPair, center: Center) -> None:
    comps = pair.components
    mults = center.multiplicities
    if len(mults) != len(center.through):
        raise BlowUpError("component listed twice in centre")
    for cid, m in mults.items():
        if cid not in comps:
            raise BlowUpError(f"unknown component {cid}")
        if m < 1:
            raise BlowUpError(f"multiplicity {m} < 1 on {comps[cid].name}")
        if m * (m - 1) // 2 > comps[cid].delta:
            raise BlowUpError(f"{comps[cid].name} has no singular point of multiplicity {m} left")
    if center.policy not in (TOTAL, STRICT):
        raise BlowUpError(f"unknown boundary policy {center.policy!r}")
    seen = set()
    for eid in center.edges:
        e = pair.edges.get(eid)
        if e is None:
            raise BlowUpError(f"unknown edge {eid}")
        if e.a not in mults or e.b not in mults:
            raise BlowUpError(f"edge {eid} does not join two components through the centre")
        key = frozenset((e.a, e.b))
        if key in seen:
            raise BlowUpError(f"two edges between the same components at one point")
        seen.add(key)
        if e.mult < mults[e.a] * mults[e.b]:
            raise BlowUpError(f"edge {eid} multiplicity {e.mult} below {mults[e.a] * mults[e.b]}")
        if center.conjugate == e.is_real:
            raise BlowUpError(f"edge {eid} reality does not match the centre")
    ids = list(mults)
    for i, c in enumerate(ids):
        for d in ids[i + 1:]:
            if frozenset((c, d)) not in seen:
                raise BlowUpError(
                    f"{comps[c].name} and {comps[d].name} both pass through the centre "
                    "but no edge between them is listed")
    if not center.conjugate:
        for cid, m in mults.items():
            if mults.get(pair.sigma(cid)) != m:
                raise BlowUpError("real centre must be stable under conjugation")


def _describe(pair: RealSNCPair, center: Center, names) -> dict:
    edges = []
    for eid in center.edges:
        e = pair.edges[eid]
        edges.append([pair[e.a].name, pair[e.b].name] + ([e.label] if e.label else []))
    return {"through": {pair[c].name: m for c, m in center.through}, "edges": edges,
            "conjugate": center.conjugate, "policy": center.policy, "names": list(names)}


def blow_up(pair: RealSNCPair, center: Center) -> RealSNCPair:
    """Blow up a real point or a conjugate pair of points; input is not mutated."""
    _check_center(pair, center)
    out = pair.copy()
    n_new = 2 if center.conjugate else 1
    base_k = pair.picard_rank
    new_ids = [pair.next_component_id() + i for i in range(n_new)]
    names = list(center.names) + [""] * n_new
    for i in range(n_new):
        if not names[i]:
            names[i] = f"E{base_k + i}"
    names = names[:n_new]

    points = [(center.multiplicities, list(center.edges))]
    if center.conjugate:
        points.append(({pair.sigma(c): m for c, m in center.through},
                       [pair.sigma_edge(e) for e in center.edges]))

    with_classes = pair.has_classes()
    comps = {}
    for cid, c in pair.components.items():
        cls = c.picard_class
        if cls is not None:
            cls = tuple(cls) + (0,) * n_new
        comps[cid] = dataclasses.replace(c, picard_class=cls)
    edges = dict(pair.edges)
    on_boundary = any(pair[c].in_boundary for c in center.multiplicities)
    in_boundary = center.policy == TOTAL and on_boundary

    next_eid = pair.next_edge_id()
    new_edge_at: Dict[Tuple[int, int], int] = {}
    for k, (mults, eids) in enumerate(points):
        for cid, m in mults.items():
            c = comps[cid]
            cls = c.picard_class
            if cls is not None:
                cls = list(cls)
                cls[base_k + k] -= m
                cls = tuple(cls)
            comps[cid] = dataclasses.replace(
                c, weight=c.weight - m * m, delta=c.delta - m * (m - 1) // 2, picard_class=cls)
            new_edge_at[(k, cid)] = next_eid
            next_eid += 1
        for eid in eids:
            e = edges[eid]
            left = e.mult - mults[e.a] * mults[e.b]
            if left < 0:
                raise BlowUpError(f"edge {eid} multiplicity would become negative")
            if left == 0:
                del edges[eid]
            else:
                edges[eid] = dataclasses.replace(e, mult=left)
    if any(c.delta < 0 for c in comps.values()):
        raise BlowUpError("multiplicities exceed the singularities declared on a curve")

    for k, (mults, _) in enumerate(points):
        eid_of = new_edge_at
        for cid, m in mults.items():
            eid = eid_of[(k, cid)]
            if center.conjugate:
                partner = eid_of[(1 - k, pair.sigma(cid))]
            else:
                s = pair.sigma(cid)
                partner = None if s == cid else eid_of[(k, s)]
            edges[eid] = Edge(eid, new_ids[k], cid, m, partner)

    for k, nid in enumerate(new_ids):
        cls = None
        if with_classes:
            cls = tuple(int(i == base_k + k) for i in range(base_k + n_new))
        reality = conjugate_of(new_ids[1 - k]) if center.conjugate else REAL_INFINITE
        comps[nid] = Component(nid, names[k], -1, reality, in_boundary, 0, 0, cls)

    out.components = comps
    out.edges = dict(sorted(edges.items()))
    out.picard_rank = pair.picard_rank + n_new
    out.k_self = pair.k_self - n_new
    if pair.basis_sigma is not None:
        sig = list(pair.basis_sigma)
        sig += [base_k + 1, base_k] if center.conjugate else [base_k]
        out.basis_sigma = tuple(sig)
    if out.provenance is not None:
        out.provenance.append(_describe(pair, center, names))
    return out


# -- links ------------------------------------------------------------------

def _is_automorphism(pair: RealSNCPair, mapping: Mapping[int, int]) -> bool:
    if sorted(mapping) != sorted(pair.components) or sorted(mapping.values()) != sorted(pair.components):
        return False
    for cid, c in pair.components.items():
        d = pair[mapping[cid]]
        if (c.weight, c.genus, c.delta, c.in_boundary, c.reality.kind) != \
                (d.weight, d.genus, d.delta, d.in_boundary, d.reality.kind):
            return False
        if pair.sigma(mapping[cid]) != mapping[pair.sigma(cid)]:
            return False

    def edge_multiset(edges):
        return sorted((tuple(sorted(ab)), m, real) for ab, m, real in edges)

    before = edge_multiset(((e.a, e.b), e.mult, e.is_real) for e in pair.edges.values())
    after = edge_multiset(((mapping[e.a], mapping[e.b]), e.mult, e.is_real)
                          for e in pair.edges.values())
    return before == after


def apply_link(pair: RealSNCPair, kind: int, center: Optional[Center] = None,
               mapping: Optional[Mapping[int, int]] = None) -> RealSNCPair:
    """Apply one elementary birational map of pairs.

    ``kind`` 1 relabels by a decoration-preserving graph automorphism
    ``mapping``; 2 blows up a real point of the boundary and takes the reduced
    total transform; 3 blows up a conjugate pair of points off the singular
    locus of B_R and keeps the strict transform.
    """
    from .pair import relabel

    if kind == 1:
        if mapping is None or not _is_automorphism(pair, mapping):
            raise BlowUpError("link of type 1 needs a decoration-preserving automorphism")
        return relabel(pair, mapping)
    if center is None:
        raise BlowUpError(f"link of type {kind} needs a centre")
    if kind == 2:
        if center.conjugate or not any(pair[c].in_boundary for c in center.multiplicities):
            raise BlowUpError("link of type 2 blows up a real point of the boundary")
        return blow_up(pair, dataclasses.replace(center, policy=TOTAL))
    if kind == 3:
        if not center.conjugate:
            raise BlowUpError("link of type 3 blows up a conjugate pair")
        real_b = set(real_boundary(pair).coefficients)
        in_real = [c for c in center.multiplicities if c in real_b]
        if len(in_real) > 1:
            raise BlowUpError("link of type 3 may not blow up a singular point of B_R")
        return blow_up(pair, dataclasses.replace(center, policy=STRICT))
    raise BlowUpError(f"unknown link type {kind}")


# -- imaginary loops --------------------------------------------------------

@dataclass
class EliminationReport:
    loops: List[Tuple[str, str]] = field(default_factory=list)
    kappa_before: object = None
    kappa_after: object = None
    kappa_real_before: object = None
    kappa_real_after: object = None

    def as_dict(self) -> dict:
        def kd(r):
            return None if r is None else r.as_dict()
        return {"loops": [list(x) for x in self.loops],
                "kappa_before": kd(self.kappa_before), "kappa_after": kd(self.kappa_after),
                "kappa_real_before": kd(self.kappa_real_before),
                "kappa_real_after": kd(self.kappa_real_after)}


def eliminate_imaginary_loops(pair: RealSNCPair, report: bool = True
                              ) -> Tuple[RealSNCPair, EliminationReport]:
    """Blow up every non-real double point of B_R, boundary = reduced total transform."""
    if not is_snc(pair):
        raise BlowUpError("loop elimination needs an SNC boundary")
    loops = detect_imaginary_loops(pair)
    rep = EliminationReport()
    out = pair.copy()
    for eid, _ in loops:
        e = out.edges[eid]
        a, b = out[e.a].name, out[e.b].name
        rep.loops.append((a, b))
        tag = f"{a}.{b}"
        center = Center(through=((e.a, 1), (e.b, 1)), edges=(eid,), conjugate=True,
                        policy=TOTAL, names=(f"F[{tag}]", f"F[{tag}]'"))
        out = blow_up(out, center)
    if report and loops:
        from .kodaira import kappa, classify_real_boundary
        rep.kappa_before = kappa(pair)
        rep.kappa_after = kappa(out)
        rep.kappa_real_before = classify_real_boundary(pair)
        rep.kappa_real_after = classify_real_boundary(out)
    return out, rep

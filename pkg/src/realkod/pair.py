"""Real SNC pairs modelled as decorated dual graphs.

A :class:`RealSNCPair` records every *tracked* curve on a smooth rational
surface ``V`` (boundary components and any auxiliary curves such as the
fibre components of a pencil), the intersection points between them, the
action of complex conjugation on both, and optionally the class of each curve
in the blow-up basis ``(H, E_1, ..., E_n)`` of ``Pic V``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import lattice


class InsufficientData(ValueError):
    """An intersection number is not determined by the recorded data."""


@dataclass(frozen=True)
class Reality:
    """How complex conjugation acts on a component.

    ``kind`` is ``"real_infinite"`` (defined over R with infinite real
    locus), ``"real_finite"`` (defined over R, finitely many real points) or
    ``"conjugate"``, in which case ``partner`` is the id of the conjugate
    component.
    """

    kind: str
    partner: Optional[int] = None

    @property
    def is_real(self) -> bool:
        return self.kind != "conjugate"

    def __str__(self):
        return f"conjugate({self.partner})" if self.kind == "conjugate" else self.kind


REAL_INFINITE = Reality("real_infinite")
REAL_FINITE = Reality("real_finite")


def conjugate_of(cid: int) -> Reality:
    return Reality("conjugate", cid)


@dataclass(frozen=True)
class Component:
    id: int
    name: str
    weight: int
    reality: Reality = REAL_INFINITE
    in_boundary: bool = True
    genus: int = 0
    # arithmetic minus geometric genus; positive while a cusp is unresolved
    delta: int = 0
    picard_class: Optional[Tuple[int, ...]] = None

    @property
    def arithmetic_genus(self) -> int:
        return self.genus + self.delta


@dataclass(frozen=True)
class Edge:
    """One intersection point of two tracked components.

    ``conjugate`` is ``None`` for a real point, otherwise the id of the edge
    carrying the conjugate point.
    """

    id: int
    a: int
    b: int
    mult: int = 1
    conjugate: Optional[int] = None
    label: Optional[str] = None

    @property
    def is_real(self) -> bool:
        return self.conjugate is None

    def other(self, cid: int) -> int:
        return self.b if cid == self.a else self.a

    def joins(self, c: int, d: int) -> bool:
        return {self.a, self.b} == {c, d}


@dataclass
class RealSNCPair:
    components: Dict[int, Component]
    edges: Dict[int, Edge]
    picard_rank: int = 1
    k_self: int = 9
    name: str = ""
    # permutation of Picard basis indices induced by conjugation
    basis_sigma: Optional[Tuple[int, ...]] = None
    provenance: Optional[List[dict]] = None

    def copy(self) -> "RealSNCPair":
        return dataclasses.replace(
            self, components=dict(self.components), edges=dict(self.edges),
            provenance=None if self.provenance is None else list(self.provenance))

    # -- lookup -----------------------------------------------------------
    def __getitem__(self, cid: int) -> Component:
        return self.components[cid]

    def by_name(self, name: str) -> Component:
        for c in self.components.values():
            if c.name == name:
                return c
        raise KeyError(name)

    def ids(self, *names: str) -> List[int]:
        return [self.by_name(n).id for n in names]

    def sigma(self, cid: int) -> int:
        r = self.components[cid].reality
        return r.partner if r.kind == "conjugate" else cid

    def sigma_edge(self, eid: int) -> int:
        e = self.edges[eid]
        return eid if e.conjugate is None else e.conjugate

    def edges_at(self, cid: int) -> List[Edge]:
        return [e for e in self.edges.values() if cid in (e.a, e.b)]

    def edges_between(self, c: int, d: int) -> List[Edge]:
        return [e for e in self.edges.values() if e.joins(c, d)]

    def boundary_ids(self) -> List[int]:
        return [c.id for c in self.components.values() if c.in_boundary]

    def weights(self, boundary_only: bool = True) -> List[int]:
        return sorted(c.weight for c in self.components.values()
                      if c.in_boundary or not boundary_only)

    def has_classes(self, ids: Optional[Iterable[int]] = None) -> bool:
        ids = self.components if ids is None else ids
        return all(self.components[i].picard_class is not None for i in ids)

    def next_component_id(self) -> int:
        return max(self.components, default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self.edges, default=-1) + 1

    # -- intersection numbers ---------------------------------------------
    def intersection(self, c: int, d: int) -> int:
        if c == d:
            return self.components[c].weight
        return sum(e.mult for e in self.edges.values() if e.joins(c, d))

    def canonical_dot(self, cid: int) -> int:
        """K.C by adjunction."""
        comp = self.components[cid]
        return 2 * comp.arithmetic_genus - 2 - comp.weight

    def canonical_class(self) -> Tuple[int, ...]:
        return (-3,) + (1,) * (self.picard_rank - 1)

    def gram(self, ids: Sequence[int]) -> List[List[int]]:
        return [[self.intersection(c, d) for d in ids] for c in ids]


def class_dot(u: Sequence, v: Sequence) -> Fraction:
    """Intersection form diag(+1, -1, ..., -1)."""
    if len(u) != len(v):
        raise ValueError("class vectors of different length")
    if not u:
        return Fraction(0)
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


@dataclass
class Divisor:
    """Rational combination of tracked curves, plus optional extra parts.

    ``canonical`` is the coefficient of K_V; ``extra_class`` is a class vector
    for anything not supported on tracked curves.
    """

    coefficients: Dict[int, Fraction] = field(default_factory=dict)
    canonical: Fraction = Fraction(0)
    extra_class: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        self.coefficients = {k: Fraction(v) for k, v in self.coefficients.items() if v != 0}
        self.canonical = Fraction(self.canonical)

    @classmethod
    def reduced(cls, ids: Iterable[int]) -> "Divisor":
        return cls({i: Fraction(1) for i in ids})

    def support(self) -> List[int]:
        return sorted(self.coefficients)

    def is_zero(self) -> bool:
        return (not self.coefficients and self.canonical == 0
                and not any(self.extra_class or ()))

    def __add__(self, other: "Divisor") -> "Divisor":
        coeffs = dict(self.coefficients)
        for k, v in other.coefficients.items():
            coeffs[k] = coeffs.get(k, 0) + v
        extra = _add_vec(self.extra_class, other.extra_class)
        return Divisor(coeffs, self.canonical + other.canonical, extra)

    def __neg__(self) -> "Divisor":
        return self.scale(-1)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def scale(self, q) -> "Divisor":
        q = Fraction(q)
        extra = None if self.extra_class is None else tuple(q * x for x in self.extra_class)
        return Divisor({k: q * v for k, v in self.coefficients.items()}, q * self.canonical, extra)


def _add_vec(u, v):
    if u is None:
        return v
    if v is None:
        return u
    if len(u) != len(v):
        raise ValueError("class vectors of different length")
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def canonical_divisor() -> Divisor:
    return Divisor(canonical=1)


# -- operations ------------------------------------------------------------

def boundary(pair: RealSNCPair) -> Divisor:
    return Divisor.reduced(pair.boundary_ids())


def real_boundary(pair: RealSNCPair) -> Divisor:
    """B_R: boundary components defined over R with infinite real locus."""
    return Divisor.reduced(c.id for c in pair.components.values()
                           if c.in_boundary and c.reality.kind == "real_infinite")


def detect_imaginary_loops(pair: RealSNCPair) -> List[Tuple[int, int]]:
    """Conjugate edge pairs joining two components of B_R."""
    real_b = set(real_boundary(pair).coefficients)
    loops = []
    for e in pair.edges.values():
        if e.conjugate is None or e.id > e.conjugate:
            continue
        if e.a != e.b and e.a in real_b and e.b in real_b:
            loops.append((e.id, e.conjugate))
    return loops


def is_snc(pair: RealSNCPair) -> bool:
    """Boundary components smooth and meeting transversally.

    Triple points cannot be expressed in the model, so this reduces to
    checking edge multiplicities and cusp markers on the boundary.
    """
    bnd = set(pair.boundary_ids())
    if any(pair[c].delta for c in bnd):
        return False
    for e in pair.edges.values():
        if e.a in bnd and e.b in bnd and (e.a == e.b or e.mult != 1):
            return False
    return True


def divisor_class(pair: RealSNCPair, D: Divisor) -> Tuple[Fraction, ...]:
    """Class of ``D`` in the Picard basis; needs classes on its support."""
    n = pair.picard_rank
    vec = [Fraction(0)] * n
    for cid, q in D.coefficients.items():
        cls = pair[cid].picard_class
        if cls is None:
            raise InsufficientData(f"no Picard class for {pair[cid].name}")
        for i, x in enumerate(cls):
            vec[i] += q * x
    if D.canonical:
        for i, x in enumerate(pair.canonical_class()):
            vec[i] += D.canonical * x
    if D.extra_class is not None:
        if len(D.extra_class) != n:
            raise ValueError("extra_class has wrong length")
        vec = [a + b for a, b in zip(vec, D.extra_class)]
    return tuple(vec)


def pairing(pair: RealSNCPair, D1: Divisor, D2: Divisor) -> Fraction:
    """Intersection number D1.D2.

    Curve and canonical parts use the dual graph, adjunction and K^2;
    ``extra_class`` parts fall back to Picard classes.
    """
    total = Fraction(0)
    for c, p in D1.coefficients.items():
        for d, q in D2.coefficients.items():
            total += p * q * pair.intersection(c, d)
        if D2.canonical:
            total += p * D2.canonical * pair.canonical_dot(c)
    if D1.canonical:
        for d, q in D2.coefficients.items():
            total += D1.canonical * q * pair.canonical_dot(d)
        if D2.canonical:
            if pair.k_self is None:
                raise InsufficientData("K^2 is not recorded")
            total += D1.canonical * D2.canonical * pair.k_self
    for X, Y in ((D1, D2), (D2, D1)):
        if X.extra_class is not None:
            rest = Divisor(Y.coefficients, Y.canonical)
            total += class_dot(X.extra_class, divisor_class(pair, rest))
    if D1.extra_class is not None and D2.extra_class is not None:
        total += class_dot(D1.extra_class, D2.extra_class)
    return total


def curve(cid: int) -> Divisor:
    return Divisor({cid: Fraction(1)})


def validate(pair: RealSNCPair) -> List[str]:
    """List every violated consistency condition; empty when valid."""
    out: List[str] = []
    comps = pair.components
    for cid, c in comps.items():
        if c.id != cid:
            out.append(f"component key {cid} does not match id {c.id}")
        if c.genus < 0 or c.delta < 0:
            out.append(f"{c.name}: negative genus or delta")
        r = c.reality
        if r.kind not in ("real_infinite", "real_finite", "conjugate"):
            out.append(f"{c.name}: unknown reality {r.kind!r}")
        if r.kind == "conjugate":
            if r.partner == cid:
                out.append(f"{c.name}: conjugate of itself")
            elif r.partner not in comps:
                out.append(f"{c.name}: conjugate partner {r.partner} missing")
            elif comps[r.partner].reality != conjugate_of(cid):
                out.append(f"{c.name}: conjugation is not an involution")
    if out:
        return out

    for eid, e in pair.edges.items():
        if e.id != eid:
            out.append(f"edge key {eid} does not match id {e.id}")
        if e.a not in comps or e.b not in comps:
            out.append(f"edge {eid}: unknown endpoint")
            continue
        if e.a == e.b:
            out.append(f"edge {eid}: self-intersection edge on {comps[e.a].name}")
        if e.mult < 1:
            out.append(f"edge {eid}: multiplicity {e.mult} < 1")
        if e.conjugate is not None:
            f = pair.edges.get(e.conjugate)
            if f is None or e.conjugate == eid or f.conjugate != eid:
                out.append(f"edge {eid}: conjugation on edges is not a fixpoint-free involution")
                continue
        else:
            f = e
        if not f.joins(pair.sigma(e.a), pair.sigma(e.b)) or f.mult != e.mult:
            out.append(f"edge {eid}: conjugate edge does not join conjugate components")
    if out:
        return out

    sig = pair.basis_sigma
    n = pair.picard_rank
    if sig is not None and sorted(sig) != list(range(n)):
        out.append("basis_sigma is not a permutation of the Picard basis")
        sig = None
    for c in comps.values():
        s = comps[pair.sigma(c.id)]
        if (s.weight, s.genus, s.delta, s.in_boundary) != (c.weight, c.genus, c.delta, c.in_boundary):
            out.append(f"{c.name}: data differs from its conjugate {s.name}")
        if s.reality.is_real and c.reality.kind != s.reality.kind:
            out.append(f"{c.name}: reality tag not conjugation invariant")
        cls = c.picard_class
        if cls is None:
            continue
        if len(cls) != n:
            out.append(f"{c.name}: class has length {len(cls)}, Picard rank is {n}")
            continue
        if class_dot(cls, cls) != c.weight:
            out.append(f"{c.name}: class squares to {class_dot(cls, cls)}, weight is {c.weight}")
        kc = class_dot(pair.canonical_class(), cls)
        if kc != pair.canonical_dot(c.id):
            out.append(f"{c.name}: adjunction fails (K.C={kc}, expected {pair.canonical_dot(c.id)})")
        if sig is not None and s.picard_class is not None:
            image = [0] * n
            for i, x in enumerate(cls):
                image[sig[i]] = x
            if tuple(image) != s.picard_class:
                out.append(f"{c.name}: class not carried to the class of {s.name} by conjugation")
    ids = [c for c in comps if comps[c].picard_class is not None]
    for i, c in enumerate(ids):
        for d in ids[i + 1:]:
            want = class_dot(comps[c].picard_class, comps[d].picard_class)
            have = pair.intersection(c, d)
            if have != want:
                out.append(f"{comps[c].name}.{comps[d].name}: edges give {have}, classes give {want}")
    if pair.provenance is not None and pair.provenance and pair.provenance[0].get("base") == "P2":
        centers = sum(2 if step.get("conjugate") else 1 for step in pair.provenance[1:])
        if pair.picard_rank != 1 + centers or pair.k_self != 9 - centers:
            out.append("picard_rank / k_self inconsistent with the blow-up history")
    return out


def conjugate_pair(pair: RealSNCPair) -> RealSNCPair:
    """Relabel every component and edge by its conjugate."""
    return relabel(pair, {c: pair.sigma(c) for c in pair.components},
                   {e: pair.sigma_edge(e) for e in pair.edges})


def relabel(pair: RealSNCPair, cmap: Mapping[int, int],
            emap: Optional[Mapping[int, int]] = None) -> RealSNCPair:
    """Rename component (and edge) ids; classes and names travel along."""
    emap = emap or {e: e for e in pair.edges}

    def rmap(r: Reality) -> Reality:
        return conjugate_of(cmap[r.partner]) if r.kind == "conjugate" else r

    comps = {cmap[c.id]: dataclasses.replace(c, id=cmap[c.id], reality=rmap(c.reality))
             for c in pair.components.values()}
    edges = {emap[e.id]: dataclasses.replace(
        e, id=emap[e.id], a=cmap[e.a], b=cmap[e.b],
        conjugate=None if e.conjugate is None else emap[e.conjugate])
        for e in pair.edges.values()}
    out = pair.copy()
    out.components = dict(sorted(comps.items()))
    out.edges = dict(sorted(edges.items()))
    return out


def signature(pair: RealSNCPair) -> tuple:
    """Hashable description of the decorated graph, ignoring ids."""
    comps = tuple(sorted((c.name, c.weight, c.genus, c.delta, c.in_boundary,
                          c.reality.kind if c.reality.is_real else "conjugate:" + pair[c.reality.partner].name,
                          c.picard_class) for c in pair.components.values()))
    edges = tuple(sorted((tuple(sorted((pair[e.a].name, pair[e.b].name))), e.mult, e.is_real)
                         for e in pair.edges.values()))
    return (pair.picard_rank, pair.k_self, comps, edges)


def boundary_is_connected(pair: RealSNCPair) -> bool:
    bnd = set(pair.boundary_ids())
    if not bnd:
        return True
    seen = {min(bnd)}
    stack = [min(bnd)]
    while stack:
        c = stack.pop()
        for e in pair.edges_at(c):
            d = e.other(c)
            if d in bnd and d not in seen:
                seen.add(d)
                stack.append(d)
    return seen == bnd


def boundary_is_tree(pair: RealSNCPair) -> bool:
    bnd = set(pair.boundary_ids())
    n_edges = sum(1 for e in pair.edges.values() if e.a in bnd and e.b in bnd)
    return boundary_is_connected(pair) and n_edges == max(len(bnd) - 1, 0)


def projective_plane(curves: Sequence[dict] = (), name: str = "P2") -> RealSNCPair:
    """P^2 with the given curves, each ``{"name", "degree", ...}``, no edges yet."""
    comps = {}
    for i, spec in enumerate(curves):
        d = spec["degree"]
        comps[i] = Component(
            id=i, name=spec["name"], weight=d * d, reality=spec.get("reality", REAL_INFINITE),
            in_boundary=spec.get("in_boundary", True), genus=spec.get("genus", 0),
            delta=spec.get("delta", (d - 1) * (d - 2) // 2 - spec.get("genus", 0)),
            picard_class=(d,))
    return RealSNCPair(comps, {}, picard_rank=1, k_self=9, name=name,
                       basis_sigma=(0,), provenance=[{"base": "P2"}])


__all__ = [
    "InsufficientData", "Reality", "REAL_INFINITE", "REAL_FINITE", "conjugate_of",
    "Component", "Edge", "RealSNCPair", "Divisor", "class_dot", "canonical_divisor",
    "boundary", "real_boundary", "detect_imaginary_loops", "is_snc", "divisor_class",
    "pairing", "curve", "validate", "conjugate_pair", "relabel", "signature",
    "boundary_is_connected", "boundary_is_tree", "projective_plane",
]

"""Random real pairs: lines and conics in general position, then blow-ups."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from realkod.birational import STRICT, TOTAL, Center, blow_up
from realkod.pair import (REAL_FINITE, REAL_INFINITE, Component, Edge, RealSNCPair,
                          conjugate_of, real_boundary)

KINDS = ("real_line", "real_conic", "empty_conic", "conj_lines", "conj_conics")


def random_plane_pair(rng: random.Random, max_items: int = 3) -> RealSNCPair:
    comps = {}
    for _ in range(rng.randint(1, max_items)):
        kind = rng.choice(KINDS)
        deg = 1 if "line" in kind else 2
        in_b = rng.random() < 0.7
        cid = len(comps)
        if kind.startswith("conj"):
            comps[cid] = Component(cid, f"P{cid}", deg * deg, conjugate_of(cid + 1), in_b,
                                   picard_class=(deg,))
            comps[cid + 1] = Component(cid + 1, f"P{cid}bar", deg * deg, conjugate_of(cid), in_b,
                                       picard_class=(deg,))
        else:
            reality = REAL_FINITE if kind == "empty_conic" else REAL_INFINITE
            comps[cid] = Component(cid, f"R{cid}", deg * deg, reality, in_b, picard_class=(deg,))

    def sigma(c):
        r = comps[c].reality
        return r.partner if r.kind == "conjugate" else c

    def degree(c):
        return comps[c].picard_class[0]

    edges = {}

    def add(a, b, conj=None):
        eid = len(edges)
        edges[eid] = Edge(eid, a, b, 1, conj)
        return eid

    done = set()
    for x, y in combinations(sorted(comps), 2):
        key = frozenset((x, y))
        image = frozenset((sigma(x), sigma(y)))
        if key in done:
            continue
        done |= {key, image}
        n = degree(x) * degree(y)
        if image == key:
            no_real = REAL_FINITE in (comps[x].reality, comps[y].reality)
            pairs = n // 2 if no_real else rng.randint(0, n // 2)
            for _ in range(pairs):
                e = add(x, y)
                f = add(x, y, e)
                edges[e] = Edge(e, x, y, 1, f)
            for _ in range(n - 2 * pairs):
                add(x, y)
        else:
            for _ in range(n):
                e = add(x, y)
                f = add(sigma(x), sigma(y), e)
                edges[e] = Edge(e, x, y, 1, f)
    return RealSNCPair(comps, edges, picard_rank=1, k_self=9, name="random",
                       basis_sigma=(0,), provenance=[{"base": "P2"}])


def random_center(rng: random.Random, pair: RealSNCPair, link: int = 0) -> Center:
    """A valid blow-up centre; ``link`` 2 or 3 restricts to that link type."""
    comps = pair.components
    real_b = set(real_boundary(pair).coefficients)
    options = []
    if link in (0, 3):
        options.append(Center(conjugate=True))
        options += [Center(through=((c, 1),), conjugate=True) for c in comps]
        for e in pair.edges.values():
            if e.conjugate is not None and e.id < e.conjugate:
                if link == 3 and e.a in real_b and e.b in real_b:
                    continue
                options.append(Center(through=((e.a, 1), (e.b, 1)), edges=(e.id,), conjugate=True))
    if link in (0, 2):
        if link == 0:
            options.append(Center())
        options += [Center(through=((c, 1),)) for c, comp in comps.items()
                    if comp.reality == REAL_INFINITE and (link == 0 or comp.in_boundary)]
        for e in pair.edges.values():
            if e.conjugate is None and (link == 0 or comps[e.a].in_boundary or comps[e.b].in_boundary):
                options.append(Center(through=((e.a, 1), (e.b, 1)), edges=(e.id,)))
    if not options:
        return None
    center = rng.choice(options)
    policy = TOTAL if link == 2 else STRICT if link == 3 else rng.choice((TOTAL, STRICT))
    return Center(center.through, center.edges, center.conjugate, policy)


def random_pair(rng: random.Random, max_items: int = 3, max_blowups: int = 4) -> RealSNCPair:
    pair = random_plane_pair(rng, max_items)
    for _ in range(rng.randint(0, max_blowups)):
        pair = blow_up(pair, random_center(rng, pair))
    return pair


@st.composite
def pairs(draw, max_items: int = 3, max_blowups: int = 4):
    rng = draw(st.randoms(use_true_random=False))
    return random_pair(rng, max_items, max_blowups)


@st.composite
def pairs_with_rng(draw, max_items: int = 3, max_blowups: int = 4):
    rng = draw(st.randoms(use_true_random=False))
    return random_pair(rng, max_items, max_blowups), rng


def random_graph(rng: random.Random, max_components: int = 6, lo: int = -4, hi: int = 1) -> RealSNCPair:
    """Weighted graph of real rational curves without Picard classes."""
    n = rng.randint(1, max_components)
    comps = {i: Component(i, f"V{i}", rng.randint(lo, hi), REAL_INFINITE, rng.random() < 0.8)
             for i in range(n)}
    edges = {}
    for a, b in combinations(range(n), 2):
        for _ in range(rng.choice((0, 0, 1, 1, 1, 2))):
            eid = len(edges)
            edges[eid] = Edge(eid, a, b, 1)
    return RealSNCPair(comps, edges, picard_rank=n + 1, k_self=rng.randint(-6, 9), name="graph")


@st.composite
def graphs(draw, max_components: int = 6):
    return random_graph(draw(st.randoms(use_true_random=False)), max_components)

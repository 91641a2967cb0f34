"""Builders for the example surfaces, each written as a blow-up script.

Every builder returns a validated :class:`RealSNCPair`; the matching
``*_script`` function returns the JSON script it replays.  Expected invariants
live in :data:`ENTRIES`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, List, Tuple

from .documents import run_script
from .pair import RealSNCPair


def _meet(curve: str, mult: int = 1, label: str = None, conjugate: str = None) -> dict:
    m = {"curve": curve, "mult": mult}
    if label:
        m["label"] = label
    if conjugate:
        m["conjugate"] = conjugate
    return m


def _op(through: Dict[str, int], edges=(), name=None, policy="total", conjugate=False,
        names=None) -> dict:
    return {"through": dict(through), "edges": [list(e) for e in edges],
            "conjugate": conjugate, "policy": policy,
            "names": list(names) if names else ([name] if name else [])}


# -- A^2 and the line-conic example ---------------------------------------------

def affine_plane_script() -> dict:
    return {"name": "affine_plane", "base": "P2", "curves": [{"name": "L", "degree": 1}], "ops": []}


def build_affine_plane() -> RealSNCPair:
    return run_script(affine_plane_script())


def line_conic_script() -> dict:
    """Line x=0 and conic x^2-y^2-z^2=0, meeting at [0:1:±i]."""
    return {"name": "line_conic", "base": "P2", "curves": [
        {"name": "L", "degree": 1, "meets": [
            _meet("C", 1, "q", conjugate="qbar"), _meet("C", 1, "qbar", conjugate="q")]},
        {"name": "C", "degree": 2}], "ops": []}


def build_line_conic() -> RealSNCPair:
    return run_script(line_conic_script())


# -- Y(3,3,3) ---------------------------------------------------------------

def y333_script() -> dict:
    lines = [f"l{i}" for i in range(4)]
    curves = []
    for i, li in enumerate(lines):
        meets = [_meet(lj, 1, f"p{i}{j}") for j, lj in enumerate(lines) if j > i]
        curves.append({"name": li, "degree": 1, "meets": meets})
    ops = [_op({"l1": 1, "l2": 1}, [["l1", "l2"]], "E12"),
           _op({"l2": 1, "l3": 1}, [["l2", "l3"]], "E23"),
           _op({"l1": 1, "l3": 1}, [["l1", "l3"]], "E13"),
           _op({"l1": 1, "E12": 1}, [["l1", "E12"]], "E1", policy="strict"),
           _op({"l2": 1, "E23": 1}, [["l2", "E23"]], "E2", policy="strict"),
           _op({"l3": 1, "E13": 1}, [["l3", "E13"]], "E3", policy="strict")]
    return {"name": "Y333", "base": "P2", "curves": curves, "ops": ops,
            "boundary": lines + ["E12", "E23", "E13"]}


def build_Y333() -> RealSNCPair:
    return run_script(y333_script())


# -- Ramanujam surface ------------------------------------------------------------

def _contact_chain(a: str, b: str, order: int, prefix: str, label: str = None,
                   start: int = 1) -> Tuple[List[dict], List[str]]:
    """Separate two smooth branches of ``a`` and ``b`` with contact ``order``.

    Each step blows up the common point of ``a``, ``b`` and the latest
    exceptional curve; the last exceptional curve is a (-1)-curve meeting
    ``a``, ``b`` and a chain of ``order - 1`` (-2)-curves.
    """
    ops, names = [], []
    prev = None
    ab = [a, b] + ([label] if label else [])
    for j in range(start, start + order):
        name = f"{prefix}{j}"
        through = {a: 1, b: 1}
        edges = [ab]
        if prev:
            through[prev] = 1
            edges += [[a, prev], [b, prev]]
        ops.append(_op(through, edges, name))
        names.append(name)
        prev = name
    return ops, names


def ramanujam_script() -> dict:
    """Cuspidal cubic with its osculating conic at a smooth real point."""
    curves = [{"name": "C", "degree": 3, "cusps": [[2, 1, 1]],
               "meets": [_meet("Q", 5, "q"), _meet("Q", 1, "p")]},
              {"name": "Q", "degree": 2}]
    ops = [_op({"C": 1, "Q": 1}, [["C", "Q", "p"]], "E", policy="strict"),
           _op({"C": 2}, (), "F1")]
    cusp_ops, cusp_names = _contact_chain("C", "F1", 2, "F", start=2)
    q_ops, q_names = _contact_chain("C", "Q", 5, "G", label="q")
    boundary = ["C", "Q", "F1"] + cusp_names + q_names
    return {"name": "ramanujam", "base": "P2", "curves": curves,
            "ops": ops + cusp_ops + q_ops, "boundary": boundary}


def build_ramanujam() -> RealSNCPair:
    return run_script(ramanujam_script())


# -- S(a, b) ----------------------------------------------------------------------

def _pencil_base_point(u: str, v: str, alpha: int, beta: int, label: str,
                       prefix: str, last: str) -> Tuple[List[dict], List[str], List[int]]:
    """Resolve the base point of the pencil u^alpha = t v^beta at a point.

    ``u`` and ``v`` are the curves {u=0} and {v=0}; the member ``C`` has
    multiplicity min(alpha, beta) at each infinitely near base point.
    Returns the blow-up ops, the exceptional names (last one renamed
    ``last``) and the multiplicity sequence of ``C``.
    """
    originals = {"C", "Lx", "Ly", "Lz"}

    def ref(x, y):
        return [x, y, label] if x in originals and y in originals else [x, y]

    ops, names, mults = [], [], []
    k = 0
    while True:
        k += 1
        m = min(alpha, beta)
        done = alpha == beta
        name = last if done else f"{prefix}{k}"
        ops.append(_op({"C": m, u: 1, v: 1}, [ref("C", u), ref("C", v), ref(u, v)], name))
        names.append(name)
        mults.append(m)
        if done:
            return ops, names, mults
        if alpha < beta:
            beta -= alpha
            v = name
        else:
            alpha -= beta
            u = name


def check_S_parameters(a: int, b: int) -> None:
    if not (1 < a < b and gcd(a, b) == 1 and a > b - a):
        raise ValueError(f"S(a,b) needs coprime 1 < a < b with a > b - a, got ({a}, {b})")


def S_script(a: int, b: int) -> dict:
    """Pencil [y^b : x^a z^(b-a)] resolved, blown up at p=[1:1:1] on C_{a,b}."""
    check_S_parameters(a, b)
    ops0, names0, seq0 = _pencil_base_point("Lx", "Ly", a, b, "q0", "A", "C0")
    opsi, namesi, seqi = _pencil_base_point("Lz", "Ly", b - a, b, "qinf", "B", "C1")
    curves = [
        {"name": "C", "degree": b, "cusps": [seq0, seqi], "meets": [
            _meet("Lx", b, "q0"), _meet("Ly", a, "q0"), _meet("Ly", b - a, "qinf"),
            _meet("Lz", b, "qinf")]},
        {"name": "Lx", "degree": 1, "in_boundary": False,
         "meets": [_meet("Ly", 1, "q0"), _meet("Lz", 1, "r")]},
        {"name": "Ly", "degree": 1, "in_boundary": False, "meets": [_meet("Lz", 1, "qinf")]},
        {"name": "Lz", "degree": 1},
    ]
    ops = ops0 + opsi + [_op({"C": 1}, (), "E", policy="strict")]
    return {"name": f"S({a},{b})", "base": "P2", "curves": curves, "ops": ops,
            "boundary": ["C", "Lz"] + names0 + namesi}


def build_S(a: int, b: int) -> RealSNCPair:
    return run_script(S_script(a, b))


# -- Miyanishi-Sugie surfaces -------------------------------------------------------

def MS_script(s: int) -> dict:
    """Curve C_s of degree s+1 with a cusp of multiplicity s, and the line L_s."""
    if s < 2:
        raise ValueError("S_s needs s >= 2")
    curves = [{"name": "C", "degree": s + 1, "cusps": [[s]],
               "meets": [_meet("L", s, "p"), _meet("L", 1, "q")]},
              {"name": "L", "degree": 1}]
    ops = [_op({"C": 1, "L": 1}, [["C", "L", "q"]], "E1")]
    for k in range(1, s + 2):
        last = k == s + 1
        ops.append(_op({"C": 1, f"E{k}": 1}, [["C", f"E{k}"]], f"E{k + 1}",
                       policy="strict" if last else "total"))
    ops.append(_op({"C": s}, (), "F"))
    g_ops, g_names = _contact_chain("C", "F", s, "G")
    h_ops, h_names = _contact_chain("C", "L", s, "H", label="p")
    boundary = ["C", "L", "F"] + [f"E{k}" for k in range(1, s + 2)] + g_names + h_names
    return {"name": f"MS({s})", "base": "P2", "curves": curves,
            "ops": ops + g_ops + h_ops, "boundary": boundary}


def build_MS(s: int) -> RealSNCPair:
    return run_script(MS_script(s))


# -- line arrangements -------------------------------------------------------------

def arrangement_script(r: int, p: int) -> dict:
    """``r`` real lines and ``p`` conjugate pairs of lines in general position."""
    if not (0 <= r <= 2 and p >= 0 and r + 2 * p >= 1):
        raise ValueError("arrangement needs 0 <= r <= 2, p >= 0, r + 2p >= 1")
    real = [f"R{i}" for i in range(1, r + 1)]
    pairs = [(f"P{k}", f"P{k}bar") for k in range(1, p + 1)]
    curves = {n: {"name": n, "degree": 1, "meets": []} for n in real}
    for a, b in pairs:
        curves[a] = {"name": a, "degree": 1, "meets": []}
        curves[b] = {"name": b, "degree": 1, "reality": {"conjugate": a}, "meets": []}
        curves[a]["reality"] = {"conjugate": b}
    bar = {a: b for a, b in pairs}
    bar.update({b: a for a, b in pairs})
    order = list(curves)
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            sx, sy = bar.get(x, x), bar.get(y, y)
            if {sx, sy} == {x, y}:
                curves[x]["meets"].append(_meet(y, 1, f"{x}.{y}"))
            else:
                a, b = sorted((sx, sy), key=order.index)
                curves[x]["meets"].append(_meet(y, 1, f"{x}.{y}", conjugate=f"{a}.{b}"))
    return {"name": f"arrangement({r},{p})", "base": "P2", "curves": list(curves.values()), "ops": []}


def build_arrangement(r: int, p: int) -> RealSNCPair:
    return run_script(arrangement_script(r, p))


# -- catalogue ----------------------------------------------------------------------

@dataclass
class GalleryEntry:
    name: str
    params: tuple
    script: Callable[..., dict]
    expected: dict = field(default_factory=dict)

    def build(self, *params) -> RealSNCPair:
        return run_script(self.script(*(params or self.params)))


def _arrangement_kappa(r: int, p: int) -> str:
    n = r + 2 * p
    return "-inf" if n < 3 else "0" if n == 3 else "2"


ENTRIES: Dict[str, GalleryEntry] = {e.name: e for e in [
    GalleryEntry("affine_plane", (), affine_plane_script,
                 {"kappa": "-inf", "kappa_real": "-inf", "torsion": [], "weights": [1]}),
    GalleryEntry("line_conic", (), line_conic_script,
                 {"kappa": "0", "kappa_real": "-inf", "weights": [1, 4]}),
    GalleryEntry("Y333", (), y333_script,
                 {"kappa": "0", "kappa_real": "0", "torsion": [9],
                  "weights": [-2, -2, -2, -2, -2, -2, 1]}),
    GalleryEntry("ramanujam", (), ramanujam_script,
                 {"kappa": "2", "kappa_real": "2", "torsion": [],
                  "weights": sorted([-3] * 2 + [-1] * 2 + [-2] * 6)}),
    GalleryEntry("S", (2, 3), S_script, {"kappa": "1", "kappa_real": "1", "torsion": []}),
    GalleryEntry("MS", (2,), MS_script,
                 {"kappa": "2", "kappa_real": "2", "torsion": [],
                  "weights": sorted([-3, -3, -2, -1, -1] + [-2] * 5)}),
    GalleryEntry("arrangement", (1, 2), arrangement_script,
                 {"kappa": "2", "kappa_real": "-inf", "torsion": []}),
]}


def MS_weights(s: int) -> List[int]:
    """Boundary weights of S_s read off its dual graph."""
    return sorted([-s - 1, -s - 1, -s, -1, -1] + [-2] * (2 * (s - 1) + s + 1))


def expected_for(name: str, params: tuple) -> dict:
    """Expected invariants of an entry at arbitrary parameters."""
    base = dict(ENTRIES[name].expected)
    if name == "MS":
        base["weights"] = MS_weights(params[0])
    elif name == "arrangement":
        base["kappa"] = _arrangement_kappa(*params)
        base["weights"] = [1] * (params[0] + 2 * params[1])
    if "weights" in base:
        base["boundary_component_count"] = len(base["weights"])
    return base

"""Homology of the complexified complement from Picard lattice data.

For ``S = V \\ B`` with ``V`` a rational surface, ``H_1(S_C; Z)`` is the
cokernel of the map ``Z^{#B} -> Pic V`` sending each boundary component to its
class, and ``S_C`` is Q-acyclic exactly when that map is an isomorphism over Q.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import List, Optional

from . import lattice
from .kodaira import kappa, kappa_real
from .pair import RealSNCPair, boundary_is_connected, boundary_is_tree


@dataclass
class HomologyReport:
    boundary_component_count: int
    picard_rank: int
    class_matrix_rank: Optional[int] = None
    torsion_invariants: List[int] = field(default_factory=list)
    q_acyclic: Optional[bool] = None
    z_acyclic: Optional[bool] = None
    boundary_connected: bool = False
    # det of the boundary intersection matrix; equals det(classes)^2 when square
    gram_determinant: Optional[int] = None
    determinate: bool = True

    def as_dict(self) -> dict:
        return asdict(self)


def class_matrix(pair: RealSNCPair) -> List[List[int]]:
    """Picard rank x #B matrix whose columns are the boundary classes."""
    cols = [pair[c].picard_class for c in pair.boundary_ids()]
    return [[col[i] for col in cols] for i in range(pair.picard_rank)]


def homology_report(pair: RealSNCPair) -> HomologyReport:
    bnd = pair.boundary_ids()
    rep = HomologyReport(len(bnd), pair.picard_rank,
                         boundary_connected=boundary_is_connected(pair),
                         gram_determinant=lattice.determinant(pair.gram(bnd)))
    if not pair.has_classes(bnd):
        rep.determinate = False
        return rep
    M = class_matrix(pair)
    factors = lattice.smith_normal_form(M).factors if bnd else []
    rep.class_matrix_rank = sum(1 for f in factors if f != 0)
    rep.torsion_invariants = [f for f in factors if f > 1]
    rep.q_acyclic = rep.class_matrix_rank == pair.picard_rank == len(bnd)
    rep.z_acyclic = rep.q_acyclic and not rep.torsion_invariants
    return rep


def fake_plane_checklist(pair: RealSNCPair) -> dict:
    """Homological and boundary-shape conditions for a fake real plane.

    Whether the real locus is diffeomorphic to R^2 is not decided here.
    """
    rep = homology_report(pair)
    bnd = pair.boundary_ids()
    real_rational = all(
        pair[c].reality.kind == "real_infinite" and pair[c].genus == 0 and pair[c].delta == 0
        for c in bnd)
    real_points = all(e.is_real and e.mult == 1 for e in pair.edges.values()
                      if e.a in bnd and e.b in bnd)
    tree = boundary_is_tree(pair) and real_rational and real_points
    k, kr = kappa(pair), kappa_real(pair)
    return {
        "q_acyclic": bool(rep.q_acyclic),
        "z_acyclic": bool(rep.z_acyclic),
        "torsion": rep.torsion_invariants,
        "boundary_tree_of_real_lines": tree,
        "kappa": k.as_dict(),
        "kappa_real": kr.as_dict(),
        "real_locus_is_plane": "not verified",
        "passes": bool(rep.q_acyclic) and tree,
    }

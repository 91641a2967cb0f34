from math import prod

import sympy
from hypothesis import given, settings
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from randompairs import pairs
from realkod import gallery
from realkod.homology import class_matrix, fake_plane_checklist, homology_report
from realkod.lattice import determinant, smith_normal_form
from realkod.pair import conjugate_pair, relabel


def test_affine_plane():
    r = homology_report(gallery.build_affine_plane())
    assert class_matrix(gallery.build_affine_plane()) == [[1]]
    assert r.torsion_invariants == [] and r.q_acyclic and r.z_acyclic


def test_y333_has_z9():
    r = homology_report(gallery.build_Y333())
    assert r.torsion_invariants == [9]
    assert r.q_acyclic and not r.z_acyclic
    assert abs(r.gram_determinant) == 81


def test_y333_gram_discriminant_differs_from_h1():
    # Gram = M^T J M, so |det Gram| = det(M)^2 while the torsion of coker M is Z/9
    p = gallery.build_Y333()
    gram_factors = smith_normal_form(p.gram(p.boundary_ids())).factors
    assert prod(gram_factors) == 81
    assert prod(smith_normal_form(class_matrix(p)).factors) == 9


def test_ramanujam_is_z_acyclic():
    p = gallery.build_ramanujam()
    r = homology_report(p)
    assert r.torsion_invariants == [] and r.z_acyclic
    M = sympy.Matrix(class_matrix(p))
    assert [int(sympy_snf(M)[i, i]) for i in range(10)] == [1] * 10


def test_arrangement_rank_deficit():
    for r, p in ((0, 2), (2, 1), (1, 2), (2, 3)):
        rep = homology_report(gallery.build_arrangement(r, p))
        assert rep.class_matrix_rank == 1 < rep.boundary_component_count
        assert not rep.q_acyclic and not rep.z_acyclic
        assert not fake_plane_checklist(gallery.build_arrangement(r, p))["passes"]


def test_missing_classes_make_the_report_indeterminate():
    p = gallery.build_Y333()
    for cid, c in list(p.components.items()):
        p.components[cid] = c.__class__(**{**c.__dict__, "picard_class": None})
    r = homology_report(p)
    assert not r.determinate and r.q_acyclic is None
    assert abs(r.gram_determinant) == 81


def test_checklists():
    y = fake_plane_checklist(gallery.build_Y333())
    assert y["passes"] and y["q_acyclic"] and y["kappa_real"]["value"] == "0"
    assert y["real_locus_is_plane"] == "not verified"
    s = fake_plane_checklist(gallery.build_S(2, 3))
    assert s["passes"] and s["kappa_real"]["value"] == "1"
    assert s["boundary_tree_of_real_lines"]


@settings(max_examples=300, deadline=None)
@given(pairs())
def test_report_invariants(p):
    r = homology_report(p)
    assert r.q_acyclic == (r.class_matrix_rank == r.picard_rank == r.boundary_component_count)
    if r.z_acyclic:
        assert r.q_acyclic and not r.torsion_invariants
    if r.q_acyclic:
        det = determinant(class_matrix(p))
        assert prod(r.torsion_invariants) == abs(det)
        assert abs(r.gram_determinant) == det * det
    for q in (conjugate_pair(p), relabel(p, {c: 50 + c for c in p.components})):
        assert homology_report(q) == r

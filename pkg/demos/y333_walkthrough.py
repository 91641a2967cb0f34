"""Build Y(3,3,3) from its blow-up script and read off its invariants."""

from realkod import gallery
from realkod.homology import class_matrix, homology_report
from realkod.kodaira import kappa, kappa_real
from realkod.lattice import smith_normal_form

p = gallery.build_Y333()
print("boundary components:")
for cid in p.boundary_ids():
    c = p[cid]
    print(f"  {c.name:5s} weight {c.weight:3d}  class {list(c.picard_class)}")

M = class_matrix(p)
snf = smith_normal_form(M)
print("Smith factors of the class matrix:", snf.factors)

h = homology_report(p)
print("H1 torsion:", h.torsion_invariants, " Q-acyclic:", h.q_acyclic, " Z-acyclic:", h.z_acyclic)
print("|det Gram| =", abs(h.gram_determinant), "(the square of det M, not the torsion order)")

print("kappa      :", kappa(p).value, kappa(p).certification.value)
print("kappa_real :", kappa_real(p).value, kappa_real(p).certification.value)

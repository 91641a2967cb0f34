"""Zariski decomposition of K + D on the surfaces S(a, b).

The positive part has square zero but is not numerically trivial, which is
what kappa = 1 looks like from the lattice side.
"""

import sys

from realkod import gallery
from realkod.kodaira import kappa, kappa_real, zariski_decompose
from realkod.pair import boundary, canonical_divisor

pairs = [(2, 3), (3, 4), (3, 5)]
if len(sys.argv) == 3:
    pairs = [(int(sys.argv[1]), int(sys.argv[2]))]

for a, b in pairs:
    p = gallery.build_S(a, b)
    z = zariski_decompose(p, canonical_divisor() + boundary(p))
    print(f"S({a},{b}): {len(p.boundary_ids())} boundary curves")
    neg = {p[c].name: str(x) for c, x in z.negative_part.coefficients.items()}
    print("  N =", neg)
    print("  P^2 =", z.p_squared, " P zero class:", z.p_is_zero_class)
    dots = {p[c].name: str(x) for c, x in z.p_dot.items() if x}
    print("  nonzero P.C:", dots)
    print("  kappa", kappa(p).value, " kappa_real", kappa_real(p).value)

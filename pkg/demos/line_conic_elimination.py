"""A real line meeting a real conic at two conjugate points.

The real boundary misses the two non-real intersection points, so the raw
classification on B_R sees a loop that does not exist over the reals.
Blowing up the conjugate pair and dropping the exceptional curves breaks it.
"""

from realkod import gallery
from realkod.birational import eliminate_imaginary_loops
from realkod.kodaira import classify_real_boundary, kappa, kappa_real
from realkod.pair import detect_imaginary_loops

p = gallery.build_line_conic()
loops = detect_imaginary_loops(p)
print("imaginary loops:", [(p[a].name, p[b].name) for a, b in loops])
print("raw classification on B_R:", classify_real_boundary(p).value)

q, report = eliminate_imaginary_loops(p)
print("after elimination, loops left:", len(detect_imaginary_loops(q)))
print("kappa before/after:", kappa(p).value, kappa(q).value)
r = kappa_real(p)
print("kappa_real:", r.value, r.certification.value, "-", r.witness)

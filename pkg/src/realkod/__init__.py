"""Real and logarithmic Kodaira dimensions of real SNC surface pairs."""

from .birational import (STRICT, TOTAL, BlowUpError, Center, EliminationReport, apply_link,
                         blow_up, conjugate_pair_of, eliminate_imaginary_loops, free_real,
                         on_component, on_edge)
from .homology import HomologyReport, fake_plane_checklist, homology_report
from .kodaira import (Certification, Kappa, KodairaResult, PeelingObstruction, ZariskiResult,
                      classify, classify_real_boundary, kappa, kappa_real, zariski_decompose)
from .pair import (REAL_FINITE, REAL_INFINITE, Component, Divisor, Edge, RealSNCPair, Reality,
                   boundary, conjugate_of, detect_imaginary_loops, is_snc, pairing,
                   real_boundary, validate)

__version__ = "0.1.0"

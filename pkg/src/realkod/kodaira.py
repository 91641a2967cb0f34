"""Zariski decomposition against tracked curves and the Kodaira dimension.

The Iitaka dimension of ``K + D`` is read off the positive part ``P`` of its
Zariski decomposition: 2 if ``P^2 > 0``, 1 if ``P^2 = 0`` but ``P`` is not
numerically trivial, 0 if ``P`` is trivial, and ``-inf`` when ``K + D`` is not
pseudo-effective.  Only tracked curves take part, so every answer carries a
certification level saying whether it depends on that restriction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Dict, List, Optional

from . import lattice
from .pair import (Divisor, InsufficientData, RealSNCPair, boundary, canonical_divisor,
                   class_dot, curve, detect_imaginary_loops, divisor_class, pairing,
                   real_boundary)


class Kappa(IntEnum):
    NEG_INF = -1
    ZERO = 0
    ONE = 1
    TWO = 2

    def __str__(self):
        return "-inf" if self is Kappa.NEG_INF else str(int(self))

    @classmethod
    def parse(cls, text) -> "Kappa":
        return cls.NEG_INF if str(text) in ("-inf", "-oo", "-infinity") else cls(int(text))


class Certification(str, Enum):
    CERTIFIED = "Certified"
    CONDITIONAL = "ConditionalOnTrackedCurves"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


_RANK = {Certification.CERTIFIED: 2, Certification.CONDITIONAL: 1, Certification.UNKNOWN: 0}


def at_least_as_good(a: Certification, b: Certification) -> bool:
    return _RANK[a] >= _RANK[b]


class PeelingObstruction(Exception):
    def __init__(self, curve_name: str, reason: str):
        super().__init__(f"{reason} (at {curve_name})")
        self.curve_name = curve_name
        self.reason = reason


@dataclass
class ZariskiResult:
    negative_part: Divisor
    positive_part: Divisor
    p_squared: Fraction
    p_dot: Dict[int, Fraction]
    p_is_zero_class: Optional[bool]
    support_matrix_negative_definite: bool = True

    def as_dict(self, pair: RealSNCPair) -> dict:
        return {
            "negative_part": {pair[c].name: str(q) for c, q in sorted(self.negative_part.coefficients.items())},
            "p_squared": str(self.p_squared),
            "p_dot": {pair[c].name: str(q) for c, q in sorted(self.p_dot.items())},
            "p_is_zero_class": self.p_is_zero_class,
            "support_matrix_negative_definite": self.support_matrix_negative_definite,
        }


@dataclass
class KodairaResult:
    value: Kappa
    certification: Certification
    witness: str = ""
    zariski: Optional[ZariskiResult] = field(default=None, repr=False)

    def as_dict(self) -> dict:
        return {"value": str(self.value), "certification": str(self.certification),
                "witness": self.witness}


def _class_or_none(pair: RealSNCPair, D: Divisor):
    try:
        return divisor_class(pair, D)
    except InsufficientData:
        return None


def zariski_decompose(pair: RealSNCPair, D: Divisor) -> ZariskiResult:
    """Zariski decomposition ``D = P + N`` relative to the tracked curves.

    Grows the support of ``N`` by the curves meeting ``D - N`` negatively and
    re-solves ``N`` on that support until ``D - N`` is nef on every tracked
    curve.  Raises :class:`PeelingObstruction` when a support fails to be
    negative definite, which can only happen if ``D`` is not pseudo-effective.
    """
    tracked = sorted(pair.components)
    d_dot = {c: pairing(pair, D, curve(c)) for c in tracked}
    support: List[int] = []
    N = Divisor()
    while True:
        n_dot = {c: pairing(pair, N, curve(c)) for c in tracked}
        bad = [c for c in tracked if d_dot[c] - n_dot[c] < 0]
        if not bad:
            break
        support = sorted(set(support) | set(bad))
        gram = pair.gram(support)
        if not lattice.is_negative_definite(gram):
            raise PeelingObstruction(pair[bad[0]].name, "support of the negative part is not negative definite")
        x = lattice.solve_rational(gram, [d_dot[c] for c in support])
        if any(q < 0 for q in x):
            worst = support[min(range(len(x)), key=lambda i: x[i])]
            raise PeelingObstruction(pair[worst].name, "negative coefficient in the negative part")
        N = Divisor(dict(zip(support, x)))
    P = D - N
    p_dot = {c: d_dot[c] - pairing(pair, N, curve(c)) for c in tracked}
    cls = _class_or_none(pair, P) if pair.has_classes() else None
    return ZariskiResult(
        negative_part=N, positive_part=P, p_squared=pairing(pair, P, P), p_dot=p_dot,
        p_is_zero_class=None if cls is None else not any(cls))


def _h_dot(pair: RealSNCPair, D: Divisor) -> Optional[Fraction]:
    """Pairing with the pulled-back line class, a nef class; None without classes."""
    if not pair.has_classes():
        return None
    cls = _class_or_none(pair, D)
    if cls is None:
        return None
    return cls[0]


def _chronological(pair: RealSNCPair) -> bool:
    """Picard coordinates follow the blow-up order (pairs built from P^2 here)."""
    prov = pair.provenance
    return bool(prov) and prov[0].get("base") == "P2"


def _earlier_nef_classes(pair: RealSNCPair):
    """Nef classes pulled back from the intermediate surfaces of the blow-up history.

    With chronological coordinates, the class of a curve on the surface
    before the k-th blow-up is its current class truncated to the first k
    coordinates.  An irreducible curve of non-negative square is nef there,
    and pullbacks of nef classes stay nef.
    """
    for cid, comp in sorted(pair.components.items()):
        cls = comp.picard_class
        for k in range(1, pair.picard_rank):
            earlier = tuple(cls[:k]) + (0,) * (pair.picard_rank - k)
            if any(earlier) and class_dot(earlier, earlier) >= 0:
                yield comp.name, k, earlier


def classify(pair: RealSNCPair, D: Divisor) -> KodairaResult:
    """Kodaira dimension of ``K_V + D``."""
    L = canonical_divisor() + D
    C, NC, UNK = Certification.CERTIFIED, Certification.CONDITIONAL, Certification.UNKNOWN

    for cid, comp in sorted(pair.components.items()):
        if comp.weight >= 0:
            v = pairing(pair, L, curve(cid))
            if v < 0:
                return KodairaResult(Kappa.NEG_INF, C,
                                     f"{comp.name}: C^2={comp.weight} >= 0 and (K+D).C={v} < 0")
    h = _h_dot(pair, L)
    if h is not None and h < 0:
        return KodairaResult(Kappa.NEG_INF, C, f"nef class H: (K+D).H={h} < 0")
    if h is not None and _chronological(pair):
        cls = divisor_class(pair, L)
        for name, k, nef in _earlier_nef_classes(pair):
            v = class_dot(cls, nef)
            if v < 0:
                return KodairaResult(Kappa.NEG_INF, C,
                                     f"pullback of {name} from the model of Picard rank {k}: "
                                     f"nef, (K+D).C={v} < 0")
    if h is not None and not any(divisor_class(pair, L)):
        return KodairaResult(Kappa.ZERO, C, "K+D = 0 in Pic")

    try:
        z = zariski_decompose(pair, D + canonical_divisor())
    except PeelingObstruction as exc:
        return KodairaResult(Kappa.NEG_INF, NC, f"peeling obstruction: {exc}")
    p2 = z.p_squared
    P = z.positive_part
    ph = _h_dot(pair, P)
    if p2 < 0:
        return KodairaResult(Kappa.NEG_INF, NC, f"P^2={p2} < 0", z)
    if p2 > 0:
        if ph is not None:
            if ph > 0:
                return KodairaResult(Kappa.TWO, NC, f"P^2={p2} > 0", z)
            return KodairaResult(Kappa.NEG_INF, NC, f"P^2={p2} but P.H={ph} <= 0", z)
        for cid, comp in sorted(pair.components.items()):
            if comp.weight >= 0 and z.p_dot[cid] > 0:
                return KodairaResult(Kappa.TWO, NC, f"P^2={p2} > 0, P.{comp.name} > 0", z)
        return KodairaResult(Kappa.TWO, UNK, f"P^2={p2} > 0 but the sign of P is undetermined", z)
    if z.p_is_zero_class is not None:
        if z.p_is_zero_class:
            return KodairaResult(Kappa.ZERO, C, "P = 0 in Pic", z)
        if ph is not None and ph < 0:
            return KodairaResult(Kappa.NEG_INF, NC, f"P^2=0 and P.H={ph} < 0", z)
        return KodairaResult(Kappa.ONE, NC, "P^2=0, P != 0 in Pic", z)
    nonzero = [pair[c].name for c, v in sorted(z.p_dot.items()) if v != 0]
    if nonzero:
        return KodairaResult(Kappa.ONE, NC, f"P^2=0, P.{nonzero[0]} != 0", z)
    return KodairaResult(Kappa.ZERO, UNK, "P^2=0 and P is orthogonal to every tracked curve", z)


def kappa(pair: RealSNCPair) -> KodairaResult:
    """Logarithmic Kodaira dimension of ``V \\ B``."""
    return classify(pair, boundary(pair))


def classify_real_boundary(pair: RealSNCPair) -> KodairaResult:
    """κ(V, K + B_R) on the pair as given, without removing imaginary loops."""
    return classify(pair, real_boundary(pair))


def kappa_real(pair: RealSNCPair) -> KodairaResult:
    """Real Kodaira dimension; imaginary loops are eliminated first."""
    if detect_imaginary_loops(pair):
        from .birational import eliminate_imaginary_loops
        pair, _ = eliminate_imaginary_loops(pair, report=False)
    return classify_real_boundary(pair)

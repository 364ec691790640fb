"""Round curves around consecutive punctures and their tracking.

A standard curve encloses the punctures ``lo..hi``. Braids act from the right:
a curve is pushed through ``Delta^inf`` first and then through the canonical
factors in order. A simple braid sends a standard curve to a standard curve
exactly when the image of its puncture block is again a block.
"""

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .braid import Braid, is_rigid
from .simple import SimpleBraid


@dataclass(frozen=True, order=True)
class StandardCurve:
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo < self.hi:
            raise ValueError(f"invalid standard curve {{{self.lo}..{self.hi}}}")

    @property
    def diameter(self) -> int:
        return self.hi - self.lo

    @property
    def punctures(self) -> range:
        return range(self.lo, self.hi + 1)

    def mirror(self, n: int) -> "StandardCurve":
        return StandardCurve(n + 1 - self.hi, n + 1 - self.lo)

    def __str__(self) -> str:
        return f"{{{self.lo}..{self.hi}}}"


class PeriodicCurve(NamedTuple):
    curve: StandardCurve
    orbit: Tuple[StandardCurve, ...]
    compatible: bool


def all_standard_curves(n: int) -> List[StandardCurve]:
    """Curves with diameter ``1..n-2`` (a curve around every puncture is excluded)."""
    return [
        StandardCurve(lo, hi)
        for lo in range(1, n + 1)
        for hi in range(lo + 1, n + 1)
        if hi - lo <= n - 2
    ]


def curve_image_simple(s: SimpleBraid, curve: StandardCurve) -> Optional[StandardCurve]:
    """Image of ``curve`` under ``s``, or ``None`` if it is not standard."""
    if curve.hi > s.n:
        raise ValueError(f"curve {curve} does not fit {s.n} strands")
    image = [s.pi[i - 1] for i in curve.punctures]
    lo, hi = min(image), max(image)
    if hi - lo != curve.diameter:
        return None
    return StandardCurve(lo, hi)


def track_curve(x: Braid, curve: StandardCurve) -> Optional[StandardCurve]:
    """Push ``curve`` through ``x`` keeping every intermediate image standard."""
    current: Optional[StandardCurve] = curve
    if x.inf % 2:
        current = curve.mirror(x.n)
    for f in x.factors:
        current = curve_image_simple(f, current)
        if current is None:
            return None
    return current


def _compatible(orbit: Tuple[StandardCurve, ...]) -> bool:
    for i, a in enumerate(orbit):
        for b in orbit[i + 1 :]:
            disjoint = a.hi < b.lo or b.hi < a.lo
            nested = (a.lo <= b.lo and b.hi <= a.hi) or (b.lo <= a.lo and a.hi <= b.hi)
            if not (disjoint or nested):
                return False
    return True


def find_standard_reduction(x: Braid) -> List[PeriodicCurve]:
    """Periodic standard curves of ``x`` with their orbits.

    An empty list means ``x`` has no standard reduction system.
    """
    images: Dict[StandardCurve, Optional[StandardCurve]] = {
        c: track_curve(x, c) for c in all_standard_curves(x.n)
    }
    result = []
    for curve in sorted(images):
        orbit = [curve]
        current = images[curve]
        while current is not None and current != curve and len(orbit) <= len(images):
            orbit.append(current)
            current = images[current]
        if current == curve:
            ordered = tuple(orbit)
            result.append(PeriodicCurve(curve, ordered, _compatible(ordered)))
    return result


def pseudo_anosov_evidence(x: Braid) -> Tuple[bool, bool]:
    """``(rigid, reduction free)``; both true is the family's certificate route."""
    return is_rigid(x), not find_standard_reduction(x)

"""Hand-built divide states used as starting points for exploration."""

from __future__ import annotations

from dataclasses import dataclass

from ..model import BoundaryCircle, BoundaryPattern, Matching, Pattern, Side, Surface
from .state import Curve, Cusp, DivideState, Face, arc_id, attach_faces, composite_cycles

P, M = Side.PLUS, Side.MINUS


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    state: DivideState
    description: str


def _loop(lid):
    return (("loop", lid),)


def _comp(pattern, side):
    (cyc,) = composite_cycles(pattern, side)
    return cyc


def _arcs(pattern, cusps=None):
    cusps = cusps or {}
    out = []
    for x, y in pattern.phi.sorted_pairs():
        ends = (x, y) if pattern.boundary.iota(x) > 0 else (y, x)
        out.append(Curve(arc_id(x, y), "arc", ends, tuple(cusps.get(arc_id(x, y), ()))))
    return out


def disk_immersion(winding: int) -> DivideState:
    """Disk whose boundary is an immersed circle of the given turning number (plus collar)."""
    surface = Surface(True, 0, ("C1",))
    circle = BoundaryCircle("C1", (), {}, True, winding, -winding)
    pattern = Pattern(surface, BoundaryPattern((circle,)), Matching())
    if winding == 1:
        faces = [Face("F0", P, 0, ((("circle", "C1"),), _loop("L0"))),
                 Face("F1", M, 0, (_loop("L0"), _loop("L1"))),
                 Face("F2", P, 0, (_loop("L1"),))]
        curves = [Curve("L0", "loop"), Curve("L1", "loop")]
    elif winding == -1:
        faces = [Face("F0", P, 0, ((("circle", "C1"),), _loop("L0"))),
                 Face("F1", M, 0, (_loop("L0"),))]
        curves = [Curve("L0", "loop")]
    else:
        raise ValueError("only turning numbers +1 and -1 are catalogued")
    return attach_faces(pattern, faces, curves)


def annulus_arc(cusp: bool = False) -> DivideState:
    """Annulus with one arc on the outer circle and an immersed inner circle."""
    w2 = 2 if cusp else 1
    c1 = BoundaryCircle("C1", (1, 2), {1: 1, 2: -1}, True, 0, 0)
    c2 = BoundaryCircle("C2", (), {}, True, w2, -w2)
    pattern = Pattern(Surface(True, 0, ("C1", "C2")), BoundaryPattern((c1, c2)), Matching.of([(1, 2)]))
    cusps = {arc_id(1, 2): [Cusp("k0", P)]} if cusp else {}
    faces = [Face("F0", P, 0, (_comp(pattern, P),)),
             Face("F1", P, 0, ((("circle", "C2"),), _loop("L0"))),
             Face("F2", M, 0, (_comp(pattern, M), _loop("L0")))]
    return attach_faces(pattern, faces, _arcs(pattern, cusps) + [Curve("L0", "loop")])


def genus_one_arcs() -> DivideState:
    """Once-punctured torus with three pairwise crossing arcs and no loops."""
    pts = (1, 2, 3, 4, 5, 6)
    iota = {1: 1, 2: 1, 3: 1, 4: -1, 5: -1, 6: -1}
    c1 = BoundaryCircle("C1", pts, iota, True, 0, 0)
    pattern = Pattern(Surface(True, 1, ("C1",)), BoundaryPattern((c1,)),
                      Matching.of([(1, 4), (2, 5), (3, 6)]))
    faces = [Face("F0", P, 0, (_comp(pattern, P),)), Face("F1", M, 0, (_comp(pattern, M),))]
    return attach_faces(pattern, faces, _arcs(pattern))


def pants_mixed() -> DivideState:
    """Pair of pants: two arcs between two circles, the third circle immersive with minus collar."""
    c1 = BoundaryCircle("C1", (1, 2), {1: 1, 2: 1}, True, 1, -1)
    c2 = BoundaryCircle("C2", (3, 4), {3: -1, 4: -1}, True, 0, 0)
    c3 = BoundaryCircle("C3", (), {}, False, 0, 0)
    pattern = Pattern(Surface(True, 0, ("C1", "C2", "C3")), BoundaryPattern((c1, c2, c3)),
                      Matching.of([(1, 3), (2, 4)]))
    faces = [Face("F0", P, 0, (_comp(pattern, P),)),
             Face("F1", M, 0, (_comp(pattern, M), (("circle", "C3"),)))]
    return attach_faces(pattern, faces, _arcs(pattern))


def disk_arc_cusp() -> DivideState:
    """Disk with one arc carrying a single cusp."""
    c1 = BoundaryCircle("C1", (1, 2), {1: 1, 2: -1}, True, 1, -1)
    pattern = Pattern(Surface(True, 0, ("C1",)), BoundaryPattern((c1,)), Matching.of([(1, 2)]))
    faces = [Face("F0", P, 0, (_comp(pattern, P),)), Face("F1", M, 0, (_comp(pattern, M),))]
    return attach_faces(pattern, faces, _arcs(pattern, {arc_id(1, 2): [Cusp("k0", P)]}))


def catalog() -> list:
    return [
        CatalogEntry("disk-pi-w1", disk_immersion(1), "disk, immersed boundary, turning number 1"),
        CatalogEntry("disk-pi-w-1", disk_immersion(-1), "disk, immersed boundary, turning number -1"),
        CatalogEntry("annulus-arc", annulus_arc(), "annulus, one arc, immersed inner circle"),
        CatalogEntry("genus1-arcs", genus_one_arcs(), "punctured torus, three crossing arcs"),
        CatalogEntry("pants-mixed", pants_mixed(), "pair of pants, two arcs, one immersive circle"),
        CatalogEntry("disk-arc-cusp", disk_arc_cusp(), "disk, one arc with one cusp"),
        CatalogEntry("annulus-cusp", annulus_arc(cusp=True), "annulus, one arc with one cusp"),
    ]


def entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)

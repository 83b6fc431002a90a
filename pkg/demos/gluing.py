"""
Gluing cobordism patterns
=========================

Compose two patterns along a shared circle.  Arcs that run back and forth
across the interface close up into loops.
"""

from foldpat import (BoundaryCircle, BoundaryPattern, CobordismPattern, InterfaceMap, Matching,
                     Pattern, Surface, glue)


def ring(cid, pts):
    return BoundaryCircle(cid, pts, {p: (1 if i % 2 == 0 else -1) for i, p in enumerate(pts)}, True, 0, 0)


def cobordism(inc, out, phi, genus=0):
    circles = (inc, out)
    surface = Surface(True, genus, (inc.id, out.id))
    return CobordismPattern(Pattern(surface, BoundaryPattern(circles), Matching.of(phi)), (inc.id,), (out.id,))


# a "cup" and a "cap": each turns its two points on the shared circle back
cup = cobordism(ring("A", ("a1", "a2")), ring("N", ("x1", "x2")), [("a1", "a2"), ("x1", "x2")])
cap = cobordism(ring("N2", ("y1", "y2")), ring("B", ("b1", "b2")), [("y1", "y2"), ("b1", "b2")], genus=1)

# the point map reverses cyclic order so that band colors line up
interface = InterfaceMap({"N": "N2"}, {"x1": "y2", "x2": "y1"})
res = glue(cup, cap, interface)
print("closed loops created:", res.closed_loops_created)
print("glued surface:", res.glued.pattern.surface)
print("remaining arcs:", res.glued.pattern.phi.sorted_pairs())

# straight-through strands compose without creating loops
through = cobordism(ring("A", ("a1", "a2")), ring("N", ("x1", "x2")), [("a1", "x1"), ("a2", "x2")])
res = glue(through, cap, interface)
print("\nthrough + cap: loops", res.closed_loops_created, "arcs", res.glued.pattern.phi.sorted_pairs())

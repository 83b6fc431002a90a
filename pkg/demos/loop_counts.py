"""
Loop counts from boundary data
==============================

Build a few singular patterns, look at their turning data and the set of
loop counts that cusp-free realizations can have.
"""

from foldpat import (BoundaryCircle, BoundaryPattern, Matching, Pattern, Side, Surface,
                     delta2, gamma, loop_set_no_cusps, pseudo_immersion_loop_set, realizable)

# an annulus: one pair of fold points on the outer circle, joined by an arc,
# and an immersive inner circle with turning number 1
outer = BoundaryCircle("C1", (1, 2), {1: 1, 2: -1}, True, 0, 0)
inner = BoundaryCircle("C2", (), {}, True, 1, -1)
annulus = Pattern(Surface(True, 0, ("C1", "C2")), BoundaryPattern((outer, inner)), Matching.of([(1, 2)]))

print("realizable:", realizable(annulus))
for side in Side:
    print(f"{side.name:5}  Gamma={gamma(annulus, side):3}  2*Delta={delta2(annulus, side):3}")

loops = loop_set_no_cusps(annulus)
print("loop counts:", loops.kind, "from", loops.min, "step", loops.step, "->", sorted(loops.truncate(9)))

# closed surfaces with one immersed boundary circle: the table of least loop counts
print()
print("least loop count of pseudo-immersions (rows: chi, columns: winding)")
windings = range(-5, 6, 2)
print("chi  " + "".join(f"{w:>4}" for w in windings))
for chi in (1, -1, -3, -5):
    genus = (1 - chi) // 2
    row = [pseudo_immersion_loop_set(Surface(True, genus, ("C1",)), w).least for w in windings]
    print(f"{chi:>3}  " + "".join(f"{x:>4}" for x in row))

"""
Walking through divide states
=============================

Start from a catalog state, apply moves by hand, then let breadth-first
search find every cusp-free loop count and a shortest way down.
"""

from foldpat.divide import (CreatePair, Limits, LoopGenI, apply_move, enabled_moves, explore,
                            measure, min_loops, validate_state)
from foldpat.divide.catalog import catalog, entry
from foldpat.model import Side

for e in catalog():
    m = measure(e.state)
    print(f"{e.name:14} c={m.c} l={m.l} chi+={m.chi_plus} chi-={m.chi_minus} arcs={m.arcs}")

s = entry("disk-pi-w-1").state
print("\nstarting from disk-pi-w-1 with", s.loop_count, "loop")

# two nested loops appear around the existing one
s = apply_move(s, LoopGenI("L0", Side.PLUS))
print("after LoopGenI:", measure(s))

# a swallowtail pair on the first loop
s = apply_move(s, CreatePair("L0"))
print("after CreatePair:", measure(s), "valid:", not validate_state(s))
print("moves now enabled:", sorted({m.kind for m in enabled_moves(s)}))

# every loop count reachable without cusps
res = explore(entry("annulus-arc").state, Limits(max_depth=8, max_loops=5))
print("\nannulus-arc, reachable (c, l):", sorted(res.reachable_cl))
print("cusp-free loop counts:", sorted(res.loops_at(0)))
print("witness for 5 loops:", [m.kind for m in res.witnesses[(0, 5)]])

# climb up, then ask for the way back down
g = entry("genus1-arcs").state
up = apply_move(apply_move(g, LoopGenI("a1-4", Side.PLUS)), LoopGenI("a1-4", Side.MINUS))
best, script = min_loops(up)
print(f"\ngenus1-arcs with {up.loop_count} loops reduces to {best}:", [m.kind for m in script])

"""Deciding whether a pattern admits a realization.

Two gates: the sign condition on paired points, and the existence of a
1-submanifold of the surface whose arcs join exactly the paired points.  The
second is decided by thickening ``∂W ∪ arcs`` into a ribbon surface ``N`` and
asking whether the surface can be completed from ``N`` by gluing along
``N``'s free boundary circles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import Matching, Pattern, point_key


@dataclass(frozen=True)
class ChordSystem:
    circles: tuple  # tuple of point tuples, cyclic order; may contain empty tuples
    chords: Matching

    @classmethod
    def from_pattern(cls, pattern: Pattern) -> "ChordSystem":
        return cls(tuple(tuple(c.points) for c in pattern.boundary.circles), pattern.phi)


@dataclass(frozen=True)
class RibbonSummary:
    chi_N: int
    free_circles: int
    components: int
    per_component_free_circles: tuple
    orientable: bool = True


class _Flags:
    """Union-find over flags, used for orbit counting."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def ribbon_summary(cs: ChordSystem, twists: dict | None = None) -> RibbonSummary:
    """Euler characteristic and free boundary of the thickened chord system.

    Every marked point is a trivalent vertex with rotation (previous circle
    edge, chord, next circle edge); the gap between "next" and "previous" is
    the side facing the boundary of the surface.  Band twists apply to chords
    only.  Faces are traced on flags: each half-edge carries a left and a
    right flag.
    """
    twists = twists or {}
    chords = cs.chords.partner_map()
    # half-edges: (point, slot) with slot 0 = prev circle edge, 1 = chord, 2 = next circle edge
    half = []
    for pts in cs.circles:
        for p in pts:
            for slot in range(3):
                half.append((p, slot))
    hindex = {h: i for i, h in enumerate(half)}
    n_flags = 2 * len(half)

    def flag(h, right):
        return 2 * hindex[h] + int(right)

    # partner of each half-edge along its edge, and whether the edge is twisted
    opposite = {}
    for pts in cs.circles:
        m = len(pts)
        for i, p in enumerate(pts):
            q = pts[(i + 1) % m]
            opposite[(p, 2)] = ((q, 0), False)
            opposite[(q, 0)] = ((p, 2), False)
    for x, y in chords.items():
        pair = frozenset((x, y))
        opposite[(x, 1)] = ((y, 1), bool(twists.get(pair, False)))

    faces = _Flags(n_flags)      # orbits of <edge-switch, vertex-switch>
    comps = _Flags(n_flags)      # orbits of all three involutions
    bip = {}                     # 2-coloring attempt for orientability
    edges_all = []
    for h in half:
        p, slot = h
        # vertex involution: right flag of a slot meets left flag of the next slot
        nxt = (p, (slot + 1) % 3)
        a, b = flag(h, True), flag(nxt, False)
        faces.union(a, b)
        edges_all.append((a, b))
        # side involution within a half-edge
        edges_all.append((flag(h, False), flag(h, True)))
        # edge involution
        g, tw = opposite[h]
        a, b = flag(h, False), flag(g, not tw)
        faces.union(a, b)
        edges_all.append((a, b))
        a, b = flag(h, True), flag(g, tw)
        faces.union(a, b)
        edges_all.append((a, b))
    for a, b in edges_all:
        comps.union(a, b)

    # orientability per component: flag graph must be bipartite
    adj = {i: [] for i in range(n_flags)}
    for a, b in edges_all:
        adj[a].append(b)
        adj[b].append(a)
    orientable = True
    for start in range(n_flags):
        if start in bip:
            continue
        bip[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in bip:
                    bip[v] = 1 - bip[u]
                    stack.append(v)
                elif bip[v] == bip[u]:
                    orientable = False

    face_roots = {faces.find(i) for i in range(n_flags)}
    comp_of_face = {}
    for r in face_roots:
        comp_of_face[r] = comps.find(r)
    comp_roots = sorted({comps.find(i) for i in range(n_flags)})

    V = sum(len(pts) for pts in cs.circles)
    E = V + len(cs.chords)
    chi = V - E

    per_comp = {r: 0 for r in comp_roots}
    for r in face_roots:
        per_comp[comp_of_face[r]] += 1
    # each non-empty circle contributes one boundary circle that is part of the surface boundary
    for pts in cs.circles:
        if pts:
            per_comp[comps.find(flag((pts[0], 0), False))] -= 1
    free = [per_comp[r] for r in comp_roots]
    # point-free circles: a collar annulus each, one free circle
    empties = sum(1 for pts in cs.circles if not pts)
    free.extend([1] * empties)
    return RibbonSummary(chi_N=chi, free_circles=sum(free), components=len(free),
                         per_component_free_circles=tuple(free), orientable=orientable)


def sign_condition(pattern: Pattern) -> bool:
    b = pattern.boundary
    return all(b.iota(x) != b.iota(y) for x, y in (tuple(p) for p in pattern.phi.pairs))


def completion_bound(summary: RibbonSummary) -> int:
    """Largest Euler characteristic of a connected surface completing ``N``."""
    return summary.chi_N + summary.free_circles - 2 * (summary.components - 1)


def adapted_exists(pattern: Pattern) -> bool:
    cs = ChordSystem.from_pattern(pattern)
    chi_w = pattern.chi
    if pattern.surface.orientable:
        s = ribbon_summary(cs)
        bound = completion_bound(s)
        return chi_w <= bound and (chi_w - s.chi_N - s.free_circles) % 2 == 0
    pairs = sorted((frozenset(p) for p in cs.chords.pairs),
                   key=lambda p: sorted(map(point_key, p)))
    for bits in itertools.product((False, True), repeat=len(pairs)):
        s = ribbon_summary(cs, dict(zip(pairs, bits)))
        if chi_w <= completion_bound(s) - (1 if s.orientable else 0):
            return True
    return False


def realizable(pattern: Pattern) -> bool:
    if not pattern.points:
        return True
    return sign_condition(pattern) and adapted_exists(pattern)


def chords_cross(order: tuple, a: tuple, b: tuple) -> bool:
    """Whether chords ``a`` and ``b`` interleave on a cyclically ordered circle."""
    pos = {p: i for i, p in enumerate(order)}
    i, j = sorted((pos[a[0]], pos[a[1]]))
    inside = [i < pos[x] < j for x in b]
    return inside[0] != inside[1]

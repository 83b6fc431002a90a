"""Composition of patterns along a shared family of boundary circles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (BoundaryPattern, Matching, Pattern, Surface, Violation,
                    point_key, validate_pattern)


class GluingError(ValueError):
    pass


@dataclass(frozen=True)
class CobordismPattern:
    pattern: Pattern
    incoming: tuple = ()
    outgoing: tuple = ()

    def validate(self) -> list:
        out = list(validate_pattern(self.pattern))
        ids = set(self.pattern.surface.boundary_circle_ids)
        inc, outg = set(self.incoming), set(self.outgoing)
        if inc & outg:
            out.append(Violation("cobordism-overlap", "incoming and outgoing circles overlap",
                                 tuple(sorted(inc & outg))))
        if inc | outg != ids or len(inc) != len(self.incoming) or len(outg) != len(self.outgoing):
            out.append(Violation("cobordism-cover", "incoming and outgoing must partition the circles"))
        return out


@dataclass(frozen=True)
class InterfaceMap:
    """Identification of ``a``'s outgoing circles with ``b``'s incoming circles."""

    circle_pairs: dict = field(default_factory=dict)
    point_map: dict = field(default_factory=dict)
    orientation_compatible: bool = True


@dataclass(frozen=True)
class GlueResult:
    glued: CobordismPattern
    closed_loops_created: int
    warnings: tuple = ()


def _check_interface(a: CobordismPattern, b: CobordismPattern, m: InterfaceMap) -> list:
    """Return iota-continuity warnings; raise on structural mismatch."""
    if not m.circle_pairs:
        raise GluingError("empty interface")
    if set(m.circle_pairs) != set(a.outgoing):
        raise GluingError("interface must cover exactly the outgoing circles of the first pattern")
    if sorted(m.circle_pairs.values()) != sorted(b.incoming) or len(set(m.circle_pairs.values())) != len(b.incoming):
        raise GluingError("interface must be a bijection onto the incoming circles of the second pattern")
    ba, bb = a.pattern.boundary, b.pattern.boundary
    warnings = []
    mapped = set()
    for ca_id, cb_id in m.circle_pairs.items():
        ca, cb = ba.circle(ca_id), bb.circle(cb_id)
        if len(ca.points) != len(cb.points):
            raise GluingError(f"point count mismatch on {ca_id} -> {cb_id}")
        if not ca.points:
            if ca.collar_color is not cb.collar_color:
                raise GluingError(f"collar color mismatch on {ca_id} -> {cb_id}")
            continue
        try:
            image = [m.point_map[p] for p in ca.points]
        except KeyError as e:
            raise GluingError(f"point {e.args[0]!r} of {ca_id} is not mapped") from None
        if sorted(image, key=point_key) != sorted(cb.points, key=point_key):
            raise GluingError(f"points of {ca_id} do not map onto the points of {cb_id}")
        pos = {p: i for i, p in enumerate(cb.points)}
        n = len(ca.points)
        for k in range(n):
            # reversed cyclic order: the successor of image[k] in b is image[k-1]
            if cb.points[(pos[image[k]] + 1) % n] != image[k - 1]:
                raise GluingError(f"point map on {ca_id} does not reverse cyclic order")
            # band k of a (points[k-1] -> points[k]) glues to the band of b ending at image[k-1]
            if ca.band_color(k) is not cb.band_color(pos[image[k - 1]]):
                raise GluingError(f"band color mismatch on {ca_id} band {k}")
        for p in ca.points:
            mapped.add(p)
            if ca.iota[p] != -cb.iota[m.point_map[p]]:
                warnings.append(f"iota continuity violated at {p!r} -> {m.point_map[p]!r}")
    extra = set(m.point_map) - mapped
    if extra:
        raise GluingError(f"point map mentions non-interface points {sorted(extra, key=point_key)}")
    return warnings


def _trace_chains(a_phi: Matching, b_phi: Matching, point_map: dict):
    """Follow alternating chains through both matchings across the interface.

    Interface points of ``a`` are identified with their images in ``b``.
    Returns the arcs joining free points and the number of closed chains.
    """
    def vertex(tag, x):
        return ("b", point_map[x]) if tag == "a" and x in point_map else (tag, x)

    edges = []
    for tag, phi in (("a", a_phi), ("b", b_phi)):
        for x, y in phi.sorted_pairs():
            edges.append((vertex(tag, x), vertex(tag, y)))
    at = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)

    used = [False] * len(edges)

    def walk(u, e):
        while True:
            used[e] = True
            a, b = edges[e]
            u = b if a == u else a
            nxt = [f for f in at[u] if not used[f]]
            if not nxt:
                return u
            e = nxt[0]

    order = sorted(at, key=lambda v: (v[0], point_key(v[1])))
    arcs = []
    for u in order:
        if len(at[u]) == 1 and not used[at[u][0]]:
            arcs.append((u[1], walk(u, at[u][0])[1]))
    closed = 0
    for u in order:
        for e in at[u]:
            if not used[e]:
                walk(u, e)
                closed += 1
    return arcs, closed


def _surface_from(chi: int, orientable: bool, circles: tuple) -> Surface:
    b = len(circles)
    if b == 0:
        raise GluingError("glued surface has no boundary left")
    rest = 2 - b - chi
    if orientable:
        if rest < 0 or rest % 2:
            raise GluingError(f"no orientable surface with chi {chi} and {b} boundary circles")
        return Surface(True, rest // 2, circles)
    if rest < 1:
        raise GluingError(f"no non-orientable surface with chi {chi} and {b} boundary circles")
    return Surface(False, rest, circles)


def glue(a: CobordismPattern, b: CobordismPattern, m: InterfaceMap) -> GlueResult:
    for name, cob in (("first", a), ("second", b)):
        problems = cob.validate()
        if problems:
            raise GluingError(f"{name} cobordism invalid: " + "; ".join(map(str, problems)))
    warnings = _check_interface(a, b, m)
    ba, bb = a.pattern.boundary, b.pattern.boundary
    keep_a = [c for c in ba.circles if c.id not in m.circle_pairs]
    keep_b = [c for c in bb.circles if c.id not in set(m.circle_pairs.values())]
    ids = [c.id for c in keep_a + keep_b]
    if len(set(ids)) != len(ids):
        raise GluingError("remaining circle ids collide")
    free_a = {p for c in keep_a for p in c.points}
    free_b = {p for c in keep_b for p in c.points}
    if free_a & free_b:
        raise GluingError("remaining marked point ids collide")

    arcs, closed = _trace_chains(a.pattern.phi, b.pattern.phi, m.point_map)
    circles = tuple(keep_a + keep_b)
    surface = _surface_from(a.pattern.chi + b.pattern.chi,
                            a.pattern.surface.orientable and b.pattern.surface.orientable
                            and m.orientation_compatible,
                            tuple(c.id for c in circles))
    pattern = Pattern(surface, BoundaryPattern(circles), Matching.of(arcs))
    glued = CobordismPattern(pattern, tuple(a.incoming), tuple(b.outgoing))
    return GlueResult(glued, closed, tuple(warnings))

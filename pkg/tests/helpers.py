"""Builders and random generators shared by the test modules."""

from __future__ import annotations

import random

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from foldpat.gluing import CobordismPattern, InterfaceMap
from foldpat.model import BoundaryCircle, BoundaryPattern, Matching, Pattern, Surface


def circle(cid, points=(), iota=None, plus_first=True, wp=0, wm=None):
    points = tuple(points)
    if iota is None:
        iota = {p: (1 if i % 2 == 0 else -1) for i, p in enumerate(points)}
    if wm is None:
        wm = -wp if not points else wp - len(points) % 2
    return BoundaryCircle(cid, points, dict(iota), plus_first, wp, wm)


def pattern(circles, phi=(), genus=0, orientable=True):
    circles = tuple(circles)
    surface = Surface(orientable, genus, tuple(c.id for c in circles))
    return Pattern(surface, BoundaryPattern(circles), Matching.of(phi))


def disk_chords(n_points, chords):
    pts = tuple(range(1, n_points + 1))
    return pattern([circle("C1", pts)], chords)


def random_matching(rng: random.Random, ground):
    pts = list(ground)
    rng.shuffle(pts)
    return Matching.of(zip(pts[0::2], pts[1::2]))


def random_pattern(rng: random.Random, max_circles=3, max_points=6, orientable=None):
    """A structurally valid pattern with random data (signs are not forced to alternate)."""
    if orientable is None:
        orientable = rng.random() < 0.7
    genus = rng.randint(0, 2) if orientable else rng.randint(1, 3)
    circles, nxt = [], 1
    for k in range(rng.randint(1, max_circles)):
        m = 2 * rng.randint(0, max_points // 2)
        pts = tuple(range(nxt, nxt + m))
        nxt += m
        iota = {p: rng.choice((1, -1)) for p in pts}
        wp = rng.randint(-4, 4)
        if m:
            wm = rng.randint(-4, 4)
            if (wp - wm - m) % 2:
                wm += 1
        else:
            wm = -wp
        circles.append(BoundaryCircle(f"C{k + 1}", pts, iota, rng.random() < 0.5, wp, wm))
    ground = [p for c in circles for p in c.points]
    surface = Surface(orientable, genus, tuple(c.id for c in circles))
    return Pattern(surface, BoundaryPattern(tuple(circles)), random_matching(rng, ground))


def crossing_free(n_points, pairs):
    """Brute-force planarity of a chord diagram on a circle labelled 1..n in order."""
    pairs = [tuple(sorted(p)) for p in pairs]
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1:]:
            if (a < c < b) != (a < d < b):
                return False
    return True


def all_matchings(points):
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in all_matchings(rest):
            yield [(first, points[i])] + m


# -- cobordism builders ---------------------------------------------------------


def ring(cid, pts, plus_first=True, iota=None):
    iota = iota or {p: (1 if i % 2 == 0 else -1) for i, p in enumerate(pts)}
    return BoundaryCircle(cid, tuple(pts), iota, plus_first, 0, 0)


def cob(incoming, outgoing, phi, genus=0, orientable=True):
    circles = tuple(incoming) + tuple(outgoing)
    surface = Surface(orientable, genus, tuple(c.id for c in circles))
    return CobordismPattern(Pattern(surface, BoundaryPattern(circles), Matching.of(phi)),
                            tuple(c.id for c in incoming), tuple(c.id for c in outgoing))


def reversing_map(a_pts, b_pts):
    """Point map p_i -> q_(1-i) reversing cyclic order; band colors agree when both start alike."""
    n = len(a_pts)
    return {p: b_pts[(1 - i) % n] for i, p in enumerate(a_pts)}


def closed_chain_oracle(a_pairs, b_pairs, point_map, free_a, free_b):
    """Components of the identified union graph that avoid every free point."""
    index = {}

    def vertex(tag, x):
        key = ("b", point_map[x]) if tag == "a" and x in point_map else (tag, x)
        return index.setdefault(key, len(index))

    rows, cols = [], []
    for tag, pairs in (("a", a_pairs), ("b", b_pairs)):
        for x, y in pairs:
            rows.append(vertex(tag, x))
            cols.append(vertex(tag, y))
    n = len(index)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    k, labels = connected_components(graph, directed=False)
    touched = {labels[index[("a", x)]] for x in free_a} | {labels[index[("b", y)]] for y in free_b}
    return k - len(touched)


def random_composable_pair(rng: random.Random):
    k = rng.randint(1, 4)
    na, nb = 2 * rng.randint(0, 3), 2 * rng.randint(0, 3)
    a_in = ring("A", tuple(f"a{i}" for i in range(na)))
    mid_a = ring("N", tuple(f"x{i}" for i in range(2 * k)))
    mid_b = ring("N2", tuple(f"y{i}" for i in range(2 * k)))
    b_out = ring("B", tuple(f"b{i}" for i in range(nb)))
    phi_a = random_matching(rng, a_in.points + mid_a.points)
    phi_b = random_matching(rng, mid_b.points + b_out.points)
    a = cob([a_in], [mid_a], [tuple(p) for p in phi_a.pairs], genus=rng.randint(0, 1))
    b = cob([mid_b], [b_out], [tuple(p) for p in phi_b.pairs], genus=rng.randint(0, 1))
    return a, b, InterfaceMap({"N": "N2"}, reversing_map(mid_a.points, mid_b.points))


# small composable family for associativity: every member has 2-point in/out circles
def family(tag):
    i, o = (f"{tag}i1", f"{tag}i2"), (f"{tag}o1", f"{tag}o2")
    return {
        "straight": [(i[0], o[0]), (i[1], o[1])],
        "cross": [(i[0], o[1]), (i[1], o[0])],
        "turn": [(i[0], i[1]), (o[0], o[1])],
    }, i, o


def member(tag, kind, genus=0):
    phis, i, o = family(tag)
    return cob([ring(f"{tag}I", i)], [ring(f"{tag}O", o)], phis[kind], genus=genus)


def link(x, y):
    xo = x.pattern.boundary.circle(x.outgoing[0])
    yi = y.pattern.boundary.circle(y.incoming[0])
    return InterfaceMap({xo.id: yi.id}, reversing_map(xo.points, yi.points))

import itertools
import random

import pytest

from foldpat.gluing import GluingError, InterfaceMap, glue
from foldpat.model import Matching, Surface

from helpers import closed_chain_oracle, cob, member, link, random_composable_pair, reversing_map, ring


def test_straight_composition_has_no_loops():
    a = cob([ring("M", ("m1", "m2"))], [ring("N", ("x1", "x2"))], [("m1", "x1"), ("m2", "x2")])
    b = cob([ring("N2", ("y1", "y2"))], [ring("P", ("p1", "p2"))], [("y1", "p1"), ("y2", "p2")])
    m = InterfaceMap({"N": "N2"}, reversing_map(("x1", "x2"), ("y1", "y2")))
    res = glue(a, b, m)
    assert res.closed_loops_created == 0
    assert res.glued.pattern.phi == Matching.of([("m1", "p2"), ("m2", "p1")])
    assert res.glued.incoming == ("M",) and res.glued.outgoing == ("P",)
    assert res.glued.pattern.chi == a.pattern.chi + b.pattern.chi


def test_returning_arcs_close_up():
    a = cob([ring("M", ("m1", "m2"))], [ring("N", ("x", "y"))], [("m1", "m2"), ("x", "y")])
    b = cob([ring("N", ("x", "y"))], [ring("P", ("p1", "p2"))], [("x", "y"), ("p1", "p2")])
    res = glue(a, b, InterfaceMap({"N": "N"}, {"x": "y", "y": "x"}))
    assert res.closed_loops_created == 1
    assert res.glued.pattern.phi == Matching.of([("m1", "m2"), ("p1", "p2")])


def test_four_cycle():
    pts = ("x1", "x2", "x3", "x4")
    a = cob([ring("M", ())], [ring("N", pts)], [("x1", "x2"), ("x3", "x4")])
    b = cob([ring("N", pts)], [ring("P", ())], [("x2", "x3"), ("x4", "x1")])
    # identity labels with reversed order on the second copy
    bb = cob([ring("N", ("x2", "x1", "x4", "x3"))], [ring("P", ())], [("x2", "x3"), ("x4", "x1")])
    m = InterfaceMap({"N": "N"}, reversing_map(pts, ("x2", "x1", "x4", "x3")))
    assert m.point_map == {"x1": "x1", "x2": "x2", "x3": "x3", "x4": "x4"}
    res = glue(a, bb, m)
    assert res.closed_loops_created == 1
    assert len(res.glued.pattern.phi) == 0
    with pytest.raises(GluingError):
        glue(a, b, InterfaceMap({"N": "N"}, {p: p for p in pts}))


def test_interface_errors():
    a = cob([ring("M", ("m1", "m2"))], [ring("N", ("x1", "x2"))], [("m1", "x1"), ("m2", "x2")])
    b4 = cob([ring("N2", ("y1", "y2", "y3", "y4"))], [ring("P", ())], [("y1", "y2"), ("y3", "y4")])
    with pytest.raises(GluingError, match="point count"):
        glue(a, b4, InterfaceMap({"N": "N2"}, {}))
    b = cob([ring("N2", ("y1", "y2"), plus_first=False)], [ring("P", ("p1", "p2"))],
            [("y1", "p1"), ("y2", "p2")])
    with pytest.raises(GluingError, match="band color"):
        glue(a, b, InterfaceMap({"N": "N2"}, reversing_map(("x1", "x2"), ("y1", "y2"))))
    with pytest.raises(GluingError, match="empty interface"):
        glue(a, b, InterfaceMap({}, {}))


def test_iota_continuity_is_a_warning():
    a = cob([ring("M", ("m1", "m2"))], [ring("N", ("x1", "x2"), iota={"x1": 1, "x2": -1})],
            [("m1", "x1"), ("m2", "x2")])
    b = cob([ring("N2", ("y1", "y2"), iota={"y1": 1, "y2": -1})], [ring("P", ("p1", "p2"))],
            [("y1", "p1"), ("y2", "p2")])
    m = InterfaceMap({"N": "N2"}, reversing_map(("x1", "x2"), ("y1", "y2")))
    assert glue(a, b, m).warnings == ()
    b_bad = cob([ring("N2", ("y1", "y2"), iota={"y1": -1, "y2": 1})], [ring("P", ("p1", "p2"))],
                [("y1", "p1"), ("y2", "p2")])
    assert len(glue(a, b_bad, m).warnings) == 2


def test_orientation_flag_and_genus():
    a = cob([ring("M", ())], [ring("N", ())], [], genus=1)
    b = cob([ring("N2", ())], [ring("P", ())], [])
    res = glue(a, b, InterfaceMap({"N": "N2"}, {}))
    assert res.glued.pattern.surface == Surface(True, 1, ("M", "P"))
    flipped = glue(a, b, InterfaceMap({"N": "N2"}, {}, orientation_compatible=False))
    assert not flipped.glued.pattern.surface.orientable
    assert flipped.glued.pattern.surface.genus == 2


def test_random_pairs_match_component_oracle():
    rng = random.Random(17)
    for _ in range(200):
        a, b, m = random_composable_pair(rng)
        res = glue(a, b, m)
        a_pairs = [tuple(p) for p in a.pattern.phi.sorted_pairs()]
        b_pairs = [tuple(p) for p in b.pattern.phi.sorted_pairs()]
        free_a = a.pattern.boundary.circle("A").points
        free_b = b.pattern.boundary.circle("B").points
        assert res.closed_loops_created == closed_chain_oracle(a_pairs, b_pairs, m.point_map,
                                                               free_a, free_b)
        points_before = len(a.pattern.points) + len(b.pattern.points)
        assert len(res.glued.pattern.points) == points_before - 2 * len(m.point_map)


def test_associativity_on_family_triples():
    kinds = [("straight", 0), ("cross", 0), ("turn", 0), ("straight", 1)]
    for ka, kb, kc in itertools.product(kinds, repeat=3):
        a, b, c = member("a", *ka), member("b", *kb), member("c", *kc)
        ab = glue(a, b, link(a, b))
        left = glue(ab.glued, c, link(b, c))
        bc = glue(b, c, link(b, c))
        right = glue(a, bc.glued, link(a, b))
        assert left.glued == right.glued
        assert ab.closed_loops_created + left.closed_loops_created == \
            bc.closed_loops_created + right.closed_loops_created

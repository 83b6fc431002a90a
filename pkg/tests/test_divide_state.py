from dataclasses import replace

import pytest

from foldpat.divide.catalog import catalog, entry
from foldpat.divide.moves import LoopGenI, apply_move
from foldpat.divide.state import (Curve, Cusp, DivideState, Face, attach_faces, canonical_key,
                                  measure, validate_state)
from foldpat.invariants import loop_set_no_cusps
from foldpat.model import Side

EXPECTED = {
    "disk-pi-w1": (0, 2, 1, 0, 1, 1, 0),
    "disk-pi-w-1": (0, 1, 0, 1, 1, 0, 0),
    "annulus-arc": (0, 1, 1, 0, 1, 1, 1),
    "genus1-arcs": (0, 0, 1, 1, 0, 0, 3),
    "pants-mixed": (0, 0, 1, 0, 0, 1, 2),
    "disk-arc-cusp": (1, 0, 1, 1, None, None, 1),
    "annulus-cusp": (1, 1, 1, 0, None, None, 1),
}


def codes(state):
    return {v.code for v in validate_state(state)}


def relabel(s: DivideState, tag="z") -> DivideState:
    fmap = {f.id: f"{tag}F{i}" for i, f in enumerate(reversed(s.faces))}
    lmap = {c.id: f"{tag}L{i}" for i, c in enumerate(reversed(s.loops))}

    def item(it):
        return ("loop", lmap[it[1]]) if it[0] == "loop" else it

    faces = [Face(fmap[f.id], f.color, f.genus,
                  tuple(tuple(item(i) for i in cyc) for cyc in reversed(f.boundary_cycles)))
             for f in reversed(s.faces)]
    curves = [Curve(lmap.get(c.id, c.id), c.kind, c.endpoints,
                    tuple(Cusp(f"{tag}{k.id}", k.pointing) for k in reversed(c.cusps)))
              for c in reversed(s.curves)]
    return attach_faces(s.pattern, faces, curves)


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.name)
def test_catalog_states_are_coherent(e):
    assert validate_state(e.state) == []
    m = measure(e.state)
    assert (m.c, m.l, m.chi_plus, m.chi_minus, m.h_plus, m.h_minus, m.arcs) == EXPECTED[e.name]


def test_catalog_loop_counts_lie_in_closed_form():
    for e in catalog():
        if e.state.cusp_count == 0:
            assert e.state.loop_count in loop_set_no_cusps(e.state.pattern)


def test_recolored_inner_disk_breaks_bicoloring():
    s = entry("disk-pi-w1").state
    faces = [replace(f, color=Side.MINUS) if f.id == "F2" else f for f in s.faces]
    assert "I1" in codes(attach_faces(s.pattern, faces, s.curves))


def test_genus_bump_breaks_euler_sum():
    s = entry("disk-pi-w1").state
    faces = [replace(f, genus=1) if f.id == "F1" else f for f in s.faces]
    assert "I2" in codes(attach_faces(s.pattern, faces, s.curves))


def test_wrong_color_split_breaks_winding_identity():
    # moving a handle from a plus face to a minus face keeps the total but not the split
    s = apply_move(entry("genus1-arcs").state, LoopGenI("a1-4", Side.PLUS))
    faces = {f.id: f for f in s.faces}
    plus = next(f for f in s.faces if f.color is Side.PLUS and len(f.boundary_cycles) == 1
                and f.boundary_cycles[0][0][0] == "loop")
    minus = next(f for f in s.faces if f.color is Side.MINUS)
    faces[minus.id] = replace(minus, genus=minus.genus + 1)
    faces[plus.id] = replace(plus, genus=0)
    bad = attach_faces(s.pattern, [faces[f.id] for f in s.faces], s.curves)
    assert {"I2", "I3"} & codes(bad)


def test_stale_face_reference_is_reported():
    s = entry("annulus-arc").state
    curves = [replace(c, face_plus="F1") if c.kind == "arc" else c for c in s.curves]
    assert "I1" in codes(DivideState(s.pattern, s.faces, tuple(curves)))


def test_missing_fixed_cycle_and_curve_free_face():
    s = entry("pants-mixed").state
    faces = [replace(f, boundary_cycles=f.boundary_cycles[:1]) if f.color is Side.MINUS else f
             for f in s.faces]
    assert "fixed-cycle" in codes(attach_faces(s.pattern, faces, s.curves))
    extra = Face("FX", Side.PLUS, 0, ((("circle", "C9"),),))
    assert "unknown-cycle" in codes(attach_faces(s.pattern, list(s.faces) + [extra], s.curves))


def test_arc_with_equal_signs_is_reported():
    s = entry("annulus-arc").state
    c1 = s.boundary.circle("C1")
    bad_circle = replace(c1, iota={1: 1, 2: 1})
    pattern = replace(s.pattern, boundary=replace(s.boundary, circles=(bad_circle,) + s.boundary.circles[1:]))
    assert "I4" in codes(attach_faces(pattern, s.faces, s.curves))


def test_disconnected_complex_is_reported():
    s = entry("disk-pi-w-1").state
    faces = list(s.faces) + [Face("FA", Side.PLUS, 0, ((("loop", "LX"),),)),
                             Face("FB", Side.MINUS, 1, ((("loop", "LX"),),))]
    bad = attach_faces(s.pattern, faces, list(s.curves) + [Curve("LX", "loop")])
    assert "connected" in codes(bad)


def test_measure_after_create_pair():
    from foldpat.divide.moves import CreatePair
    s = entry("disk-pi-w1").state
    t = apply_move(s, CreatePair("L0"))
    a, b = measure(s), measure(t)
    assert b.c == a.c + 2 and (b.l, b.chi_plus, b.chi_minus, b.arcs) == (a.l, a.chi_plus, a.chi_minus, a.arcs)
    assert b.h_plus is None


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.name)
def test_canonical_key_ignores_labels(e):
    assert canonical_key(relabel(e.state)) == canonical_key(e.state)


def test_canonical_key_separates_states():
    keys = {canonical_key(e.state) for e in catalog()}
    assert len(keys) == len(catalog())
    s = entry("disk-pi-w1").state
    assert canonical_key(apply_move(s, LoopGenI("L0", Side.PLUS))) != canonical_key(s)


def test_canonical_key_sees_genus_distribution():
    s = apply_move(entry("genus1-arcs").state, LoopGenI("a1-4", Side.PLUS))
    # same (c, l); move one handle between two plus faces
    plus = [f for f in s.faces if f.color is Side.PLUS]
    a = attach_faces(s.pattern, [replace(f, genus=1) if f.id == plus[0].id else f for f in s.faces], s.curves)
    b = attach_faces(s.pattern, [replace(f, genus=1) if f.id == plus[1].id else f for f in s.faces], s.curves)
    assert (a.loop_count, a.cusp_count) == (b.loop_count, b.cusp_count)
    assert canonical_key(a) != canonical_key(b)


def test_canonical_key_after_moves_and_relabel():
    from foldpat.divide.moves import enabled_moves
    s = entry("annulus-arc").state
    for m in enabled_moves(s):
        t = apply_move(s, m)
        assert canonical_key(relabel(t, "q")) == canonical_key(t)

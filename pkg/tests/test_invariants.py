import random

import pytest
from hypothesis import given, settings, strategies as st

from foldpat.invariants import (InvariantError, LoopSet, LoopUnion, c_count, cusp_loop_set,
                                cusp_parity, cycle_count_union_find, delta2, gamma,
                                loop_set_no_cusps, matching_cycles, n_count, omega,
                                pseudo_immersion_loop_set, summary)
from foldpat.model import Matching, Side, Surface

from helpers import circle, pattern, random_matching, random_pattern

PLUS, MINUS = Side.PLUS, Side.MINUS


def annulus():
    # one pair on C1, immersive plus-collar C2 with turning number 1
    return pattern([circle("C1", (1, 2)), circle("C2", wp=1)], [(1, 2)])


def disk_immersion(w):
    return pattern([circle("C1", wp=w)])


def test_omega_sums_over_circles():
    assert omega(pattern([circle("C1")]).boundary, PLUS) == 0
    assert omega(disk_immersion(1).boundary, PLUS) == 1
    two = pattern([circle("C1", wp=2), circle("C2", wp=-1)])
    assert omega(two.boundary, PLUS) == 1
    assert omega(two.boundary, MINUS) == -1


def test_gamma_values():
    assert gamma(disk_immersion(1), PLUS) == 2
    assert gamma(pattern([circle("C1", (1, 2)), circle("C2")], [(1, 2)]), PLUS) == 1
    p = pattern([circle("C1"), circle("C2"), circle("C3")], genus=1)
    assert gamma(p, PLUS) == p.chi == -3


def test_cusp_parity():
    assert cusp_parity(disk_immersion(1)) == 0
    assert cusp_parity(pattern([circle("C1", (1, 2)), circle("C2")], [(1, 2)])) == 1
    assert cusp_parity(pattern([circle("C1"), circle("C2")], genus=1)) == 0


def test_n_count():
    b = pattern([circle("C1"), circle("C2", (1, 2))], [(1, 2)]).boundary
    assert (n_count(b, PLUS), n_count(b, MINUS)) == (1, 0)
    b = pattern([circle("C1", (1, 2))], [(1, 2)]).boundary
    assert (n_count(b, PLUS), n_count(b, MINUS)) == (0, 0)
    b = pattern([circle("C1"), circle("C2", plus_first=False)]).boundary
    assert (n_count(b, PLUS), n_count(b, MINUS)) == (1, 1)


def test_matching_cycles_examples():
    same = Matching.of([(1, 2), (3, 4)])
    assert len(matching_cycles(same, same)) == 2
    assert len(matching_cycles(Matching.of([(1, 2), (3, 4)]), Matching.of([(1, 4), (2, 3)]))) == 1
    phi = Matching.of([(1, 2), (3, 4), (5, 6)])
    pi = Matching.of([(2, 3), (4, 5), (6, 1)])
    assert len(matching_cycles(phi, pi)) == 1


def test_c_count_and_empty_error():
    assert c_count(annulus(), PLUS) == 1
    with pytest.raises(InvariantError):
        c_count(disk_immersion(1), PLUS)


def test_delta2_annulus_chain():
    p = annulus()
    assert gamma(p, PLUS) == 2 and gamma(p, MINUS) == 0
    assert delta2(p, PLUS) == 2
    assert delta2(p, MINUS) == -2


def test_delta2_empty_pattern():
    p = pattern([circle("C1", plus_first=True), circle("C2", plus_first=False)], genus=1)
    # n_plus = n_minus = 1 here, so 2 Delta = chi + 2
    assert delta2(p, PLUS) == delta2(p, MINUS) == p.chi + 2
    p = disk_immersion(1)
    assert (delta2(p, PLUS), delta2(p, MINUS)) == (4, 0)


def test_loop_set_annulus():
    ls = loop_set_no_cusps(annulus())
    assert (ls.kind, ls.min, ls.step) == ("arithmetic", 1, 2)
    assert ls.truncate(6) == {1, 3, 5}


def test_loop_set_even_thresholds():
    # Delta+ = 2, Delta- = 0: disk with one pair, turning numbers 4 and 0
    p = pattern([circle("C1", (1, 2), wp=4, wm=0)], [(1, 2)])
    assert delta2(p, PLUS) == 4 and delta2(p, MINUS) == 0
    assert loop_set_no_cusps(p).truncate(6) == {2, 4, 6}


def test_loop_set_non_orientable_is_everything():
    p = pattern([circle("C1", (1, 2))], [(1, 2)], genus=1, orientable=False)
    assert loop_set_no_cusps(p).kind == "all_naturals"


def test_loop_set_parity_obstruction():
    ls = loop_set_no_cusps(pattern([circle("C1", (1, 2)), circle("C2")], [(1, 2)]))
    assert ls.kind == "empty" and ls.reason == "parity obstruction"


def test_loop_set_inconsistent_pattern():
    # boundary data allowed circle by circle, but the thresholds have different parity
    p = pattern([circle("C1", (1, 2), wp=2, wm=0)], [(1, 2)])
    ls = loop_set_no_cusps(p)
    assert ls.kind == "empty" and ls.reason == "inconsistent pattern"


@pytest.mark.parametrize("w,expected", [(1, {2, 4, 6}), (-1, {1, 3, 5}), (3, {3, 5}), (-3, {2, 4, 6})])
def test_disk_pseudo_immersions(w, expected):
    assert loop_set_no_cusps(disk_immersion(w)).truncate(6) == expected
    assert pseudo_immersion_loop_set(Surface(True, 0, ("C1",)), w).truncate(6) == expected


def test_pseudo_immersion_examples_and_errors():
    assert pseudo_immersion_loop_set(Surface(True, 1, ("C1",)), 1).truncate(5) == {1, 3, 5}
    with pytest.raises(InvariantError):
        pseudo_immersion_loop_set(Surface(True, 0, ("C1",)), 0)
    with pytest.raises(InvariantError):
        pseudo_immersion_loop_set(Surface(True, 0, ("C1", "C2")), 0)
    with pytest.raises(InvariantError):
        pseudo_immersion_loop_set(Surface(False, 1, ("C1",)), 1)


def test_cusp_loop_set_half_integer_thresholds():
    # 2 Delta+ = 1, 2 Delta- = -1: disk, one pair, turning numbers 1 and -1
    p = pattern([circle("C1", (1, 2), wp=1, wm=-1)], [(1, 2)])
    assert (delta2(p, PLUS), delta2(p, MINUS)) == (1, -1)
    u = cusp_loop_set(p, 1)
    assert [c.kind for c in u.components] == ["all_naturals"]
    assert u.truncate(4) == {0, 1, 2, 3, 4}


def test_cusp_loop_set_zero_thresholds_two_cusps():
    p = pattern([circle("C1", (1, 2, 3, 4, 5, 6), {1: 1, 2: 1, 3: 1, 4: -1, 5: -1, 6: -1})],
                [(1, 4), (2, 5), (3, 6)], genus=1)
    assert delta2(p, PLUS) == delta2(p, MINUS) == 0
    assert cusp_loop_set(p, 2).truncate(5) == set(range(6))


def test_cusp_loop_set_errors():
    p = annulus()
    with pytest.raises(InvariantError):
        cusp_loop_set(p, 1)  # Gamma even, one cusp impossible
    with pytest.raises(InvariantError):
        cusp_loop_set(p, 0)
    with pytest.raises(InvariantError):
        cusp_loop_set(disk_immersion(1), 2)


def test_loop_union_normalization():
    assert LoopUnion.from_starts([3, 1, 5]).components == (LoopSet.progression(1),)
    assert LoopUnion.from_starts([0, 1]).components == (LoopSet.naturals(),)
    u = LoopUnion.from_starts([4, 1])
    assert u.truncate(6) == {1, 3, 4, 5, 6}
    assert LoopUnion.from_starts([]).is_empty


def test_loop_set_membership():
    ls = LoopSet.progression(3)
    assert 3 in ls and 5 in ls and 4 not in ls and 1 not in ls and -1 not in ls
    assert 0 in LoopSet.naturals() and 0 not in LoopSet.empty()
    assert LoopSet.empty().least is None


def test_summary_fields():
    s = summary(annulus())
    assert s["gamma_plus"] == 2 and s["delta2_plus"] == 2 and s["delta2_minus"] == -2
    assert s["c_plus"] == 1 and s["n_plus"] == 1 and s["cusp_parity"] == 0


def test_loop_set_respects_thresholds():
    rng = random.Random(11)
    for _ in range(300):
        p = random_pattern(rng, orientable=True)
        ls = loop_set_no_cusps(p)
        if ls.kind != "arithmetic" or not p.points:
            continue
        dp, dm = delta2(p, PLUS) // 2, delta2(p, MINUS) // 2
        for l in ls.truncate(12):
            assert l >= max(dp, dm) and (l - dp) % 2 == 0 and (l - dm) % 2 == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.randoms(use_true_random=False))
def test_cycle_count_matches_union_find(half, rng):
    ground = list(range(2 * half))
    a, b = random_matching(rng, ground), random_matching(rng, ground)
    assert len(matching_cycles(a, b)) == cycle_count_union_find(ground, a, b)


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_gamma_parity_independent_of_side(rng):
    p = random_pattern(rng)
    assert gamma(p, PLUS) % 2 == gamma(p, MINUS) % 2

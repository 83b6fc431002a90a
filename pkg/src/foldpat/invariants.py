"""Closed-form invariants of singular patterns.

Half-integer thresholds are always carried doubled: ``delta2`` returns
``2 * Delta`` so that everything stays in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .model import Matching, Pattern, Side, Surface, BoundaryPattern, pi_matching, point_key


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class LoopSet:
    """A set of achievable loop counts.

    ``kind`` is ``"empty"``, ``"all_naturals"`` or ``"arithmetic"``; the
    arithmetic kind is ``{min, min + 2, min + 4, ...}``.  An empty set may
    carry a ``reason`` explaining why no loop count is achievable.
    """

    kind: str
    min: int | None = None
    step: int = 2
    reason: str | None = None

    @classmethod
    def empty(cls, reason=None):
        return cls("empty", reason=reason)

    @classmethod
    def naturals(cls):
        return cls("all_naturals", min=0, step=1)

    @classmethod
    def progression(cls, start: int):
        return cls("arithmetic", min=start, step=2)

    def __contains__(self, l: int) -> bool:
        if self.kind == "empty" or l < 0:
            return False
        if self.kind == "all_naturals":
            return True
        return l >= self.min and (l - self.min) % 2 == 0

    def truncate(self, bound: int) -> set:
        return {l for l in range(bound + 1) if l in self}

    @property
    def least(self):
        return None if self.kind == "empty" else self.min


@dataclass(frozen=True)
class LoopUnion:
    """Normalized finite union of step-2 progressions (at most one per parity)."""

    components: tuple = ()

    @classmethod
    def from_starts(cls, starts: Iterable[int]) -> "LoopUnion":
        best = {}
        for s in starts:
            s = max(s, s % 2)
            best[s % 2] = min(best.get(s % 2, s), s)
        if best.get(0) == 0 and best.get(1) == 1:
            return cls((LoopSet.naturals(),))
        return cls(tuple(LoopSet.progression(best[p]) for p in sorted(best, key=lambda p: best[p])))

    def __contains__(self, l: int) -> bool:
        return any(l in comp for comp in self.components)

    def truncate(self, bound: int) -> set:
        return {l for l in range(bound + 1) if l in self}

    @property
    def is_empty(self) -> bool:
        return not self.components


def omega(boundary: BoundaryPattern, side: Side) -> int:
    return sum(c.winding(side) for c in boundary.circles)


def gamma(pattern: Pattern, side: Side) -> int:
    return pattern.chi + len(pattern.points) // 2 + omega(pattern.boundary, side)


def cusp_parity(pattern: Pattern) -> int:
    return gamma(pattern, Side.PLUS) % 2


def n_count(boundary: BoundaryPattern, side: Side) -> int:
    """Number of point-free circles whose collar is orientation preserving for ``side``."""
    return sum(1 for c in boundary.circles if not c.points and c.collar_color is side)


def matching_cycles(first: Matching, second: Matching) -> list:
    """Cycles of the 2-regular multigraph ``first ⊎ second``, as point lists.

    Each cycle alternates edges of ``first`` and ``second``; a pair shared by
    both matchings gives a 2-cycle.
    """
    a, b = first.partner_map(), second.partner_map()
    seen, cycles = set(), []
    for start in sorted(a, key=point_key):
        if start in seen:
            continue
        cyc, x = [], start
        while True:
            seen.add(x)
            cyc.append(x)
            y = a[x]
            seen.add(y)
            cyc.append(y)
            x = b[y]
            if x == start:
                break
        cycles.append(cyc)
    return cycles


def c_count(pattern: Pattern, side: Side) -> int:
    if not pattern.points:
        raise InvariantError("c_count is undefined for an empty marked-point set")
    return len(matching_cycles(pattern.phi, pi_matching(pattern.boundary, side)))


def cycle_count_union_find(ground: Iterable, first: Matching, second: Matching) -> int:
    """Independent cycle counter: connected components of the union graph.

    Every vertex has degree two in ``first ⊎ second``, so components are
    exactly the cycles.  Uses scipy's sparse component labelling.
    """
    ground = sorted(set(ground), key=point_key)
    index = {p: i for i, p in enumerate(ground)}
    rows, cols = [], []
    for m in (first, second):
        for pair in m.pairs:
            x, y = tuple(pair) if len(pair) == 2 else (tuple(pair)[0],) * 2
            rows.append(index[x])
            cols.append(index[y])
    n = len(ground)
    if n == 0:
        return 0
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    k, _ = connected_components(graph, directed=False)
    return int(k)


def _c_or_zero(pattern: Pattern, side: Side) -> int:
    return c_count(pattern, side) if pattern.points else 0


def delta2(pattern: Pattern, side: Side) -> int:
    """Twice the loop threshold: ``gamma - 2 c + 2 n``."""
    return (gamma(pattern, side) - 2 * _c_or_zero(pattern, side)
            + 2 * n_count(pattern.boundary, side))


def _progression_floor(a: int, b: int) -> int:
    """Least element of ``N ∩ (a + 2N) ∩ (b + 2N)`` for ``a ≡ b (mod 2)``."""
    m = max(a, b)
    return m if m >= 0 else m % 2


def loop_set_no_cusps(pattern: Pattern) -> LoopSet:
    """Loop counts achievable by cusp-free realizations."""
    if not pattern.surface.orientable:
        return LoopSet.naturals()
    if gamma(pattern, Side.PLUS) % 2:
        return LoopSet.empty("parity obstruction")
    dp, dm = delta2(pattern, Side.PLUS) // 2, delta2(pattern, Side.MINUS) // 2
    if (dp - dm) % 2:
        return LoopSet.empty("inconsistent pattern")
    if pattern.points:
        return LoopSet.progression(_progression_floor(dp, dm))
    # no marked points: every realization carries at least one loop
    return LoopSet.progression(1 + _progression_floor(dp - 1, dm - 1))


def pseudo_immersion_loop_set(surface: Surface, boundary_winding: int) -> LoopSet:
    chi, w = surface.chi, boundary_winding
    if not surface.orientable:
        raise InvariantError("pseudo-immersion formula needs an orientable surface")
    if surface.boundary_count != 1:
        raise InvariantError("pseudo-immersion formula needs exactly one boundary circle")
    if (chi - w) % 2:
        raise InvariantError("chi - winding must be even")
    m = (chi + 1 + abs(w + 1)) // 2
    if (chi - w) % 4 == 0:
        return LoopSet.progression(max(m, 2))
    return LoopSet.progression(max(m, 1))


def cusp_loop_set(pattern: Pattern, c: int) -> LoopUnion:
    """Loop counts of realizations with exactly ``c >= 1`` cusps."""
    if not pattern.surface.orientable:
        raise InvariantError("cusp_loop_set needs an orientable surface")
    if not pattern.points:
        raise InvariantError("cusp_loop_set needs a non-empty marked-point set")
    if c < 1:
        raise InvariantError("cusp count must be positive")
    if (c - gamma(pattern, Side.PLUS)) % 2:
        raise InvariantError(f"no realization has {c} cusps: parity differs from gamma")
    dp2, dm2 = delta2(pattern, Side.PLUS), delta2(pattern, Side.MINUS)
    starts = []
    for w in range(-c, c + 1, 2):
        a2, b2 = dp2 + w, dm2 - w
        if a2 % 2 or b2 % 2:
            continue
        a, b = a2 // 2, b2 // 2
        if (a - b) % 2:
            continue
        starts.append(_progression_floor(a, b))
    return LoopUnion.from_starts(starts)


def summary(pattern: Pattern) -> dict:
    """All closed-form invariants of a pattern as a plain dict."""
    out = {
        "chi": pattern.chi,
        "points": len(pattern.points),
        "omega_plus": omega(pattern.boundary, Side.PLUS),
        "omega_minus": omega(pattern.boundary, Side.MINUS),
        "gamma_plus": gamma(pattern, Side.PLUS),
        "gamma_minus": gamma(pattern, Side.MINUS),
        "cusp_parity": cusp_parity(pattern),
        "n_plus": n_count(pattern.boundary, Side.PLUS),
        "n_minus": n_count(pattern.boundary, Side.MINUS),
        "c_plus": _c_or_zero(pattern, Side.PLUS),
        "c_minus": _c_or_zero(pattern, Side.MINUS),
    }
    if pattern.surface.orientable:
        out["delta2_plus"] = delta2(pattern, Side.PLUS)
        out["delta2_minus"] = delta2(pattern, Side.MINUS)
    return out

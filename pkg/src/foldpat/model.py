"""Surfaces, boundary conditions and singular patterns.

A boundary condition is stored only through its combinatorial shadow: the
marked points where the fold locus meets each boundary circle (in cyclic
order for the plus orientation), their signs, the colors of the collar bands
between consecutive points, and the per-circle turning numbers for both
orientations.

Records are plain frozen dataclasses and are *not* validated on
construction, so that malformed candidates can be reported on by
:func:`validate_pattern`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping

Point = Hashable


class Side(enum.Enum):
    """One of the two boundary orientations (plus = sigma, minus = -sigma)."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def opposite(self) -> "Side":
        return Side.MINUS if self is Side.PLUS else Side.PLUS

    @property
    def sign(self) -> int:
        return 1 if self is Side.PLUS else -1


def point_key(p):
    """Sort key that tolerates a mix of int and str point ids."""
    return (isinstance(p, str), p)


@dataclass(frozen=True)
class Surface:
    """Compact connected surface with non-empty boundary.

    ``genus`` is the orientable genus when ``orientable`` else the number of
    crosscaps.
    """

    orientable: bool
    genus: int
    boundary_circle_ids: tuple = ()

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_circle_ids)

    @property
    def chi(self) -> int:
        return euler_characteristic(self)


def euler_characteristic(surface: Surface) -> int:
    b = surface.boundary_count
    if surface.orientable:
        return 2 - 2 * surface.genus - b
    return 2 - surface.genus - b


@dataclass(frozen=True)
class BoundaryCircle:
    id: str
    points: tuple = ()
    iota: Mapping = field(default_factory=dict)
    first_arc_sigma_preserving: bool = True
    winding_plus: int = 0
    winding_minus: int = 0

    def band_color(self, k: int) -> Side:
        """Color of collar band ``k``, the band from ``points[k-1]`` to ``points[k]``.

        Band 0 closes the cycle (last point to first).  Colors alternate.
        """
        plus = self.first_arc_sigma_preserving == (k % 2 == 0)
        return Side.PLUS if plus else Side.MINUS

    def bands(self) -> Iterator[tuple]:
        """Yield ``(k, start, end, color)`` for every collar band."""
        m = len(self.points)
        for k in range(m):
            yield k, self.points[k - 1], self.points[k], self.band_color(k)

    @property
    def collar_color(self) -> Side:
        """Collar color of an immersive (point-free) circle."""
        return Side.PLUS if self.first_arc_sigma_preserving else Side.MINUS

    def winding(self, side: Side) -> int:
        return self.winding_plus if side is Side.PLUS else self.winding_minus


@dataclass(frozen=True)
class BoundaryPattern:
    circles: tuple = ()

    @property
    def points(self) -> tuple:
        return tuple(p for c in self.circles for p in c.points)

    def circle(self, cid: str) -> BoundaryCircle:
        for c in self.circles:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def circle_of(self, point) -> BoundaryCircle:
        for c in self.circles:
            if point in c.points:
                return c
        raise KeyError(point)

    def iota(self, point) -> int:
        return self.circle_of(point).iota[point]


@dataclass(frozen=True)
class Matching:
    """Set of disjoint unordered pairs."""

    pairs: frozenset = frozenset()

    @classmethod
    def of(cls, pairs: Iterable) -> "Matching":
        return cls(frozenset(frozenset(p) for p in pairs))

    @property
    def points(self) -> frozenset:
        return frozenset(p for pair in self.pairs for p in pair)

    def partner_map(self) -> dict:
        out = {}
        for pair in self.pairs:
            a, b = _endpoints(pair)
            out[a] = b
            out[b] = a
        return out

    def partner(self, x):
        for pair in self.pairs:
            if x in pair:
                a, b = _endpoints(pair)
                return b if a == x else a
        raise KeyError(x)

    def sorted_pairs(self) -> list:
        return sorted((tuple(sorted(p, key=point_key)) for p in self.pairs),
                      key=lambda t: [point_key(x) for x in t])

    def is_perfect_on(self, ground: Iterable) -> bool:
        ground = list(ground)
        if len(set(ground)) != len(ground):
            return False
        if any(len(p) != 2 for p in self.pairs):
            return False
        pts = [x for p in self.pairs for x in p]
        return len(pts) == len(set(pts)) and set(pts) == set(ground)

    def __len__(self) -> int:
        return len(self.pairs)


def _endpoints(pair):
    items = tuple(pair)
    if len(items) == 1:  # degenerate {x, x}
        return items[0], items[0]
    return items[0], items[1]


@dataclass(frozen=True)
class Pattern:
    surface: Surface
    boundary: BoundaryPattern
    phi: Matching = Matching()

    @property
    def points(self) -> tuple:
        return self.boundary.points

    @property
    def chi(self) -> int:
        return self.surface.chi


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    locus: tuple = ()

    def __str__(self):
        where = f" at {', '.join(map(str, self.locus))}" if self.locus else ""
        return f"{self.code}: {self.message}{where}"


class PatternError(ValueError):
    """Raised when an operation receives an invalid pattern."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def validate_surface(surface: Surface) -> list:
    out = []
    if surface.genus < 0:
        out.append(Violation("negative-genus", "genus must be non-negative"))
    if not surface.orientable and surface.genus < 1:
        out.append(Violation("crosscaps", "non-orientable surface needs at least one crosscap"))
    ids = list(surface.boundary_circle_ids)
    if not ids:
        out.append(Violation("no-boundary", "surface must have at least one boundary circle"))
    if len(set(ids)) != len(ids):
        out.append(Violation("duplicate-circle", "boundary circle ids must be distinct"))
    return out


def validate_boundary(boundary: BoundaryPattern) -> list:
    out = []
    seen = {}
    for c in boundary.circles:
        pts = list(c.points)
        if len(pts) % 2:
            out.append(Violation("odd-points", "odd marked-point count", (c.id,)))
        for p in pts:
            if p in seen:
                out.append(Violation("duplicate-point", "marked point occurs twice", (c.id, p)))
            seen[p] = c.id
        if set(c.iota) != set(pts):
            out.append(Violation("iota-domain", "iota must be defined exactly on the circle's points", (c.id,)))
        for p, s in c.iota.items():
            if s not in (1, -1):
                out.append(Violation("iota-value", "iota sign must be +1 or -1", (c.id, p)))
        if (c.winding_plus - c.winding_minus - len(pts)) % 2:
            out.append(Violation("winding-parity",
                                 "winding_plus - winding_minus must have the parity of the point count",
                                 (c.id,)))
        if not pts and c.winding_minus != -c.winding_plus:
            out.append(Violation("immersive-winding",
                                 "point-free circle must have winding_minus = -winding_plus",
                                 (c.id,)))
    return out


def validate_pattern(pattern: Pattern) -> list:
    """Return every violated structural constraint; an empty list means valid."""
    out = validate_surface(pattern.surface) + validate_boundary(pattern.boundary)
    circle_ids = [c.id for c in pattern.boundary.circles]
    if circle_ids != list(pattern.surface.boundary_circle_ids):
        out.append(Violation("circle-mismatch",
                             "boundary circles must match the surface's circle ids in order"))
    ground = set(pattern.boundary.points)
    covered = []
    for pair in pattern.phi.pairs:
        items = tuple(pair)
        if len(items) != 2:
            out.append(Violation("phi-fixed-point", "fixed point in phi", items))
            continue
        covered.extend(items)
        for x in items:
            if x not in ground:
                out.append(Violation("phi-unknown-point", "phi mentions an unmarked point", (x,)))
    dup = {x for x in covered if covered.count(x) > 1}
    for x in sorted(dup, key=point_key):
        out.append(Violation("phi-not-involution", "point paired more than once", (x,)))
    for x in sorted(ground - set(covered), key=point_key):
        out.append(Violation("phi-uncovered", "marked point left unpaired by phi", (x,)))
    return out


def require_valid(pattern: Pattern) -> Pattern:
    problems = validate_pattern(pattern)
    if problems:
        raise PatternError(problems)
    return pattern


def pi_matching(boundary: BoundaryPattern, side: Side) -> Matching:
    """Pair consecutive marked points across the collar bands of color ``side``."""
    pairs = []
    for c in boundary.circles:
        for _, a, b, color in c.bands():
            if color is side:
                pairs.append((a, b))
    return Matching.of(pairs)


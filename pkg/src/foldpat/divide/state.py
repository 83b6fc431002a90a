"""Divide states: the singular locus of a realization as a bicolored face complex.

A state records, for an orientable surface with a fixed pattern, the
components of the complement of the singular locus ("faces") with their
color, genus and boundary cycles, and the singular curves (arcs ending on
the boundary, loops in the interior) with their cusps.

Boundary cycles are tuples of items:

* ``("loop", id)`` -- the whole cycle is one side of a loop;
* ``("arc", id)`` and ``("seg", circle, band)`` -- alternate in a cycle
  formed by arcs and collar bands of the face's color;
* ``("circle", id)`` -- a point-free boundary circle.

Each cusp remembers which side of its curve it points into.  A cusp pointing
into a plus face has turning weight ``-1``, a cusp pointing into a minus face
weight ``+1``; their sum enters the Euler characteristic balance.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field, replace

from ..invariants import c_count, delta2, gamma, n_count
from ..model import Pattern, Side, Violation, pi_matching, point_key, validate_pattern


@dataclass(frozen=True)
class Cusp:
    id: str
    pointing: Side


@dataclass(frozen=True)
class Curve:
    id: str
    kind: str  # "loop" or "arc"
    endpoints: tuple | None = None
    cusps: tuple = ()
    face_plus: str | None = None
    face_minus: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.kind == "loop"

    @property
    def item(self) -> tuple:
        return (self.kind, self.id)

    def face(self, side: Side) -> str | None:
        return self.face_plus if side is Side.PLUS else self.face_minus

    def cusps_pointing(self, side: Side) -> list:
        return [k for k in self.cusps if k.pointing is side]


@dataclass(frozen=True)
class Face:
    id: str
    color: Side
    genus: int = 0
    boundary_cycles: tuple = ()

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - len(self.boundary_cycles)


@dataclass(frozen=True)
class DivideState:
    pattern: Pattern
    faces: tuple = ()
    curves: tuple = ()
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        idx = {"face": {f.id: f for f in self.faces}, "curve": {c.id: c for c in self.curves}}
        object.__setattr__(self, "_index", idx)

    @property
    def surface(self):
        return self.pattern.surface

    @property
    def boundary(self):
        return self.pattern.boundary

    def face(self, fid: str) -> Face:
        return self._index["face"][fid]

    def curve(self, cid: str) -> Curve:
        return self._index["curve"][cid]

    @property
    def loops(self) -> list:
        return [c for c in self.curves if c.is_loop]

    @property
    def arcs(self) -> list:
        return [c for c in self.curves if not c.is_loop]

    @property
    def cusp_count(self) -> int:
        return sum(len(c.cusps) for c in self.curves)

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    def host_of(self, cusp_id: str) -> Curve:
        for c in self.curves:
            if any(k.id == cusp_id for k in c.cusps):
                return c
        raise KeyError(cusp_id)

    def cusp(self, cusp_id: str) -> Cusp:
        for k in self.host_of(cusp_id).cusps:
            if k.id == cusp_id:
                return k
        raise KeyError(cusp_id)  # pragma: no cover

    def pointing_face(self, cusp_id: str) -> str:
        return self.host_of(cusp_id).face(self.cusp(cusp_id).pointing)

    def turning_weight(self) -> int:
        return sum(-k.pointing.sign for c in self.curves for k in c.cusps)

    def curve_cycle(self, curve_id: str, face_id: str) -> tuple:
        item = self.curve(curve_id).item
        for cyc in self.face(face_id).boundary_cycles:
            if item in cyc:
                return cyc
        raise KeyError((curve_id, face_id))

    def curves_in(self, face_id: str) -> list:
        """Curve ids bordering a face, in cycle order."""
        memo = self._index.setdefault("curves_in", {})
        if face_id in memo:
            return memo[face_id]
        out = []
        for cyc in self.face(face_id).boundary_cycles:
            for item in cyc:
                if item[0] in ("loop", "arc"):
                    out.append(item[1])
        memo[face_id] = out
        return out

    def other_face(self, curve_id: str, face_id: str) -> str:
        c = self.curve(curve_id)
        return c.face_minus if c.face_plus == face_id else c.face_plus

    def disk_side(self, loop_id: str) -> str | None:
        """Face id of the disk a contractible loop bounds, if it bounds one."""
        c = self.curve(loop_id)
        for fid in (c.face_plus, c.face_minus):
            f = self.face(fid)
            if f.genus == 0 and f.boundary_cycles == ((c.item,),):
                return fid
        return None


def arc_id(x, y) -> str:
    a, b = sorted((x, y), key=point_key)
    return f"a{a}-{b}"


def _normalize_cycle(items: list) -> tuple:
    """Canonical rotation/reflection of a cyclic item sequence."""
    n = len(items)
    candidates = []
    for seq in (items, items[::-1]):
        for r in range(n):
            rot = tuple(seq[r:] + seq[:r])
            candidates.append((repr(rot), rot))
    return min(candidates)[1]


def composite_cycles(pattern: Pattern, side: Side) -> list:
    """The boundary cycles of ``side``-colored faces that touch the marked points.

    They alternate the arcs of ``phi`` with the collar bands of color ``side``.
    """
    phi = pattern.phi.partner_map()
    band_of = {}
    for circle in pattern.boundary.circles:
        for k, a, b, color in circle.bands():
            if color is side:
                band_of[frozenset((a, b)) if a != b else frozenset((a,))] = (circle.id, k)
    pi = pi_matching(pattern.boundary, side).partner_map()
    seen, out = set(), []
    for start in sorted(phi, key=point_key):
        if start in seen:
            continue
        items, x = [], start
        while True:
            y = phi[x]
            seen.update((x, y))
            items.append(("arc", arc_id(x, y)))
            z = pi[y]
            items.append(("seg",) + band_of[frozenset((y, z))])
            x = z
            if x == start:
                break
        out.append(_normalize_cycle(items))
    return out


def fixed_cycles(pattern: Pattern) -> dict:
    """Map each non-loop boundary cycle to the color of the face that must hold it."""
    out = {}
    for side in Side:
        for cyc in composite_cycles(pattern, side):
            out[cyc] = side
    for circle in pattern.boundary.circles:
        if not circle.points:
            out[(("circle", circle.id),)] = circle.collar_color
    return out


def attach_faces(pattern: Pattern, faces, curves) -> DivideState:
    """Build a state, filling each curve's face references from the cycles."""
    where = {}
    for f in faces:
        for cyc in f.boundary_cycles:
            for item in cyc:
                if item[0] in ("loop", "arc"):
                    where[(item[1], f.color)] = f.id
    out = [replace(c, face_plus=where.get((c.id, Side.PLUS)),
                   face_minus=where.get((c.id, Side.MINUS))) for c in curves]
    return DivideState(pattern, tuple(faces), tuple(out))


_PATTERN_DATA: dict = {}


def pattern_data(pattern: Pattern) -> dict:
    """Pattern-level quantities shared by every state over the same pattern (cached)."""
    hit = _PATTERN_DATA.get(id(pattern))
    if hit is not None and hit[0] is pattern:
        return hit[1]
    problems = list(validate_pattern(pattern))
    data = {"problems": problems}
    if not problems and pattern.surface.orientable:
        data["fixed"] = fixed_cycles(pattern)
        for side in Side:
            data[("gamma", side)] = gamma(pattern, side)
            data[("delta2", side)] = delta2(pattern, side)
            data[("c", side)] = c_count(pattern, side) if pattern.points else 0
            data[("n", side)] = n_count(pattern.boundary, side)
    if len(_PATTERN_DATA) > 512:
        _PATTERN_DATA.clear()
    _PATTERN_DATA[id(pattern)] = (pattern, data)
    return data


# -- validation ---------------------------------------------------------------


def _v(code, msg, *locus):
    return Violation(code, msg, tuple(locus))


def validate_state(s: DivideState) -> list:
    """Check every structural invariant; an empty list means the state is coherent."""
    data = pattern_data(s.pattern)
    out = list(data["problems"])
    if not s.surface.orientable:
        out.append(_v("orientable", "divide states need an orientable surface"))
        return out
    if out:
        return out

    fids = [f.id for f in s.faces]
    cids = [c.id for c in s.curves]
    kids = [k.id for c in s.curves for k in c.cusps]
    for name, ids in (("face", fids), ("curve", cids), ("cusp", kids)):
        dup = [i for i, n in Counter(ids).items() if n > 1]
        if dup:
            out.append(_v("duplicate-id", f"duplicate {name} ids", *sorted(dup)))
    if out:
        return out

    fixed = data["fixed"]
    held = Counter()
    occurrences = Counter()
    for f in s.faces:
        if f.genus < 0:
            out.append(_v("genus", "negative genus", f.id))
        if not f.boundary_cycles:
            out.append(_v("empty-face", "face without boundary", f.id))
        has_curve = False
        for cyc in f.boundary_cycles:
            kinds = {item[0] for item in cyc}
            if kinds & {"loop", "arc"}:
                has_curve = True
            if "loop" in kinds:
                if len(cyc) != 1:
                    out.append(_v("loop-cycle", "a loop side must be a whole cycle", f.id))
                occurrences[(cyc[0], f.color)] += 1
                continue
            if cyc not in fixed:
                out.append(_v("unknown-cycle", "cycle is not formed by arcs and bands of this pattern", f.id))
                continue
            if fixed[cyc] is not f.color:
                out.append(_v("band-color", "cycle lies in a face of the wrong color", f.id))
            held[cyc] += 1
            for item in cyc:
                if item[0] == "arc":
                    occurrences[(item, f.color)] += 1
        if not has_curve:
            out.append(_v("curve-free-face", "face meets no singular curve", f.id))
    for cyc in fixed:
        if held[cyc] != 1:
            out.append(_v("fixed-cycle", f"boundary cycle held {held[cyc]} times", repr(cyc)))

    # I1: bicoloring
    for c in s.curves:
        for side in Side:
            n = occurrences[(c.item, side)]
            if n != 1:
                out.append(_v("I1", f"curve borders {n} {side.value} faces", c.id))
            ref = c.face(side)
            if ref not in s._index["face"] or s.face(ref).color is not side:
                out.append(_v("I1", f"stored {side.value} face reference is wrong", c.id))
            elif c.item not in {i for cyc in s.face(ref).boundary_cycles for i in cyc}:
                out.append(_v("I1", f"stored {side.value} face does not contain the curve", c.id))
        if c.kind not in ("loop", "arc"):
            out.append(_v("curve-kind", "unknown curve kind", c.id))
    known = {c.item for c in s.curves}
    for (item, _side) in occurrences:
        if item not in known:
            out.append(_v("unknown-curve", "cycle mentions an unknown curve", item[1]))
    if out:
        return out

    # connectivity of the dual graph
    adj = {fid: set() for fid in fids}
    for c in s.curves:
        adj[c.face_plus].add(c.face_minus)
        adj[c.face_minus].add(c.face_plus)
    seen, stack = {fids[0]}, [fids[0]]
    while stack:
        for g in adj[stack.pop()]:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    if len(seen) != len(fids):
        out.append(_v("connected", "face complex is disconnected"))

    p = s.pattern
    half_p = len(p.points) // 2
    chi_plus = sum(f.chi for f in s.faces if f.color is Side.PLUS)
    chi_minus = sum(f.chi for f in s.faces if f.color is Side.MINUS)

    # I2
    if chi_plus + chi_minus != p.chi + half_p:
        out.append(_v("I2", f"sum of face chi is {chi_plus + chi_minus}, expected {p.chi + half_p}"))

    # I3 (general form with cusp weights; reduces to the cusp-free identity when c = 0)
    w = s.turning_weight()
    gp, gm = data[("gamma", Side.PLUS)], data[("gamma", Side.MINUS)]
    code = "I3" if s.cusp_count == 0 else "I3c"
    if 2 * chi_plus != gp + w:
        out.append(_v(code, f"2*chi_plus = {2 * chi_plus}, expected {gp + w}"))
    if 2 * chi_minus != gm - w:
        out.append(_v(code, f"2*chi_minus = {2 * chi_minus}, expected {gm - w}"))

    # I4: arcs realize phi, signs alternate
    want = {frozenset(pair) for pair in p.phi.pairs}
    have = set()
    for c in s.arcs:
        if not c.endpoints or len(c.endpoints) != 2:
            out.append(_v("I4", "arc without two endpoints", c.id))
            continue
        x, y = c.endpoints
        have.add(frozenset((x, y)))
        if c.id != arc_id(x, y):
            out.append(_v("I4", "arc id does not match its endpoints", c.id))
        if p.boundary.iota(x) == p.boundary.iota(y):
            out.append(_v("I4", "arc endpoints carry equal signs", c.id))
    if have != want:
        out.append(_v("I4", "arcs do not realize phi"))

    if out:
        return out

    # I5 and I6
    l = s.loop_count
    for side, chi_side in ((Side.PLUS, chi_plus), (Side.MINUS, chi_minus)):
        n_side, c_side = data[("n", side)], data[("c", side)]
        twice_h = c_side + l + n_side - chi_side
        if s.cusp_count == 0 and p.points:
            if twice_h % 2 or twice_h < 0 or twice_h // 2 < n_side:
                out.append(_v("I5", f"handle count {twice_h}/2 invalid for side {side.value}"))
        # lower bound: 2l >= 2 Delta + w (plus) or 2 Delta - w (minus)
        shift = w if side is Side.PLUS else -w
        bound2 = data[("delta2", side)] + shift
        if 2 * l < bound2 or (2 * l - bound2) % 4:
            out.append(_v("I6" if s.cusp_count == 0 else "I6c",
                          f"loop count {l} violates threshold {bound2}/2 on side {side.value}"))
    return out


@dataclass(frozen=True)
class Measure:
    c: int
    l: int
    chi_plus: int
    chi_minus: int
    h_plus: int | None
    h_minus: int | None
    arcs: int


def measure(s: DivideState) -> Measure:
    data = pattern_data(s.pattern)
    chi_plus = sum(f.chi for f in s.faces if f.color is Side.PLUS)
    chi_minus = sum(f.chi for f in s.faces if f.color is Side.MINUS)
    l, c = s.loop_count, s.cusp_count
    hs = {}
    for side, chi_side in ((Side.PLUS, chi_plus), (Side.MINUS, chi_minus)):
        ok = c == 0 and "fixed" in data
        hs[side] = (data[("c", side)] + l + data[("n", side)] - chi_side) // 2 if ok else None
    return Measure(c, l, chi_plus, chi_minus, hs[Side.PLUS], hs[Side.MINUS], len(s.arcs))


# -- canonical form -------------------------------------------------------------


def _cusp_label(curve: Curve) -> tuple:
    return (len(curve.cusps_pointing(Side.PLUS)), len(curve.cusps_pointing(Side.MINUS)))


def canonical_form(s: DivideState) -> str:
    """A string equal for two states iff they are isomorphic.

    Boundary data, arcs and the cycles through marked points are fixed
    labels; faces, loops and cusps are relabelable.  Trees of loop-only faces
    are folded into their parent's label first, the remaining core is refined
    and, if needed, individualized.
    """
    arcs = tuple(sorted((c.id, _cusp_label(c)) for c in s.arcs))
    base = {}
    for f in s.faces:
        fixed = tuple(sorted(repr(cyc) for cyc in f.boundary_cycles if cyc[0][0] != "loop"))
        base[f.id] = (f.color.value, f.genus, fixed)
    children = {fid: [] for fid in base}
    edges = {c.id: (_cusp_label(c), c.face_plus, c.face_minus) for c in s.loops}
    incident = {fid: set() for fid in base}
    for lid, (_, a, b) in edges.items():
        incident[a].add(lid)
        incident[b].add(lid)

    alive = set(base)
    queue = sorted(f for f in alive if not base[f][2] and len(incident[f]) == 1)
    while queue:
        f = queue.pop()
        if f not in alive or base[f][2] or len(incident[f]) != 1:
            continue
        (lid,) = incident[f]
        label, a, b = edges.pop(lid)
        g = b if a == f else a
        sig = (base[f], label, a == f, tuple(sorted(children[f])))
        children[g].append(repr(sig))
        incident[g].discard(lid)
        alive.discard(f)
        if not base[g][2] and len(incident[g]) == 1:
            queue.append(g)

    core = sorted(alive)
    init = {f: repr((base[f], tuple(sorted(children[f])))) for f in core}
    core_edges = list(edges.values())

    def refine(labels):
        while True:
            sigs = {}
            for f in core:
                nbr = []
                for label, a, b in core_edges:
                    if a == f:
                        nbr.append((label, "+", labels[b]))
                    elif b == f:
                        nbr.append((label, "-", labels[a]))
                sigs[f] = repr((labels[f], sorted(nbr)))
            ranks = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
            new = {f: f"{ranks[sigs[f]]:04d}" for f in core}
            if len(set(new.values())) == len(set(labels.values())):
                return new
            labels = new

    def serialize(labels):
        order = sorted(core, key=lambda f: labels[f])
        pos = {f: i for i, f in enumerate(order)}
        faces_part = [init[f] for f in order]
        edge_part = sorted((label, pos[a], pos[b]) for label, a, b in core_edges)
        return repr((arcs, faces_part, edge_part))

    def search(labels):
        labels = refine(labels)
        groups = Counter(labels.values())
        ties = sorted(lab for lab, n in groups.items() if n > 1)
        if not ties:
            return serialize(labels)
        members = sorted(f for f in core if labels[f] == ties[0])
        best = None
        for m in members:
            trial = dict(labels)
            trial[m] = ties[0] + "*"
            cand = search(trial)
            if best is None or cand < best:
                best = cand
        return best

    ranks = {lab: i for i, lab in enumerate(sorted(set(init.values())))}
    return search({f: f"{ranks[init[f]]:04d}" for f in core})


def canonical_key(s: DivideState) -> str:
    return hashlib.sha256(canonical_form(s).encode()).hexdigest()

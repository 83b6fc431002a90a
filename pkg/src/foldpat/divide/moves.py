"""Local modifications of divide states.

Every move is a frozen record naming the curves, cusps and faces it acts on.
:func:`enabled_moves` lists the moves applicable to a state and
:func:`apply_move` returns the rewritten state; inputs are never mutated.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from ..model import Side
from .state import Curve, Cusp, DivideState, Face, attach_faces


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class Surgery:
    """How a face is cut along an embedded arc or circle.

    Non-separating cuts lower the genus by one.  Separating cuts produce two
    faces: the first receives ``genus_first`` handles and the listed
    ``cycles_first`` (besides its distinguished cycle), the second the rest.
    ``cusps_first`` lists cusps that stay on the original curve when a curve
    is split in two.
    """

    separating: bool = True
    genus_first: int = 0
    cycles_first: tuple = ()
    cusps_first: tuple = ()


@dataclass(frozen=True)
class CreatePair:
    curve: str
    kind = "create_pair"


@dataclass(frozen=True)
class EliminatePair:
    cusp0: str
    cusp1: str
    surgery: Surgery | None = None
    kind = "eliminate_pair"


@dataclass(frozen=True)
class LoopGenI:
    curve: str
    side: Side
    kind = "loop_gen_i"


@dataclass(frozen=True)
class LoopGenII:
    cusp0: str
    cusp1: str
    behind: int = 0
    kind = "loop_gen_ii"


@dataclass(frozen=True)
class LoopSimplify:
    loop: str
    target: str
    via: str
    kind = "loop_simplify"


@dataclass(frozen=True)
class LoopReduce:
    loop0: str
    loop1: str
    middle: str
    via: str
    kind = "loop_reduce"


@dataclass(frozen=True)
class Tunnel:
    loop: str
    crossed0: str
    crossed1: str
    kind = "tunnel"


@dataclass(frozen=True)
class Balance:
    loop0: str
    loop1: str
    crossed0: str
    crossed1: str
    surgery: Surgery = field(default_factory=Surgery)
    kind = "balance"


MOVE_TYPES = (CreatePair, EliminatePair, LoopGenI, LoopGenII, LoopSimplify, LoopReduce, Tunnel, Balance)

# declared change of (cusps, loops)
EFFECTS = {
    "create_pair": (2, 0),
    "loop_gen_i": (0, 2),
    "loop_gen_ii": (-2, 1),
    "loop_simplify": (0, 0),
    "loop_reduce": (0, -2),
    "tunnel": (0, 0),
    "balance": (0, -2),
}


def declared_effect(move, state: DivideState) -> tuple:
    if move.kind == "eliminate_pair":
        same = state.host_of(move.cusp0).id == state.host_of(move.cusp1).id
        return (-2, 1 if same else -1)
    return EFFECTS[move.kind]


# -- working copy ---------------------------------------------------------------


class _Work:
    def __init__(self, s: DivideState):
        self.pattern = s.pattern
        self.faces = {f.id: [f.color, f.genus, list(f.boundary_cycles)] for f in s.faces}
        self.curves = {c.id: [c.kind, c.endpoints, list(c.cusps)] for c in s.curves}

    def _fresh(self, prefix, taken):
        nums = [int(m.group(1)) for t in taken if (m := re.fullmatch(prefix + r"(\d+)", t))]
        return f"{prefix}{max(nums, default=-1) + 1}"

    def new_face(self, color, genus, cycles):
        fid = self._fresh("F", self.faces)
        self.faces[fid] = [color, genus, list(cycles)]
        return fid

    def new_loop(self, cusps=()):
        lid = self._fresh("L", self.curves)
        self.curves[lid] = ["loop", None, list(cusps)]
        return lid

    def new_cusp(self, pointing):
        taken = [k.id for c in self.curves.values() for k in c[2]]
        return Cusp(self._fresh("k", taken), pointing)

    @staticmethod
    def loop_cycle(lid):
        return (("loop", lid),)

    def face_of(self, cid, side):
        item = (self.curves[cid][0], cid)
        for fid, (color, _, cycles) in self.faces.items():
            if color is side and any(item in cyc for cyc in cycles):
                return fid
        raise MoveError(f"curve {cid} has no {side.value} face")

    def cycle_of(self, cid, fid):
        item = (self.curves[cid][0], cid)
        for cyc in self.faces[fid][2]:
            if item in cyc:
                return cyc
        raise MoveError(f"curve {cid} does not border {fid}")

    def remove_cycle(self, fid, cyc):
        self.faces[fid][2].remove(cyc)

    def absorb(self, kept, removed, via):
        """Band ``removed`` into ``kept`` through face ``via``; ``removed`` must be a loop."""
        if self.curves[removed][0] != "loop":
            raise MoveError("only a loop can be absorbed")
        side = self.faces[via][0]
        back = side.opposite
        x = self.face_of(kept, back)
        y = self.face_of(removed, back)
        self.remove_cycle(via, self.loop_cycle(removed))
        self.remove_cycle(y, self.loop_cycle(removed))
        if x == y:
            self.faces[x][1] += 1
        else:
            self.faces[x][1] += self.faces[y][1]
            self.faces[x][2].extend(self.faces[y][2])
            del self.faces[y]
        self.curves[kept][2].extend(self.curves[removed][2])
        del self.curves[removed]

    def pop_cusp(self, kid):
        for c in self.curves.values():
            for k in c[2]:
                if k.id == kid:
                    c[2].remove(k)
                    return k
        raise MoveError(f"unknown cusp {kid}")

    def split_face(self, fid, surgery, keep_cycle, new_cycle):
        """Cut face ``fid`` so that ``keep_cycle`` and ``new_cycle`` end up as described."""
        color, genus, cycles = self.faces[fid]
        others = list(cycles)
        for cyc in (keep_cycle, new_cycle):
            if cyc in others:
                others.remove(cyc)
        if not surgery.separating:
            if genus < 1:
                raise MoveError("non-separating cut needs positive genus")
            self.faces[fid] = [color, genus - 1, others + [keep_cycle, new_cycle]]
            return fid, fid
        first = list(surgery.cycles_first)
        rest = list(others)
        for cyc in first:
            if cyc not in rest:
                raise MoveError("separating cut lists a cycle the face does not have")
            rest.remove(cyc)
        if not 0 <= surgery.genus_first <= genus:
            raise MoveError("separating cut has an impossible genus split")
        self.faces[fid] = [color, surgery.genus_first, [keep_cycle] + first]
        other = self.new_face(color, genus - surgery.genus_first, [new_cycle] + rest)
        return fid, other

    def state(self):
        faces = [Face(fid, color, genus, tuple(cycles))
                 for fid, (color, genus, cycles) in sorted(self.faces.items())]
        curves = [Curve(cid, kind, ends, tuple(cusps))
                  for cid, (kind, ends, cusps) in sorted(self.curves.items())]
        return attach_faces(self.pattern, faces, curves)


# -- move semantics -------------------------------------------------------------


def _require(cond, msg):
    if not cond:
        raise MoveError(msg)


def _create_pair(s, w, m):
    _require(m.curve in w.curves, f"unknown curve {m.curve}")
    w.curves[m.curve][2].append(w.new_cusp(Side.PLUS))
    w.curves[m.curve][2].append(w.new_cusp(Side.MINUS))


def _pair_face(s, cusp0, cusp1):
    _require(cusp0 != cusp1, "a cusp pair needs two distinct cusps")
    k0, k1 = s.cusp(cusp0), s.cusp(cusp1)
    v0, v1 = s.pointing_face(cusp0), s.pointing_face(cusp1)
    _require(k0.pointing is k1.pointing and v0 == v1, "cusps do not point into the same face")
    return k0.pointing, v0


def _eliminate_pair(s, w, m):
    side, via = _pair_face(s, m.cusp0, m.cusp1)
    a, b = s.host_of(m.cusp0), s.host_of(m.cusp1)
    w.pop_cusp(m.cusp0)
    w.pop_cusp(m.cusp1)
    if a.id != b.id:
        _require(m.surgery is None, "joining two curves takes no surgery descriptor")
        _require(a.is_loop or b.is_loop, "joining two arcs would change the pairing")
        kept, removed = (a.id, b.id) if (not a.is_loop or b.is_loop) else (b.id, a.id)
        w.absorb(kept, removed, via)
        return
    surgery = m.surgery or Surgery()
    back = side.opposite
    x = w.face_of(a.id, back)
    t1 = w.cycle_of(a.id, via)
    lid = w.new_loop()
    t2 = w.loop_cycle(lid)
    w.split_face(via, surgery, t1, t2)
    w.faces[x][2].append(t2)
    stay = set(surgery.cusps_first)
    cusps = w.curves[a.id][2]
    w.curves[a.id][2] = [k for k in cusps if k.id in stay]
    w.curves[lid][2] = [k for k in cusps if k.id not in stay]


def _loop_gen_i(s, w, m):
    _require(m.curve in w.curves, f"unknown curve {m.curve}")
    f = w.face_of(m.curve, m.side)
    l1 = w.new_loop()
    l2 = w.new_loop()
    w.faces[f][2].append(w.loop_cycle(l1))
    w.new_face(m.side.opposite, 0, [w.loop_cycle(l1), w.loop_cycle(l2)])
    w.new_face(m.side, 0, [w.loop_cycle(l2)])


def _loop_gen_ii(s, w, m):
    side, _ = _pair_face(s, m.cusp0, m.cusp1)
    _require(m.behind in (0, 1), "behind must be 0 or 1")
    host = s.host_of((m.cusp0, m.cusp1)[m.behind]).id
    x = w.face_of(host, side.opposite)
    w.pop_cusp(m.cusp0)
    w.pop_cusp(m.cusp1)
    lid = w.new_loop()
    w.faces[x][2].append(w.loop_cycle(lid))
    w.new_face(side, 0, [w.loop_cycle(lid)])


def _loop_simplify(s, w, m):
    _require(m.loop in w.curves and w.curves[m.loop][0] == "loop", "first curve must be a loop")
    _require(m.target in w.curves and m.target != m.loop, "target must be another curve")
    c, d = s.curve(m.loop), s.curve(m.target)
    _require(m.via in (c.face_plus, c.face_minus) and m.via in (d.face_plus, d.face_minus),
             "via face must border both curves")
    w.absorb(m.target, m.loop, m.via)
    lid = w.new_loop()
    w.faces[m.via][2].append(w.loop_cycle(lid))
    w.new_face(w.faces[m.via][0].opposite, 0, [w.loop_cycle(lid)])


def _loop_reduce(s, w, m):
    ids = {m.loop0, m.loop1, m.middle}
    _require(len(ids) == 3 and ids <= set(w.curves), "three distinct curves required")
    _require(s.curve(m.loop0).is_loop and s.curve(m.loop1).is_loop, "reduced curves must be loops")
    c0, mid = s.curve(m.loop0), s.curve(m.middle)
    _require(m.via in (c0.face_plus, c0.face_minus) and m.via in (mid.face_plus, mid.face_minus),
             "via face must border the first loop and the middle curve")
    other = s.other_face(m.middle, m.via)
    c1 = s.curve(m.loop1)
    _require(other in (c1.face_plus, c1.face_minus), "second loop must border the far side of the middle curve")
    w.absorb(m.middle, m.loop0, m.via)
    w.absorb(m.middle, m.loop1, w.face_of(m.middle, s.face(other).color))


def _tunnel_path(s, loop, crossed0, crossed1):
    disk = s.disk_side(loop)
    _require(disk is not None, "tunneled loop must be contractible")
    outer = s.other_face(loop, disk)
    _require(len({loop, crossed0, crossed1}) == 3, "three distinct curves required")
    d0, d1 = s.curve(crossed0), s.curve(crossed1)
    _require(outer in (d0.face_plus, d0.face_minus), "first crossed curve must border the loop's face")
    mid = s.other_face(crossed0, outer)
    _require(mid in (d1.face_plus, d1.face_minus), "second crossed curve must border the middle face")
    far = s.other_face(crossed1, mid)
    return disk, outer, mid, far


def _tunnel(s, w, m):
    _, outer, _, far = _tunnel_path(s, m.loop, m.crossed0, m.crossed1)
    _require(far != outer, "tunnel must reach a different face")
    cyc = w.loop_cycle(m.loop)
    w.remove_cycle(outer, cyc)
    w.faces[far][2].append(cyc)


def _balance(s, w, m):
    _require(m.loop0 != m.loop1, "two distinct loops required")
    for lid in (m.loop0, m.loop1):
        _require(s.curve(lid).is_loop and not s.curve(lid).cusps, "balanced loops must be pure")
        _require(s.disk_side(lid) is not None, "balanced loops must be contractible")
    disk0, outer0 = s.disk_side(m.loop0), None
    disk1 = s.disk_side(m.loop1)
    outer0 = s.other_face(m.loop0, disk0)
    outer1 = s.other_face(m.loop1, disk1)
    _require(len({m.loop0, m.loop1, m.crossed0, m.crossed1}) == 4, "crossed curves must differ from the loops")
    d0, d1 = s.curve(m.crossed0), s.curve(m.crossed1)
    _require(outer0 in (d0.face_plus, d0.face_minus), "first crossed curve must border the first loop's face")
    mid = s.other_face(m.crossed0, outer0)
    _require(mid in (d1.face_plus, d1.face_minus), "second crossed curve must border the middle face")
    _require(s.other_face(m.crossed1, mid) == outer1, "second crossed curve must reach the second loop's face")
    t0 = w.cycle_of(m.crossed0, mid)
    t1 = w.cycle_of(m.crossed1, mid)
    if m.surgery.separating:
        _require(t0 != t1, "separating compression needs the crossed curves on different cycles")
    for lid, disk, outer in ((m.loop0, disk0, outer0), (m.loop1, disk1, outer1)):
        w.remove_cycle(outer, w.loop_cycle(lid))
        del w.faces[disk]
        del w.curves[lid]
    if outer0 == outer1:
        w.faces[outer0][1] += 1
    else:
        w.faces[outer0][1] += w.faces[outer1][1]
        w.faces[outer0][2].extend(w.faces[outer1][2])
        del w.faces[outer1]
    if m.surgery.separating:
        w.split_face(mid, m.surgery, t0, t1)
    else:
        _require(w.faces[mid][1] >= 1, "non-separating compression needs positive genus")
        w.faces[mid][1] -= 1


_APPLY = {
    "create_pair": _create_pair,
    "eliminate_pair": _eliminate_pair,
    "loop_gen_i": _loop_gen_i,
    "loop_gen_ii": _loop_gen_ii,
    "loop_simplify": _loop_simplify,
    "loop_reduce": _loop_reduce,
    "tunnel": _tunnel,
    "balance": _balance,
}


def apply_move(state: DivideState, move) -> DivideState:
    w = _Work(state)
    try:
        _APPLY[move.kind](state, w, move)
    except KeyError as e:
        raise MoveError(f"unknown reference {e.args[0]!r}") from None
    return w.state()


# -- enumeration ----------------------------------------------------------------


def _subsets(cycles):
    """Distinct sub-multisets of a list of cycles."""
    seen = set()
    for r in range(len(cycles) + 1):
        for combo in itertools.combinations(range(len(cycles)), r):
            pick = tuple(cycles[i] for i in combo)
            key = tuple(sorted(map(repr, pick)))
            if key not in seen:
                seen.add(key)
                yield pick


def _remove_once(cycles, *drop):
    out = list(cycles)
    for cyc in drop:
        if cyc in out:
            out.remove(cyc)
    return out


def _face_cuts(face: Face, keep, new, cusp_choices=((),)):
    """All surgery descriptors cutting ``face`` between cycles ``keep`` and ``new``."""
    others = _remove_once(face.boundary_cycles, keep, new)
    for cusps in cusp_choices:
        if face.genus >= 1:
            yield Surgery(False, 0, (), cusps)
        if keep != new or new is None:
            for g in range(face.genus + 1):
                for first in _subsets(others):
                    yield Surgery(True, g, first, cusps)


def _cusp_splits(cusps):
    plus = [k.id for k in cusps if k.pointing is Side.PLUS]
    minus = [k.id for k in cusps if k.pointing is Side.MINUS]
    for i in range(len(plus) + 1):
        for j in range(len(minus) + 1):
            yield tuple(plus[:i] + minus[:j])


def _cusp_classes(s: DivideState):
    """Representative cusp ids per (curve, pointing side), with the face pointed into."""
    out = []
    for c in s.curves:
        for side in Side:
            ids = [k.id for k in c.cusps_pointing(side)]
            if ids:
                out.append((c, side, c.face(side), ids))
    return out


def enabled_moves(s: DivideState) -> list:
    moves = []
    for c in s.curves:
        moves.append(CreatePair(c.id))
    for c in s.curves:
        for side in Side:
            moves.append(LoopGenI(c.id, side))

    classes = _cusp_classes(s)
    for i, (c, side, face, ids) in enumerate(classes):
        if len(ids) >= 2:
            k0, k1 = ids[:2]
            rest = [k for k in c.cusps if k.id not in (k0, k1)]
            keep = s.curve_cycle(c.id, face)
            for cut in _face_cuts(s.face(face), keep, None, tuple(_cusp_splits(rest))):
                moves.append(EliminatePair(k0, k1, cut))
            moves.append(LoopGenII(k0, k1, 0))
        for c2, side2, face2, ids2 in classes[i + 1:]:
            if side2 is not side or face2 != face:
                continue
            pair = (ids[0], ids2[0])
            if c.is_loop or c2.is_loop:
                moves.append(EliminatePair(*pair))
            moves.append(LoopGenII(*pair, 0))
            if s.other_face(c.id, face) != s.other_face(c2.id, face):
                moves.append(LoopGenII(*pair, 1))

    for c in s.loops:
        for via in dict.fromkeys((c.face_plus, c.face_minus)):
            for d in dict.fromkeys(s.curves_in(via)):
                if d != c.id:
                    moves.append(LoopSimplify(c.id, d, via))
                    far = s.other_face(d, via)
                    for c1 in dict.fromkeys(s.curves_in(far)):
                        if c1 not in (c.id, d) and s.curve(c1).is_loop:
                            moves.append(LoopReduce(c.id, c1, d, via))

    contractible = [c for c in s.loops if s.disk_side(c.id) is not None]
    for c in contractible:
        outer = s.other_face(c.id, s.disk_side(c.id))
        for d0 in dict.fromkeys(s.curves_in(outer)):
            if d0 == c.id:
                continue
            mid = s.other_face(d0, outer)
            for d1 in dict.fromkeys(s.curves_in(mid)):
                if d1 not in (c.id, d0) and s.other_face(d1, mid) != outer:
                    moves.append(Tunnel(c.id, d0, d1))

    pure = [c for c in contractible if not c.cusps]
    for c0, c1 in itertools.permutations(pure, 2):
        outer0 = s.other_face(c0.id, s.disk_side(c0.id))
        outer1 = s.other_face(c1.id, s.disk_side(c1.id))
        for d0 in dict.fromkeys(s.curves_in(outer0)):
            if d0 in (c0.id, c1.id):
                continue
            mid = s.other_face(d0, outer0)
            for d1 in dict.fromkeys(s.curves_in(mid)):
                if d1 in (c0.id, c1.id, d0) or s.other_face(d1, mid) != outer1:
                    continue
                t0, t1 = s.curve_cycle(d0, mid), s.curve_cycle(d1, mid)
                for cut in _face_cuts(s.face(mid), t0, t1):
                    if cut.separating and t0 == t1:
                        continue
                    moves.append(Balance(c0.id, c1.id, d0, d1, cut))
    return moves

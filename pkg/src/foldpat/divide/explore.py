"""Breadth-first reachability over canonical divide states."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..invariants import loop_set_no_cusps
from .moves import apply_move, enabled_moves
from .state import DivideState, canonical_key, validate_state


@dataclass(frozen=True)
class Limits:
    max_depth: int = 8
    max_loops: int = 6
    max_states: int = 200_000
    max_cusps: int | None = None  # default: starting cusp count + 2


@dataclass
class ExploreResult:
    reachable_cl: set = field(default_factory=set)
    witnesses: dict = field(default_factory=dict)
    states_seen: int = 0
    depth_reached: int = 0
    partial: bool = False
    violations: list = field(default_factory=list)

    def loops_at(self, c: int) -> set:
        return {l for cc, l in self.reachable_cl if cc == c}


class ExplorationLimitError(RuntimeError):
    def __init__(self, message, partial: ExploreResult):
        super().__init__(message)
        self.partial = partial


class InconclusiveError(RuntimeError):
    pass


def thread_count() -> int:
    raw = os.environ.get("FOLDPAT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _expand(state: DivideState):
    return [(m, apply_move(state, m)) for m in enabled_moves(state)]


def explore(start: DivideState, limits: Limits = Limits(), check: bool = False) -> ExploreResult:
    """Enumerate reachable (cusps, loops) pairs with shortest move scripts.

    The frontier of each depth is processed in canonical-key order, so the
    result and the witnesses do not depend on the thread count.  With
    ``check`` every new state is validated and problems are collected.
    """
    if min(limits.max_depth, limits.max_loops, limits.max_states) < 0:
        raise ValueError("limits must be non-negative")
    max_cusps = limits.max_cusps if limits.max_cusps is not None else start.cusp_count + 2
    key0 = canonical_key(start)
    parent = {key0: None}
    result = ExploreResult()
    cl0 = (start.cusp_count, start.loop_count)
    result.reachable_cl.add(cl0)
    result.witnesses[cl0] = []
    frontier = [(key0, start)]
    workers = thread_count()
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        for depth in range(1, limits.max_depth + 1):
            if not frontier:
                break
            states = [s for _, s in frontier]
            expanded = list(pool.map(_expand, states)) if pool else [_expand(s) for s in states]
            candidates = {}
            for (pkey, _), children in zip(frontier, expanded):
                for move, child in children:
                    if child.loop_count > limits.max_loops or child.cusp_count > max_cusps:
                        continue
                    key = canonical_key(child)
                    if key in parent or key in candidates:
                        continue
                    candidates[key] = (pkey, move, child)
            frontier = []
            for key in sorted(candidates):
                pkey, move, child = candidates[key]
                parent[key] = (pkey, move)
                frontier.append((key, child))
                if check:
                    for v in validate_state(child):
                        result.violations.append((key, v))
                cl = (child.cusp_count, child.loop_count)
                if cl not in result.witnesses:
                    result.reachable_cl.add(cl)
                    result.witnesses[cl] = _script(parent, key)
            result.depth_reached = depth
            result.states_seen = len(parent)
            if len(parent) > limits.max_states:
                result.partial = True
                raise ExplorationLimitError(
                    f"state budget {limits.max_states} exhausted at depth {depth}", result)
    finally:
        if pool:
            pool.shutdown()
    result.states_seen = len(parent)
    return result


def _script(parent, key):
    moves = []
    while parent[key] is not None:
        key, move = parent[key]
        moves.append(move)
    return moves[::-1]


def loop_lower_bound(start: DivideState) -> int:
    """Least loop count allowed at zero cusps by the threshold inequalities."""
    least = loop_set_no_cusps(start.pattern).least
    if least is None:
        raise ValueError("pattern admits no cusp-free state")
    return least


def min_loops(start: DivideState, max_depth: int = 16, max_states: int = 200_000):
    """Least loop count among reachable cusp-free states, with its witness script.

    Limits grow until the threshold lower bound is attained; otherwise the
    search is inconclusive.
    """
    if start.cusp_count != 0:
        raise ValueError("min_loops needs a cusp-free starting state")
    bound = loop_lower_bound(start)
    if start.loop_count == bound:
        return bound, []
    best = None
    for depth in range(2, max_depth + 1, 2):
        limits = Limits(depth, max(start.loop_count, bound) + 2, max_states)
        try:
            res = explore(start, limits)
        except ExplorationLimitError as e:
            res = e.partial
        zero = sorted(res.loops_at(0))
        if zero:
            best = zero[0]
            if best <= bound:
                return best, res.witnesses[(0, best)]
        if res.partial:
            break
    raise InconclusiveError(
        f"lower bound {bound} not attained (best found: {best}) within depth {max_depth}")

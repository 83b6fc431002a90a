"""Command-line front end.

Every subcommand prints one JSON result document on stdout.  Exit codes:
0 success, 1 validation failure, 2 usage error, 3 inconclusive exploration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import invariants as inv
from .divide.catalog import catalog as catalog_entries, entry as catalog_entry
from .divide.explore import (ExplorationLimitError, InconclusiveError, Limits, explore,
                             min_loops)
from .divide.moves import MoveError, apply_move
from .divide.state import measure, validate_state
from .gluing import CobordismPattern, GluingError, glue
from .model import Pattern, Surface, validate_pattern
from .realizability import adapted_exists, realizable, sign_condition
from .serialize import VERSION, DocumentError, from_document, move_to_dict, to_document

OK, INVALID, USAGE, INCONCLUSIVE = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _emit(result: str, payload) -> None:
    doc = {"version": VERSION, "result": result, "payload": payload}
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _read(path: str, expect: str | None = None):
    if path.startswith("catalog:"):
        name = path.split(":", 1)[1]
        try:
            state = catalog_entry(name).state
        except KeyError:
            raise _Usage(f"unknown catalog entry {name!r}") from None
        if expect == "pattern":
            return state.pattern
        return state
    try:
        with open(path, encoding="utf-8") as fh:
            return from_document(json.load(fh), expect)
    except OSError as e:
        raise _Usage(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise _Usage(f"{path}: invalid JSON: {e}") from None


def _loopset(ls) -> dict:
    out = {"kind": ls.kind, "min": ls.min, "step": ls.step}
    if ls.reason:
        out["reason"] = ls.reason
    return out


def _violations(vs) -> list:
    return [{"code": v.code, "message": v.message, "locus": [str(x) for x in v.locus]} for v in vs]


def _pattern_or_fail(path):
    pattern = _read(path, "pattern")
    problems = validate_pattern(pattern)
    return pattern, problems


def cmd_validate(args):
    obj = _read(args.file)
    if isinstance(obj, Pattern):
        problems = validate_pattern(obj)
    elif isinstance(obj, CobordismPattern):
        problems = obj.validate()
    elif hasattr(obj, "faces"):
        problems = validate_state(obj)
    else:
        raise _Usage("validate takes a pattern, cobordism or state document")
    _emit("validation", {"valid": not problems, "violations": _violations(problems)})
    return OK if not problems else INVALID


def _with_pattern(args, compute, result):
    pattern, problems = _pattern_or_fail(args.file)
    if problems:
        _emit("validation", {"valid": False, "violations": _violations(problems)})
        return INVALID
    try:
        payload = compute(pattern)
    except inv.InvariantError as e:
        print(f"error: {e}", file=sys.stderr)
        _emit("error", {"message": str(e)})
        return INVALID
    _emit(result, payload)
    return OK


def cmd_invariants(args):
    return _with_pattern(args, inv.summary, "invariants")


def cmd_realizable(args):
    def compute(p):
        return {"realizable": realizable(p), "sign_condition": sign_condition(p),
                "adapted_embedding": adapted_exists(p) if p.points else True}
    return _with_pattern(args, compute, "realizability")


def cmd_loops(args):
    return _with_pattern(args, lambda p: _loopset(inv.loop_set_no_cusps(p)), "loop_set")


def cmd_cusploops(args):
    def compute(p):
        union = inv.cusp_loop_set(p, args.cusps)
        return {"cusps": args.cusps, "components": [_loopset(c) for c in union.components]}
    return _with_pattern(args, compute, "cusp_loop_set")


def cmd_pseudo(args):
    if (1 - args.chi) % 2 or args.chi > 1:
        _emit("error", {"message": "a one-boundary orientable surface has odd chi <= 1"})
        return INVALID
    surface = Surface(True, (1 - args.chi) // 2, ("C1",))
    try:
        ls = inv.pseudo_immersion_loop_set(surface, args.winding)
    except inv.InvariantError as e:
        _emit("error", {"message": str(e)})
        return INVALID
    _emit("loop_set", _loopset(ls))
    return OK


def cmd_glue(args):
    a, b = _read(args.a, "cobordism"), _read(args.b, "cobordism")
    m = _read(args.interface, "interface")
    try:
        res = glue(a, b, m)
    except GluingError as e:
        print(f"error: {e}", file=sys.stderr)
        _emit("error", {"message": str(e)})
        return INVALID
    for w in res.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit("glue", {"glued": to_document(res.glued), "closed_loops_created": res.closed_loops_created,
                   "warnings": list(res.warnings)})
    return OK


def _explore_payload(res):
    return {
        "reachable_cl": sorted([list(cl) for cl in res.reachable_cl]),
        "witnesses": [{"c": c, "l": l, "moves": [move_to_dict(m) for m in res.witnesses[(c, l)]]}
                      for c, l in sorted(res.witnesses)],
        "states_seen": res.states_seen,
        "depth_reached": res.depth_reached,
        "partial": res.partial,
    }


def cmd_sim(args):
    state = _read(args.state, "state")
    problems = validate_state(state)
    if args.action == "validate":
        _emit("validation", {"valid": not problems, "violations": _violations(problems),
                             "measure": asdict(measure(state)) if not problems else None})
        return OK if not problems else INVALID
    if problems:
        _emit("validation", {"valid": False, "violations": _violations(problems)})
        return INVALID
    if args.action == "apply":
        if not args.moves:
            raise _Usage("sim apply needs --moves")
        script = _read(args.moves, "moves")
        for i, m in enumerate(script):
            try:
                state = apply_move(state, m)
            except MoveError as e:
                print(f"error: move {i} not enabled: {e}", file=sys.stderr)
                _emit("error", {"message": f"move {i} not enabled: {e}", "index": i})
                return INVALID
        _emit("state", to_document(state))
        return OK
    limits = Limits(args.max_depth, args.max_loops, args.max_states, args.max_cusps)
    if args.action == "explore":
        try:
            res = explore(state, limits)
        except ExplorationLimitError as e:
            print(f"inconclusive: {e}", file=sys.stderr)
            _emit("explore", _explore_payload(e.partial))
            return INCONCLUSIVE
        _emit("explore", _explore_payload(res))
        return OK
    try:
        best, script = min_loops(state, args.max_depth, args.max_states)
    except InconclusiveError as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        _emit("min_loops", {"min_loops": None, "message": str(e)})
        return INCONCLUSIVE
    except ValueError as e:
        _emit("error", {"message": str(e)})
        return INVALID
    _emit("min_loops", {"min_loops": best, "witness": [move_to_dict(m) for m in script]})
    return OK


def catalog_report(depth: int = 6, max_loops: int = 4) -> tuple:
    """Compare BFS loop counts with the closed forms on every catalog entry."""
    rows, ok = [], True
    for e in catalog_entries():
        s = e.state
        problems = validate_state(s)
        m = measure(s)
        res = explore(s, Limits(depth, max_loops))
        c0 = s.cusp_count
        bfs = sorted(res.loops_at(c0))
        if c0 == 0:
            closed = sorted(inv.loop_set_no_cusps(s.pattern).truncate(max_loops))
        else:
            closed = sorted(inv.cusp_loop_set(s.pattern, c0).truncate(max_loops))
        parity = all(c % 2 == c0 % 2 for c, _ in res.reachable_cl)
        agree = not problems and bfs == closed and parity
        ok &= agree
        rows.append({"name": e.name, "valid": not problems, "measure": asdict(m), "cusps": c0,
                     "bfs_loops": bfs, "closed_form_loops": closed, "parity_conserved": parity,
                     "agree": agree})
    return ok, rows


def cmd_check(args):
    if not args.catalog:
        raise _Usage("check needs --catalog")
    ok, rows = catalog_report(args.max_depth, args.max_loops)
    for r in rows:
        mark = "ok  " if r["agree"] else "FAIL"
        print(f"{mark} {r['name']:<14} bfs={r['bfs_loops']} closed={r['closed_form_loops']}",
              file=sys.stderr)
    _emit("catalog_check", {"depth": args.max_depth, "max_loops": args.max_loops, "entries": rows})
    return OK if ok else INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="foldpat", description="Invariants and realizations of singular patterns.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, help_ in (("validate", cmd_validate, "check a pattern, cobordism or state"),
                            ("invariants", cmd_invariants, "closed-form invariants of a pattern"),
                            ("realizable", cmd_realizable, "decide realizability of a pattern"),
                            ("loops", cmd_loops, "loop counts of cusp-free realizations")):
        q = sub.add_parser(name, help=help_)
        q.add_argument("file")
        q.set_defaults(func=fn)
    q = sub.add_parser("cusploops", help="loop counts of realizations with a given cusp count")
    q.add_argument("file")
    q.add_argument("--cusps", type=int, required=True)
    q.set_defaults(func=cmd_cusploops)
    q = sub.add_parser("pseudo", help="loop counts of pseudo-immersions of a one-boundary surface")
    q.add_argument("--chi", type=int, required=True)
    q.add_argument("--winding", type=int, required=True)
    q.set_defaults(func=cmd_pseudo)
    q = sub.add_parser("glue", help="glue two cobordism patterns")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--interface", required=True)
    q.set_defaults(func=cmd_glue)
    q = sub.add_parser("sim", help="divide-state engine")
    q.add_argument("action", choices=("validate", "apply", "explore", "minloops"))
    q.add_argument("state", help="state document, or catalog:<name>")
    q.add_argument("--moves")
    q.add_argument("--max-depth", type=int, default=8)
    q.add_argument("--max-loops", type=int, default=5)
    q.add_argument("--max-states", type=int, default=200_000)
    q.add_argument("--max-cusps", type=int, default=None)
    q.set_defaults(func=cmd_sim)
    q = sub.add_parser("check", help="BFS versus closed forms on the built-in catalog")
    q.add_argument("--catalog", action="store_true")
    q.add_argument("--max-depth", type=int, default=6)
    q.add_argument("--max-loops", type=int, default=4)
    q.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

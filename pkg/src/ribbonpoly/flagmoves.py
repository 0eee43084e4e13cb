"""Flag moves and the equivalence they generate.

A move takes one flag out of its rotation slot and inserts it elsewhere.
Legality is judged on the graph with that flag removed: reinserting on the
same boundary walk is a displacement; landing on a different walk is a jump,
legal in strict mode only when both walks are open there (the source circle
keeps another flag, the target is an existing boundary circle).  Relaxed
mode instead accepts any move preserving the face and boundary-circle
counts; every strict move qualifies.

Equivalence of two graphs is decided by breadth-first search over legal
moves with rotation-canonical dedup, bounded by a state budget, after sound
quick rejects on move-invariant data.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError, RibbonGraph, strip_flags
from .invariants import state_sum_polynomial
from .topology import basic_invariants, trace_boundary

DISPLACEMENT = "displacement"
JUMP = "jump"


@dataclass(frozen=True)
class FlagMove:
    flag: str
    source: tuple  # (vertex id, index of the flag in that rotation)
    target: tuple  # (vertex id, insertion slot in the rotation minus the flag)
    kind: str


def _without_flag(g, flag):
    vid = g.vertex_of(flag)
    rot = g.vertices[vid]
    idx = rot.index(flag)
    vertices = dict(g.vertices)
    vertices[vid] = rot[:idx] + rot[idx + 1:]
    flags = set(g.flags)
    flags.remove(flag)
    g0 = RibbonGraph(vertices, g.edges, flags, name=g.name, validate=False)
    return g0, vid, idx


def _slot_walk(rep, g0, vid, slot):
    rot = g0.vertices[vid]
    if not rot:
        return rep.walk_of_bare_vertex(vid)
    return rep.walk_of_strand((rot[slot % len(rot)], 0))


def apply_flag_move(g, move):
    if move.flag not in g.flags:
        raise GraphError(f"no such flag {move.flag!r}")
    g0, svid, sidx = _without_flag(g, move.flag)
    if move.source != (svid, sidx):
        raise GraphError(
            f"move source {move.source!r} does not match the flag's slot "
            f"({svid!r}, {sidx})")
    tvid, slot = move.target
    if tvid not in g0.vertices:
        raise GraphError(f"no such vertex {tvid!r}")
    rot = g0.vertices[tvid]
    slot %= max(len(rot), 1)
    vertices = dict(g0.vertices)
    vertices[tvid] = rot[:slot] + (move.flag,) + rot[slot:]
    return RibbonGraph(vertices, g.edges, g.flags, name=g.name, validate=False)


def legal_flag_moves(g, mode="strict"):
    """All legal single moves, deterministically ordered by (flag, target
    vertex, slot).  The identity reinsertion is never listed."""
    if mode not in ("strict", "relaxed"):
        raise GraphError(f"unknown mode {mode!r}")
    out = []
    base = None
    if mode == "relaxed":
        rep = trace_boundary(g)
        base = (rep.F_int, rep.C_bnd)
    for flag in sorted(g.flags):
        g0, svid, sidx = _without_flag(g, flag)
        rep0 = trace_boundary(g0)
        src_rot = g0.vertices[svid]
        src_walk = _slot_walk(rep0, g0, svid, sidx % max(len(src_rot), 1)) \
            if src_rot else rep0.walk_of_bare_vertex(svid)
        src_open = rep0.walks[src_walk].is_open
        for tvid in sorted(g.vertices):
            width = max(len(g0.vertices[tvid]), 1)
            for slot in range(width):
                if tvid == svid and slot == sidx % width:
                    continue
                tgt_walk = _slot_walk(rep0, g0, tvid, slot)
                kind = DISPLACEMENT if tgt_walk == src_walk else JUMP
                move = FlagMove(flag, (svid, sidx), (tvid, slot), kind)
                if mode == "strict":
                    if kind == JUMP and not (
                            src_open and rep0.walks[tgt_walk].is_open):
                        continue
                else:
                    moved = apply_flag_move(g, move)
                    rep1 = trace_boundary(moved)
                    if (rep1.F_int, rep1.C_bnd) != base:
                        continue
                out.append(move)
    return out


def is_legal_move(g, move, mode="strict"):
    """Whether this single move is legal on g.  The recorded kind is not
    trusted; legality is judged from the graph itself, so a move carried
    over from a related graph can be tested directly."""
    if mode not in ("strict", "relaxed"):
        raise GraphError(f"unknown mode {mode!r}")
    if move.flag not in g.flags:
        return False
    g0, svid, sidx = _without_flag(g, move.flag)
    if move.source != (svid, sidx):
        return False
    tvid, slot = move.target
    if tvid not in g0.vertices:
        return False
    width = max(len(g0.vertices[tvid]), 1)
    swidth = max(len(g0.vertices[svid]), 1)
    if tvid == svid and slot % width == sidx % swidth:
        return False
    if mode == "relaxed":
        rep = trace_boundary(g)
        rep1 = trace_boundary(apply_flag_move(g, move))
        return (rep1.F_int, rep1.C_bnd) == (rep.F_int, rep.C_bnd)
    rep0 = trace_boundary(g0)
    src_walk = _slot_walk(rep0, g0, svid, sidx % swidth)
    tgt_walk = _slot_walk(rep0, g0, tvid, slot)
    if tgt_walk == src_walk:
        return True
    return rep0.walks[src_walk].is_open and rep0.walks[tgt_walk].is_open


def move_json(move):
    return {"flag": move.flag, "from": list(move.source),
            "to": list(move.target), "kind": move.kind}


@dataclass(frozen=True)
class EquivalenceResult:
    answer: str            # "yes" | "no" | "unknown"
    moves: tuple | None    # witness sequence when yes
    explored: int          # distinct states seen by the search


def _invariant_key(g):
    inv = basic_invariants(g)
    return (inv.V, inv.E, inv.f, inv.k, inv.r, inv.n,
            inv.F_int, inv.C_bnd, inv.t)


def _skeleton_text(g):
    return strip_flags(g).canonical_text()


def flag_equivalent(g1, g2, budget=10000, mode="strict"):
    """Decide whether g2 is reachable from g1 by legal moves.

    Sound rejects first: moves change neither the invariant tuple, the flag
    id set, nor the flagless skeleton, so any mismatch is a definite "no".
    Then breadth-first search; "no" also when the whole class was explored
    under budget, "unknown" when the budget cut exploration short."""
    if _invariant_key(g1) != _invariant_key(g2):
        return EquivalenceResult("no", None, 0)
    if set(g1.flags) != set(g2.flags):
        return EquivalenceResult("no", None, 0)
    if _skeleton_text(g1) != _skeleton_text(g2):
        return EquivalenceResult("no", None, 0)
    target = g2.canonical_text()
    start_key = g1.canonical_text()
    if start_key == target:
        return EquivalenceResult("yes", (), 1)
    visited = {start_key}
    queue = [(g1, ())]
    truncated = False
    while queue:
        nxt = []
        for state, path in queue:
            for move in legal_flag_moves(state, mode):
                child = apply_flag_move(state, move)
                key = child.canonical_text()
                if key == target:
                    return EquivalenceResult("yes", path + (move,),
                                             len(visited) + 1)
                if key in visited:
                    continue
                if len(visited) >= budget:
                    truncated = True
                    continue
                visited.add(key)
                nxt.append((child, path + (move,)))
        queue = nxt
    answer = "unknown" if truncated else "no"
    return EquivalenceResult(answer, None, len(visited))


def class_polynomial(g):
    """The six-variable polynomial of the graph's flag-equivalence class,
    well defined because flag-equivalent graphs share it."""
    return state_sum_polynomial(g)

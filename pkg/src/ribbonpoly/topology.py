"""Boundary structure of a ribbon graph: walks, faces, orientability, ranks.

The boundary of the underlying surface is traced through (stub, side) tokens,
side 0 facing the previous stub in the rotation and side 1 the next.  A walk
alternates vertex-boundary arcs (corners between consecutive stubs) with band
arcs: crossing an untwisted edge connects side 0 at one end to side 1 at the
other, a twisted edge connects equal sides, and a flag connects its own two
sides through its free segment, which records the flag and makes the walk
open.  This side convention is pinned by the two one-loop examples: an
untwisted trivial loop bounds an annulus (two walks), a twisted one a Moebius
band (one walk).

Closed walks are interior faces (F_int); open walks are boundary circles
through flags (C_bnd).  Each (stub, side) token lands in exactly one walk, and
each new walk starts from the lexicographically least unvisited token, so
reports are deterministic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import (GraphError, RibbonGraph, component_count, cut_edge,
                    edge_end, is_edge_end, split_end)


@dataclass(frozen=True)
class BoundaryWalk:
    strands: tuple           # ((stub, side), ...) in traversal order
    flags: tuple             # flag ids in traversal order; empty iff closed
    vertex: str | None = None  # set only for a bare vertex's whole-circle walk

    @property
    def is_open(self):
        return bool(self.flags)


@dataclass(frozen=True)
class BoundaryReport:
    walks: tuple
    F_int: int
    C_bnd: int
    _strand_walk: dict = field(repr=False, hash=False, compare=False)
    _vertex_walk: dict = field(repr=False, hash=False, compare=False)

    def walk_of_strand(self, token):
        return self._strand_walk[token]

    def walk_of_bare_vertex(self, vid):
        return self._vertex_walk[vid]


def trace_boundary(g):
    corner = {}
    band = {}
    bare = []
    for vid, rot in g.vertices.items():
        d = len(rot)
        if d == 0:
            bare.append(vid)
            continue
        for i, s in enumerate(rot):
            nxt = rot[(i + 1) % d]
            corner[(s, 1)] = (nxt, 0)
            corner[(nxt, 0)] = (s, 1)
    for eid, twisted in g.edges.items():
        a, b = edge_end(eid, "a"), edge_end(eid, "b")
        if twisted:
            band[(a, 0)] = ((b, 0), None)
            band[(b, 0)] = ((a, 0), None)
            band[(a, 1)] = ((b, 1), None)
            band[(b, 1)] = ((a, 1), None)
        else:
            band[(a, 0)] = ((b, 1), None)
            band[(b, 1)] = ((a, 0), None)
            band[(a, 1)] = ((b, 0), None)
            band[(b, 0)] = ((a, 1), None)
    for fid in g.flags:
        band[(fid, 0)] = ((fid, 1), fid)
        band[(fid, 1)] = ((fid, 0), fid)

    walks = []
    strand_walk = {}
    visited = set()
    for start in sorted(corner):
        if start in visited:
            continue
        idx = len(walks)
        seq = []
        flags_seq = []
        cur = start
        while True:
            seq.append(cur)
            visited.add(cur)
            strand_walk[cur] = idx
            p = corner[cur]
            seq.append(p)
            visited.add(p)
            strand_walk[p] = idx
            cur, fl = band[p]
            if fl is not None:
                flags_seq.append(fl)
            if cur == start:
                break
        walks.append(BoundaryWalk(tuple(seq), tuple(flags_seq)))
    vertex_walk = {}
    for vid in sorted(bare):
        vertex_walk[vid] = len(walks)
        walks.append(BoundaryWalk((), (), vertex=vid))

    f_int = sum(1 for w in walks if not w.is_open)
    c_bnd = len(walks) - f_int
    return BoundaryReport(tuple(walks), f_int, c_bnd, strand_walk, vertex_walk)


@dataclass(frozen=True)
class BoundaryGraph:
    """One cyclic sequence of flag ids per open walk; empty for closed graphs."""
    components: tuple


def boundary_graph(g):
    rep = trace_boundary(g)
    return BoundaryGraph(tuple(w.flags for w in rep.walks if w.is_open))


def orientability(g):
    """0 if every component's surface is orientable, else 1.  A component is
    orientable iff vertex orientations can be chosen so untwisted edges join
    equal bits and twisted edges opposite bits; a twisted loop always fails."""
    adj = {v: [] for v in g.vertices}
    for eid, twisted in g.edges.items():
        va = g.vertex_of(edge_end(eid, "a"))
        vb = g.vertex_of(edge_end(eid, "b"))
        if va == vb:
            if twisted:
                return 1
            continue
        adj[va].append((vb, twisted))
        adj[vb].append((va, twisted))
    bit = {}
    for root in sorted(g.vertices):
        if root in bit:
            continue
        bit[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u, twisted in adj[v]:
                want = bit[v] ^ twisted
                if u not in bit:
                    bit[u] = want
                    stack.append(u)
                elif bit[u] != want:
                    return 1
    return 0


@dataclass(frozen=True)
class InvariantTuple:
    V: int
    E: int
    f: int
    k: int
    r: int
    n: int
    F_int: int
    C_bnd: int
    t: int


def basic_invariants(g):
    rep = trace_boundary(g)
    V = len(g.vertices)
    E = len(g.edges)
    f = len(g.flags)
    k = component_count(g)
    r = V - k
    n = E - r
    return InvariantTuple(V, E, f, k, r, n, rep.F_int, rep.C_bnd, orientability(g))


def realize_csubgraph(g, keep):
    """The spanning c-subgraph keeping the given edges: every other edge is
    cut, leaving two fresh flags in its stubs' slots.  Equivalent to applying
    cut_edge over the non-kept edges in sorted order (the per-edge oracle the
    tests pin this against), done in one pass."""
    keep = set(keep)
    unknown = keep - set(g.edges)
    if unknown:
        raise GraphError(f"unknown edges in keep set: {sorted(unknown)!r}")
    flags = set(g.flags)
    repl = {}
    for eid in sorted(g.edges):
        if eid in keep:
            continue
        fa = f"{eid}_a"
        while fa in flags:
            fa += "_"
        flags.add(fa)
        fb = f"{eid}_b"
        while fb in flags:
            fb += "_"
        flags.add(fb)
        repl[edge_end(eid, "a")] = fa
        repl[edge_end(eid, "b")] = fb
    if not repl:
        return g
    vertices = {v: tuple(repl.get(s, s) for s in rot)
                for v, rot in g.vertices.items()}
    edges = {e: tw for e, tw in g.edges.items() if e in keep}
    return RibbonGraph(vertices, edges, flags, name=g.name, validate=False)


def realize_by_cutting(g, keep):
    """Reference route for realize_csubgraph: iterate cut_edge."""
    keep = set(keep)
    for eid in sorted(g.edges):
        if eid not in keep:
            g = cut_edge(g, eid)
    return g


def report_json(g):
    """Invariant report as canonical JSON text.  Boundary components are
    rotated to start at their least flag, then sorted."""
    inv = basic_invariants(g)
    comps = []
    for cyc in boundary_graph(g).components:
        i = cyc.index(min(cyc))
        comps.append(list(cyc[i:] + cyc[:i]))
    comps.sort()
    doc = {
        "V": inv.V, "E": inv.E, "k": inv.k, "r": inv.r, "n": inv.n,
        "F_int": inv.F_int, "C_bnd": inv.C_bnd, "t": inv.t, "f": inv.f,
        "boundary": comps,
    }
    return json.dumps(doc)

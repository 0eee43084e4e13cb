"""Ribbon graphs with flags as signed rotation systems.

A graph is a set of vertices, each carrying a cyclic sequence of stubs read
counterclockwise.  A stub is either an edge end ("e1.a" / "e1.b") or a flag
("f1").  Every edge has a sign: untwisted (+) or twisted (-).  Ids match
[A-Za-z0-9_]+ and are unique within their namespace (vertices, edges, flags),
so an edge and a flag may share a name without ambiguity.

Graphs are immutable values.  Equality and hashing go through the canonical
serialization: vertices sorted by id, each rotation rotated so its
lexicographically least stub comes first.  Rotating a vertex's stub sequence
therefore never changes the graph.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")

REGULAR = "regular"
BRIDGE = "bridge"
SELF_LOOP = "self-loop"

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"
UNDETERMINED = "undetermined"


class GraphError(ValueError):
    """Structural problem with a graph or an operation on it."""


class FormatError(GraphError):
    """Problem parsing the graph text format."""


def edge_end(eid, end):
    return f"{eid}.{end}"


def is_edge_end(stub):
    return "." in stub


def split_end(stub):
    """An edge-end stub -> (edge id, 'a' or 'b')."""
    eid, _, end = stub.rpartition(".")
    return eid, end


class RibbonGraph:
    __slots__ = ("_vertices", "_edges", "_flags", "_name", "_canon", "_loc")

    def __init__(self, vertices, edges=(), flags=(), name=None, validate=True):
        items = vertices.items() if hasattr(vertices, "items") else vertices
        self._vertices = {v: tuple(rot) for v, rot in items}
        self._edges = dict(edges)
        self._flags = frozenset(flags)
        self._name = name
        self._canon = None
        self._loc = None
        if validate:
            self._validate()

    def _validate(self):
        for vid in self._vertices:
            if not _ID_RE.match(vid):
                raise GraphError(f"bad vertex id {vid!r}")
        for eid, twisted in self._edges.items():
            if not _ID_RE.match(eid):
                raise GraphError(f"bad edge id {eid!r}")
            if not isinstance(twisted, bool):
                raise GraphError(f"edge sign for {eid!r} must be a bool")
        for fid in self._flags:
            if not _ID_RE.match(fid):
                raise GraphError(f"bad flag id {fid!r}")
        seen = set()
        for vid, rot in self._vertices.items():
            for stub in rot:
                if stub in seen:
                    raise GraphError(f"stub {stub!r} placed more than once")
                seen.add(stub)
                if is_edge_end(stub):
                    eid, end = split_end(stub)
                    if eid not in self._edges or end not in ("a", "b"):
                        raise GraphError(f"unknown edge end {stub!r}")
                elif stub not in self._flags:
                    raise GraphError(f"unknown stub token {stub!r}")
        for eid in self._edges:
            for end in ("a", "b"):
                if edge_end(eid, end) not in seen:
                    raise GraphError(f"edge end {edge_end(eid, end)!r} not placed")
        for fid in self._flags:
            if fid not in seen:
                raise GraphError(f"flag {fid!r} declared but unplaced")

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def flags(self):
        return self._flags

    @property
    def name(self):
        return self._name

    def vertex_of(self, stub):
        if self._loc is None:
            self._loc = {s: v for v, rot in self._vertices.items() for s in rot}
        try:
            return self._loc[stub]
        except KeyError:
            raise GraphError(f"no such stub {stub!r}") from None

    def canonical_text(self):
        if self._canon is None:
            self._canon = serialize_graph(self, include_name=False)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return self.canonical_text() == other.canonical_text()

    def __hash__(self):
        return hash(self.canonical_text())

    def __repr__(self):
        body = self.canonical_text().replace("\n", " / ")
        return f"<RibbonGraph {body}>"


@dataclass(frozen=True)
class EdgeClass:
    kind: str                 # REGULAR, BRIDGE or SELF_LOOP
    twisted: bool
    triviality: str | None = None   # loops only


def _least_rotation(rot):
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def serialize_graph(g, include_name=True):
    """Canonical text: sorted edges with signs, sorted flags, vertices sorted
    by id with each rotation starting at its least stub."""
    lines = []
    if include_name and g.name:
        lines.append(f"graph {g.name}")
    lines.append("edges: " + " ".join(
        f"{e}:{'-' if g.edges[e] else '+'}" for e in sorted(g.edges)).rstrip())
    lines.append("flags: " + " ".join(sorted(g.flags)).rstrip())
    for vid in sorted(g.vertices):
        rot = _least_rotation(g.vertices[vid])
        lines.append(f"vertex {vid}: " + " ".join(rot).rstrip())
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_graph(text):
    name = None
    edges = {}
    flags = []
    vertices = {}
    seen_edges = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("graph "):
            name = line[6:].strip()
            if not _ID_RE.match(name):
                raise FormatError(f"bad graph name {name!r}")
        elif line.startswith("edges:"):
            for tok in line[6:].split():
                eid, sep, sign = tok.partition(":")
                if not sep or not _ID_RE.match(eid):
                    raise FormatError(f"bad edge declaration {tok!r}")
                if sign not in ("+", "-"):
                    raise FormatError(f"unknown sign token {tok!r}")
                if eid in seen_edges:
                    raise FormatError(f"duplicate edge id {eid!r}")
                seen_edges.add(eid)
                edges[eid] = sign == "-"
        elif line.startswith("flags:"):
            for tok in line[6:].split():
                if not _ID_RE.match(tok):
                    raise FormatError(f"bad flag id {tok!r}")
                if tok in flags:
                    raise FormatError(f"duplicate flag id {tok!r}")
                flags.append(tok)
        elif line.startswith("vertex "):
            head, sep, body = line[7:].partition(":")
            vid = head.strip()
            if not sep or not _ID_RE.match(vid):
                raise FormatError(f"bad vertex line {line!r}")
            if vid in vertices:
                raise FormatError(f"duplicate vertex id {vid!r}")
            vertices[vid] = tuple(body.split())
        else:
            raise FormatError(f"unrecognized line {line!r}")
    try:
        return RibbonGraph(vertices, edges, flags, name=name)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def component_map(g):
    """Vertex id -> component representative, connecting over edges only
    (flags never connect anything)."""
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in g.edges:
        a = find(g.vertex_of(edge_end(eid, "a")))
        b = find(g.vertex_of(edge_end(eid, "b")))
        if a != b:
            parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in g.vertices}


def component_count(g):
    return len(set(component_map(g).values()))


def component_subgraphs(g):
    """Connected components as standalone graphs, ordered by least vertex id.
    Ids are kept as-is, so reassembling with disjoint_union may rename."""
    cmap = component_map(g)
    groups = {}
    for v in sorted(g.vertices):
        groups.setdefault(cmap[v], []).append(v)
    out = []
    for rep in sorted(groups):
        vs = groups[rep]
        vertices = {v: g.vertices[v] for v in vs}
        placed = {s for rot in vertices.values() for s in rot}
        edges = {e: tw for e, tw in g.edges.items()
                 if edge_end(e, "a") in placed}
        flags = {f for f in g.flags if f in placed}
        out.append(RibbonGraph(vertices, edges, flags, validate=False))
    return out


def strip_flags(g):
    """The same graph with every flag dropped from every rotation."""
    flags = set(g.flags)
    vertices = {v: tuple(s for s in rot if s not in flags)
                for v, rot in g.vertices.items()}
    return RibbonGraph(vertices, g.edges, (), name=g.name, validate=False)


def _fresh_id(taken, base):
    while base in taken:
        base += "_"
    return base


def cut_edge(g, eid):
    """Replace each end of the edge, in place in its rotation slot, by a fresh
    flag; the edge itself disappears.  Fresh flags are named from the edge id,
    bumped with underscores on collision."""
    if eid not in g.edges:
        raise GraphError(f"no such edge {eid!r}")
    flags = set(g.flags)
    fa = _fresh_id(flags, f"{eid}_a")
    flags.add(fa)
    fb = _fresh_id(flags, f"{eid}_b")
    flags.add(fb)
    repl = {edge_end(eid, "a"): fa, edge_end(eid, "b"): fb}
    vertices = {v: tuple(repl.get(s, s) for s in rot)
                for v, rot in g.vertices.items()}
    edges = {e: tw for e, tw in g.edges.items() if e != eid}
    return RibbonGraph(vertices, edges, flags, name=g.name, validate=False)


def delete_edge(g, eid):
    """Remove the edge and both of its stubs."""
    if eid not in g.edges:
        raise GraphError(f"no such edge {eid!r}")
    drop = {edge_end(eid, "a"), edge_end(eid, "b")}
    vertices = {v: tuple(s for s in rot if s not in drop)
                for v, rot in g.vertices.items()}
    edges = {e: tw for e, tw in g.edges.items() if e != eid}
    return RibbonGraph(vertices, edges, g.flags, name=g.name, validate=False)


def vertex_flip(g, vid):
    """Reverse one vertex's rotation and toggle the sign of every non-loop
    edge incident to it.  Loops at the vertex keep their sign (each of their
    two crossings toggles, for no net change)."""
    if vid not in g.vertices:
        raise GraphError(f"no such vertex {vid!r}")
    rot = g.vertices[vid]
    edges = dict(g.edges)
    counts = {}
    for s in rot:
        if is_edge_end(s):
            eid, _ = split_end(s)
            counts[eid] = counts.get(eid, 0) + 1
    for eid, c in counts.items():
        if c == 1:
            edges[eid] = not edges[eid]
    vertices = dict(g.vertices)
    vertices[vid] = tuple(reversed(rot))
    return RibbonGraph(vertices, edges, g.flags, name=g.name, validate=False)


def classify_edge(g, eid):
    """Bridge / regular / self-loop, with loop triviality decided only when
    the loop's vertex forms a one-vertex component.

    A twisted loop is trivial iff no other loop's chord interleaves it in the
    cyclic order.  An untwisted loop is trivial iff its two ends are cyclically
    adjacent, i.e. one side of the loop carries no stub at all.  The stronger
    test for untwisted loops is forced by the contraction identity: a flag (or
    cut stub) caught on each side of the loop lands on the boundary walk the
    loop would otherwise close off, and the cut/contract relation fails.  The
    twisted band merges both sides into one walk, so only interleaving chords
    can break it there.
    """
    if eid not in g.edges:
        raise GraphError(f"no such edge {eid!r}")
    twisted = g.edges[eid]
    va = g.vertex_of(edge_end(eid, "a"))
    vb = g.vertex_of(edge_end(eid, "b"))
    if va != vb:
        comp = component_map(delete_edge(g, eid))
        kind = BRIDGE if comp[va] != comp[vb] else REGULAR
        return EdgeClass(kind, twisted)
    comp = component_map(g)
    rep = comp[va]
    if any(c == rep and v != va for v, c in comp.items()):
        return EdgeClass(SELF_LOOP, twisted, UNDETERMINED)
    rot = g.vertices[va]
    p = rot.index(edge_end(eid, "a"))
    q = rot.index(edge_end(eid, "b"))
    if p > q:
        p, q = q, p
    if not twisted:
        adjacent = q == p + 1 or (p == 0 and q == len(rot) - 1)
        triviality = TRIVIAL if adjacent else NONTRIVIAL
        return EdgeClass(SELF_LOOP, twisted, triviality)
    inside = set(rot[p + 1:q])
    for other in g.edges:
        if other == eid:
            continue
        ins = (edge_end(other, "a") in inside) + (edge_end(other, "b") in inside)
        if ins == 1:
            return EdgeClass(SELF_LOOP, twisted, NONTRIVIAL)
    return EdgeClass(SELF_LOOP, twisted, TRIVIAL)


def contract_edge(g, eid):
    """Contract an edge.

    Non-loop: the two end vertices merge into one disc; a twisted edge is
    straightened first by flipping the vertex holding the 'b' end.  The merged
    rotation is the 'a' vertex opened after its end stub, then the 'b' vertex
    opened after its end stub; the merged vertex keeps the 'a' vertex's id.

    Trivial twisted loop: same as deletion.  Trivial untwisted loop: deletion
    plus a fresh isolated vertex.  Nontrivial or undetermined loops raise.
    """
    cls = classify_edge(g, eid)
    if cls.kind == SELF_LOOP:
        if cls.triviality == TRIVIAL:
            out = delete_edge(g, eid)
            if not cls.twisted:
                vertices = dict(out.vertices)
                vid = _fresh_id(set(vertices), f"v_{eid}")
                vertices[vid] = ()
                out = RibbonGraph(vertices, out.edges, out.flags,
                                  name=g.name, validate=False)
            return out
        raise GraphError(
            f"nontrivial-loop contraction requested (unsupported): {eid!r}")
    if cls.twisted:
        g = vertex_flip(g, g.vertex_of(edge_end(eid, "b")))
    sa, sb = edge_end(eid, "a"), edge_end(eid, "b")
    va, vb = g.vertex_of(sa), g.vertex_of(sb)
    ra, rb = g.vertices[va], g.vertices[vb]
    i, j = ra.index(sa), rb.index(sb)
    merged = ra[i + 1:] + ra[:i] + rb[j + 1:] + rb[:j]
    vertices = {}
    for v, rot in g.vertices.items():
        if v == va:
            vertices[v] = merged
        elif v != vb:
            vertices[v] = rot
    edges = {e: tw for e, tw in g.edges.items() if e != eid}
    return RibbonGraph(vertices, edges, g.flags, name=g.name, validate=False)


def _renamed(g, taken_v, taken_e, taken_f):
    """Rename g's ids away from the taken sets (prefixing until free).
    Returns the renamed graph and the vertex-id map."""
    vmap, emap, fmap = {}, {}, {}
    for vid in sorted(g.vertices):
        new = vid
        while new in taken_v or new in vmap.values():
            new = "u" + new
        vmap[vid] = new
    for eid in sorted(g.edges):
        new = eid
        while new in taken_e or new in emap.values():
            new = "u" + new
        emap[eid] = new
    for fid in sorted(g.flags):
        new = fid
        while new in taken_f or new in fmap.values():
            new = "u" + new
        fmap[fid] = new

    def stub(s):
        if is_edge_end(s):
            eid, end = split_end(s)
            return edge_end(emap[eid], end)
        return fmap[s]

    vertices = {vmap[v]: tuple(stub(s) for s in rot)
                for v, rot in g.vertices.items()}
    edges = {emap[e]: tw for e, tw in g.edges.items()}
    flags = {fmap[f] for f in g.flags}
    return RibbonGraph(vertices, edges, flags, validate=False), vmap


def disjoint_union(g1, g2):
    """Disjoint union; colliding ids in the second operand get prefixed."""
    g2, _ = _renamed(g2, set(g1.vertices), set(g1.edges), set(g1.flags))
    vertices = dict(g1.vertices)
    vertices.update(g2.vertices)
    edges = dict(g1.edges)
    edges.update(g2.edges)
    flags = set(g1.flags) | set(g2.flags)
    return RibbonGraph(vertices, edges, flags, name=g1.name, validate=False)


def one_point_join(g1, v1, g2, v2, slot1=0, slot2=0):
    """Glue two disjoint graphs at one vertex each: the merged vertex (keeping
    v1's id) reads v1's rotation opened at slot1, then v2's opened at slot2."""
    if v1 not in g1.vertices:
        raise GraphError(f"no such vertex {v1!r}")
    if v2 not in g2.vertices:
        raise GraphError(f"no such vertex {v2!r}")
    r1 = g1.vertices[v1]
    if not 0 <= slot1 <= len(r1):
        raise GraphError(f"slot {slot1} out of range for {v1!r}")
    g2r, vmap = _renamed(g2, set(g1.vertices), set(g1.edges), set(g1.flags))
    v2r = vmap[v2]
    r2 = g2r.vertices[v2r]
    if not 0 <= slot2 <= len(r2):
        raise GraphError(f"slot {slot2} out of range for {v2!r}")
    merged = r1[slot1:] + r1[:slot1] + r2[slot2:] + r2[:slot2]
    vertices = dict(g1.vertices)
    vertices[v1] = merged
    for v, rot in g2r.vertices.items():
        if v != v2r:
            vertices[v] = rot
    edges = dict(g1.edges)
    edges.update(g2r.edges)
    flags = set(g1.flags) | set(g2r.flags)
    return RibbonGraph(vertices, edges, flags, name=g1.name, validate=False)

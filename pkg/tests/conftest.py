"""Shared corpus and caches.

The exhaustive corpus enumerates every rotation system with up to three
edges (successor maps on the edge-end darts), every twist pattern, and
zero to two flags per vertex in every attachment position.  Identities
under test are blind to id names, so the corpus is deduplicated by a
relabeling fixpoint: ids are renamed in order of first appearance in the
canonical text and the text re-canonicalized until stable; equal keys are
relabelings of each other, so collapsing them never drops a case.
"""
from __future__ import annotations

import itertools

import pytest

from ribbonpoly import (RibbonGraph, recurrence_polynomial, serialize_graph,
                        state_sum_polynomial)


def _least_rotation(rot):
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def relabel_once(g):
    """Rename ids by first appearance in the canonical vertex scan; the
    first-seen end of each edge becomes its 'a' end."""
    vmap, emap, fmap, ends = {}, {}, {}, {}
    for vid in sorted(g.vertices):
        vmap[vid] = f"v{len(vmap) + 1:02d}"
        for s in _least_rotation(g.vertices[vid]):
            if "." in s:
                e, end = s.rsplit(".", 1)
                if e not in emap:
                    emap[e] = f"e{len(emap) + 1:02d}"
                    ends[e] = end
            elif s not in fmap:
                fmap[s] = f"f{len(fmap) + 1:02d}"
    vertices = {}
    for vid, rot in g.vertices.items():
        new = []
        for s in rot:
            if "." in s:
                e, end = s.rsplit(".", 1)
                new.append(emap[e] + (".a" if end == ends[e] else ".b"))
            else:
                new.append(fmap[s])
        vertices[vmap[vid]] = tuple(new)
    return RibbonGraph(vertices,
                       {emap[e]: tw for e, tw in g.edges.items()},
                       [fmap[f] for f in g.flags], validate=False)


def iso_key(g):
    """Deduplication key: the least canonical text over the relabeling
    fixpoint orbit.  Equal keys imply isomorphic graphs."""
    texts = []
    seen = set()
    cur = g
    for _ in range(8):
        t = serialize_graph(cur, include_name=False)
        if t in seen:
            break
        seen.add(t)
        texts.append(t)
        cur = relabel_once(cur)
    return min(texts)


def _cycles(succ):
    seen, out = set(), []
    for start in sorted(succ):
        if start in seen:
            continue
        cyc, cur = [], start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = succ[cur]
        out.append(tuple(cyc))
    return out


def _succ_key(succ):
    return tuple(sorted(succ.items()))


def _transform_succ(succ, pi, flips):
    def tr(d):
        i, s = d
        return (pi[i], s ^ flips[i])

    return {tr(d): tr(v) for d, v in succ.items()}


def _flag_layouts(rot, offset):
    """All rotations with 0, 1 or 2 extra flags attached to one vertex, up
    to flag relabeling.  Flag ids continue from the given offset."""
    d = len(rot)
    fa, fb = f"f{offset + 1:02d}", f"f{offset + 2:02d}"
    out = [(rot, 0)]
    if d == 0:
        out.append(((fa,), 1))
        out.append(((fa, fb), 2))
        return out
    for p in range(d):
        out.append((rot[:p] + (fa,) + rot[p:], 1))
    for p in range(d):
        out.append((rot[:p] + (fa, fb) + rot[p:], 2))
    for p, q in itertools.combinations(range(d), 2):
        out.append((rot[:p] + (fa,) + rot[p:q] + (fb,) + rot[q:], 2))
    return out


def _signed_bases(max_edges):
    """Flagless signed rotation systems with <= max_edges, exactly one per
    orbit of the edge-relabeling and end-swap group, each paired with its
    automorphisms (as dart maps) for use in the flag stage."""
    out = [(RibbonGraph({"v01": ()}, {}, (), validate=False), [])]
    for e in range(max_edges + 1):
        group = [(pi, flips) for pi in itertools.permutations(range(e))
                 for flips in itertools.product((0, 1), repeat=e)]
        darts = [(i, s) for i in range(e) for s in (0, 1)]
        succ_reps = []
        seen = set()
        for perm in itertools.permutations(darts):
            succ = dict(zip(darts, perm))
            key = _succ_key(succ)
            if key in seen:
                continue
            stab = []
            orbit = set()
            for pi, flips in group:
                tk = _succ_key(_transform_succ(succ, pi, flips))
                orbit.add(tk)
                if tk == key:
                    stab.append((pi, flips))
            if key == min(orbit):
                succ_reps.append((succ, stab))
            seen.update(orbit)
        for succ, stab in succ_reps:
            sign_seen = set()
            for signs in itertools.product((False, True), repeat=e):
                if signs in sign_seen:
                    continue
                orbit, auts = set(), []
                for pi, flips in stab:
                    moved = tuple(signs[pi.index(j)] for j in range(e))
                    orbit.add(moved)
                    if moved == signs:
                        auts.append((pi, flips))
                sign_seen.update(orbit)
                if signs != min(orbit):
                    continue
                cycs = _cycles(succ)
                vertices = {
                    f"v{i + 1:02d}": tuple(f"e{d + 1}.{'ab'[s]}"
                                           for d, s in cyc)
                    for i, cyc in enumerate(cycs)}
                g = RibbonGraph(
                    vertices,
                    {f"e{i + 1}": tw for i, tw in enumerate(signs)},
                    (), validate=False)
                out.append((g, auts))
    return out


def _apply_dart_map(g, pi, flips):
    def tr(s):
        if "." not in s:
            return s
        e, end = s.rsplit(".", 1)
        i = int(e[1:]) - 1
        return f"e{pi[i] + 1}.{'ab'[('ab'.index(end)) ^ flips[i]]}"

    vertices = {v: tuple(tr(s) for s in rot)
                for v, rot in g.vertices.items()}
    edges = {f"e{pi[int(e[1:]) - 1] + 1}": tw for e, tw in g.edges.items()}
    return RibbonGraph(vertices, edges, g.flags, validate=False)


def _with_flags(bases):
    reps = {}
    for base, auts in bases:
        vids = sorted(base.vertices)
        per_vertex = []
        offset = 0
        for v in vids:
            layouts = _flag_layouts(base.vertices[v], offset)
            per_vertex.append(layouts)
            offset += 2
        for combo in itertools.product(*per_vertex):
            vertices = dict(zip(vids, (rot for rot, _ in combo)))
            flags = [s for rot, _ in combo for s in rot
                     if "." not in s]
            g = RibbonGraph(vertices, base.edges, flags, validate=False)
            if len(auts) > 1:
                key = min(iso_key(_apply_dart_map(g, pi, flips))
                          for pi, flips in auts)
            else:
                key = iso_key(g)
            reps.setdefault(key, g)
    return list(reps.values())


_CORPUS_CACHE = {}


def exhaustive_corpus(max_edges=3):
    if max_edges not in _CORPUS_CACHE:
        _CORPUS_CACHE[max_edges] = _with_flags(_signed_bases(max_edges))
    return _CORPUS_CACHE[max_edges]


class PolyCache:
    """Isomorphism-keyed caches of both polynomial evaluators."""

    def __init__(self):
        self.state = {}
        self.recur = {}
        self._memo = {}

    def state_sum(self, g):
        key = iso_key(g)
        p = self.state.get(key)
        if p is None:
            p = state_sum_polynomial(g)
            self.state[key] = p
        return p

    def recurrence(self, g):
        key = iso_key(g)
        p = self.recur.get(key)
        if p is None:
            p = recurrence_polynomial(g, memo=self._memo)
            self.recur[key] = p
        return p


@pytest.fixture(scope="session")
def poly_cache():
    return PolyCache()


@pytest.fixture(scope="session")
def corpus():
    return exhaustive_corpus(3)

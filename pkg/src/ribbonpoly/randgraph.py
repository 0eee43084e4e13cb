"""Seeded random graph generation for experiments and stress tests.

Generation is deterministic given the seed: ids are assigned in a fixed
order and the RNG is consumed in a fixed order, so equal seeds give
byte-identical serializations.
"""
from __future__ import annotations

import random

from .graph import RibbonGraph


def _rng(seed):
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_graph(seed, n_vertices, n_edges, n_flags=0, twist_prob=0.5,
                 connected=False):
    """A random graph with the given counts.  With connected=True the first
    n_vertices-1 edges form a spanning tree, so the nullity is exactly
    n_edges - n_vertices + 1."""
    rng = _rng(seed)
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if n_edges < 0 or n_flags < 0:
        raise ValueError("counts must be nonnegative")
    vids = [f"v{i + 1}" for i in range(n_vertices)]
    eids = [f"e{i + 1}" for i in range(n_edges)]
    home = {v: [] for v in vids}
    start = 0
    if connected:
        if n_edges < n_vertices - 1:
            raise ValueError("too few edges for a connected graph")
        for i in range(1, n_vertices):
            e = eids[i - 1]
            home[vids[rng.randrange(i)]].append(e + ".a")
            home[vids[i]].append(e + ".b")
        start = n_vertices - 1
    for e in eids[start:]:
        home[vids[rng.randrange(n_vertices)]].append(e + ".a")
        home[vids[rng.randrange(n_vertices)]].append(e + ".b")
    for i in range(n_flags):
        home[vids[rng.randrange(n_vertices)]].append(f"f{i + 1}")
    vertices = {}
    for v in vids:
        stubs = list(home[v])
        rng.shuffle(stubs)
        vertices[v] = tuple(stubs)
    edges = {e: rng.random() < twist_prob for e in eids}
    return RibbonGraph(vertices, edges,
                       [f"f{i + 1}" for i in range(n_flags)])


def random_two_vertex(seed, n_parallel=2, n_loops=0, n_flags=0,
                      twist_prob=0.5):
    """Two vertices joined by n_parallel non-loop edges (ids e1..), plus
    n_loops loops (ids q1..) on random vertices and n_flags flags."""
    rng = _rng(seed)
    if n_parallel < 1:
        raise ValueError("need at least one connecting edge")
    home = {"v1": [], "v2": []}
    edges = {}
    for i in range(n_parallel):
        e = f"e{i + 1}"
        home["v1"].append(e + ".a")
        home["v2"].append(e + ".b")
        edges[e] = rng.random() < twist_prob
    for i in range(n_loops):
        q = f"q{i + 1}"
        v = "v1" if rng.random() < 0.5 else "v2"
        home[v] += [q + ".a", q + ".b"]
        edges[q] = rng.random() < twist_prob
    flags = [f"f{i + 1}" for i in range(n_flags)]
    for f in flags:
        home["v1" if rng.random() < 0.5 else "v2"].append(f)
    vertices = {}
    for v, stubs in home.items():
        stubs = list(stubs)
        rng.shuffle(stubs)
        vertices[v] = tuple(stubs)
    return RibbonGraph(vertices, edges, flags)

"""Polynomial invariants of ribbon graphs with flags.

The six-variable polynomial is a sum over spanning c-subgraphs: keep a subset
of edges, cut the rest, and weigh the result by

    (X-1)^(r(G)-r(A)) (Y-1)^n(A) Z^(k(A)-F_int(A)+n(A)) S^C_bnd(A) W^t(A) T^f(A)

with ranks over edges only, faces and boundary circles from the traced
boundary of the realized c-subgraph, and W idempotent.  The same polynomial
satisfies one contraction/cut relation per edge class, which the recurrence
evaluator applies greedily; both routes return identical objects.

All arithmetic is exact (integer coefficients, Laurent exponents on Z only).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import polynomial as P
from .graph import (BRIDGE, NONTRIVIAL, SELF_LOOP, TRIVIAL, GraphError,
                    classify_edge, component_count, component_subgraphs,
                    contract_edge, cut_edge, delete_edge, parse_graph,
                    serialize_graph)
from .polynomial import BRPoly
from .topology import basic_invariants, realize_csubgraph


def _subset_term(g, keep, rank_full):
    inv = basic_invariants(realize_csubgraph(g, keep))
    return BRPoly.term(1,
                       a=rank_full - inv.r,
                       b=inv.n,
                       c=inv.k - inv.F_int + inv.n,
                       d=inv.C_bnd,
                       w=inv.t,
                       g=inv.f)


def _block_sum(text, order, rank_full, lo, hi):
    g = parse_graph(text)
    total = P.ZERO
    for mask in range(lo, hi):
        keep = [order[i] for i in range(len(order)) if mask >> i & 1]
        total = total + _subset_term(g, keep, rank_full)
    return P.serialize_poly(total)


def state_sum_polynomial(g, workers=None):
    """Evaluate the six-variable polynomial directly from its state sum.

    With workers > 1 the 2^E subsets are split into contiguous index blocks
    handled by separate processes; partial sums are combined in block order,
    so the result is identical to the serial one."""
    order = sorted(g.edges)
    rank_full = len(g.vertices) - component_count(g)
    n_subsets = 1 << len(order)
    if workers is not None and workers > 1 and n_subsets >= 64:
        text = serialize_graph(g, include_name=False)
        blocks = min(4 * workers, n_subsets)
        step = -(-n_subsets // blocks)
        spans = [(lo, min(lo + step, n_subsets))
                 for lo in range(0, n_subsets, step)]
        total = P.ZERO
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_block_sum, text, order, rank_full, lo, hi)
                    for lo, hi in spans]
            for fut in futs:
                total = total + P.parse_poly(fut.result())
        return total
    total = P.ZERO
    for mask in range(n_subsets):
        keep = [order[i] for i in range(len(order)) if mask >> i & 1]
        total = total + _subset_term(g, keep, rank_full)
    return total


def _edgeless_monomial(g):
    inv = basic_invariants(g)
    return BRPoly.term(1, c=inv.k - inv.F_int, d=inv.C_bnd, g=inv.f)


def recurrence_polynomial(g, memo=None):
    """Evaluate the six-variable polynomial by contraction/cut relations.

    Edge choice is deterministic: the least-id non-loop edge if any, else the
    least-id trivial loop.  A graph left with only nontrivial loops splits
    into one-vertex components evaluated by state sum (their contractions are
    out of scope).  An optional memo dict, keyed by canonical graph text,
    is shared across the recursion."""
    if memo is not None:
        key = g.canonical_text()
        hit = memo.get(key)
        if hit is not None:
            return hit
    result = _recurrence_step(g, memo)
    if memo is not None:
        memo[key] = result
    return result


def _recurrence_step(g, memo):
    if not g.edges:
        return _edgeless_monomial(g)
    classes = {e: classify_edge(g, e) for e in sorted(g.edges)}
    for eid, cls in classes.items():
        if cls.kind != SELF_LOOP:
            cut = recurrence_polynomial(cut_edge(g, eid), memo)
            con = recurrence_polynomial(contract_edge(g, eid), memo)
            if cls.kind == BRIDGE:
                return P.X_MINUS_1 * cut + con
            return cut + con
    for eid, cls in classes.items():
        if cls.triviality == TRIVIAL:
            cut = recurrence_polynomial(cut_edge(g, eid), memo)
            con = recurrence_polynomial(contract_edge(g, eid), memo)
            if cls.twisted:
                return cut + P.Y_MINUS_1 * P.Z * P.W * con
            return cut + P.Y_MINUS_1 * con
    parts = component_subgraphs(g)
    if len(parts) > 1:
        total = P.ONE
        for part in parts:
            total = total * recurrence_polynomial(part, memo)
        return total
    return state_sum_polynomial(g)


def restricted_polynomial(g, method="state-sum", workers=None):
    """The four-variable restriction sending S to the inverse of Z."""
    if method == "recurrence":
        p = recurrence_polynomial(g)
    else:
        p = state_sum_polynomial(g, workers=workers)
    return P.substitute_s_inv_z(p)


def classical_br_polynomial(g):
    """The classical topological transition polynomial of a flagless ribbon
    graph: the same state sum, but spanning subgraphs delete their missing
    edges instead of cutting them, so no boundary circles ever appear.
    Implemented independently of the flagged sum; for flagless graphs it
    equals that sum with S set to the inverse of Z and T to 1."""
    if g.flags:
        raise GraphError("classical polynomial is defined for flagless graphs")
    order = sorted(g.edges)
    rank_full = len(g.vertices) - component_count(g)
    total = P.ZERO
    for mask in range(1 << len(order)):
        sub = g
        for i, eid in enumerate(order):
            if not mask >> i & 1:
                sub = delete_edge(sub, eid)
        inv = basic_invariants(sub)
        total = total + BRPoly.term(1,
                                    a=rank_full - inv.r,
                                    b=inv.n,
                                    c=inv.k - inv.F_int + inv.n,
                                    w=inv.t)
    return total


def tutte_polynomial(g):
    """The Tutte polynomial of the underlying abstract graph, by the
    rank-nullity sum, in the shifted basis (X-1), (Y-1)."""
    if g.flags:
        raise GraphError("Tutte polynomial is defined for flagless graphs")
    order = sorted(g.edges)
    verts = sorted(g.vertices)
    vi = {v: i for i, v in enumerate(verts)}
    rank_full = len(verts) - component_count(g)
    ends = {}
    for eid in order:
        ends[eid] = (vi[g.vertex_of(eid + ".a")], vi[g.vertex_of(eid + ".b")])
    total = P.ZERO
    for mask in range(1 << len(order)):
        parent = list(range(len(verts)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        m = 0
        rank = 0
        for i, eid in enumerate(order):
            if mask >> i & 1:
                m += 1
                a, b = find(ends[eid][0]), find(ends[eid][1])
                if a != b:
                    parent[a] = b
                    rank += 1
        total = total + BRPoly.term(1, a=rank_full - rank, b=m - rank)
    return total


_IDENTITY_NAMES = {
    ("regular", False): "cut + contract",
    ("regular", True): "cut + contract",
    ("bridge", False): "(X-1) cut + contract",
    ("bridge", True): "(X-1) cut + contract",
    ("loop-trivial", False): "cut + (Y-1) contract",
    ("loop-trivial", True): "cut + (Y-1) Z W contract",
}


def edge_identity_report(g, eid, poly_fn=None):
    """Check the contraction/cut relation at one edge.

    Returns a dict with the edge class, the relation applied (or None when
    the edge is a nontrivial or undetermined loop, whose contraction is out
    of scope), and whether the polynomial of the graph equals the relation's
    right-hand side."""
    if poly_fn is None:
        poly_fn = state_sum_polynomial
    cls = classify_edge(g, eid)
    report = {
        "edge": eid,
        "kind": cls.kind,
        "twisted": cls.twisted,
        "triviality": cls.triviality,
        "identity": None,
        "holds": None,
    }
    if cls.kind == SELF_LOOP and cls.triviality != TRIVIAL:
        return report
    cut = poly_fn(cut_edge(g, eid))
    con = poly_fn(contract_edge(g, eid))
    if cls.kind == BRIDGE:
        rhs = P.X_MINUS_1 * cut + con
        report["identity"] = _IDENTITY_NAMES[("bridge", cls.twisted)]
    elif cls.kind == SELF_LOOP:
        if cls.twisted:
            rhs = cut + P.Y_MINUS_1 * P.Z * P.W * con
        else:
            rhs = cut + P.Y_MINUS_1 * con
        report["identity"] = _IDENTITY_NAMES[("loop-trivial", cls.twisted)]
    else:
        rhs = cut + con
        report["identity"] = _IDENTITY_NAMES[("regular", cls.twisted)]
    report["holds"] = poly_fn(g) == rhs
    return report


def edge_identity_holds(g, eid, poly_fn=None):
    rep = edge_identity_report(g, eid, poly_fn)
    return rep["holds"] is not False

"""Coefficient extraction and reconstruction for rosette-local invariants.

An invariant of one-vertex graphs that respects the equivalence generated by
loop moves is a linear combination of counting functions: one per canonical
class signature (chords, Z-exponent, boundary circles, flags, orientability
bit).  The counts are read off a graph's own subset expansion, so once the
lambda coefficients are known on canonical diagrams the invariant can be
evaluated anywhere in range, and extended to all graphs multiplicatively
over components and by the bridge and regular edge recursions.

Coefficients are extracted level by level on chord count.  Level n uses
canonical diagrams on n chords; flags at that level may legally run up to
the declared flag budget plus two per chord still to come, because cutting
an edge later trades one chord for two flags.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .chords import (InvariantViolation, all_partitions, build_canonical,
                     diagram_to_rosette)
from .graph import (BRIDGE, SELF_LOOP, GraphError, classify_edge,
                    component_map, component_subgraphs, contract_edge,
                    cut_edge)
from .invariants import state_sum_polynomial
from .polynomial import coefficient_slice, signatures


def orientability_bit(t):
    """Collapse the three-valued twist type to the bit recorded in class
    signatures: 0 stays 0, both nonorientable types map to 1."""
    if t not in (0, 1, 2):
        raise ValueError(f"twist type must be 0, 1 or 2, got {t!r}")
    return 0 if t == 0 else 1


def _slice_int(poly, sig):
    """Integer count of a signature inside a one-vertex subset expansion.
    The slice must be constant: one-vertex graphs have full rank zero."""
    i, j, k, l, m = sig
    sl = coefficient_slice(poly, i, j, k, l, m)
    items = list(sl.items())
    if not items:
        return 0
    if len(items) > 1 or items[0][0] != (0, 0, 0, 0, 0, 0):
        raise InvariantViolation(
            f"signature {sig} has a non-constant slice in a rosette "
            f"expansion: {sl!r}")
    return items[0][1]


@dataclass
class CoefficientTable:
    """Extracted lambda coefficients, keyed by class signature."""
    x: object
    max_chords: int
    max_flags: int
    entries: dict = field(default_factory=dict)

    def flag_bound(self, level):
        return self.max_flags + 2 * (self.max_chords - level)

    def value(self, sig):
        """The coefficient at a signature; zero for signatures inside the
        table's range that no diagram realizes."""
        if sig in self.entries:
            return self.entries[sig]
        i, j, k, l, m = sig
        if i > self.max_chords or l > self.flag_bound(i):
            raise ValueError(
                f"signature {sig} outside table range "
                f"(max_chords={self.max_chords}, max_flags={self.max_flags})")
        return self._zero()

    def _zero(self):
        some = next(iter(self.entries.values()))
        return some - some

    def rows(self):
        """Sorted (signature, value) pairs of stored coefficients."""
        return [(sig, self.entries[sig]) for sig in sorted(self.entries)]


def _level_keys(n, lbound):
    """All realizable signatures on n chords with at most lbound flags,
    each with every admissible flag partition."""
    out = {}
    for m in (0, 1, 2):
        if m > n:
            continue
        for j in range((n - m) // 2 + 1):
            iso = n - 2 * j - m
            for l in range(lbound + 1):
                for k in range(0 if l == 0 else 1, min(l, iso + 1) + 1):
                    if k == 0 and l > 0:
                        continue
                    parts = all_partitions(n, j, k, l, m)
                    if not parts:
                        continue
                    sig = (n, 2 * j + k + m, k, l, orientability_bit(m))
                    out.setdefault(sig, []).extend(
                        (j, k, part, m) for part in parts)
    return out


def extract_coefficients(phi, x, max_chords, max_flags=4):
    """Solve for the lambda coefficients of an invariant phi on canonical
    diagrams, levels 0..max_chords.

    phi maps a one-vertex graph to a ring value; x is the ring element the
    caller uses for the rank variable (threaded through to reconstruction).
    Every admissible flag partition of every signature is evaluated and the
    results must agree; disagreement raises InvariantViolation, as does a
    canonical diagram whose own-signature count is not exactly one."""
    if max_chords < 0 or max_flags < 0:
        raise ValueError("bounds must be nonnegative")
    entries = {}
    for level in range(max_chords + 1):
        lbound = max_flags + 2 * (max_chords - level)
        level_keys = _level_keys(level, lbound)
        for sig, builds in sorted(level_keys.items()):
            val = None
            for j, k, part, m in builds:
                d = build_canonical(level, j, k, part, m)
                rosette = diagram_to_rosette(d)
                own = state_sum_polynomial(rosette)
                if _slice_int(own, sig) != 1:
                    raise InvariantViolation(
                        f"canonical diagram for {sig} does not count itself "
                        f"exactly once")
                for other in level_keys:
                    if other != sig and _slice_int(own, other):
                        raise InvariantViolation(
                            f"canonical diagram for {sig} leaks into level "
                            f"signature {other}")
                cand = phi(rosette)
                for lower, lam in entries.items():
                    if lower[0] >= level:
                        continue
                    cnt = _slice_int(own, lower)
                    if cnt:
                        cand = cand - lam * cnt
                if val is None:
                    val = cand
                elif cand != val:
                    raise InvariantViolation(
                        f"partition-dependent coefficient at {sig}: "
                        f"{cand!r} vs {val!r}")
            entries[sig] = val
    return CoefficientTable(x=x, max_chords=max_chords,
                            max_flags=max_flags, entries=entries)


def reconstruct_invariant(table, g):
    """Evaluate the invariant encoded by a coefficient table on any graph
    in range: components multiply, non-loop edges recurse (bridges with a
    factor x-1 on the cut branch), rosettes are flat lambda sums over their
    own subset expansions."""
    k = len({c for c in component_map(g).values()})
    nullity = len(g.edges) - (len(g.vertices) - k)
    budget = table.max_flags + 2 * table.max_chords
    if nullity > table.max_chords or \
            len(g.flags) + 2 * len(g.edges) > budget:
        raise ValueError(
            f"graph out of table range: nullity {nullity} vs "
            f"{table.max_chords} chords, flags+2*edges "
            f"{len(g.flags) + 2 * len(g.edges)} vs {budget}")
    memo = {}

    def rec(h):
        key = h.canonical_text()
        if key in memo:
            return memo[key]
        comps = component_subgraphs(h)
        if len(comps) > 1:
            val = rec(comps[0])
            for c in comps[1:]:
                val = val * rec(c)
        elif len(h.vertices) == 1:
            poly = state_sum_polynomial(h)
            val = None
            for sig in signatures(poly):
                term = table.value(sig) * _slice_int(poly, sig)
                val = term if val is None else val + term
        else:
            eid = next(e for e in sorted(h.edges)
                       if classify_edge(h, e).kind != SELF_LOOP)
            cls = classify_edge(h, eid)
            cut = rec(cut_edge(h, eid))
            con = rec(contract_edge(h, eid))
            if cls.kind == BRIDGE:
                val = (table.x - 1) * cut + con
            else:
                val = cut + con
        memo[key] = val
        return val

    if not g.vertices:
        raise GraphError("cannot reconstruct on an empty graph")
    return rec(g)


def sigma_tau_normalize(phi, sigma, tau):
    """Wrap an invariant so its bridge and loop factors are rescaled away:
    the wrapped value at g is sigma^-rank tau^-nullity phi(g).  sigma and
    tau must be invertible in the invariant's ring."""
    sigma_inv = sigma.inverse()
    tau_inv = tau.inverse()

    def wrapped(g):
        k = len({c for c in component_map(g).values()})
        r = len(g.vertices) - k
        n = len(g.edges) - r
        return (sigma_inv ** r) * (tau_inv ** n) * phi(g)

    return wrapped

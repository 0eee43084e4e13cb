"""Signed chord diagrams with flags, the circle form of one-vertex graphs.

A diagram is a cyclic word in which each chord id occurs twice and each flag
id once, plus a twist sign per chord.  Diagrams convert losslessly to and
from one-vertex ribbon graphs (rosettes), which supplies tracing, sums and
classification for free.

The canonical class (i, j, k, l, m) records chord count, crossing pairs,
open boundary circles, flag count and the twist type m (0 orientable, 1 odd,
2 even non-orientable Z-excess).  Every diagram is move-equivalent to a
canonical layout with that class, built here explicitly; class equality is
how diagram equivalence is decided.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .graph import (FormatError, GraphError, RibbonGraph, contract_edge,
                    cut_edge, edge_end, is_edge_end, split_end)
from .invariants import state_sum_polynomial
from .topology import basic_invariants, trace_boundary

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class InvariantViolation(AssertionError):
    """A rewrite or construction changed a quantity it promised to keep."""


class ChordDiagram:
    """Immutable signed open chord diagram with rotation-insensitive
    equality."""

    __slots__ = ("_word", "_signs", "_chords", "_flags", "_canon")

    def __init__(self, word, signs=()):
        word = tuple(word)
        signs = dict(signs)
        counts = {}
        for tok in word:
            if not isinstance(tok, str) or not _ID_RE.match(tok):
                raise GraphError(f"bad diagram token {tok!r}")
            counts[tok] = counts.get(tok, 0) + 1
        chords = {t for t, c in counts.items() if c == 2}
        flags = {t for t, c in counts.items() if c == 1}
        bad = {t for t, c in counts.items() if c > 2}
        if bad:
            raise GraphError(f"tokens appearing more than twice: {sorted(bad)!r}")
        if set(signs) != chords:
            raise GraphError(
                f"signs must cover exactly the chords {sorted(chords)!r}, "
                f"got {sorted(signs)!r}")
        for c, tw in signs.items():
            if not isinstance(tw, bool):
                raise GraphError(f"sign of {c!r} must be bool, got {tw!r}")
        object.__setattr__(self, "_word", word)
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_chords", frozenset(chords))
        object.__setattr__(self, "_flags", frozenset(flags))
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    @property
    def word(self):
        return self._word

    @property
    def signs(self):
        return dict(self._signs)

    @property
    def chords(self):
        return self._chords

    @property
    def flags(self):
        return self._flags

    def canonical_text(self):
        if self._canon is None:
            object.__setattr__(self, "_canon", serialize_diagram(self))
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.canonical_text() == other.canonical_text()

    def __hash__(self):
        return hash(self.canonical_text())

    def __repr__(self):
        return f"ChordDiagram(word={self._word!r})"


def _least_rotation(word):
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def serialize_diagram(d):
    """Two lines: the word in its least rotation, then sorted chord signs."""
    word = _least_rotation(d.word)
    lines = ["word: " + " ".join(word),
             "signs: " + " ".join(
                 f"{c}:{'-' if d.signs[c] else '+'}" for c in sorted(d.chords))]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_diagram(text):
    word = None
    signs = {}
    saw_signs = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("word:"):
            if word is not None:
                raise FormatError("duplicate word line")
            word = tuple(line[5:].split())
        elif line.startswith("signs:"):
            if saw_signs:
                raise FormatError("duplicate signs line")
            saw_signs = True
            for tok in line[6:].split():
                cid, sep, sgn = tok.partition(":")
                if not sep or sgn not in "+-" or not _ID_RE.match(cid):
                    raise FormatError(f"bad sign token {tok!r}")
                if cid in signs:
                    raise FormatError(f"duplicate sign for {cid!r}")
                signs[cid] = sgn == "-"
        else:
            raise FormatError(f"unrecognized line {line!r}")
    if word is None:
        raise FormatError("missing word line")
    try:
        return ChordDiagram(word, signs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def rosette_to_diagram(g):
    """Read the diagram off a one-vertex graph's rotation."""
    if len(g.vertices) != 1:
        raise GraphError("diagram form requires a one-vertex graph")
    clash = set(g.edges) & set(g.flags)
    if clash:
        raise GraphError(
            f"edge and flag sharing an id cannot share a word: {sorted(clash)!r}")
    (rot,) = g.vertices.values()
    word = tuple(split_end(s)[0] if is_edge_end(s) else s for s in rot)
    return ChordDiagram(word, dict(g.edges))


def diagram_to_rosette(d, vertex="v"):
    """One-vertex graph whose rotation spells the word; a chord's first
    occurrence becomes its 'a' end."""
    seen = set()
    rot = []
    for tok in d.word:
        if tok in d.chords:
            end = "b" if tok in seen else "a"
            seen.add(tok)
            rot.append(edge_end(tok, end))
        else:
            rot.append(tok)
    return RibbonGraph({vertex: tuple(rot)}, dict(d.signs), d.flags)


def doubling_components(d):
    """(closed, open) curve counts of the doubled diagram, read from the
    boundary of the rosette realization."""
    rep = trace_boundary(diagram_to_rosette(d))
    return rep.F_int, rep.C_bnd


class CanonicalClass(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    m: int


def canonical_class(d):
    """The class tuple (i, j, k, l, m) of the diagram's equivalence class.

    A violation of the parity or range facts promised by the classification
    raises InvariantViolation: that signals a tracing bug, not bad input."""
    inv = basic_invariants(diagram_to_rosette(d))
    i = inv.n
    l = inv.f
    k = inv.C_bnd
    zexp = 1 - inv.F_int + inv.n
    if inv.t == 0:
        m = 0
        j2 = zexp - k
    else:
        m = 1 if (zexp - k) % 2 else 2
        j2 = zexp - k - m
    if j2 < 0 or j2 % 2:
        raise InvariantViolation(
            f"non-integral crossing count for word {d.word!r}: "
            f"zexp={zexp} k={k} m={m}")
    j = j2 // 2
    if 2 * j > i:
        raise InvariantViolation(
            f"crossing count {j} out of range for {i} chords")
    return CanonicalClass(i, j, k, l, m)


def build_canonical(i, j, k, partition, m):
    """The canonical diagram with i chords, j adjacent crossing pairs, m
    twisted isolated chords and flags distributed per partition = (s, l_1,
    ..., l_q): l_p flags inside the p-th untwisted isolated chord, s flags
    trailing on the outer circle.  Requires k = q + (1 if s else 0); the
    result's class is verified to be (i, j, k, s + sum(l_p), m)."""
    partition = tuple(partition)
    if not partition:
        raise GraphError("partition must be (s, l_1, ..., l_q)")
    s, inner = partition[0], partition[1:]
    q = len(inner)
    iso = i - 2 * j - m
    if not (0 <= m <= 2 and j >= 0 and iso >= 0 and s >= 0):
        raise GraphError(f"inadmissible tuple i={i} j={j} m={m} s={s}")
    if any(lp < 1 for lp in inner):
        raise GraphError("inner flag counts must be >= 1")
    if q > iso:
        raise GraphError(f"{q} flagged chords need {q} isolated untwisted "
                         f"chords, only {iso} available")
    if iso == 0 and q > 0:
        raise GraphError("no isolated untwisted chord can carry flags here")
    if k != q + (1 if s > 0 else 0):
        raise GraphError(f"k={k} inconsistent with partition {partition!r}")
    word = []
    signs = {}
    for p in range(j):
        x, y = f"x{p + 1}", f"y{p + 1}"
        word += [x, y, x, y]
        signs[x] = signs[y] = False
    for p in range(m):
        c = f"w{p + 1}"
        word += [c, c]
        signs[c] = True
    for p in range(iso):
        c = f"u{p + 1}"
        word.append(c)
        if p < q:
            word += [f"f{p + 1}_{r + 1}" for r in range(inner[p])]
        word.append(c)
        signs[c] = False
    word += [f"f0_{r + 1}" for r in range(s)]
    d = ChordDiagram(word, signs)
    expected = CanonicalClass(i, j, k, s + sum(inner), m)
    got = canonical_class(d)
    if got != expected:
        raise InvariantViolation(
            f"canonical build produced class {got}, expected {expected}")
    return d


def default_partition(i, j, k, l, m):
    """A flag partition realizing (i, j, k, l, m) as a canonical diagram, or
    None when the signature is not realizable.  Preference: k-1 flagged
    chords holding one flag each, remainder trailing; falls back to k
    flagged chords when nothing can trail."""
    iso = i - 2 * j - m
    if m < 0 or m > 2 or j < 0 or iso < 0:
        return None
    if k == 0:
        return (0,) if l == 0 else None
    if l < k:
        return None
    if k - 1 <= iso:
        return (l - (k - 1),) + (1,) * (k - 1)
    if k <= iso:
        return (0,) + (1,) * (k - 1) + (l - (k - 1),)
    return None


def all_partitions(i, j, k, l, m):
    """Every admissible flag partition (s, l_1, ..., l_q) for the class."""
    iso = i - 2 * j - m
    out = []
    if k == 0:
        return [(0,)] if l == 0 else []

    def compositions(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    if k <= iso:
        out += [(0,) + comp for comp in compositions(l, k)]
    if k - 1 <= iso:
        for s in range(1, l - (k - 1) + 1):
            out += [(s,) + comp for comp in compositions(l - s, k - 1)]
    return out


class RelatedDiagrams(NamedTuple):
    """The four diagrams produced by the two contraction orders of a
    two-vertex graph: contract one distinguished edge directly, or cut the
    other first.  Their sums satisfy
    sum(D1) - sum(D1_cut) = sum(D2) - sum(D2_cut)."""
    D1: ChordDiagram
    D1_cut: ChordDiagram
    D2: ChordDiagram
    D2_cut: ChordDiagram


def related_diagrams(g2, e, g):
    if len(g2.vertices) != 2:
        raise GraphError("related diagrams need a two-vertex graph")
    if e == g:
        raise GraphError("the two distinguished edges must differ")
    for eid in (e, g):
        if eid not in g2.edges:
            raise GraphError(f"no such edge {eid!r}")
        va = g2.vertex_of(edge_end(eid, "a"))
        vb = g2.vertex_of(edge_end(eid, "b"))
        if va == vb:
            raise GraphError(f"edge {eid!r} is a loop")
    return RelatedDiagrams(
        rosette_to_diagram(contract_edge(g2, g)),
        rosette_to_diagram(contract_edge(cut_edge(g2, e), g)),
        rosette_to_diagram(contract_edge(g2, e)),
        rosette_to_diagram(contract_edge(cut_edge(g2, g), e)),
    )


def diagram_polynomial(d):
    """The six-variable polynomial of the diagram's rosette."""
    return state_sum_polynomial(diagram_to_rosette(d))


def diagram_sum(d1, p1, d2, p2):
    """One-point sum: open d1's circle at slot p1, d2's at slot p2, and
    concatenate.  Clashing ids in d2 are renamed with a 'u' prefix.  Any
    slot choice yields the same canonical class."""
    w1, w2 = d1.word, d2.word
    if not 0 <= p1 <= len(w1):
        raise GraphError(f"slot {p1} out of range for first diagram")
    if not 0 <= p2 <= len(w2):
        raise GraphError(f"slot {p2} out of range for second diagram")
    taken = set(w1)
    ren = {}
    for tok in sorted(set(w2)):
        new = tok
        while new in taken or new in ren.values():
            new = "u" + new
        ren[tok] = new
    word = w1[p1:] + w1[:p1] + tuple(ren[t] for t in w2[p2:] + w2[:p2])
    signs = dict(d1.signs)
    signs.update({ren[c]: tw for c, tw in d2.signs.items()})
    return ChordDiagram(word, signs)


def twist_rewrite(d, c, split1, split2, verify=True):
    """Experimental direct word rewrite of a twist about chord c.

    With the word rotated to start at c, so it reads (c, A, Ct, c, Dt, B)
    where A = seg1[:split1], Ct = seg1[split1:], Dt = seg2[:split2] and
    B = seg2[split2:], the rewrite yields (c, B, reversed(Ct), c,
    reversed(Dt), A) and toggles the sign of every chord with exactly one
    endpoint inside Ct + Dt; c keeps its sign.  By default the canonical
    class is verified unchanged and InvariantViolation raised otherwise."""
    if c not in d.chords:
        raise GraphError(f"no such chord {c!r}")
    word = d.word
    first = word.index(c)
    word = word[first:] + word[:first]
    second = word.index(c, 1)
    seg1 = word[1:second]
    seg2 = word[second + 1:]
    if not 0 <= split1 <= len(seg1):
        raise GraphError(f"split1 {split1} out of range")
    if not 0 <= split2 <= len(seg2):
        raise GraphError(f"split2 {split2} out of range")
    a, ct = seg1[:split1], seg1[split1:]
    dt, b = seg2[:split2], seg2[split2:]
    new_word = (c,) + b + tuple(reversed(ct)) + (c,) + tuple(reversed(dt)) + a
    moved = ct + dt
    signs = {}
    for chord, tw in d.signs.items():
        if chord != c and moved.count(chord) == 1:
            signs[chord] = not tw
        else:
            signs[chord] = tw
    out = ChordDiagram(new_word, signs)
    if verify:
        before, after = canonical_class(d), canonical_class(out)
        if before != after:
            raise InvariantViolation(
                f"twist rewrite changed class {before} -> {after}")
    return out

"""Exact sparse polynomials in the six-variable ring Z[X,Y,Z,S,W,T]/(W^2 - W).

Terms live in the shifted basis (X-1), (Y-1), Z, S, W, T: an exponent vector
(a, b, c, d, w, g) stands for (X-1)^a (Y-1)^b Z^c S^d W^w T^g.  Coefficients
are arbitrary-precision ints.  The Z exponent may be negative (Laurent); the
W exponent is reduced eagerly to {0, 1} via W^2 = W.

Canonical term order is (total degree, exponent vector lexicographically),
used for serialization and display, so equal polynomials always print and
serialize identically.
"""
from __future__ import annotations

import json
from fractions import Fraction

BASIS = ("X-1", "Y-1", "Z", "S", "W", "T")
_NV = len(BASIS)


def _reduce_w(exps):
    if exps[4] > 1:
        return exps[:4] + (1,) + exps[5:]
    return exps


class BRPoly:
    """A sparse exact polynomial over the six-variable basis above."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exps, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                exps = tuple(int(x) for x in exps)
                if len(exps) != _NV:
                    raise ValueError(f"expected {_NV} exponents, got {exps!r}")
                if exps[4] < 0 or any(x < 0 for x in exps[:2] + exps[3:]):
                    raise ValueError(f"negative exponent outside Z: {exps!r}")
                exps = _reduce_w(exps)
                c = data.get(exps, 0) + coeff
                if c:
                    data[exps] = c
                elif exps in data:
                    del data[exps]
        self._terms = data

    @classmethod
    def term(cls, coeff, a=0, b=0, c=0, d=0, w=0, g=0):
        return cls({(a, b, c, d, w, g): coeff})

    @classmethod
    def constant(cls, n):
        return cls({(0, 0, 0, 0, 0, 0): n})

    def terms(self):
        """Terms in canonical order: (total degree, lex on exponents)."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BRPoly.constant(other)
        if not isinstance(other, BRPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = data.get(exps, 0) + coeff
            if c:
                data[exps] = c
            elif exps in data:
                del data[exps]
        out = BRPoly.__new__(BRPoly)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BRPoly.__new__(BRPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BRPoly()
            out = BRPoly.__new__(BRPoly)
            out._terms = {e: c * other for e, c in self._terms.items()}
            return out
        if not isinstance(other, BRPoly):
            return NotImplemented
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = _reduce_w(tuple(x + y for x, y in zip(e1, e2)))
                c = data.get(exps, 0) + c1 * c2
                if c:
                    data[exps] = c
                elif exps in data:
                    del data[exps]
        out = BRPoly.__new__(BRPoly)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative ints")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x, y, z, s, w, t):
        """Exact value at a rational point.  Z=0 with a negative Z exponent
        raises ZeroDivisionError."""
        x, y, z, s, w, t = (Fraction(v) for v in (x, y, z, s, w, t))
        total = Fraction(0)
        for (a, b, c, d, ww, g), coeff in self._terms.items():
            total += coeff * (x - 1) ** a * (y - 1) ** b * z ** c * s ** d * w ** ww * t ** g
        return total

    def inverse(self):
        """Inverse of a unit.  Only monomials +-Z^c (no other variables) are
        invertible here; anything else raises ValueError."""
        if len(self._terms) != 1:
            raise ValueError("not a unit: not a monomial")
        (exps, coeff), = self._terms.items()
        a, b, c, d, w, g = exps
        if (a, b, d, w, g) != (0, 0, 0, 0, 0) or coeff not in (1, -1):
            raise ValueError("not a unit in this ring")
        return BRPoly({(0, 0, -c, 0, 0, 0): coeff})

    def __repr__(self):
        return f"BRPoly({format_poly(self)})"


def _as_poly(x):
    if isinstance(x, BRPoly):
        return x
    if isinstance(x, int):
        return BRPoly.constant(x)
    return NotImplemented


ZERO = BRPoly()
ONE = BRPoly.constant(1)
X_MINUS_1 = BRPoly.term(1, a=1)
Y_MINUS_1 = BRPoly.term(1, b=1)
Z = BRPoly.term(1, c=1)
S = BRPoly.term(1, d=1)
W = BRPoly.term(1, w=1)
T = BRPoly.term(1, g=1)


def substitute_s_inv_z(p):
    """Substitute S -> 1/Z: each term's Z exponent drops by its S exponent and
    the S exponent becomes 0.  The result may be Laurent in Z."""
    data = {}
    for (a, b, c, d, w, g), coeff in p.items():
        exps = (a, b, c - d, 0, w, g)
        cc = data.get(exps, 0) + coeff
        if cc:
            data[exps] = cc
        elif exps in data:
            del data[exps]
    return BRPoly(data)


def specialize(p, z=None, s=None, w=None, t=None):
    """Substitute integer values for some of Z, S, W, T, leaving the rest
    symbolic.  A negative Z exponent only admits values +-1."""
    data = {}
    for (a, b, c, d, ww, g), coeff in p.items():
        if z is not None:
            if c < 0 and z not in (1, -1):
                raise ValueError("negative Z exponent needs z in {1,-1}")
            coeff *= z ** c if c >= 0 else z ** (-c)
            c = 0
        if s is not None:
            coeff *= s ** d
            d = 0
        if w is not None:
            coeff *= w ** ww
            ww = 0
        if t is not None:
            coeff *= t ** g
            g = 0
        if coeff == 0:
            continue
        exps = (a, b, c, d, ww, g)
        cc = data.get(exps, 0) + coeff
        if cc:
            data[exps] = cc
        elif exps in data:
            del data[exps]
    return BRPoly(data)


def coefficient_slice(p, i, j, k, l, m):
    """The univariate polynomial in (X-1) multiplying
    (Y-1)^i Z^j S^k W^m T^l, as a BRPoly with only (X-1) exponents."""
    data = {}
    for (a, b, c, d, w, g), coeff in p.items():
        if (b, c, d, w, g) == (i, j, k, m, l):
            data[(a, 0, 0, 0, 0, 0)] = coeff
    return BRPoly(data)


def signatures(p):
    """All (i, j, k, l, m) signatures with a nonzero slice, sorted."""
    seen = set()
    for (a, b, c, d, w, g), _ in p.items():
        seen.add((b, c, d, g, w))
    return sorted(seen)


def serialize_poly(p):
    """Canonical JSON text for a polynomial."""
    terms = [{"e": list(e), "c": str(c)} for e, c in p.terms()]
    return json.dumps({"basis": list(BASIS), "terms": terms})


def parse_poly(text):
    doc = json.loads(text)
    if doc.get("basis") != list(BASIS):
        raise ValueError(f"unexpected basis {doc.get('basis')!r}")
    return BRPoly((tuple(t["e"]), int(t["c"])) for t in doc["terms"])


_NAMES = ("(X-1)", "(Y-1)", "Z", "S", "W", "T")


def format_poly(p):
    """Human-readable form, e.g. '(Y-1) + Z·S·T^2'."""
    if p.is_zero():
        return "0"
    chunks = []
    for exps, coeff in p.terms():
        factors = []
        for name, e in zip(_NAMES, exps):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "·".join(factors)
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)

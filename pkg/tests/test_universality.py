"""Coefficient extraction and reconstruction for invariants of the
deletion/contraction shape.

With the state sum itself as the probe invariant, every extracted
coefficient must come out as the bare monomial it multiplies.
"""
import pytest

from ribbonpoly import (BRPoly, GraphError, InvariantViolation, ONE,
                        S, T, W, X_MINUS_1, Y_MINUS_1, Z, ZERO,
                        basic_invariants, extract_coefficients,
                        orientability_bit, parse_graph, random_graph,
                        reconstruct_invariant, sigma_tau_normalize,
                        state_sum_polynomial, strip_flags)

X = X_MINUS_1 + ONE


def monomial(i, j, k, l, m):
    return BRPoly.term(1, 0, i, j, k, m, l)


def test_orientability_bit():
    assert orientability_bit(0) == 0
    assert orientability_bit(1) == 1
    assert orientability_bit(2) == 1
    with pytest.raises(ValueError):
        orientability_bit(3)


def test_extraction_small_gives_monomials():
    table = extract_coefficients(state_sum_polynomial, X, 2, 2)
    assert table.max_chords == 2 and table.max_flags == 2
    for sig, value in table.rows():
        assert value == monomial(*sig), sig
    assert table.value((0, 1, 1, 1, 0)) == Z * S * T
    assert table.value((1, 1, 0, 0, 1)) == Y_MINUS_1 * Z * W


def test_table_value_range_handling():
    table = extract_coefficients(state_sum_polynomial, X, 1, 1)
    # in range but unreachable: a definite zero
    zero_sig = (0, 0, 1, 1, 0)
    if zero_sig not in dict(table.rows()):
        assert table.value(zero_sig) == ZERO
    with pytest.raises(ValueError):
        table.value((5, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        table.value((0, 0, 0, 99, 0))


def test_flag_bound_tiers():
    table = extract_coefficients(state_sum_polynomial, X, 2, 2)
    assert table.flag_bound(2) == 2
    assert table.flag_bound(1) == 4
    assert table.flag_bound(0) == 6
    for (i, j, k, l, m), _ in table.rows():
        assert l <= table.flag_bound(i)


def test_reconstruct_matches_state_sum():
    table = extract_coefficients(state_sum_polynomial, X, 2, 2)
    for i in range(20):
        nv = 1 + i % 3
        ne = min(nv - 1 + i % 3, 3)
        nf = max(0, 2 - 2 * max(0, ne - (nv - 1)))
        g = random_graph(13000 + i, nv, ne, nf, connected=True)
        inv = basic_invariants(g)
        if inv.n > 2 or inv.f + 2 * inv.E > 2 + 2 * 2:
            continue
        assert reconstruct_invariant(table, g) == state_sum_polynomial(g)


def test_reconstruct_handles_disconnection_and_bridges():
    table = extract_coefficients(state_sum_polynomial, X, 2, 4)
    g = parse_graph("edges: e:+ g:-\n"
                    "vertex v1: e.a\nvertex v2: e.b g.a g.b\nvertex v3:")
    assert reconstruct_invariant(table, g) == state_sum_polynomial(g)


def test_reconstruct_prechecks():
    table = extract_coefficients(state_sum_polynomial, X, 1, 1)
    big = strip_flags(random_graph(77, 1, 3))
    with pytest.raises(ValueError):
        reconstruct_invariant(table, big)   # nullity above the table
    crowded = random_graph(78, 2, 1, 4)
    with pytest.raises(ValueError):
        reconstruct_invariant(table, crowded)  # flag budget exceeded
    with pytest.raises(GraphError):
        reconstruct_invariant(table, parse_graph("edges:"))


def test_sigma_tau_normalization():
    sigma, tau = Z, -(Z ** 2)

    def scaled(g):
        inv = basic_invariants(g)
        return sigma ** inv.r * ((-ONE) ** inv.n * (Z ** 2) ** inv.n
                                 ) * state_sum_polynomial(g)

    unscaled = sigma_tau_normalize(scaled, sigma, tau)
    for i in range(10):
        g = random_graph(14000 + i, 1 + i % 2, 1 + i % 3, i % 3)
        assert unscaled(g) == state_sum_polynomial(g)


def test_extraction_of_scaled_invariant():
    # normalization then extraction recovers the same monomial table
    sigma, tau = Z, -(Z ** 2)

    def scaled(g):
        inv = basic_invariants(g)
        return (sigma ** inv.r * (-ONE) ** inv.n * (Z ** 2) ** inv.n
                * state_sum_polynomial(g))

    table = extract_coefficients(sigma_tau_normalize(scaled, sigma, tau),
                                 X, 1, 2)
    for sig, value in table.rows():
        assert value == monomial(*sig)


def test_extraction_consistency_guard():
    # a fake invariant that notices where flags sit must trip the
    # cross-partition comparison
    def impostor(g):
        (rot,) = g.vertices.values()
        first = next((i for i, s in enumerate(rot) if s in g.flags), 0)
        return state_sum_polynomial(g) + BRPoly.constant(first)

    with pytest.raises((InvariantViolation, AssertionError)):
        extract_coefficients(impostor, X, 2, 2)

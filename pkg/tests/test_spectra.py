import random

import pytest

from zfforge.graphs import (complete, complete_bipartite, cycle, ex32_g,
                            ex32_gprime, fig1_left, fig1_right, grid_lattice,
                            path, relabel, tensor)
from zfforge.randgraphs import random_graph, random_regular_graph
from zfforge.spectra import (CharPoly, MatrixKind, char_poly, cospectral,
                             det_exact, integer_roots, kind_from_letter,
                             laplacian_join_identity_check, matrix_of,
                             regular_cospectral_report,
                             regular_join_adjacency_check)

ALL_KINDS = (MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_charpoly_k2():
    assert char_poly(complete(2)).coeffs == (1, 0, -1)


def test_charpoly_c6_from_roots():
    # oracle: expand (x-2)(x+2)(x-1)^2(x+1)^2 independently
    expected = [1]
    for root in (2, -2, 1, 1, -1, -1):
        expected = _pmul(expected, [1, -root])
    assert list(char_poly(cycle(6)).coeffs) == expected == [1, 0, -6, 0, 9, 0, -4]


def test_charpoly_triangle():
    assert char_poly(complete(3)).coeffs == (1, 0, -3, -2)


def test_charpoly_trace_and_edge_coefficients():
    corpus = [fig1_left(), fig1_right(), ex32_g(), ex32_gprime(), grid_lattice(4),
              cycle(7), path(5), complete_bipartite(2, 3)]
    for g in corpus:
        adj = char_poly(g, MatrixKind.ADJACENCY).coeffs
        assert adj[1] == 0
        assert adj[2] == -g.m
        for kind in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
            assert char_poly(g, kind).coeffs[1] == -2 * g.m


def test_charpoly_at_zero_matches_independent_determinant():
    rng = random.Random(101)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        for kind in ALL_KINDS:
            m = matrix_of(g, kind)
            p = char_poly(g, kind)
            assert p(0) == (-1) ** g.n * det_exact(m)


def test_ex32_pair_cospectral():
    assert cospectral(ex32_g(), ex32_gprime(), MatrixKind.ADJACENCY)


def test_cospectral_examples():
    assert cospectral(fig1_left(), fig1_right(), MatrixKind.ADJACENCY)
    assert not cospectral(complete(3), path(3), MatrixKind.ADJACENCY)
    # regular adjacency-cospectral pair, recomputed directly from L char polys
    left = char_poly(fig1_left(), MatrixKind.LAPLACIAN)
    right = char_poly(fig1_right(), MatrixKind.LAPLACIAN)
    assert left == right


def test_cospectral_different_orders():
    assert not cospectral(path(3), path(4), MatrixKind.ADJACENCY)


def test_cospectral_relabel_invariance():
    rng = random.Random(103)
    for _ in range(10):
        g = random_graph(rng, rng.randint(1, 8))
        perm = list(range(g.n))
        rng.shuffle(perm)
        for kind in ALL_KINDS:
            assert cospectral(g, relabel(g, tuple(perm)), kind)


def test_regular_cospectral_report_fixture_pair():
    rep = regular_cospectral_report(fig1_left(), fig1_right())
    assert rep.regular and rep.degree == 4
    assert rep.adjacency_cospectral
    assert rep.laplacian_verified and rep.signless_verified
    assert rep.normalized_laplacian_derived


def test_regular_cospectral_report_inapplicable():
    rep = regular_cospectral_report(ex32_g(), ex32_gprime())
    assert not rep.regular
    assert rep.adjacency_cospectral is None
    assert not rep.normalized_laplacian_derived


def test_regular_cospectral_report_degree_mismatch():
    rep = regular_cospectral_report(cycle(6), cycle(6))
    assert rep.regular and rep.adjacency_cospectral
    rep = regular_cospectral_report(cycle(4), complete(4))
    assert not rep.regular  # degrees differ
    rep = regular_cospectral_report(cycle(4), cycle(6))
    assert rep.regular and rep.adjacency_cospectral is False
    assert rep.laplacian_verified is None


def test_laplacian_join_identity_examples():
    assert laplacian_join_identity_check(path(3), path(2))
    assert laplacian_join_identity_check(complete(1), complete(1))
    # join of two K1 is K2; Laplacian char poly x^2 - 2x has roots {0, 2}
    p = char_poly(complete(2), MatrixKind.LAPLACIAN)
    assert p.coeffs == (1, -2, 0)


def test_laplacian_join_identity_random_sweep():
    rng = random.Random(107)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        h = random_graph(rng, rng.randint(1, 8))
        assert laplacian_join_identity_check(g, h)


def test_regular_join_adjacency_examples():
    assert regular_join_adjacency_check(complete(2), complete(2))
    assert regular_join_adjacency_check(cycle(4), cycle(4))
    assert regular_join_adjacency_check(fig1_left(), complete(3))
    with pytest.raises(ValueError):
        regular_join_adjacency_check(path(3), complete(2))


def test_regular_join_adjacency_random_regular_sweep():
    rng = random.Random(109)
    for _ in range(20):
        pair = []
        for _side in range(2):
            n = rng.randint(2, 8)
            k = rng.choice([k for k in range(n) if (n * k) % 2 == 0])
            pair.append(random_regular_graph(rng, n, k))
        assert regular_join_adjacency_check(pair[0], pair[1])


def test_tensor_integer_roots_are_pairwise_products():
    # complete graphs have integral spectrum {n-1, -1 x (n-1)}
    def spectrum_of_complete(n):
        return [n - 1] + [-1] * (n - 1)

    for n, m in ((2, 3), (3, 4), (2, 5), (4, 5)):
        product = tensor(complete(n), complete(m))
        roots = integer_roots(char_poly(product))
        assert sum(roots.values()) == n * m  # fully integral spectrum
        expected: dict[int, int] = {}
        for a in spectrum_of_complete(n):
            for b in spectrum_of_complete(m):
                expected[a * b] = expected.get(a * b, 0) + 1
        assert roots == expected


def test_charpoly_json_roundtrip_big_coefficients():
    p = char_poly(grid_lattice(4), MatrixKind.SIGNLESS_LAPLACIAN)
    assert CharPoly.from_json(p.to_json()) == p
    assert all(isinstance(c, str) for c in p.to_json())


def test_kind_from_letter():
    assert kind_from_letter("A") is MatrixKind.ADJACENCY
    assert kind_from_letter("l") is MatrixKind.LAPLACIAN
    assert kind_from_letter("Q") is MatrixKind.SIGNLESS_LAPLACIAN
    with pytest.raises(ValueError):
        kind_from_letter("X")

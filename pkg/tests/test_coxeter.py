import json
import random
from itertools import permutations

import numpy as np
import pytest

from coxlinks import linalg
from coxlinks.coxeter import (
    Classification,
    CoxeterGraph,
    KernelCertificate,
    MinorsCertificate,
    NegativeCertificate,
    Ordering,
    affine_d,
    affine_e,
    bilinear_form,
    char_poly_coxeter,
    classify,
    coxeter_element,
    cycle,
    d_series,
    directed_graph,
    e_series,
    family,
    graph_from_json,
    graph_to_json,
    graphs_isomorphic,
    path,
    reflection_matrix,
    spectral_radius,
    star,
    triangle_with_tail,
)
from coxlinks.errors import DomainError, UnsupportedError
from coxlinks.intpoly import LEHMER_POLYNOMIAL, IntPolynomial, find_roots, poly_text
from coxlinks.search import atlas_graphs


def triangle(p, q, r):
    """Polygonal reflection graph: 3-cycle with labels p, q, r (2 = no edge)."""
    edges = []
    for (i, j, m) in ((1, 2, p), (2, 3, q), (1, 3, r)):
        if m > 2:
            edges.append((i, j, m))
    return CoxeterGraph.from_edges(3, edges)


# -- forms and reflections ---------------------------------------------------


def test_bilinear_form_entries():
    g = CoxeterGraph.from_edges(3, [(1, 2), (2, 3, 4)])
    b = bilinear_form(g)
    assert not b.exact
    assert b.entries[0][0] == 2.0
    assert b.entries[0][1] == -1.0  # label 3
    assert b.entries[0][2] == 0.0  # no edge
    assert abs(b.entries[1][2] + 2 ** 0.5) < 1e-15  # label 4: -2cos(pi/4)
    inf = bilinear_form(CoxeterGraph.from_edges(2, [(1, 2, 0)]))
    assert inf.entries[0][1] == -2.0


def test_simply_laced_form_is_exact_integers():
    b = bilinear_form(path(3))
    assert b.exact
    assert b.entries == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_reflection_matrix_path2():
    g = path(2)
    assert reflection_matrix(g, 1) == ((-1, 1), (0, 1))
    with pytest.raises(DomainError):
        reflection_matrix(g, 3)


def test_single_vertex_reflection():
    g = CoxeterGraph.from_edges(1, [])
    assert reflection_matrix(g, 1) == ((-1,),)
    assert char_poly_coxeter(g) == IntPolynomial([1, 1])


def test_reflections_are_involutions_preserving_the_form(rng):
    for _ in range(20):
        n = rng.randint(2, 6)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.4
        ]
        g = CoxeterGraph.from_edges(n, edges)
        b = bilinear_form(g).entries
        for v in range(1, n + 1):
            s = reflection_matrix(g, v)
            assert linalg.mat_eq(linalg.mat_mul(s, s), linalg.identity(n))
            st_b_s = linalg.mat_mul(linalg.mat_mul(linalg.transpose(s), b), s)
            assert linalg.mat_eq(st_b_s, b)


def test_coxeter_element_path2():
    c = coxeter_element(path(2), Ordering.of((1, 2)))
    assert c[0][0] + c[1][1] == -1
    assert c[0][0] * c[1][1] - c[0][1] * c[1][0] == 1
    assert char_poly_coxeter(path(2)) == IntPolynomial([1, 1, 1])


def test_coxeter_element_determinant(rng):
    for n in (2, 3, 5):
        g = path(n)
        c = coxeter_element(g)
        assert linalg.bareiss_det(c) == (-1) ** n


# -- the headline characteristic polynomial ----------------------------------


def test_e10_charpoly_is_lehmer_for_any_ordering(rng):
    e10 = e_series(10)
    assert char_poly_coxeter(e10) == LEHMER_POLYNOMIAL
    for _ in range(8):
        seq = list(range(1, 11))
        rng.shuffle(seq)
        assert char_poly_coxeter(e10, Ordering.of(seq)) == LEHMER_POLYNOMIAL


def test_charpoly_requires_simply_laced():
    with pytest.raises(UnsupportedError):
        char_poly_coxeter(triangle(2, 3, 7))


def test_berkowitz_agrees_with_numpy(rng):
    for _ in range(30):
        n = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        ours = linalg.berkowitz_charpoly(m)
        theirs = np.poly(np.array(m, dtype=float))  # descending
        assert np.allclose(list(reversed(ours)), theirs, atol=1e-6)


def test_directed_graph_and_tree_invariance():
    g = path(3)
    d1 = directed_graph(g, Ordering.of((1, 2, 3)))
    assert d1.arcs == frozenset({(1, 2), (2, 3)})
    d2 = directed_graph(g, Ordering.of((3, 2, 1)))
    assert d2.arcs == frozenset({(2, 1), (3, 2)})
    # swapping incomparable leaves leaves the directed graph unchanged
    s = star((2, 2, 2))
    a = directed_graph(s, Ordering.of((1, 2, 3, 4)))
    b = directed_graph(s, Ordering.of((1, 3, 2, 4)))
    assert a.arcs == b.arcs
    a2 = directed_graph(s, Ordering.of((2, 3, 4, 1)))
    b2 = directed_graph(s, Ordering.of((3, 2, 4, 1)))
    assert a2.arcs == b2.arcs
    assert a.arcs != a2.arcs  # moving the center does change directions


def test_charpoly_depends_only_on_directed_graph(rng):
    for _ in range(10):
        n = rng.randint(2, 6)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = CoxeterGraph.from_edges(n, edges)
        seen = {}
        for seq in permutations(range(1, n + 1)):
            ordering = Ordering.of(seq)
            key = directed_graph(g, ordering).arcs
            p = char_poly_coxeter(g, ordering)
            if key in seen:
                assert seen[key] == p
            else:
                seen[key] = p


def test_trees_are_ordering_independent():
    # every ordering of a tree on <= 7 vertices gives the same polynomial
    from coxlinks.search import enumerate_trees

    for tree in enumerate_trees(6):
        polys = {
            char_poly_coxeter(tree, Ordering.of(seq))
            for seq in permutations(range(1, tree.n + 1))
        }
        assert len(polys) == 1


# -- classification -----------------------------------------------------------


@pytest.mark.parametrize(
    "graph,expected",
    [
        (path(1), "spherical"),
        (path(9), "spherical"),
        (d_series(4), "spherical"),
        (d_series(9), "spherical"),
        (e_series(6), "spherical"),
        (e_series(7), "spherical"),
        (e_series(8), "spherical"),
        (star((2, 3, 5)), "spherical"),
        (cycle(3), "affine"),
        (cycle(9), "affine"),
        (affine_d(4), "affine"),
        (affine_d(7), "affine"),
        (affine_e(6), "affine"),
        (affine_e(7), "affine"),
        (affine_e(8), "affine"),
        (e_series(9), "affine"),
        (e_series(10), "indefinite"),
        (star((2, 3, 7)), "indefinite"),
        (triangle_with_tail(), "indefinite"),
    ],
)
def test_classification_suite(graph, expected):
    assert classify(graph).kind == expected


def test_certificates_verify_exactly():
    c = classify(e_series(8))
    assert isinstance(c.certificate, MinorsCertificate)
    assert all(m > 0 for m in c.certificate.minors)

    c = classify(cycle(5))
    assert isinstance(c.certificate, KernelCertificate)
    b = bilinear_form(cycle(5)).entries
    v = c.certificate.vector
    assert all(sum(b[i][j] * v[j] for j in range(5)) == 0 for i in range(5))

    c = classify(e_series(10))
    assert isinstance(c.certificate, NegativeCertificate)
    b = bilinear_form(e_series(10)).entries
    v = c.certificate.vector
    value = sum(v[i] * b[i][j] * v[j] for i in range(10) for j in range(10))
    assert value < 0 and value == c.certificate.value


def test_classification_disconnected_reports_worst():
    # affine component + spherical component => affine overall
    g = CoxeterGraph.from_edges(5, [(1, 2), (2, 3), (1, 3)])
    assert classify(g).kind == "affine"
    g2 = CoxeterGraph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert classify(g2).kind == "affine"


@pytest.mark.parametrize(
    "labels,expected",
    [
        ((2, 3, 5), "spherical"),
        ((2, 3, 6), "affine"),
        ((2, 3, 7), "indefinite"),
        ((2, 4, 4), "affine"),
        ((3, 3, 3), "affine"),
        ((2, 4, 5), "indefinite"),
    ],
)
def test_classification_numeric_triangles(labels, expected):
    assert classify(triangle(*labels)).kind == expected


# -- spectral radii ------------------------------------------------------------


def test_spectral_radius_values():
    assert abs(spectral_radius(e_series(10), tol=1e-8) - 1.17628) < 1e-4
    assert abs(spectral_radius(path(5), tol=1e-8) - 1.0) <= 1e-8
    assert abs(spectral_radius(cycle(6), tol=1e-8) - 1.0) <= 1e-8
    assert spectral_radius(CoxeterGraph.from_edges(1, [])) == 1.0


def test_spectral_radius_numeric_labels():
    rho = spectral_radius(triangle(2, 3, 7), tol=1e-6)
    assert rho > 1.0 + 1e-6
    assert abs(spectral_radius(triangle(2, 3, 5), tol=1e-6) - 1.0) < 1e-6


def test_eigenvalues_on_line_or_circle(rng):
    # sampled form of the location theorem at <= 6 vertices
    graphs = [g for g in atlas_graphs(6) if g.n >= 2]
    for _ in range(40):
        g = rng.choice(graphs)
        seq = list(range(1, g.n + 1))
        rng.shuffle(seq)
        p = char_poly_coxeter(g, Ordering.of(seq))
        rs = find_roots(p, 1e-12)
        for z in rs.roots:
            assert min(abs(z.imag), abs(abs(z) - 1.0)) <= 1e-8


def test_classify_spectral_consistency(rng):
    graphs = [g for g in atlas_graphs(5) if g.n >= 1]
    for g in graphs:
        kind = classify(g).kind
        rho = spectral_radius(g, tol=1e-10)
        assert (abs(rho - 1.0) <= 1e-8) == (kind in ("spherical", "affine"))


# -- families and serialization -----------------------------------------------


def test_star_family():
    assert graphs_isomorphic(star((2,)), path(2))
    assert graphs_isomorphic(star((2, 3, 5)), e_series(8))
    assert star((2, 3, 7)).n == 10
    assert graphs_isomorphic(affine_d(4), star((2, 2, 2, 2)))
    assert d_series(4).n == 4
    with pytest.raises(DomainError):
        star((1, 3))
    with pytest.raises(DomainError):
        e_series(11)


def test_family_dispatcher():
    assert family("star", (2, 3, 7)) == star((2, 3, 7))
    assert family("path", (4,)) == path(4)
    with pytest.raises(DomainError):
        family("mystery", ())


def test_graph_json_round_trip():
    g = CoxeterGraph.from_edges(4, [(1, 2), (2, 3, 5), (3, 4, 0)])
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_from_json(json.dumps(graph_to_json(g))) == g


def test_graph_validation():
    with pytest.raises(DomainError):
        CoxeterGraph.from_edges(3, [(1, 1)])
    with pytest.raises(DomainError):
        CoxeterGraph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(DomainError):
        CoxeterGraph.from_edges(3, [(1, 2, 2)])
    with pytest.raises(DomainError):
        CoxeterGraph.from_edges(2, [(1, 3)])

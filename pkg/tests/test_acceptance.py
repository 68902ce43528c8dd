"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime (run with `pytest -s` to see them).

The heavy spectral scans share one cached survey of every graph on at
most seven vertices, with every acyclic orientation of each; orderings
reduce to orientations because characteristic polynomials depend only on
the directed graph (verified independently in the property tests here and
in test_coxeter/test_seifert).
"""

import random
import time
from fractions import Fraction

import pytest

from conftest import random_diagram
from coxlinks import linalg
from coxlinks.chords import (
    OrderedChordSystem,
    enumerate_positive_orderings,
    incidence_graph,
    linear_extensions,
    make_positive,
    obstruction,
    positive_dags,
    realize,
)
from coxlinks.coxeter import (
    CoxeterGraph,
    Ordering,
    affine_d,
    affine_e,
    bilinear_form,
    char_poly_coxeter,
    classify,
    cycle,
    d_series,
    e_series,
    graphs_isomorphic,
    path,
    spectral_radius,
    star,
    triangle_with_tail,
)
from coxlinks.fixtures import (
    FIVE_CYCLE_SEIFERT_FIRST,
    FIVE_CYCLE_SEIFERT_SECOND,
    five_cycle_diagram,
    five_cycle_first_system,
    five_cycle_second_system,
)
from coxlinks.growth import delta
from coxlinks.intpoly import (
    LEHMER_POLYNOMIAL,
    IntPolynomial,
    find_roots,
    mahler_measure,
)
from coxlinks.search import (
    atlas_graphs,
    enumerate_trees,
    min_mahler_delta,
    min_positive_excess,
    min_spectral_radius,
    spectral_survey,
)
from coxlinks.seifert import alexander, coxeter_from_link, pretzel_alexander, seifert_matrix

ALPHA_L = 1.17628


class _Timer:
    def __init__(self, name, budget_s):
        self.name = name
        self.budget = budget_s

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[acceptance] {self.name}: {status} in {elapsed:.2f}s "
              f"(budget {self.budget:.0f}s)")
        if exc_type is None:
            assert elapsed < self.budget, (
                f"{self.name} exceeded its runtime budget: {elapsed:.1f}s"
            )
        return False


def test_criterion_01_lehmer_identity_chain():
    with _Timer("criterion 1 (Lehmer identity chain)", 1.0):
        assert delta((2, 3, 7)) == LEHMER_POLYNOMIAL
        e10 = e_series(10)
        rng = random.Random(1)
        orderings = [Ordering.identity(10)]
        for _ in range(10):
            seq = list(range(1, 11))
            rng.shuffle(seq)
            orderings.append(Ordering.of(seq))
        for ordering in orderings:
            assert char_poly_coxeter(e10, ordering) == LEHMER_POLYNOMIAL
        target = LEHMER_POLYNOMIAL.compose_neg().positive_leading()
        got = pretzel_alexander((2, 3, 7))
        assert got == target or got == -target


def test_criterion_02_mahler_values():
    with _Timer("criterion 2 (Mahler values)", 1.0):
        assert abs(mahler_measure(LEHMER_POLYNOMIAL, 1e-6) - 1.17628) < 1e-4
        smyth = IntPolynomial([1, -1, 0, 1])
        assert abs(mahler_measure(smyth, 1e-6) - 1.32472) < 1e-4


def test_criterion_03_five_cycle_fixtures():
    with _Timer("criterion 3 (5-cycle fixtures)", 5.0):
        m1 = seifert_matrix(five_cycle_first_system())
        m2 = seifert_matrix(five_cycle_second_system())
        assert m1.matrix == FIVE_CYCLE_SEIFERT_FIRST
        assert m2.matrix == FIVE_CYCLE_SEIFERT_SECOND
        a1 = alexander(m1).compose_neg().positive_leading()
        a2 = alexander(m2).compose_neg().positive_leading()
        assert a1 == IntPolynomial([1, -1, 0, 0, -1, 1]).positive_leading()
        assert a2 == IntPolynomial([1, 0, -1, -1, 0, 1]).positive_leading()
        assert len(enumerate_positive_orderings(five_cycle_diagram())) == 2


def test_criterion_04_classification_suite():
    with _Timer("criterion 4 (classification suite)", 120.0):
        for n in range(1, 10):
            assert classify(path(n)).kind == "spherical"
        for n in range(4, 10):
            assert classify(d_series(n)).kind == "spherical"
        for n in (6, 7, 8):
            assert classify(e_series(n)).kind == "spherical"
        for n in range(3, 10):  # affine A~_{n-1} for n-vertex cycles
            assert classify(cycle(n)).kind == "affine"
        for n in range(4, 9):
            assert classify(affine_d(n)).kind == "affine"
        for n in (6, 7, 8):
            assert classify(affine_e(n)).kind == "affine"
        assert classify(e_series(10)).kind == "indefinite"
        assert classify(triangle_with_tail()).kind == "indefinite"

        # every simply-laced graph on <= 7 vertices, every ordering (via
        # its directed graph): spectral radius 1 within 1e-8 iff the kind
        # is spherical or affine.  Spherical/affine orientations are
        # verified exactly (characteristic polynomial is a product of
        # cyclotomics, so every eigenvalue has modulus exactly 1);
        # indefinite orientations have a float radius above a margin four
        # orders looser than eigenvalue accuracy.
        survey = spectral_survey(7)
        assert len(survey) == 1252
        for record in survey:
            if record["kind"] in ("spherical", "affine"):
                assert record["all_cyclotomic"], record
            else:
                assert record["min_rho"] > 1 + 1e-6, record


def test_criterion_05_eigenvalue_location():
    with _Timer("criterion 5 (eigenvalue location)", 30.0):
        rng = random.Random(5)
        graphs = [g for g in atlas_graphs(7) if g.n >= 2]
        for _ in range(200):
            g = rng.choice(graphs)
            seq = list(range(1, g.n + 1))
            rng.shuffle(seq)
            p = char_poly_coxeter(g, Ordering.of(seq))
            rs = find_roots(p, 1e-12)
            for z in rs.roots:
                assert min(abs(z.imag), abs(abs(z) - 1.0)) <= 1e-8


def test_criterion_06_tuple_minimality():
    with _Timer("criterion 6 (tuple minimality)", 120.0):
        rep = min_mahler_delta(4, 16)
        assert rep.minimizer == (2, 3, 7)
        assert abs(rep.min_value - ALPHA_L) < 1e-4
        assert rep.runner_up > rep.min_value


def test_criterion_07_tree_minimality():
    with _Timer("criterion 7 (tree and graph minimality)", 300.0):
        rep = min_spectral_radius(10, "trees")
        assert graphs_isomorphic(rep.minimizer, e_series(10))
        assert abs(rep.min_value - ALPHA_L) < 1e-4
        rep7 = min_spectral_radius(7, "all-graphs")
        assert rep7.min_value >= ALPHA_L - 1e-9


def test_criterion_08_excess_minimality():
    with _Timer("criterion 8 (excess minimality)", 60.0):
        rep = min_positive_excess(6, 100)
        assert rep.min_value == Fraction(1, 42)
        assert rep.minimizer == (2, 3, 7)
        assert rep.runner_up > Fraction(1, 42)


def test_criterion_09_cross_module_identities():
    with _Timer("criterion 9 (cross-module identities)", 60.0):
        rng = random.Random(9)
        count = 0
        while count < 100:
            d = random_diagram(rng, rng.randint(1, 7))
            sys = make_positive(d)
            m = seifert_matrix(sys)
            n = m.n
            # (a) M + M^T is the bilinear form of the incidence graph
            b = bilinear_form(incidence_graph(sys.diagram)).entries
            seq = sys.order.seq
            permuted = tuple(tuple(b[x - 1][y - 1] for y in seq) for x in seq)
            assert permuted == tuple(
                tuple(m.matrix[i][j] + m.matrix[j][i] for j in range(n))
                for i in range(n)
            )
            # (b) char poly of -M^T M^{-1} equals the Coxeter element's
            lhs = IntPolynomial(
                linalg.berkowitz_charpoly(coxeter_from_link(m).matrix)
            )
            assert lhs == char_poly_coxeter(incidence_graph(sys.diagram), sys.order)
            # (c) Alexander reciprocity p(t) = ±t^n p(1/t)
            p = alexander(m)
            assert p == p.reversed() or p == -p.reversed()
            count += 1
        # (d) Alexander constant on equal directed incidence structures:
        # every linear extension of each structure yields one polynomial
        for _ in range(12):
            d = random_diagram(rng, rng.randint(2, 6))
            for arcs, flips in positive_dags(d).items():
                polys = set()
                oriented = d.reverse_chords(flips)
                for ext in linear_extensions(arcs, d.n, limit=6):
                    sys = OrderedChordSystem(oriented, Ordering(ext))
                    polys.add(alexander(seifert_matrix(sys)))
                assert len(polys) == 1


def test_criterion_10_realizability():
    with _Timer("criterion 10 (realizability)", 600.0):
        targets = list(enumerate_trees(8))
        targets += [cycle(n) for n in range(3, 9)]
        completes = {
            n: CoxeterGraph.from_edges(
                n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            )
            for n in (3, 4, 5)
        }
        targets += list(completes.values())

        def join_at(g1, g2, v1, v2):
            total = g1.n + g2.n - 1

            def relabel(v):
                if v == v2:
                    return v1
                return v + g1.n if v < v2 else v + g1.n - 1

            edges = list(g1.edge_pairs()) + [
                (relabel(a), relabel(b)) for a, b in g2.edge_pairs()
            ]
            return CoxeterGraph.from_edges(total, edges)

        targets += [
            join_at(completes[4], cycle(5), 1, 1),
            join_at(cycle(6), path(5), 3, 1),
            join_at(completes[3], completes[5], 1, 1),
            join_at(path(4), cycle(7), 4, 2),
        ]
        for g in targets:
            dd = realize(g)
            assert dd is not None, g
            assert incidence_graph(dd).edges == g.edges

        q3 = CoxeterGraph.from_edges(
            8,
            [(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 7), (4, 8),
             (5, 6), (5, 7), (6, 8), (7, 8)],
        )
        witness = obstruction(q3)
        assert witness is not None
        assert realize(q3) is None  # definitive at n = 8

        # witness soundness, exhaustive over every graph on <= 6 vertices
        # (vacuously: a witness needs an induced 6-cycle plus a hub off it,
        # hence 7 vertices) and non-vacuously at 7
        for g in atlas_graphs(6):
            assert obstruction(g) is None
        sound = 0
        for g in atlas_graphs(7):
            w = obstruction(g)
            if w is not None:
                sound += 1
                assert realize(g) is None
        assert sound > 0

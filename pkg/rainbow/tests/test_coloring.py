import random

import networkx as nx
from django.test import SimpleTestCase, tag

from rainbow.budget import Budget
from rainbow.coloring import (
    EdgeColoring,
    Outcome,
    PrcfVerdict,
    check_proper,
    color_subdivision_1,
    color_subdivision_k,
    decide_non_thick,
    decide_prcf,
    few_colors_certificate,
    find_rainbow_cycle,
    greedy_complete,
    vizing_color,
)
from rainbow.errors import ColoringError, FamilyError
from rainbow.families import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    hoffman_singleton,
    path,
    petersen,
    pg_incidence,
    subdivide,
    theta,
)
from rainbow.graph_core import Graph


def restricted_growth(m):
    """Every partition of range(m) as a class index per element."""

    def grow(prefix, classes):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for c in range(classes + 1):
            yield from grow(prefix + [c], max(classes, c + 1))

    yield from grow([], 0)


def brute_force_good(g):
    return any(
        check_proper(g, colors) and find_rainbow_cycle(g, colors) is None
        for colors in restricted_growth(g.m)
    )


class ColoringChecksMixin:
    def assertPrcf(self, g, coloring):
        self.assertEqual(len(coloring), g.m)
        self.assertTrue(check_proper(g, coloring))
        self.assertIsNone(find_rainbow_cycle(g, coloring))


class EdgeColoringTests(SimpleTestCase):
    def test_dense_keeps_relative_order(self):
        self.assertEqual(EdgeColoring.dense([5, 2, 5, 9]).colors, (1, 0, 1, 2))
        self.assertEqual(EdgeColoring.dense([5, 2, 5, 9]).count, 3)

    def test_rejects_gaps_and_negatives(self):
        with self.assertRaises(ColoringError):
            EdgeColoring((0, 2))
        with self.assertRaises(ColoringError):
            EdgeColoring((-1, 0))

    def test_verdict_requires_evidence(self):
        with self.assertRaises(ColoringError):
            PrcfVerdict(Outcome.GOOD)
        with self.assertRaises(ColoringError):
            PrcfVerdict(Outcome.BAD, evidence="search")
        PrcfVerdict(Outcome.BAD, evidence="exhaustion")
        PrcfVerdict(Outcome.UNKNOWN, evidence="budget")


class CheckTests(SimpleTestCase):
    def test_check_proper(self):
        g = cycle(4)
        self.assertTrue(check_proper(g, [0, 1, 0, 1]))
        self.assertFalse(check_proper(g, [0, 0, 1, 1]))
        with self.assertRaises(ColoringError):
            check_proper(g, [0, 1])

    def test_find_rainbow_cycle(self):
        g = cycle(4)
        self.assertEqual(find_rainbow_cycle(g, [0, 1, 2, 3]), (0, 1, 2, 3))
        self.assertIsNone(find_rainbow_cycle(g, [0, 1, 0, 1]))
        self.assertIsNotNone(find_rainbow_cycle(cycle(3), [0, 1, 2]))
        self.assertIsNone(find_rainbow_cycle(path(5), [0, 1, 2, 3]))

    def test_rainbow_cycle_is_a_real_cycle(self):
        g = complete(5)
        colors = vizing_color(g)
        found = find_rainbow_cycle(g, colors)
        self.assertIsNotNone(found)
        edges = [g.edge_id(found[i], found[(i + 1) % len(found)]) for i in range(len(found))]
        self.assertEqual(len({colors[e] for e in edges}), len(edges))

    def test_greedy_complete(self):
        g = cycle(4)
        self.assertEqual(greedy_complete(g, [0, -1, -1, -1], {0}), [0, 1, 2, 1])
        self.assertEqual(greedy_complete(g, [-1, -1, -1, -1]), [0, 1, 0, 1])
        with self.assertRaises(ColoringError):
            greedy_complete(g, [0, 0, -1, -1])


class VizingTests(SimpleTestCase):
    def check(self, g):
        coloring = vizing_color(g)
        self.assertTrue(check_proper(g, coloring))
        self.assertLessEqual(coloring.count, g.max_degree + 1)
        return coloring

    def test_named_graphs(self):
        self.assertEqual(self.check(petersen()).count, 4)
        self.assertEqual(self.check(cycle(6)).count, 2)
        self.check(complete_bipartite(2, 4))
        self.check(hoffman_singleton())
        self.check(pg_incidence(5))
        self.assertEqual(vizing_color(Graph.from_edges(3, [])).colors, ())

    def test_random_graphs(self):
        rng = random.Random(1234)
        for _ in range(200):
            n = rng.randint(2, 14)
            nx_graph = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**6))
            self.check(Graph.from_edges(n, sorted(nx_graph.edges())))


class FewColorsTests(ColoringChecksMixin, SimpleTestCase):
    def test_good_when_colors_below_girth(self):
        for g in (cycle(6), petersen(), pg_incidence(2)):
            verdict = few_colors_certificate(g)
            self.assertIs(verdict.outcome, Outcome.GOOD)
            self.assertEqual(verdict.evidence, "few-colors")
            self.assertPrcf(g, verdict.witness)

    def test_inconclusive(self):
        self.assertIsNone(few_colors_certificate(complete(4)))
        self.assertIsNone(few_colors_certificate(hoffman_singleton()))

    def test_acyclic_graph_is_an_error(self):
        with self.assertRaises(ColoringError):
            few_colors_certificate(path(4))


class SubdivisionColoringTests(ColoringChecksMixin, SimpleTestCase):
    def test_k_fold(self):
        for base in (complete(4), petersen(), complete(6)):
            sub = subdivide(base, 2)
            self.assertPrcf(sub.graph, color_subdivision_k(sub.graph, sub))
            self.assertPrcf(sub.graph, color_subdivision_k(sub.graph))
        # a subdivided cycle cannot be smoothed, so it needs its provenance
        sub = subdivide(cycle(3), 2)
        self.assertPrcf(sub.graph, color_subdivision_k(sub.graph, sub))
        sub = subdivide(hoffman_singleton(), 3)
        self.assertPrcf(sub.graph, color_subdivision_k(sub.graph, sub, k=3))

    def test_k_fold_argument_errors(self):
        sub = subdivide(complete(4), 2)
        with self.assertRaises(ColoringError):
            color_subdivision_k(sub.graph, sub, k=3)
        one = subdivide(complete(4), 1)
        with self.assertRaises(ColoringError):
            color_subdivision_k(one.graph, one)
        with self.assertRaises(ColoringError):
            color_subdivision_k(theta(4, 1))

    def test_one_fold_of_thick_polygon(self):
        sub = subdivide(pg_incidence(2), 1)
        self.assertPrcf(sub.graph, color_subdivision_1(sub.graph, sub))
        self.assertPrcf(sub.graph, color_subdivision_1(sub.graph))

    def test_one_fold_needs_thick_polygon(self):
        for base in (petersen(), complete(4)):
            sub = subdivide(base, 1)
            with self.assertRaises(ColoringError):
                color_subdivision_1(sub.graph, sub)
        with self.assertRaises(ColoringError):
            color_subdivision_1(subdivide(cycle(6), 1).graph)
        two = subdivide(pg_incidence(2), 2)
        with self.assertRaises(ColoringError):
            color_subdivision_1(two.graph, two)

    @tag("slow")
    def test_one_fold_of_larger_planes(self):
        for q in (3, 5):
            sub = subdivide(pg_incidence(q), 1)
            self.assertPrcf(sub.graph, color_subdivision_1(sub.graph, sub))


class DecideTests(ColoringChecksMixin, SimpleTestCase):
    def test_cycles(self):
        self.assertIs(decide_prcf(cycle(3)).outcome, Outcome.BAD)
        for n in range(4, 9):
            verdict = decide_prcf(cycle(n))
            self.assertIs(verdict.outcome, Outcome.GOOD, n)
            self.assertPrcf(cycle(n), verdict.witness)

    def test_complete_bipartite_two_by_n(self):
        for n, expected in ((1, Outcome.GOOD), (2, Outcome.GOOD), (3, Outcome.GOOD)):
            verdict = decide_prcf(complete_bipartite(2, n))
            self.assertIs(verdict.outcome, expected, n)
            self.assertPrcf(complete_bipartite(2, n), verdict.witness)
        for n in (4, 5):
            verdict = decide_prcf(complete_bipartite(2, n))
            self.assertIs(verdict.outcome, Outcome.BAD, n)
            self.assertEqual(verdict.evidence, "exhaustion")
            self.assertGreater(verdict.nodes, 0)

    def test_trees_are_good(self):
        verdict = decide_prcf(path(6))
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertEqual(verdict.evidence, "acyclic")

    def test_components(self):
        verdict = decide_prcf(disjoint_union(complete_bipartite(2, 4), cycle(5)))
        self.assertIs(verdict.outcome, Outcome.BAD)
        self.assertIn("vertex 0", verdict.detail)

        g = disjoint_union(cycle(4), cycle(5))
        verdict = decide_prcf(g)
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertPrcf(g, verdict.witness)

        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 3)])
        verdict = decide_prcf(g)
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertPrcf(g, verdict.witness)

    def test_petersen_is_good(self):
        verdict = decide_prcf(petersen())
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertPrcf(petersen(), verdict.witness)

    def test_budget_gives_unknown(self):
        verdict = decide_prcf(petersen(), Budget(max_nodes=5))
        self.assertIs(verdict.outcome, Outcome.UNKNOWN)
        self.assertEqual(verdict.evidence, "budget")
        self.assertIsNone(verdict.witness)

    def test_cycle_cap_falls_back_to_leaf_checks(self):
        verdict = decide_prcf(complete_bipartite(2, 4), Budget(cycle_cap=1))
        self.assertIs(verdict.outcome, Outcome.BAD)
        verdict = decide_prcf(cycle(6), Budget(cycle_cap=0))
        self.assertIs(verdict.outcome, Outcome.GOOD)

    def test_agrees_with_brute_force_on_small_graphs(self):
        # 52 connected graphs with up to 6 edges, 56 more with 7 on at most 7 vertices
        self.assertGreater(self.assertAgreesWithBruteForce(1, 7), 100)

    @tag("slow")
    def test_agrees_with_brute_force_on_eight_edges(self):
        self.assertGreater(self.assertAgreesWithBruteForce(8, 8), 50)

    def assertAgreesWithBruteForce(self, fewest, most):
        checked = 0
        for nx_graph in nx.graph_atlas_g():
            m = nx_graph.number_of_edges()
            if not fewest <= m <= most or not nx.is_connected(nx_graph):
                continue
            g = Graph.from_edges(nx_graph.number_of_nodes(), sorted(nx_graph.edges()))
            verdict = decide_prcf(g)
            expected = Outcome.GOOD if brute_force_good(g) else Outcome.BAD
            self.assertIs(verdict.outcome, expected, sorted(nx_graph.edges()))
            checked += 1
        return checked


class ParallelDecideTests(ColoringChecksMixin, SimpleTestCase):
    def test_matches_sequential(self):
        self.assertIs(decide_prcf(complete_bipartite(2, 4), workers=2).outcome, Outcome.BAD)
        verdict = decide_prcf(petersen(), workers=2)
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertPrcf(petersen(), verdict.witness)


class NonThickTests(ColoringChecksMixin, SimpleTestCase):
    def test_even_cycle(self):
        verdict = decide_non_thick(cycle(10))
        self.assertEqual(verdict.evidence, "even-cycle")
        self.assertEqual(verdict.witness.count, 2)
        self.assertPrcf(cycle(10), verdict.witness)

    def test_subdivided_multiple_edge(self):
        g = theta(4, 2)
        verdict = decide_non_thick(g)
        self.assertIs(verdict.outcome, Outcome.GOOD)
        self.assertEqual(verdict.evidence, "subdivision")
        self.assertPrcf(g, verdict.witness)

        self.assertIs(decide_non_thick(complete_bipartite(2, 3)).outcome, Outcome.GOOD)
        verdict = decide_non_thick(complete_bipartite(2, 4))
        self.assertIs(verdict.outcome, Outcome.BAD)
        self.assertEqual(verdict.evidence, "exhaustion")

    def test_subdivided_thick_polygon(self):
        for k in (1, 2):
            g = subdivide(pg_incidence(2), k).graph
            verdict = decide_non_thick(g)
            self.assertIs(verdict.outcome, Outcome.GOOD)
            self.assertPrcf(g, verdict.witness)

    def test_thick_polygon_is_rejected(self):
        with self.assertRaises(FamilyError):
            decide_non_thick(pg_incidence(2))

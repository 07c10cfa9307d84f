import random

import networkx as nx
from django.test import SimpleTestCase

from rainbow.errors import GraphError
from rainbow.families import (
    complete,
    complete_bipartite,
    cycle,
    hoffman_singleton,
    path,
    petersen,
    pg_incidence,
    theta,
)
from rainbow.graph_core import (
    Graph,
    StructureKind,
    bfs_levels,
    bipartition,
    classify,
    components,
    diameter,
    girth,
    induced_subgraph,
    is_connected,
    relabel,
)
from rainbow.graph_io import to_networkx


def label_free(structure):
    return (
        structure.kind,
        structure.diameter,
        structure.girth,
        structure.degree_set,
        structure.thick,
    )


class GraphConstructionTests(SimpleTestCase):
    def test_edges_are_normalised_in_order(self):
        g = Graph.from_edges(3, [(1, 0), (2, 1)])
        self.assertEqual(g.edges, ((0, 1), (1, 2)))
        self.assertEqual(g.edge_id(2, 1), 1)

    def test_rejects_loops_duplicates_and_out_of_range(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(0, 0)])
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(0, 1), (1, 0)])
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_label_table_must_match(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(0, 1)], labels=["a"])

    def test_adjacency_and_degrees(self):
        g = complete_bipartite(2, 3)
        self.assertEqual(g.degrees, (3, 3, 2, 2, 2))
        self.assertEqual(g.neighbors[0], (2, 3, 4))
        self.assertTrue(g.has_edge(1, 4))
        self.assertFalse(g.has_edge(0, 1))


class MetricTests(SimpleTestCase):
    def test_girth_and_diameter_of_named_graphs(self):
        cases = [
            (petersen(), 5, 2),
            (hoffman_singleton(), 5, 2),
            (pg_incidence(2), 6, 3),
            (cycle(7), 7, 3),
            (complete(4), 3, 1),
            (complete_bipartite(3, 3), 4, 2),
        ]
        for g, expected_girth, expected_diameter in cases:
            self.assertEqual(girth(g), expected_girth)
            self.assertEqual(diameter(g), expected_diameter)

    def test_forest_has_no_girth(self):
        self.assertIsNone(girth(path(5)))

    def test_disconnected_diameter_is_none(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        self.assertIsNone(diameter(g))
        self.assertFalse(is_connected(g))
        self.assertEqual(components(g), [[0, 1], [2, 3]])

    def test_girth_and_diameter_agree_with_networkx(self):
        rng = random.Random(20240611)
        checked = 0
        while checked < 40:
            n = rng.randint(4, 11)
            nx_graph = nx.gnp_random_graph(n, 0.35, seed=rng.randint(0, 10**6))
            if not nx.is_connected(nx_graph):
                continue
            g = Graph.from_edges(n, sorted(nx_graph.edges()))
            self.assertEqual(diameter(g), nx.diameter(nx_graph))
            expected = nx.girth(nx_graph)
            self.assertEqual(girth(g), None if expected == float("inf") else expected)
            checked += 1

    def test_bfs_levels_of_heawood(self):
        levels = bfs_levels(pg_incidence(2), 0)
        self.assertEqual([len(level) for level in levels], [1, 3, 6, 4])

    def test_bipartition(self):
        self.assertIsNone(bipartition(petersen()))
        part_a, part_b = bipartition(pg_incidence(2))
        self.assertEqual((len(part_a), len(part_b)), (7, 7))


class TransformTests(SimpleTestCase):
    def test_relabel_is_isomorphic(self):
        g = petersen()
        permutation = list(range(g.n))
        random.Random(7).shuffle(permutation)
        h = relabel(g, permutation)
        self.assertTrue(nx.is_isomorphic(to_networkx(g), to_networkx(h)))
        with self.assertRaises(GraphError):
            relabel(g, [0] * g.n)

    def test_relabel_keeps_girth_diameter_and_class(self):
        rng = random.Random(11)
        for g in (petersen(), pg_incidence(3), cycle(7), complete_bipartite(2, 4)):
            for _ in range(3):
                permutation = list(range(g.n))
                rng.shuffle(permutation)
                h = relabel(g, permutation)
                self.assertEqual(girth(h), girth(g))
                self.assertEqual(diameter(h), diameter(g))
                self.assertEqual(label_free(classify(h)), label_free(classify(g)))

    def test_induced_subgraph_maps_back(self):
        g = cycle(6)
        sub, vertex_origin, edge_origin = induced_subgraph(g, [0, 1, 2, 5])
        self.assertEqual(vertex_origin, [0, 1, 2, 5])
        self.assertEqual(sub.m, 3)
        for sub_edge, original in enumerate(edge_origin):
            u, v = sub.edges[sub_edge]
            self.assertEqual(g.edges[original], (vertex_origin[u], vertex_origin[v]))


class ClassifyTests(SimpleTestCase):
    def test_moore_graphs(self):
        for g, degree in ((petersen(), 3), (hoffman_singleton(), 7)):
            structure = classify(g)
            self.assertIs(structure.kind, StructureKind.MOORE)
            self.assertEqual(structure.diameter, 2)
            self.assertEqual(structure.regular_degree, degree)

    def test_generalized_polygons(self):
        structure = classify(pg_incidence(3))
        self.assertIs(structure.kind, StructureKind.GENERALIZED_POLYGON)
        self.assertEqual(structure.diameter, 3)
        self.assertTrue(structure.thick)
        self.assertTrue(structure.is_bipartite)

        k24 = classify(complete_bipartite(2, 4))
        self.assertIs(k24.kind, StructureKind.GENERALIZED_POLYGON)
        self.assertFalse(k24.thick)

        self.assertIs(classify(cycle(8)).kind, StructureKind.GENERALIZED_POLYGON)
        self.assertIs(classify(theta(3, 2)).kind, StructureKind.GENERALIZED_POLYGON)

    def test_neither(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        self.assertIs(classify(g).kind, StructureKind.NEITHER)

    def test_rejects_small_or_disconnected(self):
        with self.assertRaises(GraphError):
            classify(path(2))
        with self.assertRaises(GraphError):
            classify(Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))

import random
import unittest

from lowerzdd.constructions import (
    SupersetException,
    assemble_sup,
    build_cutset_tdd_subset,
    build_isolated_vertex_family,
    build_light_components,
    isolated_vertices_family,
    lift_to_supersets,
)
from lowerzdd.diagrams import BOTTOM, SignedEdgeSet, TddStore, ZddStore
from lowerzdd.pipeline.oracle import (
    all_edge_subsets,
    brute_force_supersets,
    component_weights,
)
from lowerzdd.search import Graph
from tests.corpus import LOWER_BOUNDS, corpus, cycle_example


def signed(*literals):
    return SignedEdgeSet.from_literals(literals)


def edge_sets(*sets):
    return {frozenset(s) for s in sets}


def random_signed_family(rng, m):
    family = set()
    for _ in range(rng.randint(1, 5)):
        literals = [
            e * rng.choice((1, -1)) for e in range(1, m + 1) if rng.random() < 0.3
        ]
        family.add(signed(*literals))
    return family


class TestLiftToSupersets(unittest.TestCase):
    def test_cycle_example(self):
        tdd_store, store = TddStore(4), ZddStore(4)
        t = tdd_store.from_signed_sets([signed(1, -2, -3)])
        root = lift_to_supersets(tdd_store, t, store)
        self.assertEqual(store.to_sets(root), edge_sets({1}, {1, 4}))

    def test_empty_signed_set(self):
        tdd_store, store = TddStore(5), ZddStore(5)
        t = tdd_store.from_signed_sets([SignedEdgeSet()])
        self.assertEqual(lift_to_supersets(tdd_store, t, store), store.all_subsets())

    def test_empty_family(self):
        self.assertEqual(lift_to_supersets(TddStore(3), BOTTOM, ZddStore(3)), BOTTOM)

    def test_universe_mismatch(self):
        with self.assertRaises(SupersetException):
            lift_to_supersets(TddStore(3), BOTTOM, ZddStore(4))

    # Tests that overlapping signed sets are lifted as a union
    def test_matches_brute_force(self):
        rng = random.Random(4)
        m = 7
        for _ in range(60):
            family = set()
            for _ in range(rng.randint(1, 5)):
                literals = [
                    e * rng.choice((1, -1))
                    for e in range(1, m + 1)
                    if rng.random() < 0.3
                ]
                family.add(signed(*literals))
            tdd_store, store = TddStore(m), ZddStore(m)
            t = tdd_store.from_signed_sets(family)
            root = lift_to_supersets(tdd_store, t, store)
            self.assertEqual(store.to_sets(root), brute_force_supersets(m, family))
            self.assertEqual(store.audit(), [])


class TestIsolatedVertices(unittest.TestCase):
    def test_cycle_vertex(self):
        store = ZddStore(4)
        root = build_isolated_vertex_family(cycle_example(), 1, store)
        self.assertEqual(store.to_sets(root), edge_sets((), {2}, {4}, {2, 4}))

    def test_vertex_without_edges(self):
        g = Graph(3, (1, 1, 1), ((1, 2),))
        store = ZddStore(1)
        root = build_isolated_vertex_family(g, 3, store)
        self.assertEqual(root, store.all_subsets())

    def test_light_vertices(self):
        store = ZddStore(4)
        root = isolated_vertices_family(cycle_example(), 3, store)
        self.assertEqual(store.count(root), 6)
        self.assertEqual(isolated_vertices_family(cycle_example(), 1, store), BOTTOM)


class TestAssembleSup(unittest.TestCase):
    def test_cycle_example(self):
        g = cycle_example()
        tdd_store, store = TddStore(4), ZddStore(4)
        t = tdd_store.from_signed_sets([signed(1, -2, -3)])
        root = assemble_sup(g, tdd_store, t, 3, store)
        self.assertEqual(
            store.to_sets(root),
            edge_sets((), {1}, {2}, {3}, {4}, {1, 4}, {2, 4}, {3, 4}),
        )

    def test_lower_bound_one_is_lift_only(self):
        g = cycle_example()
        tdd_store, store = TddStore(4), ZddStore(4)
        t = tdd_store.from_signed_sets([signed(1, -2, -3)])
        self.assertEqual(
            assemble_sup(g, tdd_store, t, 1, store),
            lift_to_supersets(tdd_store, t, store),
        )

    def test_graph_mismatch(self):
        with self.assertRaises(SupersetException):
            assemble_sup(cycle_example(), TddStore(3), BOTTOM, 3, ZddStore(3))

    # Tests that Z_S↑ holds exactly the edge sets with a component lighter than L
    def test_holds_edge_sets_with_a_light_component(self):
        for g in corpus(max_edges=10, random_graphs=40):
            for L in LOWER_BOUNDS:
                with self.subTest(edges=g.edges, weights=g.weights, L=L):
                    store, tdd_store = ZddStore(g.m), TddStore(g.m)
                    zs = build_light_components(g, L, store)
                    t = build_cutset_tdd_subset(g, store, zs, tdd_store)
                    root = assemble_sup(g, tdd_store, t, L, store)
                    expected = {
                        subset
                        for subset in all_edge_subsets(g.m)
                        if min(component_weights(g, subset)) < L
                    }
                    self.assertEqual(store.to_sets(root), expected)


class TestLiftUnion(unittest.TestCase):
    # Tests that lifting a union is the union of the lifts
    def test_lift_distributes_over_union(self):
        rng = random.Random(9)
        m = 7
        for _ in range(40):
            first, second = random_signed_family(rng, m), random_signed_family(rng, m)
            tdd_store, store = TddStore(m), ZddStore(m)
            both = lift_to_supersets(
                tdd_store, tdd_store.from_signed_sets(first | second), store
            )
            each = store.union(
                lift_to_supersets(tdd_store, tdd_store.from_signed_sets(first), store),
                lift_to_supersets(tdd_store, tdd_store.from_signed_sets(second), store),
            )
            self.assertEqual(both, each)

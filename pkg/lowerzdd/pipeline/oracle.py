"""
Brute-force counterparts of the diagram constructions, for desk-size graphs.
"""
from itertools import combinations, product
from typing import FrozenSet, Iterable, Iterator, List, Set

from lowerzdd.constructions.cutsets import check_minimal_cutset
from lowerzdd.diagrams.tdd import SignedEdgeSet
from lowerzdd.search.graph import Graph
from lowerzdd.utilities import UnionFind

EdgeSet = FrozenSet[int]


def component_weights(g: Graph, edge_set: Iterable[int]) -> List[int]:
    """
    Weights of the connected components of (V, edge_set), isolated vertices
    included.
    """
    components = UnionFind(g.vertices)
    for index in edge_set:
        components.union(*g.edge(index))
    return [sum(g.weight(v) for v in group) for group in components.groups()]


def satisfies_lower_bound(g: Graph, edge_set: Iterable[int], L: int) -> bool:
    return all(weight >= L for weight in component_weights(g, edge_set))


def is_connected_edge_set(g: Graph, edge_set: Iterable[int]) -> bool:
    edge_set = list(edge_set)
    if not edge_set:
        return False
    components = UnionFind(g.dom(edge_set))
    for index in edge_set:
        components.union(*g.edge(index))
    return len(components.groups()) == 1


def all_edge_subsets(m: int) -> Iterator[EdgeSet]:
    edges = range(1, m + 1)
    for size in range(m + 1):
        for chosen in combinations(edges, size):
            yield frozenset(chosen)


def brute_force_filter(
    g: Graph, family: Iterable[Iterable[int]], L: int
) -> Set[EdgeSet]:
    """Members whose every component weighs at least L."""
    return {
        frozenset(member)
        for member in family
        if satisfies_lower_bound(g, member, L)
    }


def brute_force_light_components(g: Graph, L: int) -> Set[EdgeSet]:
    return {
        subset
        for subset in all_edge_subsets(g.m)
        if is_connected_edge_set(g, subset)
        and sum(g.weight(v) for v in g.dom(subset)) < L
    }


def brute_force_minimal_cutsets(g: Graph) -> Set[SignedEdgeSet]:
    """Scans all 3^m signings."""
    found = set()
    for signs in product((0, 1, -1), repeat=g.m):
        signed = SignedEdgeSet(
            frozenset(e for e, sign in enumerate(signs, start=1) if sign == 1),
            frozenset(e for e, sign in enumerate(signs, start=1) if sign == -1),
        )
        if check_minimal_cutset(g, signed):
            found.add(signed)
    return found


def brute_force_supersets(
    m: int, signed_sets: Iterable[SignedEdgeSet]
) -> Set[EdgeSet]:
    signed_sets = list(signed_sets)
    return {
        subset
        for subset in all_edge_subsets(m)
        if any(
            s.positives <= subset and not (s.negatives & subset) for s in signed_sets
        )
    }

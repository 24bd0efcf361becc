from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx

Edge = Tuple[int, int]


class GraphException(Exception):
    ...


@dataclass(frozen=True)
class Graph:
    """
    Vertex-weighted undirected graph with a fixed edge order.

    Vertices are 1..n and edges are e_1..e_m in the order given. The edge
    order is the variable order of every diagram built over the graph.
    """

    n: int
    weights: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )

        if self.n < 0:
            raise GraphException(f"Vertex count must be >= 0, got {self.n}")
        if len(self.weights) != self.n:
            raise GraphException(
                f"Expected {self.n} vertex weights, got {len(self.weights)}"
            )
        for vertex, weight in enumerate(self.weights, start=1):
            if not isinstance(weight, int) or weight < 1:
                raise GraphException(
                    f"Vertex {vertex} has weight {weight!r}; weights must be >= 1"
                )
        for index, (u, v) in enumerate(self.edges, start=1):
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphException(
                    f"Edge e{index}={{{u}, {v}}} leaves [1..{self.n}]"
                )
            if u == v:
                raise GraphException(f"Edge e{index} is a self-loop on vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight(self, vertex: int) -> int:
        return self.weights[vertex - 1]

    def edge(self, index: int) -> Edge:
        return self.edges[index - 1]

    @cached_property
    def incidence(self) -> Dict[int, Tuple[int, ...]]:
        incident: Dict[int, list] = {v: [] for v in self.vertices}
        for index, (u, v) in enumerate(self.edges, start=1):
            incident[u].append(index)
            incident[v].append(index)
        return {v: tuple(edges) for v, edges in incident.items()}

    def incident_edges(self, vertex: int) -> Tuple[int, ...]:
        if vertex not in self.incidence:
            raise GraphException(f"Vertex {vertex} is not in [1..{self.n}]")
        return self.incidence[vertex]

    def dom(self, edge_set: Iterable[int]) -> FrozenSet[int]:
        """Vertices that are an endpoint of at least one edge of `edge_set`."""
        return frozenset(x for index in edge_set for x in self.edge(index))

    @classmethod
    def from_networkx(
        cls,
        graph: nx.Graph,
        weight: str = "weight",
        default_weight: int = 1,
        edge_order: Optional[Sequence[Tuple]] = None,
    ) -> "Graph":
        """
        Numbers the networkx nodes 1..n in iteration order and keeps the edge
        order of `edge_order` (or of `graph.edges`).
        """
        numbering = {node: i for i, node in enumerate(graph.nodes, start=1)}
        weights = tuple(
            int(graph.nodes[node].get(weight, default_weight)) for node in graph.nodes
        )
        order = graph.edges if edge_order is None else edge_order
        edges = tuple((numbering[a], numbering[b]) for a, b, *_ in order)
        return cls(len(numbering), weights, edges)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex, weight=self.weight(vertex))
        for index, (u, v) in enumerate(self.edges, start=1):
            graph.add_edge(u, v, key=index, index=index)
        return graph


@dataclass(frozen=True)
class FrontierPlan:
    """
    Frontier F_i for i in 0..m plus the vertices entering at and leaving
    after each edge. F_i holds the vertices touched by both e_1..e_i and
    e_{i+1}..e_m, so F_0 and F_m are empty.
    """

    frontiers: Tuple[Tuple[int, ...], ...]
    entering: Tuple[Tuple[int, ...], ...]
    leaving: Tuple[Tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return max((len(frontier) for frontier in self.frontiers), default=0)

    def frontier(self, index: int) -> Tuple[int, ...]:
        return self.frontiers[index]


def build_frontier_plan(g: Graph) -> FrontierPlan:
    first: Dict[int, int] = {}
    last: Dict[int, int] = {}
    for index, (u, v) in enumerate(g.edges, start=1):
        for x in (u, v):
            first.setdefault(x, index)
            last[x] = index

    frontiers = [()]
    entering = [()]
    leaving = [()]
    for index in range(1, g.m + 1):
        frontiers.append(
            tuple(x for x in sorted(first) if first[x] <= index < last[x])
        )
        entering.append(tuple(x for x in sorted(first) if first[x] == index))
        leaving.append(tuple(x for x in sorted(last) if last[x] == index))

    return FrontierPlan(tuple(frontiers), tuple(entering), tuple(leaving))

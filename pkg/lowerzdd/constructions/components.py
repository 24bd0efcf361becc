import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple

from lowerzdd.diagrams.base import NodeRef
from lowerzdd.diagrams.zdd import ZddStore
from lowerzdd.search.frontier import REJECT, FrontierSearch, SearchSpec
from lowerzdd.search.graph import FrontierPlan, Graph, build_frontier_plan

LOGGER = logging.getLogger(__name__)

# (comp, weight, closed). comp is aligned with the frontier; 0 marks a vertex
# no selected edge has touched yet, other values are block ids numbered in
# order of first occurrence.
LightComponentState = Tuple[Tuple[int, ...], int, bool]


@lru_cache(maxsize=None)
def bell_number(k: int) -> int:
    """B_k computed row by row with the Bell triangle."""
    if k < 0:
        raise ValueError(f"Bell numbers are defined for k >= 0, got {k}")
    row = [1]
    for _ in range(k):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]


@dataclass(frozen=True)
class BellBound:
    f: int
    L: int

    @property
    def bell(self) -> int:
        return bell_number(self.f)

    @property
    def width(self) -> int:
        """The B_f * L width the construction is measured against."""
        return self.bell * self.L

    def level_limit(self, frontier_size: int) -> int:
        """
        States a level over `frontier_size` vertices can hold: partitions of
        the frontier with one extra block for untouched vertices, times the
        L live weights.
        """
        return bell_number(frontier_size + 1) * self.L


def weight_of(g: Graph, edge_set: Iterable[int]) -> int:
    return sum(g.weight(v) for v in g.dom(edge_set))


def _renumber(blocks: Iterable[int]) -> Tuple[int, ...]:
    numbering: Dict[int, int] = {0: 0}
    return tuple(numbering.setdefault(b, len(numbering)) for b in blocks)


class LightComponentException(Exception):
    ...


class LightComponentSpec(SearchSpec[LightComponentState]):
    """
    Edge sets forming exactly one connected subgraph of weight < L.

    The weight of every touched vertex is added once, when its first selected
    edge is taken; since the weight never shrinks, a state reaching L is
    rejected on the spot.
    """

    arity = 2

    def __init__(
        self, g: Graph, L: int, plan: Optional[FrontierPlan] = None
    ) -> None:
        if L < 1:
            raise LightComponentException(
                f"The lower bound L must be >= 1, got {L}"
            )
        self.g = g
        self.L = L
        self.m = g.m
        self.plan = plan if plan is not None else build_frontier_plan(g)

    def root_state(self) -> LightComponentState:
        return ((), 0, False)

    def transition(self, state, index, branch):
        comp, weight, closed = state
        plan = self.plan
        blocks = dict(zip(plan.frontier(index - 1), comp))
        for x in plan.entering[index]:
            blocks[x] = 0

        if branch == 1:
            if closed:
                return REJECT

            u, v = self.g.edge(index)
            for x in (u, v):
                if blocks[x] == 0:
                    weight += self.g.weight(x)
            if weight >= self.L:
                return REJECT

            block_u, block_v = blocks[u], blocks[v]
            if block_u == 0 and block_v == 0:
                blocks[u] = blocks[v] = max(blocks.values()) + 1
            elif block_u == 0:
                blocks[u] = block_v
            elif block_v == 0:
                blocks[v] = block_u
            elif block_u != block_v:
                for x, block in blocks.items():
                    if block == block_v:
                        blocks[x] = block_u

        remaining = plan.frontier(index)
        live = {blocks[x] for x in remaining} - {0}
        closing = {blocks[x] for x in plan.leaving[index]} - {0} - live
        if closing:
            # A finished component must be the only one.
            if closed or live or len(closing) > 1:
                return REJECT
            closed = True

        if closed:
            return (tuple(0 for _ in remaining), 0, True)
        return (_renumber(blocks[x] for x in remaining), weight, False)

    def finalize(self, state) -> bool:
        return state[2]


def build_light_components(g: Graph, L: int, store: ZddStore) -> NodeRef:
    """
    Builds Z_S: every nonempty connected edge set whose endpoints weigh < L.
    """
    search = FrontierSearch(LightComponentSpec(g, L), store)
    root = search.run()
    LOGGER.debug(f" [x] light components for L={L}: peak {search.stats().peak}")
    return root

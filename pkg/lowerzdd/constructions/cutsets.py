import logging
from typing import FrozenSet, Iterable, Optional, Set, Tuple

from lowerzdd.diagrams.base import BOTTOM, TOP, NodeRef
from lowerzdd.diagrams.tdd import NEG, POS, ZERO, SignedEdgeSet, TddStore
from lowerzdd.diagrams.zdd import ZddStore
from lowerzdd.search.frontier import REJECT, FrontierSearch, SearchSpec
from lowerzdd.search.graph import FrontierPlan, Graph, build_frontier_plan

LOGGER = logging.getLogger(__name__)

# colors[v] is a bit set over the types of processed edges at v.
COLOR_ZERO, COLOR_POS, COLOR_NEG = 1, 2, 4
BRANCH_COLORS = {ZERO: COLOR_ZERO, POS: COLOR_POS, NEG: COLOR_NEG}

# (colors, reserved, negative neighbours, zs), each tuple aligned with the
# frontier. zs is the current Z_S node in subsetting mode and None otherwise.
CutsetState = Tuple[
    Tuple[int, ...], Tuple[bool, ...], Tuple[Tuple[int, ...], ...], Optional[NodeRef]
]


class CutsetException(Exception):
    ...


class _Rejected(Exception):
    ...


class MinimalCutsetSpec(SearchSpec[CutsetState]):
    """
    Signed edge sets in which no vertex meets both a zero and a positive edge
    and every negative edge has an endpoint meeting a positive edge.

    With `zs_store`/`zs_root` the positive part is additionally walked along
    the given ZDD, so only signed sets with abs(S+) in that family survive.
    """

    arity = 3

    def __init__(
        self,
        g: Graph,
        zs_store: Optional[ZddStore] = None,
        zs_root: Optional[NodeRef] = None,
        plan: Optional[FrontierPlan] = None,
    ) -> None:
        self.g = g
        self.m = g.m
        self.plan = plan if plan is not None else build_frontier_plan(g)
        self.zs_store = zs_store
        self.zs_root = zs_root

    @property
    def subsetting(self) -> bool:
        return self.zs_store is not None

    def root_state(self):
        if self.subsetting and self.zs_root == BOTTOM:
            return REJECT
        return ((), (), (), self.zs_root)

    def _advance_zs(self, zs: NodeRef, index: int, branch: int) -> NodeRef:
        label = self.zs_store.label(zs)
        if branch == POS:
            if label != index:
                return BOTTOM
            return self.zs_store.hi(zs)
        if label == index:
            return self.zs_store.lo(zs)
        return zs

    def transition(self, state, index, branch):
        colors_t, reserved_t, neighbours_t, zs = state
        if self.subsetting:
            zs = self._advance_zs(zs, index, branch)
            if zs == BOTTOM:
                return REJECT

        previous = self.plan.frontier(index - 1)
        colors = dict(zip(previous, colors_t))
        reserved = dict(zip(previous, reserved_t))
        neighbours = {x: set(n) for x, n in zip(previous, neighbours_t)}
        for x in self.plan.entering[index]:
            colors[x], reserved[x], neighbours[x] = 0, False, set()

        try:
            self._apply(index, branch, colors, reserved, neighbours)
        except _Rejected:
            return REJECT

        remaining = self.plan.frontier(index)
        frontier = set(remaining)
        return (
            tuple(colors[x] for x in remaining),
            tuple(reserved[x] for x in remaining),
            tuple(
                tuple(sorted(neighbours[x] & frontier))
                if colors[x] == COLOR_NEG
                else ()
                for x in remaining
            ),
            zs,
        )

    def _apply(self, index, branch, colors, reserved, neighbours) -> None:
        def reserve(targets: Iterable[int]) -> None:
            for y in targets:
                # y can no longer meet a positive edge
                if colors[y] & COLOR_ZERO:
                    raise _Rejected
                if not colors[y] & COLOR_POS:
                    reserved[y] = True

        u, v = self.g.edge(index)
        for x, other in ((u, v), (v, u)):
            color = colors[x]
            if color & COLOR_ZERO and branch == POS:
                raise _Rejected
            if color & COLOR_POS and branch == ZERO:
                raise _Rejected
            if color == COLOR_NEG and branch == ZERO:
                # Reserve the frontier vertices joined to x by negative edges.
                reserve(neighbours[x])
            if color & COLOR_ZERO and branch == NEG:
                reserve((other,))
            if reserved[x] and branch == ZERO:
                raise _Rejected
            if reserved[x] and branch == POS:
                reserved[x] = False
            colors[x] |= BRANCH_COLORS[branch]

        if branch == NEG:
            neighbours[u].add(v)
            neighbours[v].add(u)

        leaving = self.plan.leaving[index]
        for x in leaving:
            if colors[x] == COLOR_NEG:
                reserve(neighbours[x])
        for x in leaving:
            if reserved[x] and not colors[x] & COLOR_POS:
                raise _Rejected

    def finalize(self, state) -> bool:
        return not self.subsetting or state[3] == TOP


def build_minimal_cutset_tdd(g: Graph, store: TddStore) -> NodeRef:
    """
    Builds the TDD of every signed subgraph with minimal cutset, including
    the empty signed set and disconnected positive parts.
    """
    return FrontierSearch(MinimalCutsetSpec(g), store).run()


def build_cutset_tdd_subset(
    g: Graph, zs_store: ZddStore, zs_root: NodeRef, store: TddStore
) -> NodeRef:
    """
    Builds T_S±: the minimal-cutset signing of every member of `zs_root`.
    """
    if zs_store.m != g.m or store.m != g.m:
        raise CutsetException(
            f"Universe sizes differ: graph {g.m}, Z_S {zs_store.m}, TDD {store.m}"
        )
    zs_store.check_ref(zs_root)
    return FrontierSearch(MinimalCutsetSpec(g, zs_store, zs_root), store).run()


def check_minimal_cutset(g: Graph, s: SignedEdgeSet) -> bool:
    """
    True iff no vertex meets both a zero and a positive edge and every
    negative edge has an endpoint meeting a positive edge.
    """
    touched_positive: Set[int] = set(g.dom(s.positives))
    zero_edges = set(range(1, g.m + 1)) - s.abs()
    touched_zero = g.dom(zero_edges)
    if touched_positive & touched_zero:
        return False
    return all(
        any(x in touched_positive for x in g.edge(e)) for e in s.negatives
    )


def minimal_cutset_signing(g: Graph, edge_set: Iterable[int]) -> SignedEdgeSet:
    """
    Signs `edge_set` positive and every other edge meeting its vertices negative.
    """
    positives: FrozenSet[int] = frozenset(edge_set)
    touched = g.dom(positives)
    negatives = frozenset(
        e
        for e in range(1, g.m + 1)
        if e not in positives and touched.intersection(g.edge(e))
    )
    return SignedEdgeSet(positives, negatives)


def projected_states(states) -> Set[Tuple[Tuple[int, ...], Tuple[bool, ...]]]:
    """The (colors, reserved) projection of a level's states."""
    return {(colors, reserved) for colors, reserved, _, _ in states}


def cutset_width_limit(frontier_size: int) -> int:
    return 6**frontier_size


import logging
from typing import Tuple

from lowerzdd.diagrams.base import BOTTOM, TOP, NodeRef
from lowerzdd.diagrams.tdd import TddStore
from lowerzdd.diagrams.zdd import ZddStore
from lowerzdd.search.frontier import REJECT, FrontierSearch, SearchSpec
from lowerzdd.search.graph import Graph

LOGGER = logging.getLogger(__name__)

# (live TDD nodes, matched). Once matched the live set is dropped.
LiftState = Tuple[Tuple[NodeRef, ...], bool]

_MATCHED: LiftState = ((), True)


class SupersetException(Exception):
    ...


class SupersetLiftSpec(SearchSpec[LiftState]):
    """
    Edge sets E' that agree with at least one signed set of a TDD: every
    positive edge in E', every negative edge out of it.

    The search runs the TDD nondeterministically, one label per level. A
    live node labelled i follows its POS and ZERO arcs when e_i is taken and
    its NEG and ZERO arcs when it is not; nodes with a larger label wait.
    """

    arity = 2

    def __init__(self, tdd_store: TddStore, root: NodeRef) -> None:
        tdd_store.check_ref(root)
        self.tdd_store = tdd_store
        self.root = root
        self.m = tdd_store.m

    def root_state(self):
        if self.root == TOP:
            return _MATCHED
        if self.root == BOTTOM:
            return REJECT
        return ((self.root,), False)

    def transition(self, state, index, branch):
        live, matched = state
        if matched:
            return _MATCHED

        succ = self.tdd_store._succ
        survivors = set()
        for node in live:
            label, zero, pos, neg = succ[node]
            if label > index:
                survivors.add(node)
                continue
            for target in (zero, pos if branch == 1 else neg):
                if target == TOP:
                    return _MATCHED
                if target != BOTTOM:
                    survivors.add(target)

        if not survivors:
            return REJECT
        return (tuple(sorted(survivors)), False)

    def finalize(self, state) -> bool:
        return state[1]


def lift_to_supersets(tdd_store: TddStore, t: NodeRef, store: ZddStore) -> NodeRef:
    """
    Builds the ZDD of every E' containing all positives and no negatives of
    some signed set in `t`.
    """
    if tdd_store.m != store.m:
        raise SupersetException(
            f"TDD over {tdd_store.m} edges cannot lift into a ZDD over {store.m}"
        )
    return FrontierSearch(SupersetLiftSpec(tdd_store, t), store).run()


def build_isolated_vertex_family(g: Graph, v: int, store: ZddStore) -> NodeRef:
    """
    Z_v: every edge set leaving `v` isolated, as a don't-care chain over the
    edges not incident to `v`.
    """
    incident = set(g.incident_edges(v))
    return store.dont_care_chain(e for e in range(1, g.m + 1) if e not in incident)


def isolated_vertices_family(g: Graph, L: int, store: ZddStore) -> NodeRef:
    """Union of Z_v over every vertex lighter than L."""
    family = BOTTOM
    for v in g.vertices:
        if g.weight(v) < L:
            family = store.union(family, build_isolated_vertex_family(g, v, store))
    return family


def assemble_sup(
    g: Graph, tdd_store: TddStore, t: NodeRef, L: int, store: ZddStore
) -> NodeRef:
    """
    Builds Z_S↑: the lift of `t` together with the partitions that isolate a
    vertex lighter than L.
    """
    if g.m != store.m:
        raise SupersetException(f"Graph has {g.m} edges, the store {store.m}")
    lifted = lift_to_supersets(tdd_store, t, store)
    return store.union(lifted, isolated_vertices_family(g, L, store))


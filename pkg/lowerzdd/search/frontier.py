import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from time import perf_counter
from typing import Any, Dict, Generic, Hashable, List, TypeVar, Union

from lowerzdd.diagrams.base import BOTTOM, TOP, NodeBudgetExceeded, NodeRef
from lowerzdd.diagrams.tdd import TddStore
from lowerzdd.diagrams.zdd import ZddStore
from lowerzdd.utilities import StateSerializer

LOGGER = logging.getLogger(__name__)

State = TypeVar("State")

# Child markers inside the merge tables; non-negative values index the next level.
_REJECTED = -1
_ACCEPTED = -2


class FrontierSearchException(Exception):
    ...


class _Reject:
    def __repr__(self) -> str:
        return "REJECT"


REJECT: Any = _Reject()


class SearchSpec(ABC, Generic[State]):
    """
    What a frontier-based search needs to know about the family it builds.

    `transition(state, i, branch)` decides the `branch`-child of a node
    labelled e_i and returns the state stored in that child, or REJECT to
    route the arc to BOTTOM. States returned for i = m are handed to
    `finalize`, which accepts (TOP) or rejects (BOTTOM) them. States at the
    same level with equal `canonical` forms are merged, so the canonical form
    must determine the sub-diagram below the node.
    """

    arity: int = 2
    m: int = 0

    @abstractmethod
    def root_state(self) -> Union[State, Any]:
        ...

    @abstractmethod
    def transition(self, state: State, index: int, branch: int) -> Union[State, Any]:
        ...

    def finalize(self, state: State) -> bool:
        return True

    def canonical(self, state: State) -> Hashable:
        return state


@dataclass
class MergeStats:
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def peak(self) -> int:
        return max(self.counts.values(), default=0)


class FrontierSearch:
    """
    Breadth-first construction of a ZDD (arity 2) or TDD (arity 3).

    Level i holds the distinct states of the nodes labelled e_i. After the
    forward pass the diagram is assembled bottom-up through the target store,
    which applies the reduction rule and hash-consing.
    """

    def __init__(
        self,
        spec: SearchSpec,
        target: Union[ZddStore, TddStore],
        keep_states: bool = False,
    ) -> None:
        expected_arity = 3 if isinstance(target, TddStore) else 2
        if spec.arity != expected_arity:
            raise FrontierSearchException(
                f"A {type(target).__name__} needs {expected_arity} branches, "
                f"the search has {spec.arity}"
            )
        if spec.m != target.m:
            raise FrontierSearchException(
                f"Search over {spec.m} edges cannot build into "
                f"a store over {target.m}"
            )

        self.spec = spec
        self.target = target
        self.keep_states = keep_states
        self.serializer = StateSerializer()
        self.level_counts: Dict[int, int] = {}
        self.level_states: Dict[int, List[Any]] = {}
        self.elapsed = 0.0
        self.root: NodeRef = BOTTOM
        self.finished = False

    def run(self) -> NodeRef:
        started = perf_counter()
        self.root = self._run()
        self.elapsed = perf_counter() - started
        self.finished = True
        LOGGER.debug(
            f" [x] {self.target.stage}: {sum(self.level_counts.values())} states, "
            f"peak level {self.stats().peak}, {self.elapsed:.3f}s"
        )
        return self.root

    def stats(self) -> MergeStats:
        return MergeStats(dict(self.level_counts))

    def _run(self) -> NodeRef:
        spec, m = self.spec, self.spec.m
        root = spec.root_state()
        if root is REJECT:
            return BOTTOM
        if m == 0:
            return TOP if spec.finalize(root) else BOTTOM

        levels: List[List[Any]] = [[], [root]]
        arcs: List[List[tuple]] = [[]]
        total_states = 1
        for index in range(1, m + 1):
            states = levels[index]
            next_states: List[Any] = []
            seen: Dict[bytes, int] = {}
            level_arcs = []
            for state in states:
                kids = []
                for branch in range(spec.arity):
                    child = spec.transition(state, index, branch)
                    if child is REJECT:
                        kids.append(_REJECTED)
                    elif index == m:
                        kids.append(_ACCEPTED if spec.finalize(child) else _REJECTED)
                    else:
                        key = self.serializer.encode_state(spec.canonical(child))
                        position = seen.get(key)
                        if position is None:
                            position = seen[key] = len(next_states)
                            next_states.append(child)
                        kids.append(position)
                level_arcs.append(tuple(kids))

            arcs.append(level_arcs)
            self.level_counts[index] = len(states)
            if self.keep_states:
                self.level_states[index] = states
            levels[index] = []
            LOGGER.debug(f" [.] level {index}: {len(states)} states")

            total_states += len(next_states)
            if total_states > self.target.node_budget:
                error = NodeBudgetExceeded(self.target.stage, self.target.node_budget)
                LOGGER.critical(error)
                raise error
            levels.append(next_states)

        return self._assemble(arcs)

    def _assemble(self, arcs: List[List[tuple]]) -> NodeRef:
        get_node = self.target._get_node
        below: List[NodeRef] = []
        for index in range(len(arcs) - 1, 0, -1):
            terminals = {_REJECTED: BOTTOM, _ACCEPTED: TOP}
            refs = []
            for kids in arcs[index]:
                children = [
                    terminals[kid] if kid < 0 else below[kid] for kid in kids
                ]
                refs.append(get_node(index, *children))
            below = refs
        return below[0]


def run_search(spec: SearchSpec, target: Union[ZddStore, TddStore]) -> NodeRef:
    return FrontierSearch(spec, target).run()


def merge_table_stats(search: FrontierSearch) -> MergeStats:
    if not search.finished:
        raise FrontierSearchException("The search has not been run yet")
    return search.stats()

import itertools
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

from lowerzdd.config.settings import settings

LOGGER = logging.getLogger(__name__)

NodeRef = int

BOTTOM: NodeRef = 0
TOP: NodeRef = 1
TERMINALS = (BOTTOM, TOP)

# Terminals sit below every edge index.
TERMINAL_LABEL = math.inf

# Handles are unique across every store in the process.
_NODE_IDS = itertools.count(2)


class NodeBudgetExceeded(Exception):
    """Raised when a store would grow past its node budget."""

    def __init__(self, stage: str, budget: int) -> None:
        self.stage = stage
        self.budget = budget
        super().__init__(
            f"Stage {stage} exceeded the node budget of {budget} nodes"
        )


@dataclass
class WidthProfile:
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def width(self) -> int:
        return max(self.counts.values(), default=0)


class DiagramStore:
    """
    Node pool shared by the ZDD and TDD stores.

    Subclasses keep `_succ` (handle -> (label, *children)) and `_pred`
    (node tuple -> handle) and call `_make_node` for every fresh tuple.
    """

    exception_class = Exception

    def __init__(
        self, m: int, config: Optional[Dict[str, Any]] = None, stage: str = ""
    ) -> None:
        if m < 0:
            raise self.exception_class(f"Universe size must be >= 0, got {m}")

        self.m = m
        self.stage = stage or type(self).__name__
        self.node_budget = int(settings.resolve(config, "NODE_BUDGET"))
        self._succ: Dict[NodeRef, Tuple] = {}
        self._pred: Dict[Tuple, NodeRef] = {}

    def __len__(self) -> int:
        return len(self._succ)

    def __contains__(self, ref: NodeRef) -> bool:
        return ref in TERMINALS or ref in self._succ

    def check_ref(self, ref: NodeRef) -> None:
        if ref not in self:
            raise self.exception_class(
                f"Node {ref!r} does not belong to this {type(self).__name__}"
            )

    def label(self, ref: NodeRef) -> float:
        if ref in TERMINALS:
            return TERMINAL_LABEL
        return self._succ[ref][0]

    def children(self, ref: NodeRef) -> Tuple[NodeRef, ...]:
        return self._succ[ref][1:]

    def _check_label(self, label: int, kids: Tuple[NodeRef, ...]) -> None:
        if not 1 <= label <= self.m:
            raise self.exception_class(
                f"Label {label} is outside the universe [1..{self.m}]"
            )
        for kid in kids:
            self.check_ref(kid)
            if self.label(kid) <= label:
                raise self.exception_class(
                    f"Child {kid} with label {self.label(kid)} "
                    f"does not come after label {label}"
                )

    def _make_node(self, key: Tuple) -> NodeRef:
        ref = self._pred.get(key)
        if ref is not None:
            return ref

        if len(self._succ) >= self.node_budget:
            error = NodeBudgetExceeded(self.stage, self.node_budget)
            LOGGER.critical(error)
            raise error

        ref = next(_NODE_IDS)
        self._succ[ref] = key
        self._pred[key] = ref
        return ref

    def reachable(self, root: NodeRef) -> Iterator[NodeRef]:
        """
        Yields the non-terminal nodes reachable from `root`, breadth first.
        """
        self.check_ref(root)
        queue = deque([root])
        seen = set(TERMINALS)
        seen.add(root)
        while queue:
            ref = queue.popleft()
            if ref in TERMINALS:
                continue
            yield ref
            for kid in self.children(ref):
                if kid not in seen:
                    seen.add(kid)
                    queue.append(kid)

    def size(self, root: NodeRef) -> int:
        """Number of non-terminal nodes of the diagram rooted at `root`."""
        return sum(1 for _ in self.reachable(root))

    def width_profile(self, root: NodeRef) -> WidthProfile:
        counts = Counter(self._succ[ref][0] for ref in self.reachable(root))
        return WidthProfile(dict(sorted(counts.items())))

    def audit(self) -> List[str]:
        """
        Checks canonicity of the whole pool and returns the violations found.
        """
        violations = []
        if len(self._pred) != len(self._succ):
            violations.append(
                f"unique table holds {len(self._pred)} keys "
                f"for {len(self._succ)} nodes"
            )

        for ref, key in self._succ.items():
            label, kids = key[0], key[1:]
            if self._pred.get(key) != ref:
                violations.append(f"node {ref} {key} is not the canonical entry")
            for kid in kids:
                if kid not in self:
                    violations.append(f"node {ref} points at unknown node {kid}")
                elif self.label(kid) <= label:
                    violations.append(f"node {ref} breaks the label order")
            if self.is_suppressed(kids):
                violations.append(f"node {ref} {key} should have been suppressed")
        return violations

    def is_suppressed(self, kids: Tuple[NodeRef, ...]) -> bool:
        raise NotImplementedError

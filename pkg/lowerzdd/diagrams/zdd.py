import logging
import random
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    Optional,
    Set,
    Tuple,
)

from lowerzdd.diagrams.base import (
    BOTTOM,
    TERMINALS,
    TOP,
    DiagramStore,
    NodeRef,
)

LOGGER = logging.getLogger(__name__)

EdgeSet = FrozenSet[int]


class ZddStoreException(Exception):
    ...


class ZddStore(DiagramStore):
    """
    Hash-consed pool of zero-suppressed decision diagram nodes.

    A node is the triple (label, lo, hi) where lo is the 0-child and hi the
    1-child. Labels are edge indices 1..m; terminals compare as infinity.
    A node whose 1-child is BOTTOM is never stored.

    The store is single-writer: building diagrams and running set operations
    mutate the unique table and the memo caches.
    """

    exception_class = ZddStoreException

    def __init__(
        self, m: int, config: Optional[Dict[str, Any]] = None, stage: str = ""
    ) -> None:
        super().__init__(m, config, stage)
        self._union_cache: Dict[Tuple[NodeRef, NodeRef], NodeRef] = {}
        self._intersection_cache: Dict[Tuple[NodeRef, NodeRef], NodeRef] = {}
        self._difference_cache: Dict[Tuple[NodeRef, NodeRef], NodeRef] = {}
        self._count_cache: Dict[NodeRef, int] = {BOTTOM: 0, TOP: 1}

    def is_suppressed(self, kids: Tuple[NodeRef, ...]) -> bool:
        return kids[1] == BOTTOM

    def lo(self, ref: NodeRef) -> NodeRef:
        return self._succ[ref][1]

    def hi(self, ref: NodeRef) -> NodeRef:
        return self._succ[ref][2]

    def get_node(self, label: int, lo: NodeRef, hi: NodeRef) -> NodeRef:
        self._check_label(label, (lo, hi))
        return self._get_node(label, lo, hi)

    def _get_node(self, label: int, lo: NodeRef, hi: NodeRef) -> NodeRef:
        if hi == BOTTOM:
            return lo
        return self._make_node((label, lo, hi))

    def from_sets(self, sets: Iterable[Iterable[int]]) -> NodeRef:
        """
        Builds the diagram whose root-to-TOP paths are exactly `sets`.
        """
        members = set()
        for item in sets:
            member = frozenset(item)
            for index in member:
                if not isinstance(index, int) or not 1 <= index <= self.m:
                    raise ZddStoreException(
                        f"Edge index {index!r} is outside [1..{self.m}]"
                    )
            members.add(tuple(sorted(member)))
        return self._from_sorted(frozenset(members))

    def _from_sorted(self, members: FrozenSet[Tuple[int, ...]]) -> NodeRef:
        if not members:
            return BOTTOM
        if members == {()}:
            return TOP

        label = min(member[0] for member in members if member)
        with_label = frozenset(
            member[1:] for member in members if member and member[0] == label
        )
        without_label = frozenset(
            member for member in members if not member or member[0] != label
        )
        return self._get_node(
            label, self._from_sorted(without_label), self._from_sorted(with_label)
        )

    def dont_care_chain(self, labels: Iterable[int]) -> NodeRef:
        """
        Returns the family of all subsets of `labels` as a chain of lo == hi nodes.
        """
        node = TOP
        for label in sorted(set(labels), reverse=True):
            node = self.get_node(label, node, node)
        return node

    def all_subsets(self, m: Optional[int] = None) -> NodeRef:
        m = self.m if m is None else m
        if not 0 <= m <= self.m:
            raise ZddStoreException(f"Cannot build all subsets of [{m}] here")
        return self.dont_care_chain(range(1, m + 1))

    def union(self, a: NodeRef, b: NodeRef) -> NodeRef:
        self.check_ref(a)
        self.check_ref(b)
        return self._union(a, b)

    def _union(self, a: NodeRef, b: NodeRef) -> NodeRef:
        if a == BOTTOM:
            return b
        if b == BOTTOM or a == b:
            return a
        if a > b:
            a, b = b, a

        key = (a, b)
        cached = self._union_cache.get(key)
        if cached is not None:
            return cached

        label_a, label_b = self.label(a), self.label(b)
        if label_a < label_b:
            result = self._get_node(label_a, self._union(self.lo(a), b), self.hi(a))
        elif label_a > label_b:
            result = self._get_node(label_b, self._union(a, self.lo(b)), self.hi(b))
        else:
            result = self._get_node(
                label_a,
                self._union(self.lo(a), self.lo(b)),
                self._union(self.hi(a), self.hi(b)),
            )

        self._union_cache[key] = result
        return result

    def intersection(self, a: NodeRef, b: NodeRef) -> NodeRef:
        self.check_ref(a)
        self.check_ref(b)
        return self._intersection(a, b)

    def _intersection(self, a: NodeRef, b: NodeRef) -> NodeRef:
        if a == BOTTOM or b == BOTTOM:
            return BOTTOM
        if a == b:
            return a
        if a > b:
            a, b = b, a

        key = (a, b)
        cached = self._intersection_cache.get(key)
        if cached is not None:
            return cached

        label_a, label_b = self.label(a), self.label(b)
        if label_a < label_b:
            result = self._intersection(self.lo(a), b)
        elif label_a > label_b:
            result = self._intersection(a, self.lo(b))
        else:
            result = self._get_node(
                label_a,
                self._intersection(self.lo(a), self.lo(b)),
                self._intersection(self.hi(a), self.hi(b)),
            )

        self._intersection_cache[key] = result
        return result

    def difference(self, a: NodeRef, b: NodeRef) -> NodeRef:
        self.check_ref(a)
        self.check_ref(b)
        return self._difference(a, b)

    def _difference(self, a: NodeRef, b: NodeRef) -> NodeRef:
        if a == BOTTOM or a == b:
            return BOTTOM
        if b == BOTTOM:
            return a

        key = (a, b)
        cached = self._difference_cache.get(key)
        if cached is not None:
            return cached

        label_a, label_b = self.label(a), self.label(b)
        if label_a < label_b:
            result = self._get_node(
                label_a, self._difference(self.lo(a), b), self.hi(a)
            )
        elif label_a > label_b:
            result = self._difference(a, self.lo(b))
        else:
            result = self._get_node(
                label_a,
                self._difference(self.lo(a), self.lo(b)),
                self._difference(self.hi(a), self.hi(b)),
            )

        self._difference_cache[key] = result
        return result

    def count(self, a: NodeRef) -> int:
        """Number of members of the family, as an unbounded int."""
        self.check_ref(a)
        return self._count(a)

    def _count(self, a: NodeRef) -> int:
        cached = self._count_cache.get(a)
        if cached is not None:
            return cached
        _, lo, hi = self._succ[a]
        result = self._count(lo) + self._count(hi)
        self._count_cache[a] = result
        return result

    def contains(self, a: NodeRef, s: Iterable[int]) -> bool:
        self.check_ref(a)
        wanted = sorted(set(s))
        position = 0
        node = a
        while node not in TERMINALS:
            label, lo, hi = self._succ[node]
            if position < len(wanted) and wanted[position] < label:
                return False
            if position < len(wanted) and wanted[position] == label:
                node = hi
                position += 1
            else:
                node = lo
        return node == TOP and position == len(wanted)

    def enumerate(self, a: NodeRef) -> Iterator[EdgeSet]:
        """
        Yields every member once. Only meant for families known to be small.
        """
        self.check_ref(a)
        stack = [(a, ())]
        while stack:
            node, chosen = stack.pop()
            if node == BOTTOM:
                continue
            if node == TOP:
                yield frozenset(chosen)
                continue
            label, lo, hi = self._succ[node]
            stack.append((hi, chosen + (label,)))
            stack.append((lo, chosen))

    def to_sets(self, a: NodeRef) -> Set[EdgeSet]:
        return set(self.enumerate(a))

    def sample(self, a: NodeRef, rng: Optional[random.Random] = None) -> EdgeSet:
        """
        Draws one member uniformly at random, weighting branches by path counts.
        """
        rng = rng or random.Random()
        total = self.count(a)
        if total == 0:
            raise ZddStoreException("Cannot sample from the empty family")

        chosen = []
        node = a
        while node != TOP:
            label, lo, hi = self._succ[node]
            if rng.randrange(self._count(node)) < self._count(hi):
                chosen.append(label)
                node = hi
            else:
                node = lo
        return frozenset(chosen)

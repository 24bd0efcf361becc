import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Iterator, Optional, Set, Tuple

from lowerzdd.diagrams.base import (
    BOTTOM,
    TERMINALS,
    TOP,
    DiagramStore,
    NodeRef,
)

LOGGER = logging.getLogger(__name__)

ZERO, POS, NEG = 0, 1, 2


class TddStoreException(Exception):
    ...


@dataclass(frozen=True)
class SignedEdgeSet:
    """A set of signed edges: +e lives in `positives`, -e in `negatives`."""

    positives: FrozenSet[int] = field(default_factory=frozenset)
    negatives: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "positives", frozenset(self.positives))
        object.__setattr__(self, "negatives", frozenset(self.negatives))
        both = self.positives & self.negatives
        if both:
            raise TddStoreException(
                f"Edges {sorted(both)} cannot be both positive and negative"
            )

    @classmethod
    def from_literals(cls, literals: Iterable[int]) -> "SignedEdgeSet":
        """Builds a signed set from literals such as (+1, -2, -3)."""
        literals = list(literals)
        if 0 in literals:
            raise TddStoreException("0 is not a signed edge literal")
        return cls(
            frozenset(x for x in literals if x > 0),
            frozenset(-x for x in literals if x < 0),
        )

    def literals(self) -> Tuple[int, ...]:
        signed = list(self.positives) + [-e for e in self.negatives]
        return tuple(sorted(signed, key=abs))

    def abs(self) -> FrozenSet[int]:
        return self.positives | self.negatives

    def __str__(self) -> str:
        return "{" + ", ".join(f"{x:+d}" for x in self.literals()) + "}"


class TddStore(DiagramStore):
    """
    Hash-consed pool of ternary decision diagram nodes.

    A node is (label, zero, pos, neg). A node whose POS and NEG children are
    both BOTTOM is never stored, so a skipped label means the edge is absent
    from the signed set.
    """

    exception_class = TddStoreException

    def __init__(
        self, m: int, config: Optional[Dict[str, Any]] = None, stage: str = ""
    ) -> None:
        super().__init__(m, config, stage)
        self._count_cache: Dict[NodeRef, int] = {BOTTOM: 0, TOP: 1}

    def is_suppressed(self, kids: Tuple[NodeRef, ...]) -> bool:
        return kids[POS] == BOTTOM and kids[NEG] == BOTTOM

    def get_node(
        self, label: int, zero: NodeRef, pos: NodeRef, neg: NodeRef
    ) -> NodeRef:
        self._check_label(label, (zero, pos, neg))
        return self._get_node(label, zero, pos, neg)

    def _get_node(
        self, label: int, zero: NodeRef, pos: NodeRef, neg: NodeRef
    ) -> NodeRef:
        if pos == BOTTOM and neg == BOTTOM:
            return zero
        return self._make_node((label, zero, pos, neg))

    def from_signed_sets(self, sets: Iterable[SignedEdgeSet]) -> NodeRef:
        members = set()
        for signed in sets:
            for index in signed.abs():
                if not 1 <= index <= self.m:
                    raise TddStoreException(
                        f"Edge index {index} is outside [1..{self.m}]"
                    )
            members.add(signed.literals())
        return self._from_literals(frozenset(members))

    def _from_literals(self, members: FrozenSet[Tuple[int, ...]]) -> NodeRef:
        if not members:
            return BOTTOM
        if members == {()}:
            return TOP

        label = min(abs(member[0]) for member in members if member)
        branches: Dict[int, Set[Tuple[int, ...]]] = {
            ZERO: set(),
            POS: set(),
            NEG: set(),
        }
        for member in members:
            if member and member[0] == label:
                branches[POS].add(member[1:])
            elif member and member[0] == -label:
                branches[NEG].add(member[1:])
            else:
                branches[ZERO].add(member)
        return self._get_node(
            label,
            self._from_literals(frozenset(branches[ZERO])),
            self._from_literals(frozenset(branches[POS])),
            self._from_literals(frozenset(branches[NEG])),
        )

    def count(self, a: NodeRef) -> int:
        self.check_ref(a)
        return self._count(a)

    def _count(self, a: NodeRef) -> int:
        cached = self._count_cache.get(a)
        if cached is not None:
            return cached
        result = sum(self._count(kid) for kid in self._succ[a][1:])
        self._count_cache[a] = result
        return result

    def contains(self, a: NodeRef, s: SignedEdgeSet) -> bool:
        self.check_ref(a)
        wanted = s.literals()
        position = 0
        node = a
        while node not in TERMINALS:
            label, zero, pos, neg = self._succ[node]
            literal = wanted[position] if position < len(wanted) else None
            if literal is not None and abs(literal) < label:
                return False
            if literal == label:
                node, position = pos, position + 1
            elif literal == -label:
                node, position = neg, position + 1
            else:
                node = zero
        return node == TOP and position == len(wanted)

    def enumerate(self, a: NodeRef) -> Iterator[SignedEdgeSet]:
        self.check_ref(a)
        stack = [(a, (), ())]
        while stack:
            node, positives, negatives = stack.pop()
            if node == BOTTOM:
                continue
            if node == TOP:
                yield SignedEdgeSet(frozenset(positives), frozenset(negatives))
                continue
            label, zero, pos, neg = self._succ[node]
            stack.append((neg, positives, negatives + (label,)))
            stack.append((pos, positives + (label,), negatives))
            stack.append((zero, positives, negatives))

    def to_sets(self, a: NodeRef) -> Set[SignedEdgeSet]:
        return set(self.enumerate(a))

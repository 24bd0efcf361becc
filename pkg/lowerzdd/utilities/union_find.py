from typing import Dict, Hashable, Iterable, List


class UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, elements: Iterable[Hashable] = ()):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Dict[Hashable, int] = {}
        for element in elements:
            self.add(element)

    def add(self, element: Hashable) -> None:
        if element not in self.parent:
            self.parent[element] = element
            self.rank[element] = 0

    def find(self, element: Hashable) -> Hashable:
        self.add(element)
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def union(self, first: Hashable, second: Hashable) -> bool:
        """
        Merges the sets holding both elements; returns False if they were joined.
        """
        root_a, root_b = self.find(first), self.find(second)
        if root_a == root_b:
            return False
        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1
        return True

    def groups(self) -> List[List[Hashable]]:
        grouped: Dict[Hashable, List[Hashable]] = {}
        for element in self.parent:
            grouped.setdefault(self.find(element), []).append(element)
        return list(grouped.values())

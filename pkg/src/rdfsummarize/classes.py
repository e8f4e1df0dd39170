"""Partition entities into type classes by thresholded dissimilarity."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .similarity import CandidatePair, SimilarityMatrix


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    def __init__(self, items: Iterable[int]) -> None:
        self._parent = {x: x for x in items}
        self._size = {x: 1 for x in self._parent}

    def add(self, x: int) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]

    def groups(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for x in self._parent:
            out.setdefault(self.find(x), []).append(x)
        return out


class TypeClassMap:
    """Disjoint classes over subject nodes.

    Class ids are assigned in order of each class's smallest member node
    id, so the map is independent of merge order.
    """

    def __init__(self, member_sets: list[list[int]]) -> None:
        canonical = sorted((sorted(ms) for ms in member_sets),
                           key=lambda ms: ms[0])
        self.members: list[tuple[int, ...]] = [tuple(ms) for ms in canonical]
        self.class_of: dict[int, int] = {}
        for cid, ms in enumerate(self.members):
            for m in ms:
                self.class_of[m] = cid

    def __len__(self) -> int:
        return len(self.members)

    def size_of(self, cid: int) -> int:
        return len(self.members[cid])

    def classes(self) -> list[tuple[int, ...]]:
        return self.members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TypeClassMap) and self.members == other.members

    def __hash__(self):  # pragma: no cover - maps are not hashed
        raise TypeError("TypeClassMap is unhashable")


def create_classes(matrix: SimilarityMatrix, pairs: Sequence[CandidatePair],
                   epsilon: float,
                   subjects: Optional[Iterable[int]] = None) -> TypeClassMap:
    """Merge every pair whose dissimilarity 1 - S(u, v) is below epsilon.

    Merging is transitive (union of merged classes), so the result is the
    connected components of the thresholded pair graph and does not depend
    on pair order. Subjects outside any merged pair become singletons;
    pass `subjects` to include subjects that have no candidate pair at all.
    """
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError("epsilon must be in [0, 1]")
    universe: set[int] = set(subjects) if subjects is not None else set()
    for p in pairs:
        universe.add(p.u)
        universe.add(p.v)
    uf = UnionFind(universe)
    for p in pairs:
        if 1.0 - matrix.get(p.u, p.v) < epsilon:
            uf.union(p.u, p.v)
    return TypeClassMap(list(uf.groups().values()))

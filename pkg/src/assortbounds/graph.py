"""Graph and metadata containers, degree sequences and edge-count extraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    LengthMismatchError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on dense node indices ``0..n-1``.

    ``edges`` holds canonical ``(i, j)`` pairs with ``i < j``. Build through
    :func:`validate_graph` unless the edges are already known to be clean.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    node_labels: tuple[str, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` int array in sorted order."""
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array(sorted(self.edges), dtype=np.int64)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def index_of(self) -> dict[str, int]:
        if self.node_labels is None:
            return {str(i): i for i in range(self.n)}
        return {name: i for i, name in enumerate(self.node_labels)}


@dataclass(frozen=True)
class MetadataAssignment:
    """Binary label per node."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(c) for c in self.labels)
        if any(c not in (0, 1) for c in labels):
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> "MetadataAssignment":
        lab = [0] * n
        for i in ones:
            lab[i] = 1
        return cls(tuple(lab))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n1(self) -> int:
        return sum(self.labels)

    @property
    def n0(self) -> int:
        return self.n - self.n1

    def flipped(self) -> "MetadataAssignment":
        return MetadataAssignment(tuple(1 - c for c in self.labels))


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees sorted in non-increasing order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if any(d < 0 for d in degs):
            raise ValueError("negative degree")
        if sum(degs) % 2:
            raise ValueError("degree sum must be even")
        object.__setattr__(self, "degrees", degs)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def head(self, k: int) -> tuple[int, ...]:
        """The ``k`` largest degrees."""
        _check_k(k, self.n)
        return self.degrees[:k]

    def tail(self, k: int) -> tuple[int, ...]:
        """The ``k`` smallest degrees."""
        _check_k(k, self.n)
        return self.degrees[self.n - k:]


@dataclass(frozen=True)
class EdgeCounts:
    m11: int
    m10: int
    m00: int
    m: int = field(default=-1)

    def __post_init__(self):
        total = self.m11 + self.m10 + self.m00
        if self.m == -1:
            object.__setattr__(self, "m", total)
        if min(self.m11, self.m10, self.m00) < 0:
            raise ValueError("edge counts must be non-negative")
        if total != self.m:
            raise ValueError(f"m11 + m10 + m00 = {total} != m = {self.m}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m11, self.m10, self.m00)


def _check_k(k: int, n: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"k = {k} outside [0, {n}]")


def validate_graph(
    raw_edges: Iterable[Sequence[int]],
    n: int,
    *,
    dedupe: bool = False,
    node_labels: Sequence[str] | None = None,
) -> Graph:
    """Check and canonicalize an edge list over nodes ``0..n-1``.

    Self-loops are always rejected. A repeated pair (in either orientation)
    raises :class:`DuplicateEdgeError` unless ``dedupe`` is set.
    """
    if node_labels is not None and len(node_labels) != n:
        raise LengthMismatchError(f"{len(node_labels)} node labels for n = {n}")
    edges: set[tuple[int, int]] = set()
    for pair in raw_edges:
        i, j = int(pair[0]), int(pair[1])
        for v in (i, j):
            if not 0 <= v < n:
                raise IndexOutOfRangeError(f"node index {v} outside [0, {n})")
        if i == j:
            raise SelfLoopError(i)
        e = (i, j) if i < j else (j, i)
        if e in edges and not dedupe:
            raise DuplicateEdgeError(i, j)
        edges.add(e)
    return Graph(n, frozenset(edges), tuple(node_labels) if node_labels is not None else None)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees)


def edge_counts(g: Graph, a: MetadataAssignment) -> EdgeCounts:
    if a.n != g.n:
        raise LengthMismatchError(f"{a.n} labels for a graph with {g.n} nodes")
    c = a.labels
    m11 = m00 = 0
    for i, j in g.edges:
        s = c[i] + c[j]
        if s == 2:
            m11 += 1
        elif s == 0:
            m00 += 1
    return EdgeCounts(m11, g.m - m11 - m00, m00, g.m)


def partition_degree_sums(d: DegreeSequence, k: int) -> tuple[int, int]:
    """Sum of the ``k`` largest and of the ``k`` smallest degrees."""
    return sum(d.head(k)), sum(d.tail(k))


def split_degrees(g: Graph, a: MetadataAssignment) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Degree multisets of the 1-labelled and 0-labelled nodes (each sorted desc)."""
    if a.n != g.n:
        raise LengthMismatchError(f"{a.n} labels for a graph with {g.n} nodes")
    deg = g.degrees
    ones = sorted((deg[i] for i in range(g.n) if a.labels[i] == 1), reverse=True)
    zeros = sorted((deg[i] for i in range(g.n) if a.labels[i] == 0), reverse=True)
    return tuple(ones), tuple(zeros)


def relabel(g: Graph, perm: Mapping[int, int] | Sequence[int]) -> Graph:
    """Graph with node ``i`` renamed ``perm[i]``."""
    return Graph(
        g.n,
        frozenset((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges),
    )

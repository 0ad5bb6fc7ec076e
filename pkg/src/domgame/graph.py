"""Immutable simple graphs with one integer bitset per neighbourhood row."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np

BITSET_CAP = 64


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the open neighbourhood N(v) stored as an int bitset.
    Instances are immutable and hashable; equality compares structure only,
    labels are ignored.
    """

    __slots__ = ("_n", "_adj", "_labels", "_index")

    def __init__(self, n: int, adjacency: Sequence[int], labels: Sequence[str] | None = None):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        if n > BITSET_CAP:
            raise GraphError(f"n={n} exceeds BITSET_CAP={BITSET_CAP}")
        adj = tuple(int(r) for r in adjacency)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise GraphError("one label per vertex required")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be distinct")
        self._n = n
        self._adj = adj
        self._labels = labels
        self._index = None if labels is None else {s: i for i, s in enumerate(labels)}

    # basic accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self._adj) // 2

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Index of the vertex carrying ``label``."""
        if self._index is None or label not in self._index:
            raise KeyError(label)
        return self._index[label]

    def vertices(self, *labels: str) -> int:
        """Bitset of the vertices with the given labels."""
        mask = 0
        for s in labels:
            mask |= 1 << self.vertex(s)
        return mask

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(r) for r in self._adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def open_nbhd(self, v: int) -> int:
        return self._adj[v]

    def closed_nbhd(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(r | (1 << v) for v, r in enumerate(self._adj))

    def open_nbhd_of_set(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self._adj[v]
        return out

    def closed_nbhd_of_set(self, mask: int) -> int:
        return self.open_nbhd_of_set(mask) | mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u]) if u < v]

    def leaves(self) -> int:
        return sum(1 for d in self.degrees() if d == 1)

    def induced_connected(self, mask: int) -> bool:
        """True iff the subgraph induced by the non-empty set ``mask`` is connected."""
        if mask == 0:
            return False
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self._adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        return seen == mask

    def adjacency_array(self) -> np.ndarray:
        """Rows as signed 64-bit words, the layout the compiled kernels expect."""
        return np.array([_to_signed(r) for r in self._adj], dtype=np.int64)

    def relabel(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self._n, self._adj, labels)

    def permuted(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        adj = [0] * self._n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph(self._n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def _to_signed(word: int) -> int:
    return word - (1 << 64) if word >= 1 << 63 else word


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicate edges collapse."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    if n > BITSET_CAP:
        raise GraphError(f"n={n} exceeds BITSET_CAP={BITSET_CAP}")
    adj = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


# structural predicates


def is_connected(G: Graph) -> bool:
    return G.induced_connected(G.full_mask)


def is_tree(G: Graph) -> bool:
    return G.m == G.n - 1 and is_connected(G)


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def has_universal_vertex(G: Graph) -> bool:
    full = G.full_mask
    return any(G.closed_nbhd(v) == full for v in range(G.n))


def is_non_inclusive(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Check that no closed neighbourhood contains another.

    Returns ``(True, None)`` or ``(False, (u, v))`` with ``N[u] ⊆ N[v]``,
    the first such ordered pair in lexicographic order. Only adjacent pairs
    can violate the condition, so only edges are inspected.
    """
    for u in range(G.n):
        nu = G.closed_nbhd(u)
        for v in bits(G.open_nbhd(u)):
            if nu & ~G.closed_nbhd(v) == 0:
                return False, (u, v)
    return True, None


def closed_twins(G: Graph) -> list[tuple[int, int]]:
    """Pairs ``u < v`` with ``N[u] = N[v]``."""
    return [(u, v) for u, v in G.edges() if G.closed_nbhd(u) == G.closed_nbhd(v)]

"""Exhaustive generation of small connected labelled graphs."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from .graph import Graph, GraphError

MAX_ENUM_N = 7


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)``, ``i < j``, in lexicographic order; bit k of an edge mask is pair k."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _rows(n: int, pairs: list[tuple[int, int]], mask: int) -> list[int]:
    adj = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        k += 1
    return adj


def _connected(adj: list[int]) -> bool:
    full = (1 << len(adj)) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected simple graph on vertex set 0..n-1, in increasing edge-mask order."""
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        adj = _rows(n, pairs, mask)
        if _connected(adj):
            yield Graph(n, adj)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Labelled trees on ``n`` vertices (n^(n-2) of them), in edge-mask order.

    Walks only masks with exactly ``n - 1`` edges, so it reaches n = 8 where
    the full connected enumeration would be too slow.
    """
    if not 1 <= n <= 8:
        raise GraphError(f"tree enumeration supports 1 <= n <= 8, got {n}")
    pairs = vertex_pairs(n)
    masks = sorted(sum(1 << k for k in combo) for combo in combinations(range(len(pairs)), n - 1))
    for mask in masks:
        adj = _rows(n, pairs, mask)
        if _connected(adj):
            yield Graph(n, adj)


def count_connected_labeled(n: int) -> int:
    return sum(1 for _ in enumerate_connected_labeled(n))

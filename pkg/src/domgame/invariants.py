"""Domination, total domination and connected domination numbers by exhaustive search.

These are deliberately naive: subsets are tried by increasing size, and the
first (lexicographically smallest) optimal set is returned as the witness.
They serve as oracles for the game solver and must stay independent of it.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, is_connected


@dataclass(frozen=True)
class InvariantReport:
    gamma: int
    gamma_t: int | None
    gamma_c: int | None
    witnesses: dict[str, int]


@lru_cache(maxsize=256)
def _subsets(n: int, k: int) -> tuple[int, ...]:
    # sorted masks: ties resolve to the smallest bitset, not the smallest index tuple
    return tuple(sorted(sum(1 << v for v in c) for c in combinations(range(n), k)))


def is_dominating(G: Graph, S: int) -> bool:
    return G.closed_nbhd_of_set(S) == G.full_mask


def is_total_dominating(G: Graph, S: int) -> bool:
    return G.open_nbhd_of_set(S) == G.full_mask


def is_connected_dominating(G: Graph, S: int) -> bool:
    return is_dominating(G, S) and G.induced_connected(S)


def _minimum(G: Graph, pred: Callable[[Graph, int], bool], start: int = 1) -> tuple[int, int]:
    for k in range(start, G.n + 1):
        for S in _subsets(G.n, k):
            if pred(G, S):
                return k, S
    raise AssertionError("no feasible set found")  # pragma: no cover


def domination_number(G: Graph) -> tuple[int, int]:
    """``(gamma, witness)``: minimum size of S with N[S] = V."""
    return _minimum(G, is_dominating)


def total_domination_number(G: Graph) -> tuple[int, int]:
    """``(gamma_t, witness)``: minimum size of S with N(S) = V."""
    if any(d == 0 for d in G.degrees()):
        raise GraphError("total domination needs a graph without isolated vertices")
    return _minimum(G, is_total_dominating, start=2)


def connected_domination_number(G: Graph) -> tuple[int, int]:
    """``(gamma_c, witness)``: minimum dominating S with G[S] connected."""
    if not is_connected(G):
        raise GraphError("connected domination needs a connected graph")
    return _minimum(G, is_connected_dominating)


def minimum_connected_dominating_sets(G: Graph) -> list[int]:
    """All connected dominating sets of minimum size, in increasing bitset order."""
    k, _ = connected_domination_number(G)
    return [S for S in _subsets(G.n, k) if is_connected_dominating(G, S)]


def invariant_report(G: Graph) -> InvariantReport:
    g, w = domination_number(G)
    witnesses = {"gamma": w}
    gt = gc = None
    if G.min_degree > 0:
        gt, witnesses["gamma_t"] = total_domination_number(G)
    if is_connected(G):
        gc, witnesses["gamma_c"] = connected_domination_number(G)
    return InvariantReport(g, gt, gc, witnesses)

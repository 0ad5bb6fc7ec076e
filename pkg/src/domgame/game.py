"""Exact solver for the connected (c) and total connected (tc) domination games.

A position is the set P of played vertices plus the side to move. A vertex v
is a legal move when it is unplayed, adjacent to P (any vertex if P is
empty), and its neighbourhood (closed for the c-game, open for the tc-game)
contains a vertex not yet dominated by P. The game ends when no legal move
exists; its value is the number of played vertices. Dominator minimises,
Staller maximises.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from . import _kernels
from .graph import Graph, GraphError, bits, is_connected


class Variant(enum.Enum):
    CONNECTED = "connected"
    TOTAL = "total"


class Player(enum.Enum):
    DOMINATOR = "d"
    STALLER = "s"

    @property
    def other(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


def _rows(G: Graph, variant: Variant) -> tuple[int, ...]:
    return G.closed_rows() if variant is Variant.CONNECTED else G.adjacency


def dominated_set(G: Graph, variant: Variant, P: int) -> int:
    """N[P] for the c-game, N(P) for the tc-game."""
    rows = _rows(G, variant)
    out = 0
    for v in bits(P):
        out |= rows[v]
    return out


def legal_moves(G: Graph, variant: Variant, P: int) -> int:
    """Bitset of the legal moves after the vertices in ``P`` have been played."""
    rows = _rows(G, variant)
    dom = dominated_set(G, variant, P)
    reach = G.full_mask if P == 0 else G.open_nbhd_of_set(P) & ~P
    return sum(1 << v for v in bits(reach) if rows[v] & ~dom)


def is_terminal(G: Graph, variant: Variant, P: int) -> bool:
    terminal = legal_moves(G, variant, P) == 0
    if __debug__ and is_connected(G) and P:
        # on connected graphs "no legal move" coincides with "everything dominated"
        assert terminal == (dominated_set(G, variant, P) == G.full_mask)
    return terminal


def _check_playable(G: Graph, variant: Variant) -> None:
    if not is_connected(G):
        raise GraphError("the games are defined on connected graphs only")
    if variant is Variant.TOTAL and G.n < 2:
        raise GraphError("the total connected game needs at least two vertices")


class GameSolver:
    """Memoised minimax for one graph and variant.

    ``order`` fixes the move-iteration order (default ascending vertex index);
    it never changes values, only the search trajectory. The memo persists
    across calls, so per-vertex values and move extraction reuse it.
    """

    def __init__(self, G: Graph, variant: Variant, order: Sequence[int] | None = None,
                 backend: str | None = None):
        _check_playable(G, variant)
        self.G = G
        self.variant = variant
        order = list(range(G.n)) if order is None else list(order)
        if sorted(order) != list(range(G.n)):
            raise ValueError("order must be a permutation of the vertices")
        self._kernel = _kernels.Kernel(G.adjacency, _rows(G, variant), order,
                                       backend or _kernels.BACKEND)
        self._memo = self._kernel.new_memo()

    @property
    def backend(self) -> str:
        return self._kernel.backend

    @property
    def stats(self) -> dict[str, int]:
        return {"expanded": self._memo.expanded, "hits": self._memo.hits,
                "stored": len(self._memo)}

    def value(self, P: int, turn: Player) -> int:
        """Final number of played vertices from position (P, turn) under optimal play."""
        if P and not self.G.induced_connected(P):
            raise ValueError("played set must induce a connected subgraph")
        return self._kernel.value(P, turn is Player.DOMINATOR, self._memo)

    def solve(self, starter: Player = Player.DOMINATOR) -> int:
        return self.value(0, starter)

    def per_vertex_values(self, first: Player = Player.DOMINATOR) -> dict[int, int]:
        """Value after ``first`` is forced to open at v; c(v) / t(v) for Dominator."""
        opens = legal_moves(self.G, self.variant, 0)
        return {v: self.value(1 << v, first.other) for v in bits(opens)}

    def move_values(self, P: int, turn: Player) -> dict[int, int]:
        return {v: self.value(P | 1 << v, turn.other)
                for v in bits(legal_moves(self.G, self.variant, P))}

    def best_move(self, P: int, turn: Player) -> int:
        """An optimal move from (P, turn); ties go to the smallest vertex index."""
        vals = self.move_values(P, turn)
        if not vals:
            raise ValueError("no legal move: the position is terminal")
        pick = min if turn is Player.DOMINATOR else max
        target = pick(vals.values())
        return min(v for v, val in vals.items() if val == target)

    def principal_line(self, starter: Player = Player.DOMINATOR) -> list[int]:
        """Moves of one optimal game, each chosen by :meth:`best_move`."""
        P, turn, line = 0, starter, []
        while not is_terminal(self.G, self.variant, P):
            v = self.best_move(P, turn)
            line.append(v)
            P |= 1 << v
            turn = turn.other
        return line


def solve(G: Graph, variant: Variant, starter: Player = Player.DOMINATOR,
          order: Sequence[int] | None = None, backend: str | None = None) -> int:
    """Game value with fresh memo tables."""
    _check_playable(G, variant)
    order = list(range(G.n)) if order is None else list(order)
    kernel = _kernels.Kernel(G.adjacency, _rows(G, variant), order, backend or _kernels.BACKEND)
    return kernel.solve_root(starter is Player.DOMINATOR)[0]


def per_vertex_values(G: Graph, variant: Variant, order: Sequence[int] | None = None) -> dict[int, int]:
    return GameSolver(G, variant, order).per_vertex_values()


def best_move(G: Graph, variant: Variant, P: int, turn: Player) -> int:
    return GameSolver(G, variant).best_move(P, turn)


NAIVE_MAX_N = 10


def naive_solve(G: Graph, variant: Variant, starter: Player = Player.DOMINATOR) -> int:
    """Reference value by full game-tree expansion, no memo and no bitsets."""
    if G.n > NAIVE_MAX_N:
        raise ValueError(f"naive_solve is limited to n <= {NAIVE_MAX_N}")
    _check_playable(G, variant)
    nbrs = [set(bits(G.open_nbhd(v))) for v in range(G.n)]
    if variant is Variant.CONNECTED:
        dominates = [nbrs[v] | {v} for v in range(G.n)]
    else:
        dominates = nbrs

    def play(played: frozenset, dominated: frozenset, dominator: bool) -> int:
        outcomes = []
        for v in range(G.n):
            if v in played:
                continue
            if played and not nbrs[v] & played:
                continue
            if not dominates[v] - dominated:
                continue
            outcomes.append(play(played | {v}, dominated | dominates[v], not dominator))
        if not outcomes:
            return len(played)
        return min(outcomes) if dominator else max(outcomes)

    return play(frozenset(), frozenset(), starter is Player.DOMINATOR)


@dataclass(frozen=True)
class GameReport:
    gamma_cg: int
    gamma_cg_s: int
    gamma_tcg: int
    gamma_tcg_s: int
    c_of_v: dict[int, int]
    t_of_v: dict[int, int]


def game_report(G: Graph, order: Sequence[int] | None = None,
                backend: str | None = None) -> GameReport:
    c = GameSolver(G, Variant.CONNECTED, order, backend)
    t = GameSolver(G, Variant.TOTAL, order, backend)
    return GameReport(
        gamma_cg=c.solve(Player.DOMINATOR),
        gamma_cg_s=c.solve(Player.STALLER),
        gamma_tcg=t.solve(Player.DOMINATOR),
        gamma_tcg_s=t.solve(Player.STALLER),
        c_of_v=c.per_vertex_values(),
        t_of_v=t.per_vertex_values(),
    )

"""Memoised minimax kernels for the connected domination games.

Two interchangeable backends compute the same function:

* ``numba``: ``@njit`` kernels over int64 words and typed dicts;
* ``python``: the identical recursion over Python ints and dicts.

The active backend is chosen once at import from ``DOMGAME_BACKEND``
(``numba`` or ``python``). With the variable unset, numba is used when it
imports and the Python path otherwise. ``NUMBA_DISABLE_JIT=1`` is honoured
too and selects the Python path.

State encoding shared by both backends: ``P`` is the played-vertex bitset,
``nbr`` is N(P), ``dom`` the dominated set (``rows`` OR-ed over P), where
``rows`` holds closed neighbourhoods for the connected game and open
neighbourhoods for the total game. The memo maps P to the final number of
played vertices, one table per side to move.
"""

from __future__ import annotations

import os
import sys

import numpy as np

try:
    from numba import njit, types
    from numba.typed import Dict

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _select_backend() -> str:
    requested = os.environ.get("DOMGAME_BACKEND", "").strip().lower()
    if requested not in ("", "numba", "python"):
        raise ValueError(f"DOMGAME_BACKEND must be 'numba' or 'python', got {requested!r}")
    if os.environ.get("NUMBA_DISABLE_JIT", "0") not in ("", "0"):
        return "python"
    if requested == "python" or not HAVE_NUMBA:
        return "python"
    return "numba"


BACKEND = _select_backend()

sys.setrecursionlimit(max(sys.getrecursionlimit(), 1000))


# pure Python path


class PythonMemo:
    def __init__(self):
        self.tables = ({}, {})  # indexed by dominator_to_move
        self.expanded = 0
        self.hits = 0

    def __len__(self):
        return len(self.tables[0]) + len(self.tables[1])


def py_value(adj, rows, order, P, nbr, dom, dom_turn, memo):
    table = memo.tables[dom_turn]
    hit = table.get(P)
    if hit is not None:
        memo.hits += 1
        return hit
    memo.expanded += 1
    best = -1
    for v in order:
        bit = 1 << v
        if P & bit:
            continue
        if P and not nbr & bit:
            continue
        if not rows[v] & ~dom:
            continue
        val = py_value(adj, rows, order, P | bit, nbr | adj[v], dom | rows[v], not dom_turn, memo)
        if best < 0 or (val < best if dom_turn else val > best):
            best = val
    if best < 0:
        best = P.bit_count()
    table[P] = best
    return best


# numba path

if HAVE_NUMBA:
    _INT64 = types.int64

    @njit(cache=True)
    def _popcount(x):
        c = 0
        while x != 0:
            x &= x - 1
            c += 1
        return c

    @njit(cache=True)
    def nb_new_table():
        return Dict.empty(key_type=_INT64, value_type=_INT64)

    @njit(cache=True)
    def nb_value(adj, rows, order, P, nbr, dom, dom_turn, memo_d, memo_s, stats):
        memo = memo_d if dom_turn else memo_s
        if P in memo:
            stats[1] += 1
            return memo[P]
        stats[0] += 1
        best = -1
        one = np.int64(1)
        for idx in range(order.shape[0]):
            v = order[idx]
            bit = one << v
            if P & bit:
                continue
            if P != 0 and (nbr & bit) == 0:
                continue
            if (rows[v] & ~dom) == 0:
                continue
            val = nb_value(adj, rows, order, P | bit, nbr | adj[v], dom | rows[v],
                           not dom_turn, memo_d, memo_s, stats)
            if best < 0:
                best = val
            elif dom_turn:
                if val < best:
                    best = val
            elif val > best:
                best = val
        if best < 0:
            best = _popcount(P)
        memo[P] = best
        return best

    @njit(cache=True)
    def nb_solve_root(adj, rows, order, dom_turn):
        """Value of the empty position with fresh tables; returns (value, expanded, hits)."""
        memo_d = Dict.empty(key_type=_INT64, value_type=_INT64)
        memo_s = Dict.empty(key_type=_INT64, value_type=_INT64)
        stats = np.zeros(2, dtype=np.int64)
        val = nb_value(adj, rows, order, np.int64(0), np.int64(0), np.int64(0),
                       dom_turn, memo_d, memo_s, stats)
        return val, stats[0], stats[1]


class NumbaMemo:
    def __init__(self):
        self.memo_d = nb_new_table()
        self.memo_s = nb_new_table()
        self.stats = np.zeros(2, dtype=np.int64)

    @property
    def expanded(self):
        return int(self.stats[0])

    @property
    def hits(self):
        return int(self.stats[1])

    def __len__(self):
        return len(self.memo_d) + len(self.memo_s)


def _signed(word: int) -> int:
    return word - (1 << 64) if word >= 1 << 63 else word


class Kernel:
    """Backend-specific arrays for one (graph, variant, move order) triple."""

    def __init__(self, adj, rows, order, backend: str = BACKEND):
        if backend == "numba" and not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        if backend not in ("numba", "python"):
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend
        if backend == "numba":
            self.adj = np.array([_signed(r) for r in adj], dtype=np.int64)
            self.rows = np.array([_signed(r) for r in rows], dtype=np.int64)
            self.order = np.array(order, dtype=np.int64)
        else:
            self.adj = tuple(adj)
            self.rows = tuple(rows)
            self.order = tuple(order)
        self._adj_py = tuple(adj)
        self._rows_py = tuple(rows)

    def new_memo(self):
        return NumbaMemo() if self.backend == "numba" else PythonMemo()

    def value(self, P: int, dom_turn: bool, memo) -> int:
        nbr = dom = 0
        p = P
        while p:
            low = p & -p
            v = low.bit_length() - 1
            nbr |= self._adj_py[v]
            dom |= self._rows_py[v]
            p ^= low
        if self.backend == "numba":
            return int(nb_value(self.adj, self.rows, self.order, np.int64(_signed(P)),
                                np.int64(_signed(nbr)), np.int64(_signed(dom)), bool(dom_turn),
                                memo.memo_d, memo.memo_s, memo.stats))
        return py_value(self.adj, self.rows, self.order, P, nbr, dom, bool(dom_turn), memo)

    def solve_root(self, dom_turn: bool) -> tuple[int, int, int]:
        """Value of the empty position with private tables: ``(value, expanded, hits)``."""
        if self.backend == "numba":
            val, expanded, hits = nb_solve_root(self.adj, self.rows, self.order, bool(dom_turn))
            return int(val), int(expanded), int(hits)
        memo = PythonMemo()
        val = py_value(self.adj, self.rows, self.order, 0, 0, 0, bool(dom_turn), memo)
        return val, memo.expanded, memo.hits


def available_backends() -> list[str]:
    return ["numba", "python"] if HAVE_NUMBA and BACKEND == "numba" else ["python"]

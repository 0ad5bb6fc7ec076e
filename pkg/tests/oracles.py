"""Independent brute-force references used by the tests.

Nothing here touches the package's bitset code paths: graphs are read once
into plain Python sets and everything else is computed from those.
"""

from itertools import combinations


def neighbour_sets(G):
    return [{u for u in range(G.n) if G.has_edge(v, u)} for v in range(G.n)]


def connected_by_dfs(n, edges, subset=None):
    verts = set(range(n)) if subset is None else set(subset)
    if not verts:
        return False
    adj = {v: set() for v in verts}
    for u, v in edges:
        if u in verts and v in verts:
            adj[u].add(v)
            adj[v].add(u)
    start = next(iter(verts))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def count_connected_by_brute_force(n):
    pairs = list(combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        total += connected_by_dfs(n, edges)
    return total


def min_set_size(G, predicate):
    nb = neighbour_sets(G)
    for k in range(0, G.n + 1):
        for S in combinations(range(G.n), k):
            if predicate(set(S), nb):
                return k
    return None


def dominating(S, nb):
    return set().union(S, *(nb[v] for v in S)) == set(range(len(nb)))


def total_dominating(S, nb):
    return set().union(*(nb[v] for v in S)) == set(range(len(nb))) if S else False


def connected_dominating(S, nb):
    if not S or not dominating(S, nb):
        return False
    edges = [(u, v) for u in S for v in nb[u] if v in S]
    return connected_by_dfs(len(nb), edges, S)


def game_value_from(G, total, played, dominator_to_move):
    """Full game-tree expansion from an arbitrary position, list-based."""
    nb = neighbour_sets(G)
    reach = [nb[v] if total else nb[v] | {v} for v in range(G.n)]

    def rec(played, dominated, dom_turn):
        vals = []
        for v in range(G.n):
            if v in played or (played and not nb[v] & played) or not reach[v] - dominated:
                continue
            vals.append(rec(played | {v}, dominated | reach[v], not dom_turn))
        if not vals:
            return len(played)
        return min(vals) if dom_turn else max(vals)

    played = set(played)
    dominated = set().union(*(reach[v] for v in played)) if played else set()
    return rec(frozenset(played), frozenset(dominated), dominator_to_move)

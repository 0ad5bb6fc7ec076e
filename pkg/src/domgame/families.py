"""Standard graph families, graph products and the special graphs F_4k, D_15, G_r."""

from __future__ import annotations

from collections.abc import Sequence

from .graph import BITSET_CAP, Graph, GraphError, build_graph


def _check_min(name: str, n: int, least: int) -> None:
    if n < least:
        raise GraphError(f"{name} needs n >= {least}, got {n}")


def path(n: int) -> Graph:
    _check_min("path", n, 1)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_min("cycle", n, 3)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check_min("complete", n, 1)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre 0 joined to ``n - 1`` leaves."""
    _check_min("star", n, 1)
    return build_graph(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    _check_min("empty", n, 1)
    return build_graph(n, [])


def paw() -> Graph:
    """K_{1,3} (centre 0) plus the edge 1-2."""
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def _product(G: Graph, H: Graph, cartesian: bool) -> Graph:
    n = G.n * H.n
    if n > BITSET_CAP:
        raise GraphError(f"product has {n} vertices, exceeds BITSET_CAP={BITSET_CAP}")
    edges = []
    for g in range(G.n):
        for g2 in range(G.n):
            for h in range(H.n):
                for h2 in range(H.n):
                    if cartesian:
                        ok = (G.has_edge(g, g2) and h == h2) or (g == g2 and H.has_edge(h, h2))
                    else:
                        ok = G.has_edge(g, g2) and H.has_edge(h, h2)
                    if ok:
                        edges.append((g * H.n + h, g2 * H.n + h2))
    labels = None
    if G.labels is not None or H.labels is not None:
        labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(H.n)]
    return build_graph(n, edges, labels)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex (g, h) at index ``g * n(H) + h``."""
    return _product(G, H, cartesian=True)


def direct_product(G: Graph, H: Graph) -> Graph:
    """G × H with vertex (g, h) at index ``g * n(H) + h``."""
    return _product(G, H, cartesian=False)


def generalized_corona(G: Graph, H_list: Sequence[Graph]) -> Graph:
    """Join every vertex of ``H_list[i]`` to vertex ``i`` of ``G``.

    Vertices of G keep their indices; the copies of H_1, H_2, ... follow in order.
    """
    if len(H_list) != G.n:
        raise GraphError(f"need {G.n} attached graphs, got {len(H_list)}")
    total = G.n + sum(H.n for H in H_list)
    if total > BITSET_CAP:
        raise GraphError(f"corona has {total} vertices, exceeds BITSET_CAP={BITSET_CAP}")
    edges = list(G.edges())
    offset = G.n
    for i, H in enumerate(H_list):
        edges.extend((offset + u, offset + v) for u, v in H.edges())
        edges.extend((i, offset + u) for u in range(H.n))
        offset += H.n
    return build_graph(total, edges)


def corona(G: Graph, H: Graph | None = None) -> Graph:
    """G ⊙ H with the same ``H`` (default K_1) at every vertex."""
    H = complete(1) if H is None else H
    return generalized_corona(G, [H] * G.n)


def family_F(k: int) -> Graph:
    """F_4k: the cycle a_1..a_3k with a closed twin b_j of every third cycle vertex.

    Twin b_j copies a_{3j-1}, so k = 2 gives the cubic graph F_8.
    """
    if k < 2:
        raise GraphError(f"family_F needs k >= 2, got {k}")
    c = 3 * k
    edges = [(i, (i + 1) % c) for i in range(c)]
    for j in range(k):
        base = 3 * j + 1
        b = c + j
        edges += [(b, base - 1), (b, base), (b, (base + 1) % c)]
    labels = [f"a{i + 1}" for i in range(c)] + [f"b{j + 1}" for j in range(k)]
    return build_graph(4 * k, edges, labels)


_D15_LABELS = ("x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4",
               "z1", "z2", "z3", "y1", "y2", "v2", "y3")

_D15_EDGES = (
    ("z1", "x1"), ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "z2"),
    ("z1", "u1"), ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "z2"),
    ("x1", "u1"), ("x2", "u2"), ("x3", "u3"), ("x4", "u4"),
    ("z2", "y1"), ("y1", "y2"), ("y1", "v2"), ("y2", "v2"), ("y2", "y3"), ("v2", "y3"),
    ("z1", "z3"), ("z3", "y3"),
)


def family_D15() -> Graph:
    """The 15-vertex graph D_15; ``y2`` and ``v2`` are the closed twins x and y."""
    idx = {s: i for i, s in enumerate(_D15_LABELS)}
    return build_graph(15, [(idx[a], idx[b]) for a, b in _D15_EDGES], _D15_LABELS)


def family_G(r: int) -> Graph:
    """G_r: r blocks {w_i, x_i, y_i, y_{i+1}, z_i} glued along the y vertices.

    Block i has edges w_i x_i, x_i y_i, y_i z_i, z_i y_{i+1}, y_{i+1} x_i.
    Vertex order is x_1..x_r, y_1..y_{r+1}, w_1..w_r, z_1..z_r.
    """
    if r < 3:
        raise GraphError(f"family_G needs r >= 3, got {r}")
    labels = ([f"x{i}" for i in range(1, r + 1)] + [f"y{i}" for i in range(1, r + 2)]
              + [f"w{i}" for i in range(1, r + 1)] + [f"z{i}" for i in range(1, r + 1)])
    idx = {s: i for i, s in enumerate(labels)}
    edges = []
    for i in range(1, r + 1):
        x, w, z = f"x{i}", f"w{i}", f"z{i}"
        y, y_next = f"y{i}", f"y{i + 1}"
        for a, b in ((w, x), (x, y), (y, z), (z, y_next), (y_next, x)):
            edges.append((idx[a], idx[b]))
    return build_graph(4 * r + 1, edges, labels)

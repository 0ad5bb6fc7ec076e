"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from .graph import BITSET_CAP, Graph, GraphError, build_graph

_HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(G: Graph) -> str:
    """Encode ``G`` in graph6 (no header, no newline)."""
    out = [_size_prefix(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        for i in range(j):
            acc = (acc << 1) | G.has_edge(i, j)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 string; surrounding whitespace and the header are allowed."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise GraphError(f"graph6 string contains characters outside '?'..'~': {s!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise GraphError(f"unsupported or truncated graph6 size header: {s!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n < 1:
        raise GraphError("graph6 graph with zero vertices")
    if n > BITSET_CAP:
        raise GraphError(f"n={n} exceeds BITSET_CAP={BITSET_CAP}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {(need + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = len(body) * 6 - need
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("graph6 padding bits are not zero")
    return build_graph(n, edges)


def read_graph6(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line)


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> None:
    with open(path, "w") as fh:
        for G in graphs:
            fh.write(emit_graph6(G) + "\n")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def emit_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())

"""Simple undirected graphs: adjacency-set representation, region queries, text formats.

Vertices are dense integers 0..n-1. Graphs are immutable after construction
and safe to share between workers. Every tie-break in this repo is "lowest
vertex index first" so that downstream strategies and traces are fully
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

VertexSet = frozenset[int]


class GraphFormatError(ValueError):
    """Parse failure in graph6 or edge-list text; `offset` locates the bad byte/line."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Finite simple graph. `adj[v]` is the open neighborhood of v.

    Invariants (enforced by `from_edges`): no self-loops, symmetric adjacency,
    all neighbor indices in [0, n).
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: all neighbors of v together with v itself."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return frozenset(g.adj[v] | {v})


def components_within(g: Graph, region: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced on `region`.

    Returned in ascending order of each component's minimum vertex.
    """
    bad = [v for v in region if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"region vertices {sorted(bad)} out of range for n={g.n}")
    remaining = set(region)
    out: list[VertexSet] = []
    for seed in sorted(region):
        if seed not in remaining:
            continue
        comp = {seed}
        remaining.discard(seed)
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def shortest_path_within(
    g: Graph, region: VertexSet, src: int, dst: int
) -> list[int] | None:
    """Minimum-length path from src to dst inside the subgraph induced on `region`.

    Among equal-length paths returns the lexicographically smallest vertex
    sequence. None if dst is unreachable from src within the region.
    """
    if src not in region or dst not in region:
        raise ValueError(f"endpoints {src},{dst} must lie in the region")
    # BFS from dst gives distances; a greedy lowest-index walk from src along
    # strictly decreasing distances is the lexicographically smallest optimum.
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in region and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if src not in dist:
        return None
    path = [src]
    cur = src
    while cur != dst:
        cur = min(w for w in g.adj[cur] if w in region and dist.get(w, -1) == dist[cur] - 1)
        path.append(cur)
    return path


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)
#
# Byte 0: n + 63.  Then ceil(n(n-1)/2 / 6) bytes, each encoding 6 bits of the
# upper adjacency triangle in column order (0,1),(0,2),(1,2),(0,3),...; the
# first bit of each group is the most significant of (byte - 63).
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string (optionally prefixed '>>graph6<<')."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string", offset=0)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII byte in graph6 string", offset=exc.start) from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range [63,126]", offset=i)
    n = data[0] - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise GraphFormatError(
            f"truncated graph6: need {nbytes} adjacency bytes, got {len(data) - 1}",
            offset=len(data),
        )
    if len(data) - 1 > nbytes:
        raise GraphFormatError("trailing data after graph6 adjacency bytes", offset=1 + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph with n <= 62 as a short-form graph6 string."""
    if g.n > 62:
        raise ValueError(f"graph6 short form requires n <= 62, got n={g.n}")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# Plain edge-list text: "n m" header, then m lines "u v".  One graph per file;
# used for corpora beyond graph6's n <= 62.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge-list input", offset=1)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError("edge-list header must be 'n m'", offset=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError("edge-list header must be two integers", offset=lineno) from None
    if len(rows) - 1 != m:
        raise GraphFormatError(
            f"edge-list declares m={m} but has {len(rows) - 1} edge lines", offset=lineno
        )
    edges = []
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", offset=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge line must be two integers", offset=lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u},{v}) for n={n}", offset=lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

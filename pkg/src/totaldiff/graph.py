"""Simple undirected graphs: representation, structural queries, edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph structure or parameters."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


INFINITE = float("inf")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in neighbors[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in neighbors))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def diameter(g: Graph):
    """Exact diameter by all-pairs BFS; INFINITE if disconnected."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        seen = 1
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    seen += 1
                    queue.append(w)
        if seen < g.n:
            return INFINITE
        best = max(best, max(dist))
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m lines of "u v" (0-based vertex indices)."""
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError(1, "missing header")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(1, "header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(1, "header must contain two integers") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(1, "n and m must be non-negative")
    edges = []
    line_no = 1
    for raw in lines[1:]:
        line_no += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, "expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, "vertex indices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"vertex index out of range [0,{n - 1}]")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(line_no, f"expected {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise EdgeListParseError(line_no, str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    """Canonical text form; parse_edge_list(emit_edge_list(g)) reproduces g."""
    out = [f"{g.n} {g.edge_count()}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"

"""Exact computation of the total difference chromatic number.

has_k_tdl decides existence of a k-total difference labeling by backtracking
over vertex labels with incremental double/triple pruning; chi_td iterates k
upward from a structural lower bound. brute_force_chi is a deliberately naive
enumeration oracle kept independent of the pruned search.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from itertools import product

import numpy as np

from .graph import Graph, GraphError, diameter
from .verifier import Labeling


class BudgetExceeded(Exception):
    """Search budget (nodes or wall time) exhausted: result is indeterminate,
    never to be read as a definitive 'no'."""


@dataclass(frozen=True)
class SearchOptions:
    max_k: int | None = None
    node_limit: int | None = None
    time_limit: float | None = None  # seconds
    order: str = "degree-bfs"        # or "input"

    def __post_init__(self):
        for name in ("max_k", "node_limit", "time_limit"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive when present")
        if self.order not in ("degree-bfs", "input"):
            raise ValueError(f"unknown vertex order {self.order!r}")


@dataclass(frozen=True)
class BoundsResult:
    lower: int
    upper: int
    exact: int | None = None
    witness: tuple[int, ...] | None = None
    provenance: str = "search"

    def __post_init__(self):
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError("exact value outside [lower, upper]")


def vertex_order(g: Graph, order: str = "degree-bfs") -> list[int]:
    """Default order: BFS from a maximum-degree vertex, neighbors visited by
    descending degree then index; restarts cover disconnected graphs."""
    if order == "input":
        return list(range(g.n))
    remaining = set(range(g.n))
    out: list[int] = []
    while remaining:
        start = min(remaining, key=lambda v: (-len(g.adj[v]), v))
        queue = deque([start])
        remaining.discard(start)
        while queue:
            u = queue.popleft()
            out.append(u)
            for w in sorted(g.adj[u], key=lambda x: (-len(g.adj[x]), x)):
                if w in remaining:
                    remaining.discard(w)
                    queue.append(w)
    return out


def has_k_tdl(g: Graph, k: int, opts: SearchOptions | None = None) -> list[int] | None:
    """A k-total difference labeling of g, or None if none exists.

    Labels are assigned in opts.order; a partial assignment is pruned as soon
    as it creates an improper pair, a double, or a triple among assigned
    vertices (vertex labels <= k already force edge labels <= k). Raises
    BudgetExceeded when opts budgets run out before a definitive answer.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    opts = opts or SearchOptions()
    order = vertex_order(g, opts.order)
    m = g.n
    if m == 0:
        return []
    labels = [0] * m            # 0 = unassigned
    used: list[set[int]] = [set() for _ in range(m)]  # edge diffs to assigned nbrs
    next_label = [1] * m
    added_stack: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    adj = g.adj
    nodes = 0
    deadline = time.monotonic() + opts.time_limit if opts.time_limit else None
    idx = 0
    while True:
        if idx == m:
            return list(labels)
        v = order[idx]
        x = next_label[idx]
        placed = False
        while x <= k:
            nodes += 1
            if opts.node_limit is not None and nodes > opts.node_limit:
                raise BudgetExceeded(f"node limit {opts.node_limit} reached")
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded(f"time limit {opts.time_limit}s reached")
            added: list[tuple[int, int]] = []
            ok = True
            uv = used[v]
            for u in adj[v]:
                lu = labels[u]
                if lu == 0:
                    continue
                d = x - lu if x > lu else lu - x
                if d == 0 or x == 2 * lu or lu == 2 * x or d in used[u] or d in uv:
                    for uu, dd in added:
                        used[uu].discard(dd)
                        uv.discard(dd)
                    ok = False
                    break
                used[u].add(d)
                uv.add(d)
                added.append((u, d))
            if ok:
                labels[v] = x
                next_label[idx] = x + 1
                added_stack[idx] = added
                idx += 1
                placed = True
                break
            x += 1
        if not placed:
            next_label[idx] = 1
            idx -= 1
            if idx < 0:
                return None
            v = order[idx]
            labels[v] = 0
            for uu, dd in added_stack[idx]:
                used[uu].discard(dd)
                used[v].discard(dd)


def lower_bound(g: Graph) -> int:
    """max(Delta+1, n when diam <= 2, 1): the star subgraph K_{1,Delta} forces
    Delta+1, and diameter <= 2 forces all n vertex labels to be distinct."""
    if g.n == 0:
        raise GraphError("lower bound of the empty graph is undefined")
    bound = max(1, g.max_degree() + 1)
    if diameter(g) <= 2:
        bound = max(bound, g.n)
    return bound


def chi_td(g: Graph, opts: SearchOptions | None = None) -> BoundsResult:
    """Exact chi_td by iterative deepening on k; termination is guaranteed at
    k = 3**(n-1). Budget exhaustion yields bounds with exact absent."""
    if g.n == 0:
        raise GraphError("chi_td of the empty graph is undefined")
    opts = opts or SearchOptions()
    lower = lower_bound(g)
    upper = 3 ** (g.n - 1)
    k_cap = upper if opts.max_k is None else min(upper, opts.max_k)
    k = lower
    while k <= k_cap:
        try:
            witness = has_k_tdl(g, k, opts)
        except BudgetExceeded:
            return BoundsResult(lower=k, upper=upper, provenance="search (budget exhausted)")
        if witness is not None:
            return BoundsResult(lower=k, upper=upper, exact=k,
                                witness=tuple(witness), provenance="search")
        k += 1
    return BoundsResult(lower=k, upper=upper, provenance="search (max_k reached)")


def _wedges(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for v in range(g.n):
        nbrs = g.adj[v]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                out.append((nbrs[i], v, nbrs[j]))
    return out


def _exists_k_labeling_naive(g: Graph, k: int) -> bool:
    """Enumerate every vector in [1,k]^n and test it against the definitional
    total-difference conditions. No pruning; vectorized in chunks."""
    n = g.n
    edges = np.array(list(g.edges()), dtype=np.int64).reshape(-1, 2)
    wedges = np.array(_wedges(g), dtype=np.int64).reshape(-1, 3)
    tail = n
    while tail > 0 and k**tail > 300_000:
        tail -= 1
    tail_block = np.array(list(product(range(1, k + 1), repeat=tail)),
                          dtype=np.int64).reshape(-1, tail)
    for prefix in product(range(1, k + 1), repeat=n - tail):
        block = np.empty((len(tail_block), n), dtype=np.int64)
        block[:, :n - tail] = prefix
        block[:, n - tail:] = tail_block
        ok = np.ones(len(block), dtype=bool)
        if len(edges):
            a = block[:, edges[:, 0]]
            b = block[:, edges[:, 1]]
            d = np.abs(a - b)
            ok &= (a != b).all(axis=1)
            ok &= ((d != a) & (d != b)).all(axis=1)
        if len(wedges) and ok.any():
            du = np.abs(block[:, wedges[:, 0]] - block[:, wedges[:, 1]])
            dw = np.abs(block[:, wedges[:, 1]] - block[:, wedges[:, 2]])
            ok &= (du != dw).all(axis=1)
        if ok.any():
            return True
    return False


def brute_force_chi(g: Graph, cap: int) -> int | None:
    """Least k <= cap admitting a labeling, by plain enumeration; None if the
    cap is exceeded. Restricted to at most 8 vertices."""
    if g.n == 0:
        raise GraphError("brute force on the empty graph is undefined")
    if g.n > 8:
        raise GraphError("brute force oracle is restricted to at most 8 vertices")
    for k in range(1, cap + 1):
        if _exists_k_labeling_naive(g, k):
            return k
    return None


def decide_k_tdl(g: Graph, k: int,
                 opts: SearchOptions | None = None) -> tuple[str, list[int] | None]:
    """Tri-state wrapper: ('yes', witness) | ('no', None) | ('indeterminate', None)."""
    try:
        witness = has_k_tdl(g, k, opts)
    except BudgetExceeded:
        return "indeterminate", None
    if witness is None:
        return "no", None
    return "yes", witness

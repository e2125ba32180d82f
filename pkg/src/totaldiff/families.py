"""Generators for the graph families studied here, with per-vertex roles.

Vertex numbering is fixed per family: hub/root first, then the remaining
vertices in their conventional cyclic or left-to-right order, so that
constructions can address v_0, v_1, ... by index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError


class FamilyError(GraphError):
    """Family parameters outside their valid domain."""


@dataclass(frozen=True)
class PathSpec:
    n: int  # n >= 1 vertices


@dataclass(frozen=True)
class CycleSpec:
    n: int  # n >= 3 vertices


@dataclass(frozen=True)
class StarSpec:
    m: int  # m >= 1 leaves; K_{1,m}


@dataclass(frozen=True)
class WheelSpec:
    n: int  # n >= 4 vertices total: hub + (n-1)-cycle


@dataclass(frozen=True)
class GearSpec:
    n: int  # wheel order n >= 4; every rim edge subdivided once


@dataclass(frozen=True)
class HelmSpec:
    n: int  # wheel order n >= 4; one pendant leaf per rim vertex


@dataclass(frozen=True)
class CaterpillarSpec:
    # Degree of each vertex on the spine, left to right. Leaves are appended
    # to bring each spine vertex up to its stated degree.
    spine_degrees: tuple[int, ...]

    def __init__(self, spine_degrees):
        object.__setattr__(self, "spine_degrees", tuple(spine_degrees))


@dataclass(frozen=True)
class MaximalLobsterSpec:
    n: int        # primary path length, n >= 2
    delta1: int   # degree of every interior primary vertex, >= 3
    delta2: int   # degree of every secondary vertex, >= 2


@dataclass(frozen=True)
class UniformTreeSpec:
    delta: int  # all non-leaf degrees, >= 2
    h: int      # height, >= 1


FamilySpec = (
    PathSpec | CycleSpec | StarSpec | WheelSpec | GearSpec | HelmSpec
    | CaterpillarSpec | MaximalLobsterSpec | UniformTreeSpec
)

# Role per vertex, aligned with the construction conventions.
VertexRoleMap = tuple[str, ...]


def _spine_neighbor_count(i: int, p: int) -> int:
    if p == 1:
        return 0
    return 1 if i in (0, p - 1) else 2


def validate(spec: FamilySpec) -> None:
    """Raise FamilyError naming the violated bound, if any."""
    if isinstance(spec, PathSpec):
        if spec.n < 1:
            raise FamilyError(f"path requires n >= 1, got {spec.n}")
    elif isinstance(spec, CycleSpec):
        if spec.n < 3:
            raise FamilyError(f"cycle requires n >= 3, got {spec.n}")
    elif isinstance(spec, StarSpec):
        if spec.m < 1:
            raise FamilyError(f"star requires m >= 1, got {spec.m}")
    elif isinstance(spec, (WheelSpec, GearSpec, HelmSpec)):
        if spec.n < 4:
            name = type(spec).__name__[:-4].lower()
            raise FamilyError(f"{name} requires n >= 4, got {spec.n}")
    elif isinstance(spec, CaterpillarSpec):
        degs = spec.spine_degrees
        if not degs:
            raise FamilyError("caterpillar spine must be nonempty")
        for i, d in enumerate(degs):
            nbrs = _spine_neighbor_count(i, len(degs))
            if d < nbrs:
                raise FamilyError(
                    f"spine degree d_{i + 1}={d} below its {nbrs} spine neighbors")
            if 0 < i < len(degs) - 1 and d < 2:
                raise FamilyError(f"interior spine degree d_{i + 1}={d} must be >= 2")
    elif isinstance(spec, MaximalLobsterSpec):
        if spec.n < 2:
            raise FamilyError(f"maximal lobster requires n >= 2, got {spec.n}")
        if spec.delta1 < 3:
            raise FamilyError(f"maximal lobster requires delta1 >= 3, got {spec.delta1}")
        if spec.delta2 < 2:
            raise FamilyError(f"maximal lobster requires delta2 >= 2, got {spec.delta2}")
    elif isinstance(spec, UniformTreeSpec):
        if spec.delta < 2:
            raise FamilyError(f"uniform tree requires delta >= 2, got {spec.delta}")
        if spec.h < 1:
            raise FamilyError(f"uniform tree requires h >= 1, got {spec.h}")
    else:
        raise FamilyError(f"unknown family spec {spec!r}")


def build(spec: FamilySpec) -> tuple[Graph, VertexRoleMap]:
    """Construct the canonical family graph and its vertex role map."""
    validate(spec)
    if isinstance(spec, PathSpec):
        n = spec.n
        g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        return g, ("spine",) * n
    if isinstance(spec, CycleSpec):
        n = spec.n
        g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        return g, ("cycle",) * n
    if isinstance(spec, StarSpec):
        m = spec.m
        g = Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])
        return g, ("hub",) + ("leaf",) * m
    if isinstance(spec, WheelSpec):
        n = spec.n
        edges = [(0, i) for i in range(1, n)]
        edges += [(i, i % (n - 1) + 1) for i in range(1, n)]
        g = Graph.from_edges(n, edges)
        return g, ("hub",) + ("cycle",) * (n - 1)
    if isinstance(spec, GearSpec):
        n = spec.n
        rim = 2 * (n - 1)
        edges = [(0, i) for i in range(1, rim + 1, 2)]
        edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
        g = Graph.from_edges(rim + 1, edges)
        return g, ("hub",) + ("cycle",) * rim
    if isinstance(spec, HelmSpec):
        n = spec.n
        edges = [(0, i) for i in range(1, n)]
        edges += [(i, i % (n - 1) + 1) for i in range(1, n)]
        edges += [(i, n - 1 + i) for i in range(1, n)]
        g = Graph.from_edges(2 * n - 1, edges)
        return g, ("hub",) + ("cycle",) * (n - 1) + ("leaf",) * (n - 1)
    if isinstance(spec, CaterpillarSpec):
        degs = spec.spine_degrees
        p = len(degs)
        edges = [(i, i + 1) for i in range(p - 1)]
        nxt = p
        for i, d in enumerate(degs):
            for _ in range(d - _spine_neighbor_count(i, p)):
                edges.append((i, nxt))
                nxt += 1
        g = Graph.from_edges(nxt, edges)
        return g, ("spine",) * p + ("leaf",) * (nxt - p)
    if isinstance(spec, MaximalLobsterSpec):
        n, d1, d2 = spec.n, spec.delta1, spec.delta2
        edges = [(i, i + 1) for i in range(n - 1)]
        secondaries = []
        nxt = n
        for i in range(1, n - 1):
            for _ in range(d1 - 2):
                edges.append((i, nxt))
                secondaries.append(nxt)
                nxt += 1
        roles = ["primary"] * n + ["secondary"] * len(secondaries)
        for s in secondaries:
            for _ in range(d2 - 1):
                edges.append((s, nxt))
                roles.append("tertiary")
                nxt += 1
        g = Graph.from_edges(nxt, edges)
        return g, tuple(roles)
    if isinstance(spec, UniformTreeSpec):
        delta, h = spec.delta, spec.h
        edges = []
        roles = ["root"]
        frontier = [0]
        nxt = 1
        for depth in range(1, h + 1):
            new_frontier = []
            children = delta if depth == 1 else delta - 1
            for parent in frontier:
                for _ in range(children):
                    edges.append((parent, nxt))
                    roles.append("leaf" if depth == h else "internal")
                    new_frontier.append(nxt)
                    nxt += 1
            frontier = new_frontier
        g = Graph.from_edges(nxt, edges)
        return g, tuple(roles)
    raise FamilyError(f"unknown family spec {spec!r}")


def uniform_tree_vertex_count(delta: int, h: int) -> int:
    """Closed-form size of the uniform full delta-ary tree of height h."""
    if delta == 2:
        return 2 * h + 1
    return 1 + delta * ((delta - 1) ** h - 1) // (delta - 2)

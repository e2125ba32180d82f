"""Constructive labelings and closed-form values for the graph families.

Each label_* function returns a ConstructionResult whose labeling is
verifier-clean at claimed_k. Small cases where the general pattern does not
apply are hardcoded or completed by a short exact search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .families import (
    CaterpillarSpec, CycleSpec, FamilySpec, FamilyError, GearSpec, HelmSpec,
    MaximalLobsterSpec, PathSpec, StarSpec, UniformTreeSpec, VertexRoleMap,
    WheelSpec, build, validate,
)
from .graph import Graph
from .solver import BoundsResult, has_k_tdl
from .verifier import find_violations


class ConstructionError(FamilyError):
    """Construction cannot produce a labeling for these parameters."""


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    roles: VertexRoleMap
    labeling: tuple[int, ...]
    claimed_k: int
    provenance: str
    tight: bool
    repaired: bool = False

    def to_json(self) -> str:
        return json.dumps({
            "vertex_labels": list(self.labeling),
            "claimed_k": self.claimed_k,
            "provenance": self.provenance,
            "tight": self.tight,
            "repaired": self.repaired,
        })


def _result(spec, labeling, claimed_k, provenance, tight, repaired=False):
    g, roles = build(spec)
    labeling = tuple(labeling)
    report = find_violations(g, labeling)
    if not report.ok or max(labeling, default=0) > claimed_k:
        raise ConstructionError(
            f"internal error: construction for {spec!r} is not clean at k={claimed_k}")
    return ConstructionResult(g, roles, labeling, claimed_k, provenance,
                              tight, repaired)


def _path_pattern(n: int) -> list[int]:
    """The repeating (1, 4, 3) vertex pattern for positions 1..n."""
    return [(1, 4, 3)[i % 3] for i in range(n)]


def label_path(n: int) -> ConstructionResult:
    """Paths need 4 labels from n = 4 on; P1, P2, P3 need 1, 3, 3."""
    validate(PathSpec(n))
    if n == 1:
        return _result(PathSpec(1), [1], 1, "path: single vertex", True)
    if n == 2:
        return _result(PathSpec(2), [1, 3], 3, "path: two vertices", True)
    if n == 3:
        return _result(PathSpec(3), [1, 3, 2], 3, "path: three vertices", True)
    return _result(PathSpec(n), _path_pattern(n), 4,
                   "path: repeating (1,4,3) pattern", True)


def label_cycle(n: int) -> ConstructionResult:
    """Cycles use 4 labels when n is divisible by 3, otherwise 5."""
    validate(CycleSpec(n))
    if n == 3:
        return _result(CycleSpec(3), [1, 4, 3], 4, "cycle: triangle", True)
    if n == 5:
        # The generic length-5 suffix wraps onto itself here; this labeling
        # was found by exact search.
        return _result(CycleSpec(5), [1, 3, 2, 5, 4], 5,
                       "cycle: length-5 special case", True)
    if n % 3 == 0:
        return _result(CycleSpec(n), _path_pattern(n), 4,
                       "cycle: repeating (1,4,3) pattern", True)
    if n % 3 == 1:
        labels = _path_pattern(n - 1) + [5]
        return _result(CycleSpec(n), labels, 5,
                       "cycle: (1,4,3) pattern closed with 5", True)
    labels = _path_pattern(n - 5) + [5, 1, 4, 3, 5]
    return _result(CycleSpec(n), labels, 5,
                   "cycle: (1,4,3) pattern closed with (5,1,4,3,5)", True)


def chi_td_star(m: int) -> int:
    return m + 1 if m % 2 == 0 else m + 2


def label_star(m: int) -> ConstructionResult:
    """Hub m+1 (m even) or m+2 (m odd), leaves 1..m."""
    validate(StarSpec(m))
    k = chi_td_star(m)
    return _result(StarSpec(m), [k] + list(range(1, m + 1)), k,
                   "star: hub m+1 or m+2, leaves 1..m", True)


def feasible_center_labels(m: int, r: int) -> set[int]:
    """Hub labels realizable in an (m+r)-total difference labeling of K_{1,m}.

    The set is [1, r-1] union [m+2, m+r], plus m+1 exactly when m is even or
    r = (m+3)/2 for odd m.
    """
    if m < 1:
        raise ConstructionError(f"star requires m >= 1, got {m}")
    if not 1 <= r <= m:
        raise ConstructionError(f"r must lie in [1, {m}], got {r}")
    out = set(range(1, r)) | set(range(m + 2, m + r + 1))
    if m % 2 == 0 or 2 * r == m + 3:
        out.add(m + 1)
    return out


# Wheels on 4..8 vertices fall outside the general pattern; these labelings
# come from small-case figures (n <= 7) and exact search (n = 8), hub first.
_WHEEL_SMALL = {
    4: ([8, 1, 7, 5], 8),
    5: ([7, 1, 3, 2, 5], 7),
    6: ([1, 3, 4, 6, 5, 7], 7),
    7: ([7, 3, 1, 5, 4, 6, 2], 7),
    8: ([1, 3, 4, 6, 5, 8, 7, 9], 9),
}


def chi_td_wheel(n: int) -> int:
    if n == 4:
        return 8
    if n in (5, 7):
        return 7
    return n + 1 if n % 2 == 0 else n


def _wheel_labels(n: int) -> tuple[list[int], int]:
    if n in _WHEEL_SMALL:
        labels, k = _WHEEL_SMALL[n]
        return list(labels), k
    labels = [0] * n
    if n % 2 == 1:
        labels[0] = n
        for i in range(1, n, 2):
            labels[i] = i
        labels[2] = n - 1
        for i in range(4, n, 2):
            labels[i] = i - 2
        return labels, n
    labels[0] = n + 1
    for i in range(1, n, 2):
        labels[i] = i
    labels[2] = n - 2
    for i in range(4, n - 1, 2):
        labels[i] = i - 2
    return labels, n + 1


def label_wheel(n: int) -> ConstructionResult:
    validate(WheelSpec(n))
    labels, k = _wheel_labels(n)
    provenance = ("wheel: small case" if n in _WHEEL_SMALL
                  else "wheel: hub n or n+1, alternating rim")
    return _result(WheelSpec(n), labels, k, provenance, True)


# Gears on wheel order 4..7, hub first then rim v_1..v_{2n-2}.
_GEAR_SMALL = {
    4: ([6, 2, 3, 5, 1, 4, 5], 6),
    5: ([6, 1, 5, 2, 3, 5, 1, 4, 3], 6),
    6: ([7, 1, 3, 2, 6, 5, 2, 3, 1, 6, 4], 7),
    7: ([7, 5, 6, 4, 5, 2, 3, 1, 5, 3, 4, 6, 2], 7),
}


def chi_td_gear(n: int) -> int:
    if n in (4, 5):
        return 6
    return n + 1 if n % 2 == 0 else n


def _gear_degree2_repair(g: Graph, labels: list[int], k: int) -> list[int] | None:
    """Reassign the degree-2 rim labels greedily, keeping hub and degree-3
    labels fixed. Returns None if some vertex has no feasible label."""
    n = (g.n + 1) // 2
    for i in range(2, 2 * n - 1, 2):
        labels[i] = 0
    for i in range(2, 2 * n - 1, 2):
        placed = False
        for x in range(1, k + 1):
            ok = True
            for u in g.adj[i]:
                lu = labels[u]
                if lu == 0:
                    continue
                d = abs(x - lu)
                diffs = {abs(labels[w] - lu) for w in g.adj[u]
                         if labels[w] and w != i}
                if d == 0 or x == 2 * lu or lu == 2 * x or d in diffs:
                    ok = False
                    break
            if ok:
                labels[i] = x
                placed = True
                break
        if not placed:
            return None
    return labels


def label_gear(n: int) -> ConstructionResult:
    validate(GearSpec(n))
    if n in _GEAR_SMALL:
        labels, k = _GEAR_SMALL[n]
        return _result(GearSpec(n), labels, k, "gear: small case", True)
    k = chi_td_gear(n)
    labels = [0] * (2 * n - 1)
    labels[0] = k
    for i in range(1, n):
        labels[2 * i - 1] = i
    seq = [n - 2, n - 1] + list(range(5, n)) + [2, 3]
    for i, val in enumerate(seq):
        labels[2 * (i + 1)] = val
    g, _ = build(GearSpec(n))
    repaired = False
    if not find_violations(g, labels).ok:
        labels = _gear_degree2_repair(g, labels, k)
        if labels is None:
            raise ConstructionError(f"gear degree-2 repair failed for n={n}")
        repaired = True
    provenance = "gear: hub n or n+1, indexed rim (repaired)" if repaired \
        else "gear: hub n or n+1, indexed rim"
    return _result(GearSpec(n), labels, k, provenance, True, repaired)


def chi_td_helm(n: int) -> int:
    if n in (6, 7):
        return 8
    return chi_td_wheel(n)


def _helm_greedy_leaves(g: Graph, n: int, labels: list[int], k: int) -> list[int] | None:
    """Assign each leaf the smallest label compatible with its rim vertex."""
    for rim in range(1, n):
        leaf = n - 1 + rim
        lv = labels[rim]
        diffs = {abs(labels[u] - lv) for u in g.adj[rim] if u != leaf}
        for x in range(1, k + 1):
            d = abs(x - lv)
            if d == 0 or x == 2 * lv or lv == 2 * x or d in diffs:
                continue
            labels[leaf] = x
            break
        else:
            return None
    return labels


def label_helm(n: int) -> ConstructionResult:
    validate(HelmSpec(n))
    k = chi_td_helm(n)
    if n in (4, 5, 6, 7):
        # The small wheel labelings do not all extend greedily to the leaves;
        # a direct search at the known value is instant at these sizes.
        g, roles = build(HelmSpec(n))
        labels = has_k_tdl(g, k)
        if labels is None:
            raise ConstructionError(f"no {k}-labeling found for helm n={n}")
        return _result(HelmSpec(n), labels, k, "helm: small case by search", True)
    wheel_labels, k = _wheel_labels(n)
    g, roles = build(HelmSpec(n))
    labels = _helm_greedy_leaves(g, n, wheel_labels + [0] * (n - 1), k)
    if labels is None:
        raise ConstructionError(f"helm leaf completion failed for n={n}")
    return _result(HelmSpec(n), labels, k,
                   "helm: wheel labeling plus greedy leaf labels", True)


def chi_td_caterpillar(spine_degrees) -> int:
    """Classify a caterpillar as Delta+1, Delta+2, or Delta+3.

    Delta+3 exactly when Delta is odd and three consecutive spine vertices
    have degree Delta. Delta+1 exactly when Delta is even, degree-Delta spine
    vertices are pairwise at distance >= 3, no three consecutive spine degrees
    are >= Delta-1, and no five consecutive degrees match
    (Delta, Delta-1, *, Delta-1, Delta). Everything else is Delta+2.
    """
    spec = CaterpillarSpec(spine_degrees)
    validate(spec)
    degs = spec.spine_degrees
    delta = max(degs)
    if delta <= 2:
        g, _ = build(spec)
        return label_path(g.n).claimed_k
    p = len(degs)
    if delta % 2 == 1:
        if any(all(degs[i + j] == delta for j in range(3)) for i in range(p - 2)):
            return delta + 3
        return delta + 2
    high = [i for i, d in enumerate(degs) if d == delta]
    spread = all(high[j + 1] - high[j] >= 3 for j in range(len(high) - 1))
    no_row = not any(all(degs[i + j] >= delta - 1 for j in range(3))
                     for i in range(p - 2))
    no_pattern = not any(
        degs[i] == delta and degs[i + 1] == delta - 1
        and degs[i + 3] == delta - 1 and degs[i + 4] == delta
        for i in range(p - 4))
    if spread and no_row and no_pattern:
        return delta + 1
    return delta + 2


def _path_order(g: Graph) -> list[int]:
    """Vertex order along a graph that is a path."""
    if g.n == 1:
        return [0]
    start = next(v for v in range(g.n) if len(g.adj[v]) == 1)
    order = [start]
    prev = -1
    while len(order) < g.n:
        v = order[-1]
        nxt = next(u for u in g.adj[v] if u != prev)
        order.append(nxt)
        prev = v
    return order


def label_caterpillar(spine_degrees) -> ConstructionResult:
    """Spine labeled with the repeating (1, Delta+3, Delta+2) pattern after
    promoting one leaf at each spine end into the labeled path; leaves take
    ascending labels from per-pattern pools. Always uses Delta+3 labels."""
    spec = CaterpillarSpec(spine_degrees)
    validate(spec)
    degs = spec.spine_degrees
    delta = max(degs)
    p = len(degs)
    if delta <= 2:
        g, roles = build(spec)
        order = _path_order(g)
        path = label_path(g.n)
        labels = [0] * g.n
        for pos, v in enumerate(order):
            labels[v] = path.labeling[pos]
        return ConstructionResult(g, roles, tuple(labels), path.claimed_k,
                                  path.provenance, True)
    if p == 1:
        star = label_star(degs[0])
        g, roles = build(spec)
        return ConstructionResult(g, roles, star.labeling, star.claimed_k,
                                  star.provenance, True)
    g, roles = build(spec)
    leaves: dict[int, list[int]] = {}
    nxt = p
    for i, d in enumerate(degs):
        count = d - (1 if i in (0, p - 1) else 2)
        leaves[i] = list(range(nxt, nxt + count))
        nxt += count
    path = list(range(p))
    if degs[0] >= 2:
        path.insert(0, leaves[0].pop(0))
    if degs[-1] >= 2:
        path.append(leaves[p - 1].pop(0))
    labels = [0] * g.n
    for pos, v in enumerate(path, start=1):
        labels[v] = {1: 1, 2: delta + 3, 0: delta + 2}[pos % 3]
    for i in range(p):
        if not leaves[i]:
            continue
        li = labels[i]
        if li == 1:
            pool = list(range(3, delta + 2))
        elif li == delta + 3:
            pool = [x for x in range(2, delta + 2) if 2 * x != delta + 3]
        else:
            pool = [x for x in range(2, delta + 1) if 2 * x != delta + 2]
        if len(pool) < len(leaves[i]):
            raise ConstructionError(
                f"not enough leaf labels at spine vertex {i} for {degs!r}")
        for v, x in zip(leaves[i], pool):
            labels[v] = x
    tight = chi_td_caterpillar(degs) == delta + 3
    return _result(spec, labels, delta + 3,
                   "caterpillar: (1, Delta+3, Delta+2) spine pattern", tight)


def chi_td_uniform_tree_h2(delta: int) -> int:
    """Uniform full delta-ary tree of height 2: floor((3*delta+3)/2)."""
    if delta < 2:
        raise ConstructionError(f"uniform tree requires delta >= 2, got {delta}")
    return (3 * delta + 3) // 2


def _greedy_children(parent_label: int, used_diffs: set[int],
                     count: int, cap: int) -> list[int] | None:
    """Ascending labels for children of a parent whose edge labels so far are
    used_diffs; None when the cap runs out."""
    used = set(used_diffs)
    out: list[int] = []
    x = 1
    while len(out) < count:
        if x > cap:
            return None
        d = abs(parent_label - x)
        if (x != parent_label and x != 2 * parent_label
                and 2 * x != parent_label and d not in used):
            out.append(x)
            used.add(d)
        x += 1
    return out


def label_uniform_tree(delta: int, h: int) -> ConstructionResult:
    spec = UniformTreeSpec(delta, h)
    validate(spec)
    g, roles = build(spec)
    if h == 1:
        star = label_star(delta)
        return ConstructionResult(g, roles, star.labeling, star.claimed_k,
                                  star.provenance, True)
    if h == 2:
        r = (delta + 3) // 2 if delta % 2 else (delta + 2) // 2
        k = delta + r
        child_pool = (list(range(1, r)) + [delta + 1]
                      + list(range(delta + 2, k)))
        labels = [0] * g.n
        labels[0] = k
        for c, x in zip(range(1, delta + 1), child_pool):
            labels[c] = x
        nxt = delta + 1
        for c in range(1, delta + 1):
            kids = _greedy_children(labels[c], {abs(labels[c] - k)},
                                    delta - 1, k)
            if kids is None:
                raise ConstructionError(
                    f"height-2 tree labeling stuck at delta={delta}")
            for x in kids:
                labels[nxt] = x
                nxt += 1
        return _result(spec, labels, k,
                       "uniform tree: height-2 hub-and-pools labeling", True)
    cap = 2 * delta + 1
    labels = [0] * g.n
    labels[0] = 1
    parent = [0] * g.n
    for u in range(g.n):
        for w in g.adj[u]:
            if w > u:
                parent[w] = u
    used: list[set[int]] = [set() for _ in range(g.n)]
    for v in range(1, g.n):
        p = parent[v]
        lp = labels[p]
        for x in range(1, cap + 1):
            d = abs(x - lp)
            if x != lp and x != 2 * lp and lp != 2 * x and d not in used[p]:
                labels[v] = x
                used[p].add(d)
                used[v].add(d)
                break
        else:
            raise ConstructionError(
                f"greedy tree labeling stuck at delta={delta}, h={h}")
    return _result(spec, labels, cap,
                   "uniform tree: breadth-first greedy within 2*Delta+1", False)


def closed_form(spec: FamilySpec) -> BoundsResult:
    """Exact values or bounds from the family formulas, without search."""
    validate(spec)
    if isinstance(spec, PathSpec):
        k = 1 if spec.n == 1 else (3 if spec.n <= 3 else 4)
        return BoundsResult(k, k, exact=k, provenance="path formula")
    if isinstance(spec, CycleSpec):
        k = 4 if spec.n % 3 == 0 else 5
        return BoundsResult(k, k, exact=k, provenance="cycle formula")
    if isinstance(spec, StarSpec):
        k = chi_td_star(spec.m)
        return BoundsResult(k, k, exact=k, provenance="star formula")
    if isinstance(spec, WheelSpec):
        k = chi_td_wheel(spec.n)
        return BoundsResult(k, k, exact=k, provenance="wheel formula")
    if isinstance(spec, GearSpec):
        k = chi_td_gear(spec.n)
        return BoundsResult(k, k, exact=k, provenance="gear formula")
    if isinstance(spec, HelmSpec):
        k = chi_td_helm(spec.n)
        return BoundsResult(k, k, exact=k, provenance="helm formula")
    if isinstance(spec, CaterpillarSpec):
        k = chi_td_caterpillar(spec.spine_degrees)
        return BoundsResult(k, k, exact=k, provenance="caterpillar classification")
    if isinstance(spec, UniformTreeSpec):
        if spec.h == 1:
            k = chi_td_star(spec.delta)
            return BoundsResult(k, k, exact=k, provenance="star formula")
        if spec.h == 2:
            k = chi_td_uniform_tree_h2(spec.delta)
            return BoundsResult(k, k, exact=k, provenance="height-2 tree formula")
        return BoundsResult(spec.delta + 1, 2 * spec.delta + 1,
                            provenance="tree greedy bound")
    if isinstance(spec, MaximalLobsterSpec):
        return BoundsResult(max(spec.delta1, spec.delta2) + 1,
                            spec.delta1 + spec.delta2 + 1,
                            provenance="lobster bound")
    raise FamilyError(f"unknown family spec {spec!r}")

"""Verification of total difference labelings via the doubles/triples criterion.

A labeling assigns a positive integer to every vertex; edge labels are always
induced as absolute differences. A labeling is valid iff it is proper and
contains no double (adjacent u,v with label(u) = 2*label(v)) and no triple
(a 2-path u-v-w with |label(u)-label(v)| = |label(v)-label(w)|).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph

Labeling = Sequence[int]

# Labels are confined to a signed 64-bit range so induced differences and
# doubled values stay representable in downstream tooling.
MAX_LABEL = 2**63 - 1


class LabelingError(ValueError):
    """Labeling does not fit the graph or violates label-domain bounds."""


@dataclass(frozen=True)
class Violation:
    kind: str                    # "improper" | "double" | "triple"
    vertices: tuple[int, ...]    # witness vertices, canonical order
    labels: tuple[int, ...]      # their labels, aligned with vertices

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices),
                "labels": list(self.labels)}


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, k: int | None = None) -> dict:
        d = {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}
        if k is not None:
            d["k"] = k
        return d


def check_labeling(g: Graph, labels: Labeling) -> None:
    if len(labels) != g.n:
        raise LabelingError(f"labeling has {len(labels)} entries for {g.n} vertices")
    for v, x in enumerate(labels):
        if not isinstance(x, int) or x < 1:
            raise LabelingError(f"label of vertex {v} must be a positive integer, got {x!r}")
        if x > MAX_LABEL:
            raise LabelingError(f"label of vertex {v} exceeds the 64-bit label bound")


def induced_edge_labels(g: Graph, labels: Labeling) -> dict[tuple[int, int], int]:
    """Map each edge (u,v), u<v, to |label(u)-label(v)|.

    A 0 entry means the labeling is improper on that edge; it is returned
    rather than silently dropped so reports can point at it.
    """
    check_labeling(g, labels)
    return {(u, v): abs(labels[u] - labels[v]) for u, v in g.edges()}


def find_violations(g: Graph, labels: Labeling) -> ViolationReport:
    """All properness/double/triple violations, deduplicated by witness set."""
    check_labeling(g, labels)
    found: list[Violation] = []
    for u, v in g.edges():
        lu, lv = labels[u], labels[v]
        if lu == lv:
            found.append(Violation("improper", (u, v), (lu, lv)))
        elif lu == 2 * lv:
            found.append(Violation("double", (u, v), (lu, lv)))
        elif lv == 2 * lu:
            found.append(Violation("double", (v, u), (lv, lu)))
    for v in range(g.n):
        nbrs = g.adj[v]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, w = nbrs[i], nbrs[j]
                if abs(labels[u] - labels[v]) == abs(labels[v] - labels[w]):
                    found.append(
                        Violation("triple", (u, v, w), (labels[u], labels[v], labels[w])))
    return ViolationReport(tuple(found))


def definitional_check(g: Graph, labels: Labeling) -> bool:
    """Check the three total-labeling conditions directly on induced edge labels.

    Independent of find_violations: adjacent vertices must differ, edge labels
    must be positive, incident edges must differ, and an edge must differ from
    both of its endpoints. Used as an oracle for the doubles/triples criterion.
    """
    check_labeling(g, labels)
    edge_label = {}
    for u, v in g.edges():
        if labels[u] == labels[v]:
            return False
        d = abs(labels[u] - labels[v])
        edge_label[(u, v)] = edge_label[(v, u)] = d
        if d == labels[u] or d == labels[v]:
            return False
    for v in range(g.n):
        incident = [edge_label[(v, u)] for u in g.adj[v]]
        if len(set(incident)) != len(incident):
            return False
    return True


def is_k_tdl(g: Graph, labels: Labeling, k: int) -> bool:
    """True iff labels is a valid labeling whose vertex and edge labels are <= k."""
    if k < 1:
        raise LabelingError(f"k must be positive, got {k}")
    if not find_violations(g, labels).ok:
        return False
    if max(labels, default=0) > k:
        return False
    # Edge labels are differences of vertex labels in [1,k], hence < k already.
    return True


def max_label_used(g: Graph, labels: Labeling) -> int:
    """Largest label over vertices and induced edges."""
    check_labeling(g, labels)
    best = max(labels, default=0)
    for d in induced_edge_labels(g, labels).values():
        best = max(best, d)
    return best


def power_of_three_labeling(g: Graph) -> list[int]:
    """Label vertex i with 3**i; always violation-free, and the source of the
    3**(n-1) upper bound. Rejected for n > 40 to stay in the 64-bit label range."""
    if g.n > 40:
        raise LabelingError("power-of-three labeling overflows 64-bit labels for n > 40")
    return [3**i for i in range(g.n)]


def labeling_to_json(labels: Labeling) -> str:
    return json.dumps({"vertex_labels": list(labels)})


def labeling_from_json(text: str) -> list[int]:
    data = json.loads(text)
    if not isinstance(data, dict) or "vertex_labels" not in data:
        raise LabelingError('labeling JSON must be {"vertex_labels": [...]}')
    labels = data["vertex_labels"]
    if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
        raise LabelingError("vertex_labels must be a list of integers")
    return labels


def report_to_json(g: Graph, labels: Labeling, report: ViolationReport) -> str:
    k = max_label_used(g, labels)
    return json.dumps(report.to_dict(k=k))

import json
import random

import pytest

from totaldiff.families import PathSpec, StarSpec, build
from totaldiff.graph import Graph
from totaldiff.verifier import (
    LabelingError, definitional_check, find_violations, induced_edge_labels,
    is_k_tdl, labeling_from_json, labeling_to_json, max_label_used,
    power_of_three_labeling, report_to_json,
)

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def _random_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_induced_edge_labels():
    assert induced_edge_labels(K3, [1, 4, 3]) == {(0, 1): 3, (1, 2): 1, (0, 2): 2}
    p2 = Graph.from_edges(2, [(0, 1)])
    assert induced_edge_labels(p2, [1, 3]) == {(0, 1): 2}
    p3, _ = build(PathSpec(3))
    assert induced_edge_labels(p3, [1, 4, 3]) == {(0, 1): 3, (1, 2): 1}
    # improper edges show up as 0 rather than disappearing
    assert induced_edge_labels(p2, [2, 2]) == {(0, 1): 0}


def test_find_violations_doubles():
    report = find_violations(K3, [1, 2, 4])
    kinds = sorted(v.kind for v in report.violations)
    assert kinds == ["double", "double"]
    witnesses = {(v.labels) for v in report.violations}
    assert (2, 1) in witnesses and (4, 2) in witnesses


def test_find_violations_triple_and_clean():
    p3, _ = build(PathSpec(3))
    report = find_violations(p3, [3, 2, 3])
    assert [v.kind for v in report.violations] == ["triple"]
    assert report.violations[0].vertices == (0, 1, 2)
    p4, _ = build(PathSpec(4))
    assert find_violations(p4, [1, 4, 3, 1]).ok


def test_is_k_tdl():
    assert is_k_tdl(K3, [1, 4, 3], 4)
    assert not is_k_tdl(K3, [1, 4, 3], 3)
    star4, _ = build(StarSpec(4))
    assert is_k_tdl(star4, [5, 1, 2, 3, 4], 5)
    with pytest.raises(LabelingError):
        is_k_tdl(K3, [1, 4, 3], 0)


def test_label_validation():
    with pytest.raises(LabelingError):
        find_violations(K3, [1, 2])
    with pytest.raises(LabelingError):
        find_violations(K3, [1, 0, 2])
    with pytest.raises(LabelingError):
        find_violations(K3, [1, 2**64, 2])


def test_definitional_check_examples():
    assert definitional_check(K3, [1, 4, 3])
    assert not definitional_check(K3, [1, 2, 4])


def test_definitional_check_matches_criterion():
    rng = random.Random(20240811)
    for _ in range(400):
        n = rng.randint(2, 6)
        g = _random_graph(rng, n)
        labels = [rng.randint(1, 10) for _ in range(n)]
        assert definitional_check(g, labels) == find_violations(g, labels).ok


def test_power_of_three():
    rng = random.Random(7)
    for _ in range(50):
        g = _random_graph(rng, rng.randint(1, 12), 0.5)
        assert find_violations(g, power_of_three_labeling(g)).ok
    with pytest.raises(LabelingError):
        power_of_three_labeling(Graph.from_edges(41, []))


def test_violations_monotone_under_edge_addition():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(3, 7)
        g = _random_graph(rng, n, 0.3)
        labels = [rng.randint(1, 8) for _ in range(n)]
        before = len(find_violations(g, labels).violations)
        u, v = rng.sample(range(n), 2)
        if g.has_edge(u, v):
            continue
        bigger = Graph.from_edges(n, list(g.edges()) + [(u, v)])
        after = len(find_violations(bigger, labels).violations)
        assert after >= before


def test_doubles_are_not_translation_invariant():
    p2 = Graph.from_edges(2, [(0, 1)])
    assert find_violations(p2, [1, 3]).ok
    # shifting both labels up by one creates a double
    assert not find_violations(p2, [2, 4]).ok


def test_json_round_trip():
    labels = [1, 4, 3]
    assert labeling_from_json(labeling_to_json(labels)) == labels
    with pytest.raises(LabelingError):
        labeling_from_json('{"labels": [1]}')
    with pytest.raises(LabelingError):
        labeling_from_json('{"vertex_labels": [1, "a"]}')
    report = find_violations(K3, [1, 2, 4])
    data = json.loads(report_to_json(K3, [1, 2, 4], report))
    assert data["ok"] is False
    assert data["k"] == max_label_used(K3, [1, 2, 4]) == 4
    assert len(data["violations"]) == 2

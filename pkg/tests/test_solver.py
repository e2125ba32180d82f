import random

import pytest

from totaldiff.families import (
    CycleSpec, PathSpec, StarSpec, WheelSpec, build,
)
from totaldiff.graph import Graph, GraphError
from totaldiff.solver import (
    BudgetExceeded, SearchOptions, brute_force_chi, chi_td, decide_k_tdl,
    has_k_tdl, lower_bound, vertex_order,
)
from totaldiff.verifier import is_k_tdl

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def _random_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_has_k_tdl_small():
    assert has_k_tdl(K3, 3) is None
    witness = has_k_tdl(K3, 4)
    assert witness is not None and is_k_tdl(K3, witness, 4)
    assert not (1 in witness and 2 in witness)
    p1, _ = build(PathSpec(1))
    assert has_k_tdl(p1, 1) == [1]


def test_wheel5_needs_seven():
    w5, _ = build(WheelSpec(5))
    assert has_k_tdl(w5, 6) is None
    assert has_k_tdl(w5, 7) is not None


def test_chi_td_examples():
    assert chi_td(K3).exact == 4
    p2, _ = build(PathSpec(2))
    p3, _ = build(PathSpec(3))
    assert chi_td(p2).exact == 3
    assert chi_td(p3).exact == 3


def test_chi_td_witness_sound():
    for spec in [CycleSpec(5), StarSpec(4), WheelSpec(5)]:
        g, _ = build(spec)
        res = chi_td(g)
        assert res.lower <= res.exact <= res.upper
        assert is_k_tdl(g, list(res.witness), res.exact)
        assert has_k_tdl(g, res.exact - 1) is None


def test_lower_bound():
    w9, _ = build(WheelSpec(9))
    assert lower_bound(w9) == 9
    s6, _ = build(StarSpec(6))
    assert lower_bound(s6) == 7
    p5, _ = build(PathSpec(5))
    assert lower_bound(p5) == 3
    with pytest.raises(GraphError):
        lower_bound(Graph.from_edges(0, []))


def test_brute_force_chi():
    c4, _ = build(CycleSpec(4))
    assert brute_force_chi(c4, 8) == 5
    assert brute_force_chi(K3, 8) == 4
    s3, _ = build(StarSpec(3))
    assert brute_force_chi(s3, 8) == 5
    assert brute_force_chi(K3, 3) is None
    with pytest.raises(GraphError):
        brute_force_chi(Graph.from_edges(9, []), 3)


def test_oracle_agreement_random():
    rng = random.Random(424242)
    for _ in range(30):
        g = _random_graph(rng, rng.randint(2, 6))
        exact = chi_td(g).exact
        assert brute_force_chi(g, exact) == exact


def test_determinism():
    w5, _ = build(WheelSpec(5))
    assert chi_td(w5).witness == chi_td(w5).witness
    assert has_k_tdl(w5, 7) == has_k_tdl(w5, 7)


def test_vertex_order():
    s4, _ = build(StarSpec(4))
    assert vertex_order(s4)[0] == 0
    assert vertex_order(s4, "input") == [0, 1, 2, 3, 4]
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert sorted(vertex_order(disconnected)) == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        SearchOptions(order="random")


def test_budgets_give_indeterminate():
    w7, _ = build(WheelSpec(7))
    with pytest.raises(BudgetExceeded):
        has_k_tdl(w7, 6, SearchOptions(node_limit=5))
    status, witness = decide_k_tdl(w7, 6, SearchOptions(node_limit=5))
    assert status == "indeterminate" and witness is None
    res = chi_td(w7, SearchOptions(node_limit=5))
    assert res.exact is None and res.lower <= res.upper
    assert "budget" in res.provenance


def test_decide_k_tdl_states():
    assert decide_k_tdl(K3, 3)[0] == "no"
    status, witness = decide_k_tdl(K3, 4)
    assert status == "yes" and is_k_tdl(K3, witness, 4)


def test_max_k_cap():
    res = chi_td(K3, SearchOptions(max_k=3))
    assert res.exact is None and "max_k" in res.provenance
    with pytest.raises(ValueError):
        SearchOptions(node_limit=0)


def test_subgraph_monotonicity_random():
    rng = random.Random(31337)
    for _ in range(30):
        n = rng.randint(3, 6)
        g = _random_graph(rng, n, 0.5)
        edges = list(g.edges())
        keep = [e for e in edges if rng.random() < 0.6]
        sub = Graph.from_edges(n, keep)
        assert chi_td(sub).exact <= chi_td(g).exact

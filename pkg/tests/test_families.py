import pytest

from totaldiff.families import (
    CaterpillarSpec, CycleSpec, FamilyError, GearSpec, HelmSpec,
    MaximalLobsterSpec, PathSpec, StarSpec, UniformTreeSpec, WheelSpec, build,
    uniform_tree_vertex_count, validate,
)
from totaldiff.graph import emit_edge_list, parse_edge_list


def test_wheel4_is_k4():
    g, roles = build(WheelSpec(4))
    assert g.n == 4 and g.edge_count() == 6
    assert roles == ("hub", "cycle", "cycle", "cycle")


def test_path1_degenerate():
    g, roles = build(PathSpec(1))
    assert g.n == 1 and g.edge_count() == 0


def test_gear5_counts():
    g, roles = build(GearSpec(5))
    assert g.n == 9 and g.edge_count() == 12
    assert g.degree(0) == 4
    # odd rim indices carry the spokes
    assert all(g.degree(i) == 3 for i in range(1, 9, 2))
    assert all(g.degree(i) == 2 for i in range(2, 9, 2))


def test_star_and_helm_hub_degrees():
    g, _ = build(StarSpec(6))
    assert g.degree(0) == 6
    g, _ = build(HelmSpec(7))
    assert g.degree(0) == 6
    assert all(g.degree(v) == 1 for v in range(7, 13))


def test_caterpillar_build():
    g, roles = build(CaterpillarSpec((1, 3, 3, 3, 1)))
    assert g.n == 5 + 3
    assert roles[:5] == ("spine",) * 5
    assert [g.degree(i) for i in range(5)] == [1, 3, 3, 3, 1]


def test_lobster_build():
    g, roles = build(MaximalLobsterSpec(4, 3, 2))
    # two interior primaries, one secondary each, one tertiary each
    assert g.n == 4 + 2 + 2
    assert roles.count("secondary") == 2 and roles.count("tertiary") == 2
    assert g.degree(1) == 3 and g.degree(2) == 3


def test_validate_errors():
    for bad in [CycleSpec(2), PathSpec(0), StarSpec(0), WheelSpec(3),
                GearSpec(3), HelmSpec(2), MaximalLobsterSpec(1, 3, 2),
                MaximalLobsterSpec(4, 2, 2), MaximalLobsterSpec(4, 3, 1),
                UniformTreeSpec(1, 2), UniformTreeSpec(2, 0),
                CaterpillarSpec(()), CaterpillarSpec((1, 1, 1)),
                CaterpillarSpec((0, 2, 1))]:
        with pytest.raises(FamilyError):
            validate(bad)


def _contains(big, small, mapping):
    return all(big.has_edge(mapping[u], mapping[v]) for u, v in small.edges())


def test_subgraph_containments():
    for n in range(4, 12):
        wheel, _ = build(WheelSpec(n))
        gear, _ = build(GearSpec(n))
        helm, _ = build(HelmSpec(n))
        star, _ = build(StarSpec(n - 1))
        ident = {v: v for v in range(star.n)}
        assert _contains(wheel, star, ident)
        gear_map = {0: 0} | {i: 2 * i - 1 for i in range(1, n)}
        assert _contains(gear, star, gear_map)
        assert _contains(helm, wheel, {v: v for v in range(wheel.n)})


def test_uniform_tree_counts():
    for delta in range(2, 7):
        for h in range(1, 5):
            g, roles = build(UniformTreeSpec(delta, h))
            assert g.n == uniform_tree_vertex_count(delta, h)
            assert g.max_degree() == delta
            assert roles[0] == "root"


def test_roles_partition():
    for spec in [WheelSpec(6), GearSpec(5), HelmSpec(5),
                 CaterpillarSpec((2, 3, 2)), MaximalLobsterSpec(3, 3, 2),
                 UniformTreeSpec(3, 2)]:
        g, roles = build(spec)
        assert len(roles) == g.n


def test_built_graphs_round_trip():
    for spec in [CycleSpec(4), WheelSpec(7), GearSpec(6),
                 MaximalLobsterSpec(4, 4, 3)]:
        g, _ = build(spec)
        assert parse_edge_list(emit_edge_list(g)) == g

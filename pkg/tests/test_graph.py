import pytest

from tgk.errors import GraphValidationError, PreconditionError
from tgk.graph import (
    OMEGA,
    DiscreteGraph,
    EdgeClass,
    GraphBuilder,
    Lasso,
    Path,
    classify_vertices,
    is_row_finite,
    loop_without_entrances,
    path_from_edges,
    paths_between,
    restrict,
    simple_loops,
    validate,
)


def test_builder_orders_vertices_and_edges():
    graph = GraphBuilder().vertices("w", "u").edge("e", "u", "w").build()
    assert graph.vertices == ("u", "w")
    assert graph.in_edges["w"][0].id == "e"
    assert graph.out_edges["w"] == ()


def test_validation_collects_every_problem():
    with pytest.raises(GraphValidationError) as info:
        DiscreteGraph.build(["a", "a"], [
            EdgeClass("e", "a", "missing"),
            EdgeClass("f", "a", "a", 0),
        ])
    problems = info.value.problems
    assert any("duplicate id" in p for p in problems)
    assert any("dangling endpoint" in p for p in problems)
    assert any("invalid multiplicity" in p for p in problems)


def test_validate_accepts_omega_and_rejects_bool_multiplicity():
    validate(DiscreteGraph(("v", "w"), (EdgeClass("e", "v", "w", OMEGA),)))
    with pytest.raises(GraphValidationError) as info:
        validate(DiscreteGraph(("v", "w"), (EdgeClass("e", "v", "w", True),)))
    assert info.value.problems == ["invalid multiplicity: edge 'e' has True"]


def test_classification_of_omega_graph(omega):
    classes = classify_vertices(omega)
    assert classes.sources == {"v", "v'"}
    assert classes.infinite_receivers == {"w"}
    assert classes.regular == frozenset()
    assert classes.singular == {"v", "v'", "w"}
    assert not is_row_finite(omega)


def test_classification_of_edge_graph(edge):
    classes = classify_vertices(edge)
    assert classes.sources == {"u"}
    assert classes.regular == {"w"}
    assert is_row_finite(edge)


def test_breaking_vertex_is_infinite_receiver(breaking):
    classes = classify_vertices(breaking)
    assert classes.infinite_receivers == {"a"}
    assert classes.sources == {"c"}


def test_paths_compose_right_to_left(cycle3):
    path = path_from_edges(cycle3, ["e1", "e0"])
    assert path.range == "2"
    assert path.domain == "0"
    assert path.vertices(cycle3) == ("2", "1", "0")

    with pytest.raises(PreconditionError):
        path_from_edges(cycle3, ["e0", "e1"])


def test_path_multiplicity_is_product():
    graph = (GraphBuilder()
             .vertices("a", "b", "c")
             .edge("f", "a", "b", 2)
             .edge("g", "b", "c", 3)
             .edge("h", "b", "c", OMEGA)
             .build())
    assert path_from_edges(graph, ["g", "f"]).multiplicity == 6
    assert path_from_edges(graph, ["h", "f"]).multiplicity is OMEGA


def test_paths_between(cycle3):
    found = paths_between(cycle3, "0", "0", 6)
    assert [p.length for p in found] == [0, 3, 6]
    assert found[1].edges == ("e2", "e1", "e0")


def test_simple_loops_are_based_at_smallest_vertex(cycle3):
    (loop,) = simple_loops(cycle3)
    assert loop.range == "0"
    assert loop.edges == ("e2", "e1", "e0")
    assert loop_without_entrances(cycle3, loop)


def test_parallel_loops_give_distinct_loops():
    graph = GraphBuilder().vertex("a").edge("l1", "a", "a").edge("l2", "a", "a").build()
    loops = simple_loops(graph)
    assert [loop.edges for loop in loops] == [("l1",), ("l2",)]
    assert not any(loop_without_entrances(graph, loop) for loop in loops)


def test_loop_with_entrance(loop_entrance):
    (loop,) = simple_loops(loop_entrance)
    assert not loop_without_entrances(loop_entrance, loop)


def test_loop_of_higher_multiplicity_has_entrance():
    graph = GraphBuilder().vertex("a").edge("l", "a", "a", 2).build()
    (loop,) = simple_loops(graph)
    assert not loop_without_entrances(graph, loop)


def test_restrict_requires_positive_invariance(edge):
    assert restrict(edge, ["w"]).edges == ()
    with pytest.raises(PreconditionError):
        restrict(edge, ["u"])


def test_lasso_shape(loop_entrance):
    stem = path_from_edges(loop_entrance, ["f"])
    cycle = path_from_edges(loop_entrance, ["l"])
    with pytest.raises(ValueError):
        Lasso(stem, cycle)
    assert Lasso(Path.trivial("a"), cycle).range == "a"


def test_empty_graph():
    graph = DiscreteGraph.build([])
    assert classify_vertices(graph).singular == frozenset()
    assert simple_loops(graph) == []
    assert is_row_finite(graph)


def test_restriction_is_idempotent_and_keeps_row_finiteness(cycle_source3, edge):
    X = frozenset({"0", "1", "2"})
    restricted = restrict(cycle_source3, X)
    assert restrict(restricted, X) == restricted
    assert is_row_finite(edge)
    assert is_row_finite(restrict(edge, {"w"}))


def test_paths_grow_with_max_len(cycle3):
    previous = set()
    for m in range(5):
        current = set(paths_between(cycle3, "0", "0", m))
        assert previous <= current
        previous = current
    assert [p.length for p in sorted(previous, key=lambda p: p.length)] == [0, 3]

import pytest

from tgk.closures import (
    enumerate_invariant_sets,
    hereditary_closure,
    is_hereditary,
    is_invariant,
    is_negatively_invariant,
    is_positively_invariant,
    is_saturated,
    largest_invariant_avoiding,
    negative_invariance_conditions,
    saturated_closure,
)
from tgk.corpus import cycle_graph
from tgk.errors import BoundExceededError, PreconditionError
from tgk.utils import graded_subsets


def test_hereditary_closure_collects_ancestors(cycle_source3):
    assert hereditary_closure(cycle_source3, ["1"]) == {"0", "1", "2", "t"}
    assert hereditary_closure(cycle_source3, ["t"]) == {"t"}
    assert hereditary_closure(cycle_source3, []) == frozenset()


def test_saturated_closure_adds_fully_fed_regular_vertices(edge, loop_entrance):
    assert saturated_closure(edge, ["u"]) == {"u", "w"}
    # a also receives its own loop
    assert saturated_closure(loop_entrance, ["b"]) == {"b"}
    assert saturated_closure(loop_entrance, ["a"]) == {"a"}


def test_saturation_ignores_infinite_receivers(omega):
    assert saturated_closure(omega, ["v", "v'"]) == {"v", "v'"}


def test_closures_reject_unknown_vertices(edge):
    with pytest.raises(PreconditionError):
        hereditary_closure(edge, ["x"])


def test_complement_duality(loop_entrance, omega, subset2):
    for graph in (loop_entrance, omega, subset2):
        for X in graded_subsets(graph.vertices):
            complement = graph.vertex_set - X
            assert is_positively_invariant(graph, X) == is_hereditary(graph, complement)
            assert is_negatively_invariant(graph, X) == is_saturated(graph, complement)


def test_negative_invariance_conditions_agree(subset2):
    for X in graded_subsets(subset2.vertices):
        if is_positively_invariant(subset2, X):
            assert len(set(negative_invariance_conditions(subset2, X))) == 1
            is_negatively_invariant(subset2, X, cross_check=True)


def test_invariant_sets_of_omega_graph(omega):
    assert enumerate_invariant_sets(omega) == [
        frozenset(),
        frozenset({"w"}),
        frozenset({"v", "w"}),
        frozenset({"v'", "w"}),
        frozenset({"v", "v'", "w"}),
    ]


def test_invariant_sets_of_small_graphs(edge, loop_entrance, breaking, cycle3, subset2):
    assert enumerate_invariant_sets(edge) == [frozenset(), frozenset({"u", "w"})]
    assert enumerate_invariant_sets(loop_entrance) == [frozenset(), frozenset({"a"}), frozenset({"a", "b"})]
    assert enumerate_invariant_sets(breaking) == [frozenset(), frozenset({"a"}), frozenset({"a", "c"})]
    assert enumerate_invariant_sets(cycle3) == [frozenset(), cycle3.vertex_set]
    assert enumerate_invariant_sets(subset2) == [frozenset(), subset2.vertex_set]


def test_enumeration_matches_brute_force(cycle_source3, omega):
    for graph in (cycle_source3, omega):
        expected = [X for X in graded_subsets(graph.vertices) if is_invariant(graph, X)]
        assert enumerate_invariant_sets(graph) == expected


def test_enumeration_bound():
    with pytest.raises(BoundExceededError) as info:
        enumerate_invariant_sets(cycle_graph(5), max_vertices=4)
    assert info.value.flag == "--max-vertices"
    assert info.value.value == 5


def test_largest_invariant_avoiding(loop_entrance, cycle_source3):
    assert largest_invariant_avoiding(loop_entrance, ["b"]) == {"a"}
    assert largest_invariant_avoiding(loop_entrance, ["a"]) == frozenset()
    assert largest_invariant_avoiding(cycle_source3, ["t"]) == {"0", "1", "2"}
    assert is_invariant(cycle_source3, largest_invariant_avoiding(cycle_source3, ["t"]))


def test_closures_match_brute_force_on_random_graphs(random_graphs):
    for graph in random_graphs:
        for V in graded_subsets(graph.vertices):
            hereditary = [X for X in graded_subsets(graph.vertices) if V <= X and is_hereditary(graph, X)]
            saturated = [X for X in graded_subsets(graph.vertices) if V <= X and is_saturated(graph, X)]
            assert hereditary_closure(graph, V) == frozenset.intersection(*hereditary)
            assert saturated_closure(graph, V) == frozenset.intersection(*saturated)


def test_closures_are_closure_operators(loop_entrance, cycle_source3):
    for graph in (loop_entrance, cycle_source3):
        subsets = list(graded_subsets(graph.vertices))
        for V in subsets:
            H = hereditary_closure(graph, V)
            S = saturated_closure(graph, V)
            assert V <= H and hereditary_closure(graph, H) == H
            assert V <= S and saturated_closure(graph, S) == S
            generated = saturated_closure(graph, H)
            assert is_hereditary(graph, generated) and is_saturated(graph, generated)
            for W in subsets:
                if V <= W:
                    assert H <= hereditary_closure(graph, W)
                    assert S <= saturated_closure(graph, W)

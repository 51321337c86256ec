import pytest

from tgk.closures import enumerate_invariant_sets
from tgk.corpus import cycle_graph
from tgk.errors import PreconditionError
from tgk.graph import GraphBuilder, classify_vertices, restricted_classification
from tgk.lattice import (
    COPY_SUFFIX,
    MORITA_NOTE,
    enumerate_admissible_pairs,
    hereditary_subgraph,
    ideal_generated_by,
    is_admissible,
    make_pair,
    pair_union,
    quotient_graph,
    restricted_singular,
    row_finite_bijection_check,
)
from tgk.utils import graded_subsets


def brute_force_pairs(graph):
    invariant = enumerate_invariant_sets(graph)
    return {
        make_pair(X0, Z)
        for X0 in invariant
        for Z in graded_subsets(X0)
        if is_admissible(graph, X0, Z)
    }


def test_omega_graph_lattice(omega):
    lattice = enumerate_admissible_pairs(omega)
    assert [p.to_dict() for p in lattice.pairs] == [
        {'X0': [], 'Z': []},
        {'X0': ["w"], 'Z': ["w"]},
        {'X0': ["v", "w"], 'Z': ["v"]},
        {'X0': ["v", "w"], 'Z': ["v", "w"]},
        {'X0': ["v'", "w"], 'Z': ["v'", "w"]},
        {'X0': ["v", "v'", "w"], 'Z': ["v", "v'", "w"]},
    ]
    assert set(lattice.pairs) == brute_force_pairs(omega)


def test_restricted_singular_vertices(omega):
    assert restricted_singular(omega, {"w"}) == {"w"}
    assert restricted_singular(omega, {"v", "w"}) == {"v"}


def test_lattice_matches_brute_force(loop_entrance, breaking, cycle_source3, subset2):
    for graph in (loop_entrance, breaking, cycle_source3, subset2):
        lattice = enumerate_admissible_pairs(graph)
        assert set(lattice.pairs) == brute_force_pairs(graph)
        assert len(set(lattice.pairs)) == len(lattice.pairs)


def test_bottom_and_top(breaking):
    lattice = enumerate_admissible_pairs(breaking)
    assert lattice.bottom == make_pair([], [])
    assert lattice.top == make_pair(breaking.vertex_set, classify_vertices(breaking).singular)
    assert len(lattice) == 4


def test_hasse_diagrams(cycle3):
    lattice = enumerate_admissible_pairs(cycle3)
    assert lattice.hasse == [(0, 1)]
    assert lattice.ideal_hasse == [(1, 0)]
    assert lattice.to_dict()['count'] == 2


def test_hasse_is_transitive_reduction(breaking):
    lattice = enumerate_admissible_pairs(breaking)
    # (∅,∅) < ({a},∅) < ({a},{a}) < (E,{a,c})
    assert lattice.hasse == [(0, 1), (1, 2), (2, 3)]
    assert lattice.is_below(0, 3)
    assert not lattice.is_below(3, 0)
    assert sorted(lattice.order) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_covers_of_a_boolean_lattice():
    graph = GraphBuilder().vertices(*(f"v{k}" for k in range(11))).build()
    lattice = enumerate_admissible_pairs(graph)
    assert len(lattice) == 2 ** 11
    assert len(lattice.hasse) == 11 * 2 ** 10
    assert all(len(lattice.pairs[j].X0 - lattice.pairs[i].X0) == 1 for i, j in lattice.hasse)


def test_parallel_enumeration_agrees(subset2):
    serial = enumerate_admissible_pairs(subset2)
    parallel = enumerate_admissible_pairs(subset2, parallel=True)
    assert serial.pairs == parallel.pairs
    assert serial.hasse == parallel.hasse


def test_pair_union(omega):
    union = pair_union(omega, make_pair(["w"], ["w"]), make_pair(["v", "w"], ["v"]))
    assert union == make_pair(["v", "w"], ["v", "w"])
    with pytest.raises(PreconditionError):
        pair_union(omega, make_pair(["v"], []), make_pair(["w"], ["w"]))


def test_union_closure(omega, breaking):
    for graph in (omega, breaking):
        pairs = enumerate_admissible_pairs(graph).pairs
        for first in pairs:
            for second in pairs:
                assert pair_union(graph, first, second) in pairs


def test_row_finite_bijection(edge, cycle_source3, omega):
    assert row_finite_bijection_check(edge)
    assert row_finite_bijection_check(cycle_source3)
    lattice = enumerate_admissible_pairs(cycle_source3)
    assert len(lattice.pairs) == len(lattice.invariant_sets)
    with pytest.raises(PreconditionError):
        row_finite_bijection_check(omega)


def test_ideal_generated_by(edge, loop_entrance):
    assert ideal_generated_by(edge, ["w"]) == make_pair([], [])
    assert ideal_generated_by(loop_entrance, ["b"]) == make_pair(["a"], [])


def test_quotient_graph_copies_breaking_vertex(breaking):
    quotient = quotient_graph(breaking, make_pair(["a"], ["a"]))
    assert quotient.copies == {"a": "a" + COPY_SUFFIX}
    assert quotient.base.vertices == ("a", "a#copy")
    copied = quotient.base.edge("l#copy")
    assert (copied.domain, copied.range, copied.multiplicity) == ("a#copy", "a", 1)
    assert "a#copy" in classify_vertices(quotient.base).sources


def test_quotient_graph_without_copies(breaking):
    quotient = quotient_graph(breaking, make_pair(["a"], []))
    assert quotient.copies == {}
    assert [e.id for e in quotient.base.edges] == ["l"]


def test_quotient_graph_requires_admissible_pair(breaking):
    with pytest.raises(PreconditionError):
        quotient_graph(breaking, make_pair(["c"], ["c"]))


def test_hereditary_subgraph(loop_entrance):
    result = hereditary_subgraph(loop_entrance, ["b"])
    assert result.subgraph.vertices == ("b",)
    assert result.subgraph.edges == ()
    assert result.pair == make_pair(["a"], [])
    assert "Morita equivalent" in result.note
    assert result.to_dict()['note'] == MORITA_NOTE
    assert hereditary_subgraph(loop_entrance, ["a", "b"]).subgraph == loop_entrance
    with pytest.raises(PreconditionError):
        hereditary_subgraph(loop_entrance, ["a"])


def test_cycle_lattice_is_a_chain_of_two():
    lattice = enumerate_admissible_pairs(cycle_graph(4))
    assert [p.to_dict() for p in lattice.pairs] == [
        {'X0': [], 'Z': []},
        {'X0': ["0", "1", "2", "3"], 'Z': []},
    ]


def test_restricted_classes_of_unions(omega):
    first, second = frozenset({"v", "w"}), frozenset({"v'", "w"})
    union = restricted_classification(omega, first | second)
    parts = [restricted_classification(omega, X) for X in (first, second)]
    assert union.infinite_receivers == parts[0].infinite_receivers | parts[1].infinite_receivers == {"w"}
    assert union.sources <= parts[0].sources | parts[1].sources
    assert union.singular <= parts[0].singular | parts[1].singular

import numpy as np
import pytest

from tgk.corpus import cycle_graph
from tgk.errors import BoundExceededError, InfinitePathSpaceError, PreconditionError
from tgk.graph import GraphBuilder
from tgk.lattice import make_pair
from tgk.representations import (
    EdgeCopy,
    a_sequence,
    a_sequence_closed_form,
    af_block_check,
    build_path_rep,
    commutant_dimension,
    count_paths,
    kernel_pair,
    lambda_space,
    subset_graph,
    verify_ck_pair,
)


def test_path_basis_of_single_edge(edge):
    basis = lambda_space(edge, "u")
    assert [p.label(edge) for p in basis.paths] == ["u", "e"]


def test_matrices_of_single_edge(edge):
    rep = build_path_rep(edge, "u")
    assert rep.T0["u"].tolist() == [[1, 0], [0, 0]]
    assert rep.T0["w"].tolist() == [[0, 0], [0, 1]]
    assert rep.T1[EdgeCopy("e", 0)].tolist() == [[0, 0], [1, 0]]
    assert rep.T0["u"].dtype == np.int64


def test_relations_hold_at_singular_vertex(edge):
    report = verify_ck_pair(build_path_rep(edge, "u"))
    assert report.toeplitz_ok
    assert report.cuntz_krieger_ok
    assert report.checked["c"] == 1


def test_identity_c_fails_exactly_at_regular_vertex(edge):
    report = verify_ck_pair(build_path_rep(edge, "w"))
    assert report.toeplitz_ok
    assert not report.cuntz_krieger_ok
    assert report.failing_subjects("c") == ["w"]


def test_corrupted_matrix_is_reported(edge):
    rep = build_path_rep(edge, "u")
    rep.T0["w"][1, 1] = 0
    report = verify_ck_pair(rep)
    assert "w" in report.failing_subjects("c")
    assert not report.toeplitz_ok


def test_parallel_edges_expand_into_copies():
    graph = GraphBuilder().vertices("a", "b").edge("f", "a", "b", 2).build()
    rep = build_path_rep(graph, "a")
    assert [p.label(graph) for p in rep.basis.paths] == ["a", "f[0]", "f[1]"]
    assert count_paths(graph, "a") == 3
    assert verify_ck_pair(rep).cuntz_krieger_ok


def test_kernel_pair(edge, subset2):
    assert kernel_pair(build_path_rep(edge, "u")) == make_pair(["u", "w"], ["u"])
    assert kernel_pair(build_path_rep(subset2, "{1,2}")) == make_pair(subset2.vertices, ["{1,2}"])
    with pytest.raises(PreconditionError):
        kernel_pair(build_path_rep(edge, "w"))


def test_kernel_pair_of_omega_target(omega):
    assert kernel_pair(build_path_rep(omega, "v")) == make_pair(["v", "w"], ["v"])


def test_path_count_skips_omega_edges_from_outside_the_orbit(omega):
    assert count_paths(omega, "v") == 2
    assert len(lambda_space(omega, "v")) == 2


def test_infinite_path_spaces(omega):
    with pytest.raises(InfinitePathSpaceError) as info:
        lambda_space(omega, "v'")
    assert info.value.witness == "e1"

    with pytest.raises(InfinitePathSpaceError) as info:
        lambda_space(cycle_graph(3), "0")
    assert sorted(info.value.witness) == ["e0", "e1", "e2"]


def test_basis_bound():
    with pytest.raises(BoundExceededError) as info:
        lambda_space(subset_graph(3), "{1,2,3}", max_basis=10)
    assert info.value.value == 16
    assert info.value.flag == "--max-basis"


def test_commutant_of_single_edge(edge):
    assert commutant_dimension(build_path_rep(edge, "u")) == 1
    assert commutant_dimension(build_path_rep(edge, "u"), limit=1) is None


def test_subset_graph_shape():
    graph = subset_graph(2)
    assert graph.vertices == ("{1,2}", "{1}", "{2}", "{}")
    assert [e.id for e in graph.edges] == ["(1;{1,2})", "(1;{1})", "(2;{1,2})", "(2;{2})"]
    assert graph.edge("(1;{1,2})").range == "{2}"
    assert len(subset_graph(3).edges) == 12
    assert subset_graph(0).vertices == ("{}",)


def test_subset_graph_bounds():
    with pytest.raises(PreconditionError):
        subset_graph(-1)
    with pytest.raises(BoundExceededError) as info:
        subset_graph(7)
    assert info.value.flag == "--max-subset-n"


def test_a_sequence():
    assert [a_sequence(m) for m in range(6)] == [1, 2, 5, 16, 65, 326]
    assert all(a_sequence(m) == a_sequence_closed_form(m) for m in range(10))
    with pytest.raises(PreconditionError):
        a_sequence(-1)


def test_path_counts_follow_a_sequence():
    graph = subset_graph(3)
    for v in graph.vertices:
        size = len(v.strip("{}").split(",")) if v != "{}" else 0
        assert len(lambda_space(graph, v)) == a_sequence(size)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_af_blocks(n):
    report = af_block_check(n, units_max_n=4)
    assert report.ok
    assert report.census_ok and report.multiset_ok
    assert report.units_verified == (n <= 4)
    if report.units_verified:
        assert all(block.units_ok for block in report.blocks)
    assert report.total_dimension == sum(b.size for b in report.blocks)


def test_af_block_sizes_for_two():
    report = af_block_check(2)
    assert {b.subset: b.size for b in report.blocks} == {"{}": 1, "{1}": 2, "{2}": 2, "{1,2}": 5}
    assert report.v0 == "{1,2}"
    assert all(b.literal_checked for b in report.blocks if b.size <= 5)


def test_af_units_skipped_above_limit():
    report = af_block_check(3, units_max_n=2)
    assert not report.units_verified
    assert report.ok
    assert all(b.units_ok is None for b in report.blocks)

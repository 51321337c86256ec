import io

import pytest

from tgk import corpus
from tgk.errors import BoundExceededError, GraphParseError, GraphValidationError, UnknownCorpusError
from tgk.graph import OMEGA
from tgk.io import (
    dumps,
    graph_from_dict,
    graph_from_json,
    graph_to_json,
    lattice_to_dot,
    load_graph,
    write_output,
)
from tgk.lattice import enumerate_admissible_pairs


def test_parse_graph_with_omega():
    graph = graph_from_json(
        '{"vertices": ["v", "w"],'
        ' "edges": [{"id": "e", "domain": "v", "range": "w", "multiplicity": "omega"}]}'
    )
    assert graph.edge("e").multiplicity is OMEGA


def test_multiplicity_defaults_to_one():
    graph = graph_from_dict({"vertices": ["u", "w"], "edges": [{"id": "e", "domain": "u", "range": "w"}]})
    assert graph.edge("e").multiplicity == 1


def test_corpus_graphs_survive_json(omega, breaking, subset2):
    for graph in (omega, breaking, subset2):
        assert graph_from_json(graph_to_json(graph)) == graph


def test_syntax_errors_carry_position():
    with pytest.raises(GraphParseError) as info:
        graph_from_json('{\n  "vertices": [\n')
    assert info.value.line is not None
    assert "line" in str(info.value)


@pytest.mark.parametrize("document", [
    [],
    {"edges": []},
    {"vertices": ["a"], "edges": {}},
    {"vertices": ["a"], "edges": [{"id": "e", "domain": "a"}]},
    {"vertices": ["a"], "edges": [{"id": "e", "domain": "a", "range": "a", "multiplicity": "many"}]},
])
def test_schema_errors(document):
    with pytest.raises(GraphParseError):
        graph_from_dict(document)


def test_validation_errors_pass_through():
    with pytest.raises(GraphValidationError):
        graph_from_dict({"vertices": ["a"], "edges": [{"id": "e", "domain": "a", "range": "b"}]})
    with pytest.raises(GraphValidationError):
        graph_from_dict({"vertices": ["a"], "edges": [{"id": "e", "domain": "a", "range": "a", "multiplicity": 0}]})


def test_dumps_is_canonical():
    text = dumps({'b': 1, 'a': "ω"})
    assert text == '{\n  "a": "ω",\n  "b": 1\n}\n'


def test_load_graph_sources(tmp_path, edge):
    path = tmp_path / "graph.json"
    path.write_text(graph_to_json(edge), encoding="utf-8")
    assert load_graph(str(path)) == edge
    assert load_graph("-", stdin=io.StringIO(graph_to_json(edge))) == edge
    assert load_graph(corpus_name="edge") == edge


def test_load_graph_needs_exactly_one_source(tmp_path):
    with pytest.raises(GraphParseError):
        load_graph()
    with pytest.raises(GraphParseError):
        load_graph("graph.json", "edge")
    with pytest.raises(GraphParseError):
        load_graph(str(tmp_path / "missing.json"))


def test_unknown_corpus_names():
    with pytest.raises(UnknownCorpusError):
        load_graph(corpus_name="nope")
    with pytest.raises(UnknownCorpusError):
        corpus.load("cycle:x")
    with pytest.raises(UnknownCorpusError):
        corpus.load("cycle")


def test_corpus_arguments_are_checked():
    with pytest.raises(UnknownCorpusError, match="takes no argument"):
        corpus.load("edge:1")
    with pytest.raises(UnknownCorpusError, match="needs an argument"):
        corpus.load("subset")


def test_subset_corpus_respects_bound():
    with pytest.raises(BoundExceededError) as info:
        load_graph(corpus_name="subset:7")
    assert info.value.flag == "--max-subset-n"
    assert len(load_graph(corpus_name="subset:7", max_subset_n=7).vertices) == 128


def test_corpus_names_resolve():
    for name in corpus.EXAMPLE_NAMES:
        assert corpus.load(name).vertices


def test_write_output(tmp_path):
    target = tmp_path / "out.json"
    write_output("ω\n", str(target))
    assert target.read_bytes() == "ω\n".encode("utf-8")
    stream = io.StringIO()
    write_output("text", stream=stream)
    assert stream.getvalue() == "text"


def test_lattice_dot(cycle3):
    source = lattice_to_dot(enumerate_admissible_pairs(cycle3))
    assert source.startswith("digraph ideals {")
    assert "p0" in source and "p1" in source
    assert "p1 -> p0" in source
    assert "shape=box" in source

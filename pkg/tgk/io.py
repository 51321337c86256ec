"""
Graph JSON, canonical report serialization and DOT export

Graph files look like::

    {"vertices": ["u", "w"],
     "edges": [{"id": "e", "domain": "u", "range": "w", "multiplicity": 1}]}

with "omega" as the infinite multiplicity; "multiplicity" defaults to 1.
"""

import json
import logging
import sys
from pathlib import Path as FilePath
from typing import Any, Dict, Optional, TextIO

import graphviz

from . import corpus
from .errors import GraphParseError
from .graph import OMEGA, DiscreteGraph, EdgeClass, multiplicity_value
from .lattice import IdealLattice

logger = logging.getLogger(__name__)


def _parse_multiplicity(value: Any, edge_id: str):
    if value == "omega":
        return OMEGA
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphParseError(f"edge {edge_id!r}: multiplicity must be a positive integer or \"omega\"")
    return value


def graph_from_dict(data: Any) -> DiscreteGraph:
    """
    Build and validate a graph from parsed JSON

    Raises:
        GraphParseError: If the document does not follow the schema
        GraphValidationError: If the graph violates its invariants
    """
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise GraphParseError("graph document needs a \"vertices\" list")
    edges_data = data.get("edges", [])
    if not isinstance(edges_data, list):
        raise GraphParseError("\"edges\" must be a list")

    edges = []
    for position, item in enumerate(edges_data):
        if not isinstance(item, dict):
            raise GraphParseError(f"edge #{position} must be an object")
        missing = [key for key in ("id", "domain", "range") if key not in item]
        if missing:
            raise GraphParseError(f"edge #{position} is missing {', '.join(missing)}")
        edge_id = item["id"]
        multiplicity = _parse_multiplicity(item.get("multiplicity", 1), edge_id)
        edges.append(EdgeClass(edge_id, item["domain"], item["range"], multiplicity))
    return DiscreteGraph.build(data["vertices"], edges)


def graph_from_json(text: str) -> DiscreteGraph:
    """Parse graph JSON text; syntax errors carry line and column"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise GraphParseError(f"invalid JSON: {error.msg}", error.lineno, error.colno) from None
    return graph_from_dict(data)


def graph_to_dict(graph: DiscreteGraph) -> Dict[str, Any]:
    return {
        'vertices': list(graph.vertices),
        'edges': [
            {
                'id': e.id,
                'domain': e.domain,
                'range': e.range,
                'multiplicity': multiplicity_value(e.multiplicity),
            }
            for e in graph.edges
        ],
    }


def dumps(data: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, UTF-8 text, final newline"""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def graph_to_json(graph: DiscreteGraph) -> str:
    return dumps(graph_to_dict(graph))


def load_graph(
    path: Optional[str] = None,
    corpus_name: Optional[str] = None,
    stdin: Optional[TextIO] = None,
    max_subset_n: int = 6,
) -> DiscreteGraph:
    """
    Load a graph from a file, from stdin ("-"), or from the corpus

    max_subset_n bounds the ground set of "subset:N" corpus graphs.

    Raises:
        GraphParseError: If neither or both sources are given, or parsing fails
        UnknownCorpusError: If the corpus name is unknown
    """
    if (path is None) == (corpus_name is None):
        raise GraphParseError("give exactly one of an input file or --corpus")
    if corpus_name is not None:
        logger.info("loading corpus graph %s", corpus_name)
        return corpus.load(corpus_name, max_subset_n)
    if path == "-":
        return graph_from_json((stdin or sys.stdin).read())
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as error:
        raise GraphParseError(f"cannot read {path}: {error.strerror}") from None
    logger.info("loaded graph file %s", path)
    return graph_from_json(text)


def write_output(text: str, out: Optional[str] = None, stream: Optional[TextIO] = None):
    """Write text to out (UTF-8, LF) or to stream / stdout"""
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info("wrote %s", out)
    else:
        (stream or sys.stdout).write(text)


def lattice_to_dot(lattice: IdealLattice, name: str = "ideals") -> str:
    """
    Hasse diagram of the ideal order as DOT source

    Nodes are labelled "X0 | Z"; edges run from the smaller to the larger
    ideal, so the zero ideal (the top pair) is drawn at the top.
    """
    dot = graphviz.Digraph(name=name)
    dot.attr("node", shape="box")
    for i, pair in enumerate(lattice.pairs):
        dot.node(f"p{i}", pair.label())
    for smaller, larger in lattice.ideal_hasse:
        dot.edge(f"p{smaller}", f"p{larger}")
    return dot.source

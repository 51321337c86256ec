"""
Finitely presented discrete graphs

A graph E = (E^0, E^1, d, r) has a finite vertex set and a finite set of
edge classes. Every edge class e points from its domain d(e) to its range
r(e) and carries a multiplicity: a positive integer, or OMEGA for a
countably infinite family of parallel edges.

Paths compose right-to-left: a path (e_1, ..., e_n) satisfies
d(e_k) = r(e_{k+1}), its range is r(e_1) and its domain is d(e_n). Walking
along the edge flow therefore visits e_n first and e_1 last.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from .errors import GraphValidationError, PreconditionError
from .utils import VertexSet

logger = logging.getLogger(__name__)


class Omega(Enum):
    """Symbolic infinite multiplicity"""
    OMEGA = "omega"

    def __str__(self) -> str:
        return "ω"


OMEGA = Omega.OMEGA
Multiplicity = Union[int, Omega]


def multiply(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    """Product of multiplicities, OMEGA absorbing"""
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a * b


@dataclass(frozen=True)
class EdgeClass:
    """A class of parallel edges from domain to range"""
    id: str
    domain: str
    range: str
    multiplicity: Multiplicity = 1

    @property
    def is_omega(self) -> bool:
        return self.multiplicity is OMEGA


@dataclass(frozen=True)
class DiscreteGraph:
    """
    Finite discrete graph with edge multiplicities

    Vertices and edges are kept in canonical (lexicographic) order. Use
    DiscreteGraph.build or GraphBuilder to obtain a validated instance.

    Example:
        >>> g = DiscreteGraph.build(["u", "w"], [EdgeClass("e", "u", "w")])
        >>> g.in_edges["w"][0].id
        'e'
    """
    vertices: Tuple[str, ...] = ()
    edges: Tuple[EdgeClass, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=str)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: str(e.id))))

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[EdgeClass] = ()) -> "DiscreteGraph":
        """Construct and validate a graph"""
        graph = cls(tuple(vertices), tuple(edges))
        validate(graph)
        return graph

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def edge_map(self) -> Dict[str, EdgeClass]:
        return {e.id: e for e in self.edges}

    @cached_property
    def in_edges(self) -> Dict[str, Tuple[EdgeClass, ...]]:
        """Edge classes grouped by range vertex (r^{-1})"""
        grouped: Dict[str, List[EdgeClass]] = {v: [] for v in self.vertices}
        for e in self.edges:
            grouped.setdefault(e.range, []).append(e)
        return {v: tuple(es) for v, es in grouped.items()}

    @cached_property
    def out_edges(self) -> Dict[str, Tuple[EdgeClass, ...]]:
        """Edge classes grouped by domain vertex (d^{-1})"""
        grouped: Dict[str, List[EdgeClass]] = {v: [] for v in self.vertices}
        for e in self.edges:
            grouped.setdefault(e.domain, []).append(e)
        return {v: tuple(es) for v, es in grouped.items()}

    def edge(self, edge_id: str) -> EdgeClass:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise PreconditionError(f"unknown edge {edge_id!r}") from None

    def require_vertices(self, members: Iterable[str]) -> VertexSet:
        """Return members as a VertexSet, rejecting unknown vertices"""
        members = frozenset(members)
        unknown = members - self.vertex_set
        if unknown:
            raise PreconditionError(f"unknown vertices: {sorted(unknown)}")
        return members

    def digraph(self) -> nx.DiGraph:
        """Simple directed graph along the edge flow d(e) -> r(e)"""
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((e.domain, e.range) for e in self.edges)
        return g


def validate(graph: DiscreteGraph) -> None:
    """
    Check the type invariants of a graph

    Args:
        graph: Graph to check

    Raises:
        GraphValidationError: Listing every dangling endpoint, duplicate id
            and invalid multiplicity found
    """
    problems: List[str] = []
    seen = set()
    for v in graph.vertices:
        if not isinstance(v, str) or not v:
            problems.append(f"invalid vertex id {v!r}")
        elif v in seen:
            problems.append(f"duplicate id: vertex {v!r}")
        seen.add(v)

    edge_ids = set()
    for e in graph.edges:
        if not isinstance(e.id, str) or not e.id:
            problems.append(f"invalid edge id {e.id!r}")
        elif e.id in edge_ids:
            problems.append(f"duplicate id: edge {e.id!r}")
        edge_ids.add(e.id)
        for end_name, end in (("domain", e.domain), ("range", e.range)):
            if end not in seen:
                problems.append(f"dangling endpoint: edge {e.id!r} {end_name} {end!r}")
        m = e.multiplicity
        if m is not OMEGA and (isinstance(m, bool) or not isinstance(m, int) or m < 1):
            problems.append(f"invalid multiplicity: edge {e.id!r} has {m!r}")

    if problems:
        raise GraphValidationError(problems)
    logger.debug("validated graph with %d vertices, %d edge classes",
                 len(graph.vertices), len(graph.edges))


@dataclass(frozen=True)
class VertexClassification:
    """Partition of E^0 into sources, infinite receivers, regular, singular"""
    sources: VertexSet
    infinite_receivers: VertexSet
    finite: VertexSet
    regular: VertexSet
    singular: VertexSet

    def to_dict(self) -> Dict[str, List[str]]:
        return {
            'sources': sorted(self.sources),
            'infinite_receivers': sorted(self.infinite_receivers),
            'finite': sorted(self.finite),
            'regular': sorted(self.regular),
            'singular': sorted(self.singular),
        }


def classify_vertices(graph: DiscreteGraph) -> VertexClassification:
    """
    Classify vertices of a validated graph

    A source receives no edge class, an infinite receiver receives an OMEGA
    class, and a regular vertex receives at least one class, all finite.

    Args:
        graph: Validated graph

    Returns:
        VertexClassification
    """
    sources = frozenset(v for v in graph.vertices if not graph.in_edges[v])
    infinite = frozenset(
        v for v in graph.vertices if any(e.is_omega for e in graph.in_edges[v])
    )
    finite = graph.vertex_set - infinite
    singular = sources | infinite
    return VertexClassification(
        sources=sources,
        infinite_receivers=infinite,
        finite=finite,
        regular=graph.vertex_set - singular,
        singular=singular,
    )


def is_row_finite(graph: DiscreteGraph) -> bool:
    """True iff r(E^1) equals the regular vertex set"""
    receivers = frozenset(e.range for e in graph.edges)
    return receivers == classify_vertices(graph).regular


@dataclass(frozen=True)
class Path:
    """
    Finite path (e_1, ..., e_n) with d(e_k) = r(e_{k+1})

    A path of length 0 is a single vertex, with range == domain.
    """
    edges: Tuple[str, ...]
    range: str
    domain: str
    multiplicity: Multiplicity = 1

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex, vertex, 1)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_loop(self) -> bool:
        return bool(self.edges) and self.range == self.domain

    def vertices(self, graph: DiscreteGraph) -> Tuple[str, ...]:
        """Vertices r(e_1), d(e_1), ..., d(e_n) in path order"""
        if not self.edges:
            return (self.range,)
        return (self.range,) + tuple(graph.edge(eid).domain for eid in self.edges)

    def to_dict(self) -> Dict[str, object]:
        return {
            'edges': list(self.edges),
            'range': self.range,
            'domain': self.domain,
            'multiplicity': multiplicity_value(self.multiplicity),
        }


def multiplicity_value(m: Multiplicity):
    return "omega" if m is OMEGA else m


def path_from_edges(graph: DiscreteGraph, edge_ids: Sequence[str]) -> Path:
    """
    Build a Path from edge ids in composition order (e_1 first, applied last)

    Raises:
        PreconditionError: If an id is unknown or consecutive edges do not
            compose
    """
    if not edge_ids:
        raise PreconditionError("a path needs at least one edge; use Path.trivial")
    edges = [graph.edge(eid) for eid in edge_ids]
    for k in range(len(edges) - 1):
        if edges[k].domain != edges[k + 1].range:
            raise PreconditionError(
                f"edges {edges[k].id!r} and {edges[k + 1].id!r} do not compose"
            )
    multiplicity: Multiplicity = 1
    for e in edges:
        multiplicity = multiply(multiplicity, e.multiplicity)
    return Path(tuple(edge_ids), edges[0].range, edges[-1].domain, multiplicity)


@dataclass(frozen=True)
class Lasso:
    """Eventually periodic infinite path (stem, cycle, cycle, ...)"""
    stem: Path
    cycle: Path

    def __post_init__(self):
        if not self.cycle.is_loop:
            raise ValueError("lasso cycle must be a loop")
        if self.stem.domain != self.cycle.range:
            raise ValueError("lasso stem must end where the cycle is based")

    @property
    def range(self) -> str:
        return self.stem.range

    def to_dict(self) -> Dict[str, object]:
        return {'stem': self.stem.to_dict(), 'cycle': self.cycle.to_dict()}


def paths_between(graph: DiscreteGraph, start: str, end: str, max_len: int) -> List[Path]:
    """
    All paths with domain start and range end of length <= max_len

    Args:
        graph: Validated graph
        start: Domain vertex (where the edge flow begins)
        end: Range vertex (where the edge flow ends)
        max_len: Maximal length, >= 0

    Returns:
        Paths in canonical order (by length, then edge ids), each carrying
        the product of its edge multiplicities
    """
    if max_len < 0:
        raise PreconditionError("max_len must be >= 0")
    graph.require_vertices([start, end])
    found: List[Path] = []

    # flow holds edges in traversal order e_n, ..., e_1
    def walk(vertex: str, flow: List[EdgeClass]):
        if vertex == end:
            if flow:
                found.append(path_from_edges(graph, [e.id for e in reversed(flow)]))
            else:
                found.append(Path.trivial(vertex))
        if len(flow) == max_len:
            return
        for e in graph.out_edges[vertex]:
            flow.append(e)
            walk(e.range, flow)
            flow.pop()

    walk(start, [])
    found.sort(key=lambda p: (p.length, p.edges))
    return found


def simple_loops(graph: DiscreteGraph) -> List[Path]:
    """
    All simple loops, one per cyclic rotation class

    A loop is simple when the ranges r(e_i) are pairwise distinct. Each loop
    is reported with base point r(e_1) equal to its smallest vertex id;
    parallel edge classes give distinct loops.
    """
    loops: List[Path] = []
    for cycle in nx.simple_cycles(graph.digraph()):
        base = cycle.index(min(cycle))
        flow_vertices = cycle[base:] + cycle[:base]
        steps = []
        for i, u in enumerate(flow_vertices):
            v = flow_vertices[(i + 1) % len(flow_vertices)]
            steps.append([e for e in graph.out_edges[u] if e.range == v])
        for choice in product(*steps):
            loops.append(path_from_edges(graph, [e.id for e in reversed(choice)]))
    loops.sort(key=lambda p: (p.range, p.length, p.edges))
    return loops


def loop_without_entrances(graph: DiscreteGraph, loop: Path) -> bool:
    """
    True iff every l_k has multiplicity 1 and r^{-1}(r(l_k)) = {l_k}

    Raises:
        PreconditionError: If loop is not a loop of graph
    """
    if not loop.is_loop:
        raise PreconditionError("input is not a loop")
    path_from_edges(graph, loop.edges)
    for eid in loop.edges:
        e = graph.edge(eid)
        if e.multiplicity != 1:
            return False
        if graph.in_edges[e.range] != (e,):
            return False
    return True


def restrict(graph: DiscreteGraph, X0: Iterable[str]) -> DiscreteGraph:
    """
    Restriction X = (X^0, d^{-1}(X^0), d, r) to a positively invariant set

    Raises:
        PreconditionError: If X0 is not positively invariant
    """
    # Import here to avoid circular imports
    from .closures import is_positively_invariant

    X0 = graph.require_vertices(X0)
    if not is_positively_invariant(graph, X0):
        raise PreconditionError(f"{sorted(X0)} is not positively invariant")
    edges = tuple(e for e in graph.edges if e.domain in X0)
    return DiscreteGraph(tuple(v for v in graph.vertices if v in X0), edges)


def restricted_classification(graph: DiscreteGraph, X0: Iterable[str]) -> VertexClassification:
    """Vertex classification of the restriction to X0"""
    return classify_vertices(restrict(graph, X0))


class GraphBuilder:
    """
    Fluent interface for building graphs

    Example:
        >>> g = (GraphBuilder()
        ...      .vertices("v", "v'", "w")
        ...      .edge("e0", "v", "w")
        ...      .edge("e1", "v'", "w", OMEGA)
        ...      .build())
    """

    def __init__(self):
        self._vertices: List[str] = []
        self._edges: List[EdgeClass] = []

    def vertex(self, vertex_id: str):
        self._vertices.append(vertex_id)
        return self

    def vertices(self, *vertex_ids: str):
        self._vertices.extend(vertex_ids)
        return self

    def edge(self, edge_id: str, domain: str, range_: str, multiplicity: Multiplicity = 1):
        """Add an edge class from domain to range_"""
        self._edges.append(EdgeClass(edge_id, domain, range_, multiplicity))
        return self

    def build(self) -> DiscreteGraph:
        """Validate and return the graph"""
        return DiscreteGraph.build(self._vertices, self._edges)

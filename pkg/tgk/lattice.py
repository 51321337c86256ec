"""
Admissible pairs and the gauge-invariant ideal lattice

A pair (X0, Z) is admissible when X0 is invariant and
X0_sg ⊆ Z ⊆ E^0_sg ∩ X0, with X0_sg taken in the restriction to X0.
Admissible pairs correspond to gauge-invariant ideals, reversing inclusion:
the bottom pair (∅, ∅) is the whole algebra and the top pair
(E^0, E^0_sg) is the zero ideal.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from .closures import (
    enumerate_invariant_sets,
    hereditary_closure,
    is_hereditary,
    is_invariant,
    saturated_closure,
)
from .errors import ConsistencyError, PreconditionError
from .graph import (
    DiscreteGraph,
    EdgeClass,
    classify_vertices,
    is_row_finite,
    restricted_classification,
)
from .utils import VertexSet, format_vertex_set, graded_subsets

logger = logging.getLogger(__name__)

COPY_SUFFIX = "#copy"

# largest lattice whose covers are re-derived with nx.transitive_reduction
REDUCTION_CHECK_LIMIT = 256

MORITA_NOTE = (
    "The hereditary subgraph F generates the ideal of this pair; its algebra is "
    "a hereditary full subalgebra of that ideal, so the two are Morita "
    "equivalent. Not verified computationally."
)


@dataclass(frozen=True)
class AdmissiblePair:
    X0: VertexSet
    Z: VertexSet

    def contains(self, other: "AdmissiblePair") -> bool:
        """other ⊆ self componentwise"""
        return other.X0 <= self.X0 and other.Z <= self.Z

    def sort_key(self):
        return (len(self.X0), tuple(sorted(self.X0)), len(self.Z), tuple(sorted(self.Z)))

    def label(self) -> str:
        """Node label "X0 | Z" """
        return f"{format_vertex_set(self.X0)} | {format_vertex_set(self.Z)}"

    def to_dict(self) -> Dict[str, List[str]]:
        return {'X0': sorted(self.X0), 'Z': sorted(self.Z)}


def make_pair(X0: Iterable[str], Z: Iterable[str]) -> AdmissiblePair:
    return AdmissiblePair(frozenset(X0), frozenset(Z))


@dataclass
class IdealLattice:
    """
    Admissible pairs in graded lexicographic order with their order relations

    upsets[i] is a bitset of the indices j with pairs[i] ⊊ pairs[j]; hasse
    holds the covering relations of the pair order and ideal_hasse the same
    covers reversed, i.e. (i, j) where ideal i is contained in ideal j.
    """
    pairs: List[AdmissiblePair]
    hasse: List[Tuple[int, int]] = field(default_factory=list)
    invariant_sets: List[VertexSet] = field(default_factory=list)
    upsets: List[int] = field(default_factory=list, repr=False)

    def is_below(self, i: int, j: int) -> bool:
        """pairs[i] ⊊ pairs[j]"""
        return bool(self.upsets[i] >> j & 1)

    @property
    def order(self) -> Iterator[Tuple[int, int]]:
        """Every strict relation (i, j), generated on demand"""
        for i, bits in enumerate(self.upsets):
            yield from ((i, j) for j in _indices(bits))

    @property
    def ideal_hasse(self) -> List[Tuple[int, int]]:
        return sorted((j, i) for i, j in self.hasse)

    @property
    def bottom(self) -> AdmissiblePair:
        """(∅, ∅), the whole algebra"""
        return self.pairs[0]

    @property
    def top(self) -> AdmissiblePair:
        """(E^0, E^0_sg), the zero ideal"""
        return self.pairs[-1]

    def index(self, pair: AdmissiblePair) -> int:
        return self.pairs.index(pair)

    def __len__(self) -> int:
        return len(self.pairs)

    def to_dict(self) -> Dict[str, object]:
        return {
            'count': len(self.pairs),
            'pairs': [p.to_dict() for p in self.pairs],
            'pair_order_hasse': [list(edge) for edge in self.hasse],
            'ideal_order_hasse': [list(edge) for edge in self.ideal_hasse],
        }


def restricted_singular(graph: DiscreteGraph, X0: Iterable[str]) -> VertexSet:
    """X0_sg: singular vertices of the restriction to a positively invariant X0"""
    return restricted_classification(graph, X0).singular


def is_admissible(graph: DiscreteGraph, X0: Iterable[str], Z: Iterable[str]) -> bool:
    """Invariance of X0 and the sandwich X0_sg ⊆ Z ⊆ E^0_sg ∩ X0"""
    X0, Z = frozenset(X0), frozenset(Z)
    if not X0 <= graph.vertex_set or not is_invariant(graph, X0):
        return False
    upper = classify_vertices(graph).singular & X0
    return restricted_singular(graph, X0) <= Z <= upper


def _require_admissible(graph: DiscreteGraph, pair: AdmissiblePair):
    if not is_admissible(graph, pair.X0, pair.Z):
        raise PreconditionError(f"pair ({format_vertex_set(pair.X0)}, {format_vertex_set(pair.Z)}) is not admissible")


def pair_union(graph: DiscreteGraph, first: AdmissiblePair, second: AdmissiblePair) -> AdmissiblePair:
    """
    Componentwise union, the pair of the intersection of the two ideals

    Raises:
        PreconditionError: If either input is not admissible
        ConsistencyError: If the union fails the admissibility check
    """
    _require_admissible(graph, first)
    _require_admissible(graph, second)
    union = AdmissiblePair(first.X0 | second.X0, first.Z | second.Z)
    if not is_admissible(graph, union.X0, union.Z):
        raise ConsistencyError(f"union {union.to_dict()} is not admissible")
    return union


def pairs_over(graph: DiscreteGraph, X0: VertexSet) -> List[AdmissiblePair]:
    """Every admissible pair with first component X0 (an invariant set)"""
    lower = restricted_singular(graph, X0)
    upper = classify_vertices(graph).singular & X0
    if not lower <= upper:
        raise ConsistencyError(f"X0_sg not inside E^0_sg ∩ X0 for X0 = {sorted(X0)}")
    return [AdmissiblePair(X0, lower | gap) for gap in graded_subsets(upper - lower)]


def _indices(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _upsets(graph: DiscreteGraph, pairs: List[AdmissiblePair]) -> List[int]:
    """Bitset of strict upper bounds for every pair, intersected vertex by vertex"""
    everything = (1 << len(pairs)) - 1
    in_X0 = {v: 0 for v in graph.vertices}
    in_Z = {v: 0 for v in graph.vertices}
    for j, pair in enumerate(pairs):
        for v in pair.X0:
            in_X0[v] |= 1 << j
        for v in pair.Z:
            in_Z[v] |= 1 << j
    upsets = []
    for i, pair in enumerate(pairs):
        bits = everything
        for v in pair.X0:
            bits &= in_X0[v]
        for v in pair.Z:
            bits &= in_Z[v]
        upsets.append(bits & ~(1 << i))
    return upsets


def _covers(upsets: List[int]) -> List[Tuple[int, int]]:
    """(i, j) with j minimal among the strict upper bounds of i"""
    covers = []
    for i, bits in enumerate(upsets):
        above = 0
        for k in _indices(bits):
            above |= upsets[k]
        covers.extend((i, j) for j in _indices(bits & ~above))
    return covers


def enumerate_admissible_pairs(
    graph: DiscreteGraph,
    max_vertices: int = 16,
    parallel: bool = False,
    cross_check: bool = True,
    invariant_sets: Optional[List[VertexSet]] = None,
) -> IdealLattice:
    """
    Build the lattice of admissible pairs

    For each invariant X0 every Z in the interval [X0_sg, E^0_sg ∩ X0] is
    taken; the gap vertices are independent binary choices.

    Args:
        graph: Validated graph
        max_vertices: Bound for the invariant-set enumeration
        parallel: Expand the intervals in a thread pool
        cross_check: Re-verify admissibility of every generated pair
        invariant_sets: Precomputed enumerate_invariant_sets output

    Raises:
        BoundExceededError: If the graph has more than max_vertices vertices
    """
    family = invariant_sets if invariant_sets is not None else enumerate_invariant_sets(graph, max_vertices)

    if parallel and len(family) > 1:
        with ThreadPoolExecutor() as executor:
            chunks = list(executor.map(lambda X0: pairs_over(graph, X0), family))
    else:
        chunks = [pairs_over(graph, X0) for X0 in family]

    pairs = sorted((p for chunk in chunks for p in chunk), key=AdmissiblePair.sort_key)
    if cross_check:
        for pair in pairs:
            if not is_admissible(graph, pair.X0, pair.Z):
                raise ConsistencyError(f"generated pair {pair.to_dict()} is not admissible")

    upsets = _upsets(graph, pairs)
    hasse = _covers(upsets)
    if cross_check and len(pairs) <= REDUCTION_CHECK_LIMIT:
        poset = nx.DiGraph()
        poset.add_nodes_from(range(len(pairs)))
        poset.add_edges_from((i, j) for i, bits in enumerate(upsets) for j in _indices(bits))
        if sorted(nx.transitive_reduction(poset).edges()) != hasse:
            raise ConsistencyError("covering relations differ from the transitive reduction")

    logger.info("lattice: %d invariant sets, %d admissible pairs", len(family), len(pairs))
    return IdealLattice(pairs=pairs, hasse=hasse, invariant_sets=list(family), upsets=upsets)


def row_finite_bijection_check(graph: DiscreteGraph, max_vertices: int = 16) -> bool:
    """
    True iff every invariant X0 admits exactly one Z

    Raises:
        PreconditionError: If the graph is not row-finite
    """
    if not is_row_finite(graph):
        raise PreconditionError("graph is not row-finite")
    singular = classify_vertices(graph).singular
    return all(
        restricted_singular(graph, X0) == singular & X0
        for X0 in enumerate_invariant_sets(graph, max_vertices)
    )


def ideal_generated_by(graph: DiscreteGraph, V: Iterable[str]) -> AdmissiblePair:
    """Pair (E^0 \\ S(H(V)), E^0_sg \\ S(H(V))) of the ideal generated by V"""
    closure = saturated_closure(graph, hereditary_closure(graph, V))
    singular = classify_vertices(graph).singular
    return AdmissiblePair(graph.vertex_set - closure, singular - closure)


@dataclass(frozen=True)
class QuotientGraph:
    """
    E_rho with the copy maps for duplicated vertices and edges

    Every copied vertex is a source of base.
    """
    base: DiscreteGraph
    copies: Dict[str, str]
    edge_copies: Dict[str, str]


def quotient_graph(graph: DiscreteGraph, pair: AdmissiblePair) -> QuotientGraph:
    """
    E_rho for an admissible pair

    With Y = Z ∩ X0_rg, vertices are X0 plus a copy of each vertex of Y and
    edges are the restriction's edges plus a copy of each edge with domain
    in Y; a copied edge starts at the copied domain and keeps its range and
    multiplicity.

    Raises:
        PreconditionError: If the pair is not admissible or a copy id clashes
    """
    _require_admissible(graph, pair)
    Y = pair.Z & restricted_classification(graph, pair.X0).regular
    kept = [e for e in graph.edges if e.domain in pair.X0]

    copies = {v: v + COPY_SUFFIX for v in sorted(Y)}
    edge_copies = {e.id: e.id + COPY_SUFFIX for e in kept if e.domain in Y}
    clashes = (set(copies.values()) & graph.vertex_set) | (set(edge_copies.values()) & set(graph.edge_map))
    if clashes:
        raise PreconditionError(f"copy ids clash with existing ids: {sorted(clashes)}")

    duplicated = [
        EdgeClass(edge_copies[e.id], copies[e.domain], e.range, e.multiplicity)
        for e in kept if e.id in edge_copies
    ]
    vertices = [v for v in graph.vertices if v in pair.X0] + list(copies.values())
    base = DiscreteGraph.build(vertices, kept + duplicated)
    logger.debug("quotient graph: %d copied vertices, %d copied edges", len(copies), len(edge_copies))
    return QuotientGraph(base=base, copies=copies, edge_copies=edge_copies)


@dataclass(frozen=True)
class HereditarySubgraph:
    """Subgraph F on a hereditary F0 with the pair of the ideal it generates"""
    subgraph: DiscreteGraph
    pair: AdmissiblePair
    note: str = MORITA_NOTE

    def to_dict(self) -> Dict[str, object]:
        return {
            'vertices': list(self.subgraph.vertices),
            'edges': [e.id for e in self.subgraph.edges],
            'pair': self.pair.to_dict(),
            'note': self.note,
        }


def hereditary_subgraph(graph: DiscreteGraph, F0: Iterable[str]) -> HereditarySubgraph:
    """
    Subgraph F = (F0, r^{-1}(F0)) and the pair of the ideal it generates

    Raises:
        PreconditionError: If F0 is not hereditary
    """
    F0 = graph.require_vertices(F0)
    if not is_hereditary(graph, F0):
        raise PreconditionError(f"{sorted(F0)} is not hereditary")
    edges = [e for e in graph.edges if e.range in F0]
    subgraph = DiscreteGraph.build([v for v in graph.vertices if v in F0], edges)
    return HereditarySubgraph(subgraph, ideal_generated_by(graph, F0))

"""
Hereditary and saturated sets, closures and invariance

Complementation ties the two families together: X is positively invariant
iff E^0 \\ X is hereditary, and negatively invariant iff E^0 \\ X is
saturated.
"""

import logging
from typing import Iterable, List, Tuple

import networkx as nx

from .errors import BoundExceededError, ConsistencyError
from .graph import DiscreteGraph, classify_vertices, restricted_classification
from .utils import VertexSet, graded_key

logger = logging.getLogger(__name__)


def is_positively_invariant(graph: DiscreteGraph, X: Iterable[str]) -> bool:
    """True iff every edge class with domain in X has range in X"""
    X = frozenset(X)
    return all(e.range in X for e in graph.edges if e.domain in X)


def is_negatively_invariant(graph: DiscreteGraph, X: Iterable[str], cross_check: bool = False) -> bool:
    """
    True iff every regular vertex of X receives an edge class from X

    Args:
        graph: Validated graph
        X: Vertex set
        cross_check: When X is positively invariant, compare with the two
            equivalent conditions of negative_invariance_conditions

    Raises:
        ConsistencyError: If cross_check is set and the conditions disagree
    """
    X = frozenset(X)
    regular = classify_vertices(graph).regular
    result = all(
        any(e.domain in X for e in graph.in_edges[v])
        for v in X if v in regular
    )
    if cross_check and is_positively_invariant(graph, X):
        conditions = negative_invariance_conditions(graph, X)
        if len(set(conditions)) != 1 or conditions[0] != result:
            raise ConsistencyError(f"negative invariance conditions disagree on {sorted(X)}: {conditions}")
    return result


def negative_invariance_conditions(graph: DiscreteGraph, X: Iterable[str]) -> Tuple[bool, bool, bool]:
    """
    Three equivalent forms of negative invariance for positively invariant X

    Returns:
        (X negatively invariant, X_sce disjoint from E_rg, X_sg inside E_sg),
        the sources and singular vertices computed in the restriction to X
    """
    X = frozenset(X)
    whole = classify_vertices(graph)
    restricted = restricted_classification(graph, X)
    negatively = all(
        any(e.domain in X for e in graph.in_edges[v])
        for v in X if v in whole.regular
    )
    return (
        negatively,
        not (restricted.sources & whole.regular),
        restricted.singular <= whole.singular,
    )


def is_invariant(graph: DiscreteGraph, X: Iterable[str]) -> bool:
    """Positively and negatively invariant"""
    X = frozenset(X)
    return is_positively_invariant(graph, X) and is_negatively_invariant(graph, X)


def is_hereditary(graph: DiscreteGraph, V: Iterable[str]) -> bool:
    """True iff every edge class with range in V has domain in V"""
    V = frozenset(V)
    return all(e.domain in V for e in graph.edges if e.range in V)


def is_saturated(graph: DiscreteGraph, V: Iterable[str]) -> bool:
    """True iff every regular vertex whose in-edge domains lie in V is in V"""
    V = frozenset(V)
    regular = classify_vertices(graph).regular
    return not any(
        v not in V and all(e.domain in V for e in graph.in_edges[v])
        for v in regular
    )


def hereditary_closure(graph: DiscreteGraph, V: Iterable[str]) -> VertexSet:
    """
    H(V): smallest hereditary set containing V

    Every vertex from which V is reachable along the edge flow.
    """
    V = graph.require_vertices(V)
    flow = graph.digraph()
    closure = set(V)
    for v in V:
        closure |= nx.ancestors(flow, v)
    return frozenset(closure)


def saturated_closure(graph: DiscreteGraph, V: Iterable[str]) -> VertexSet:
    """
    S(V): smallest saturated set containing V

    Iterates V_{k+1} = V_k ∪ {v regular : d(r^{-1}(v)) ⊆ V_k} until it
    stabilizes, which takes at most |E^0| rounds.
    """
    current = set(graph.require_vertices(V))
    regular = classify_vertices(graph).regular
    rounds = 0
    while True:
        added = {
            v for v in regular
            if v not in current and all(e.domain in current for e in graph.in_edges[v])
        }
        if not added:
            break
        current |= added
        rounds += 1
    logger.debug("saturated closure stabilized after %d rounds", rounds)
    return frozenset(current)


def largest_invariant_avoiding(graph: DiscreteGraph, V: Iterable[str]) -> VertexSet:
    """Largest invariant set disjoint from V, computed as E^0 \\ S(H(V))"""
    return graph.vertex_set - saturated_closure(graph, hereditary_closure(graph, V))


def enumerate_invariant_sets(graph: DiscreteGraph, max_vertices: int = 16) -> List[VertexSet]:
    """
    All invariant subsets of E^0 in graded lexicographic order

    Positively invariant sets are generated by deciding each vertex in
    canonical order; including a vertex forces its whole forward orbit, and a
    branch dies as soon as it forces an excluded vertex. Survivors are then
    filtered by negative invariance.

    Raises:
        BoundExceededError: If the graph has more than max_vertices vertices
    """
    n = len(graph.vertices)
    if n > max_vertices:
        raise BoundExceededError("invariant-set enumeration", max_vertices, n, "--max-vertices")

    flow = graph.digraph()
    forward = {v: frozenset(nx.descendants(flow, v)) | {v} for v in graph.vertices}
    order = graph.vertices
    found: List[VertexSet] = []

    def decide(index: int, included: frozenset, excluded: frozenset):
        if index == len(order):
            found.append(included)
            return
        v = order[index]
        if v in included:
            decide(index + 1, included, excluded)
            return
        decide(index + 1, included, excluded | {v})
        if not (forward[v] & excluded):
            decide(index + 1, included | forward[v], excluded)

    decide(0, frozenset(), frozenset())
    invariant = [X for X in found if is_negatively_invariant(graph, X)]
    invariant.sort(key=graded_key)
    logger.debug("%d positively invariant sets, %d invariant", len(found), len(invariant))

    if frozenset() not in invariant or graph.vertex_set not in invariant:
        raise ConsistencyError("empty set and E^0 must both be invariant")
    return invariant

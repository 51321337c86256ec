"""
Orbits, maximal heads and periodic points

On a finite graph every backward walk either stops at a singular vertex
or revisits a vertex within |E^0| steps, so finite negative orbits together
with lassos over simple cycles give a complete family of orbit spaces.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from .closures import enumerate_invariant_sets
from .errors import ConsistencyError
from .graph import (
    DiscreteGraph,
    Lasso,
    Path,
    classify_vertices,
    path_from_edges,
    restricted_classification,
    simple_loops,
)
from .utils import VertexSet, graded_key

logger = logging.getLogger(__name__)


class OrbitKind(Enum):
    FINITE = "finite"
    LASSO = "lasso"


@dataclass(frozen=True)
class NegativeOrbit:
    """
    Negative orbit of a vertex

    A finite orbit is a path with range vertex whose domain is singular; a
    lasso orbit is an eventually periodic backward infinite path.
    """
    kind: OrbitKind
    vertex: str
    path: Optional[Path] = None
    lasso: Optional[Lasso] = None

    def visited(self, graph: DiscreteGraph) -> Tuple[str, ...]:
        """Vertices the orbit passes through"""
        if self.kind is OrbitKind.FINITE:
            return self.path.vertices(graph)
        return self.lasso.stem.vertices(graph) + self.lasso.cycle.vertices(graph)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {'kind': self.kind.value, 'vertex': self.vertex}
        if self.kind is OrbitKind.FINITE:
            data['path'] = self.path.to_dict()
        else:
            data['lasso'] = self.lasso.to_dict()
        return data


class HeadKind(Enum):
    PERIODIC = "periodic"
    APERIODIC = "aperiodic"


@dataclass(frozen=True)
class MaximalHead:
    X0: VertexSet
    kind: HeadKind
    witness: Optional[str] = None  # periodic vertex v with X0 = Orb+(v)

    def to_dict(self) -> Dict[str, object]:
        return {'X0': sorted(self.X0), 'kind': self.kind.value, 'witness': self.witness}


@dataclass(frozen=True)
class PeriodicClass:
    """The class [v] of a periodic point with its unique simple loop"""
    representatives: VertexSet
    loop: Path
    period: int

    def to_dict(self) -> Dict[str, object]:
        return {
            'representatives': sorted(self.representatives),
            'loop': list(self.loop.edges),
            'period': self.period,
        }


@dataclass
class PeriodicPoints:
    """Per(E) with periods and witnessing loops, and Aper(E)"""
    periods: Dict[str, int] = field(default_factory=dict)
    loops: Dict[str, Path] = field(default_factory=dict)
    aperiodic: VertexSet = frozenset()

    @property
    def periodic(self) -> VertexSet:
        return frozenset(self.periods)


def positive_orbit(graph: DiscreteGraph, v: str) -> VertexSet:
    """Orb+(v): ranges of all paths with domain v, including v itself"""
    graph.require_vertices([v])
    return frozenset(nx.descendants(graph.digraph(), v)) | {v}


def iter_negative_orbits(graph: DiscreteGraph, v: str, max_stem: Optional[int] = None) -> Iterator[NegativeOrbit]:
    """
    Finite negative orbits and lassos of v, yielded as the backward walk finds them

    Args:
        graph: Validated graph
        v: Head vertex (range of the orbit)
        max_stem: Longest finite orbit / lasso stem reported; None means |E^0|

    Yields:
        Finite orbits of length <= max_stem ending at a singular vertex, and
        lassos whose stem has length <= max_stem and whose cycle is simple
    """
    graph.require_vertices([v])
    if max_stem is None:
        max_stem = len(graph.vertices)
    singular = classify_vertices(graph).singular

    # walk holds edges e_1, e_2, ... going backwards from v; trail the
    # vertices r(e_1), d(e_1), d(e_2), ...
    def extend(walk: List[str], trail: List[str]):
        current = trail[-1]
        if current in singular and len(walk) <= max_stem:
            path = path_from_edges(graph, walk) if walk else Path.trivial(v)
            yield NegativeOrbit(OrbitKind.FINITE, v, path=path)
        for e in graph.in_edges[current]:
            if e.domain in trail:
                start = trail.index(e.domain)
                if start > max_stem:
                    continue
                stem = path_from_edges(graph, walk[:start]) if start else Path.trivial(v)
                cycle = path_from_edges(graph, walk[start:] + [e.id])
                yield NegativeOrbit(OrbitKind.LASSO, v, lasso=Lasso(stem, cycle))
            else:
                walk.append(e.id)
                trail.append(e.domain)
                yield from extend(walk, trail)
                walk.pop()
                trail.pop()

    yield from extend([], [v])


def negative_orbits(graph: DiscreteGraph, v: str, max_stem: Optional[int] = None) -> List[NegativeOrbit]:
    """All orbits of iter_negative_orbits in canonical order"""
    return sorted(iter_negative_orbits(graph, v, max_stem), key=_orbit_key)


def _orbit_key(orbit: NegativeOrbit):
    if orbit.kind is OrbitKind.FINITE:
        return (0, orbit.path.length, orbit.path.edges, ())
    return (1, orbit.lasso.stem.length, orbit.lasso.stem.edges, orbit.lasso.cycle.edges)


def orbit_space(graph: DiscreteGraph, orbit: NegativeOrbit) -> VertexSet:
    """Orb(v, e): union of positive orbits over the vertices of the orbit"""
    flow = graph.digraph()
    space = set()
    for u in set(orbit.visited(graph)):
        space |= nx.descendants(flow, u)
        space.add(u)
    return frozenset(space)


def is_maximal_head_set(graph: DiscreteGraph, X0: Iterable[str]) -> bool:
    """
    Definitional maximal-head test for an invariant set

    X0 is non-empty and any two of its vertices have a common ancestor
    inside X0 (a vertex whose positive orbit contains both).
    """
    X0 = frozenset(X0)
    if not X0:
        return False
    flow = graph.digraph()
    ancestors_in = {u: (nx.ancestors(flow, u) | {u}) & X0 for u in X0}
    members = sorted(X0)
    return all(
        ancestors_in[a] & ancestors_in[b]
        for i, a in enumerate(members)
        for b in members[i:]
    )


def is_join_irreducible(X0: VertexSet, family: List[VertexSet]) -> bool:
    """
    X0 ⊆ X1 ∪ X2 implies X0 ⊆ X1 or X0 ⊆ X2 over a family of invariant sets

    The empty set is never join-irreducible.
    """
    if not X0:
        return False
    candidates = [X for X in family if not X0 <= X]
    for i, X1 in enumerate(candidates):
        for X2 in candidates[i:]:
            if X0 <= X1 | X2:
                return False
    return True


def periodic_points(graph: DiscreteGraph) -> PeriodicPoints:
    """
    Per(E) with periods, and Aper(E)

    v is in Per_n(E) iff a simple loop l of length n is based at v and no
    edge class e other than l_k with d(e) in Orb+(v) has range r(l_k); a
    loop edge of multiplicity > 1 counts as an entrance. The isolation
    condition of the continuous theory is automatic for discrete vertices.
    """
    result = PeriodicPoints()
    loops = simple_loops(graph)
    for v in graph.vertices:
        orbit = positive_orbit(graph, v)
        for loop in _loops_based_at(graph, loops, v):
            if _is_entrance_free_within(graph, loop, orbit) and _is_isolated_in_orbit(v, orbit):
                result.periods[v] = loop.length
                result.loops[v] = loop
                break
    result.aperiodic = graph.vertex_set - frozenset(result.periods)
    logger.debug("periodic points: %s", sorted(result.periods))
    return result


def _loops_based_at(graph: DiscreteGraph, loops: List[Path], v: str) -> List[Path]:
    """Rotate every simple loop through v so that r(l_1) = v"""
    based = []
    for loop in loops:
        ranges = [graph.edge(eid).range for eid in loop.edges]
        if v in ranges:
            k = ranges.index(v)
            based.append(path_from_edges(graph, loop.edges[k:] + loop.edges[:k]))
    return based


def _is_entrance_free_within(graph: DiscreteGraph, loop: Path, orbit: VertexSet) -> bool:
    for eid in loop.edges:
        e = graph.edge(eid)
        if e.multiplicity != 1:
            return False
        for other in graph.in_edges[e.range]:
            if other.id != e.id and other.domain in orbit:
                return False
    return True


def _is_isolated_in_orbit(v: str, orbit: VertexSet) -> bool:
    # Every point of a discrete space is isolated; kept so the three
    # defining conditions stay visible.
    return v in orbit


def periodic_classes(graph: DiscreteGraph, points: Optional[PeriodicPoints] = None) -> List[PeriodicClass]:
    """
    Partition Per(E) by equality of positive orbits

    Each class is the vertex set of its unique simple loop; the loop is
    based at the smallest representative.

    Raises:
        ConsistencyError: If a class of Per_n does not have exactly n members
    """
    points = points or periodic_points(graph)
    classes: Dict[VertexSet, List[str]] = {}
    for v in sorted(points.periods):
        classes.setdefault(positive_orbit(graph, v), []).append(v)

    result = []
    for members in classes.values():
        base = min(members)
        loop = points.loops[base]
        period = points.periods[base]
        if len(members) != period or any(points.periods[u] != period for u in members):
            raise ConsistencyError(f"periodic class {members} is not {period}:1")
        result.append(PeriodicClass(frozenset(members), loop, period))
    result.sort(key=lambda c: min(c.representatives))
    return result


def maximal_heads(
    graph: DiscreteGraph,
    max_vertices: int = 16,
    cross_check: bool = True,
    invariant_sets: Optional[List[VertexSet]] = None,
) -> List[MaximalHead]:
    """
    All maximal heads, tagged periodic or aperiodic

    Args:
        graph: Validated graph
        max_vertices: Enumeration bound for invariant sets
        cross_check: Compare the definitional test with join-irreducibility
            among invariant sets
        invariant_sets: Precomputed enumerate_invariant_sets output

    Raises:
        BoundExceededError: If the enumeration bound is exceeded
        ConsistencyError: If the two characterizations disagree
    """
    family = invariant_sets if invariant_sets is not None else enumerate_invariant_sets(graph, max_vertices)
    points = periodic_points(graph)
    periodic_orbits = {}
    for v in sorted(points.periods):
        periodic_orbits.setdefault(positive_orbit(graph, v), v)

    heads = []
    for X0 in family:
        is_head = is_maximal_head_set(graph, X0)
        if cross_check and is_head != is_join_irreducible(X0, family):
            raise ConsistencyError(f"maximal-head tests disagree on {sorted(X0)}")
        if not is_head:
            continue
        if X0 in periodic_orbits:
            heads.append(MaximalHead(X0, HeadKind.PERIODIC, periodic_orbits[X0]))
        else:
            heads.append(MaximalHead(X0, HeadKind.APERIODIC))
    heads.sort(key=lambda h: graded_key(h.X0))
    return heads


def split_heads(
    graph: DiscreteGraph,
    heads: Optional[List[MaximalHead]] = None,
    max_vertices: int = 16,
) -> Tuple[List[MaximalHead], List[MaximalHead]]:
    """(M_per, M_aper); on a finite graph every head is an orbit space"""
    heads = heads if heads is not None else maximal_heads(graph, max_vertices)
    periodic = [h for h in heads if h.kind is HeadKind.PERIODIC]
    aperiodic = [h for h in heads if h.kind is HeadKind.APERIODIC]
    return periodic, aperiodic


def breaking_vertices(graph: DiscreteGraph) -> VertexSet:
    """
    BV(E): singular vertices that become regular in the restriction to
    their positive orbit
    """
    singular = classify_vertices(graph).singular
    breaking = set()
    for v in singular:
        if v in restricted_classification(graph, positive_orbit(graph, v)).regular:
            breaking.add(v)
    return frozenset(breaking)

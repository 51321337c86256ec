"""
Graph-level verdicts and the prime ideal classification

For a discrete vertex space every set is open, so topological freeness
reduces to the absence of loops without entrances: a non-empty set of base
points always has non-empty interior.

Every verdict carries a witness that can be re-checked with the predicate
it came from.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .closures import enumerate_invariant_sets, hereditary_closure, largest_invariant_avoiding, saturated_closure
from .config import AnalysisConfig
from .errors import BoundExceededError, ConsistencyError
from .graph import DiscreteGraph, loop_without_entrances, simple_loops
from .lattice import (
    AdmissiblePair,
    IdealLattice,
    enumerate_admissible_pairs,
    quotient_graph,
    restricted_singular,
)
from .orbits import (
    HeadKind,
    NegativeOrbit,
    OrbitKind,
    PeriodicClass,
    breaking_vertices,
    is_maximal_head_set,
    iter_negative_orbits,
    maximal_heads,
    orbit_space,
    periodic_classes,
    periodic_points,
    positive_orbit,
)
from .utils import VertexSet

logger = logging.getLogger(__name__)

STABILIZER_TEMPLATE = "{{z in T : z^{period} = 1}}"
GAUGE_NOTE = "beta_z(P_w) = P_(z^-n w): the gauge action rotates the circle family"
PRIMITIVITY_NOTE = (
    "Finite vertex sets are second countable: every prime ideal is primitive "
    "and every aperiodic maximal head carries a dense orbit, so no aperiodic "
    "head is left undecided."
)


@dataclass(frozen=True)
class Verdict:
    predicate: str
    value: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        return {'predicate': self.predicate, 'value': self.value, 'witness': self.witness}


def is_topologically_free(graph: DiscreteGraph) -> Verdict:
    """True iff no loop without entrances exists; witness the offending loop"""
    for loop in simple_loops(graph):
        if loop_without_entrances(graph, loop):
            return Verdict("topologically_free", False, {'loop': list(loop.edges), 'base': loop.range})
    return Verdict("topologically_free", True)


def is_free(graph: DiscreteGraph, cross_check: bool = True) -> Verdict:
    """
    True iff Per(E) is empty; witness a periodic vertex and its loop

    Raises:
        ConsistencyError: If cross_check is set and E is free but not
            topologically free
    """
    points = periodic_points(graph)
    if points.periods:
        v = min(points.periods)
        verdict = Verdict("free", False, {
            'vertex': v, 'period': points.periods[v], 'loop': list(points.loops[v].edges),
        })
    else:
        verdict = Verdict("free", True)
    if cross_check and verdict.value and not is_topologically_free(graph).value:
        raise ConsistencyError("free graph is not topologically free")
    return verdict


def free_via_quotients(graph: DiscreteGraph, lattice: IdealLattice) -> bool:
    """True iff E_rho is topologically free for every admissible pair rho"""
    return all(is_topologically_free(quotient_graph(graph, pair).base).value for pair in lattice.pairs)


def is_minimal(graph: DiscreteGraph, cross_check: bool = True, max_vertices: int = 16) -> Verdict:
    """
    True iff S(H({v})) = E^0 for every vertex v

    The witness of a failure is a vertex and the non-trivial invariant set
    avoiding it. With cross_check the invariant sets are enumerated as well
    and must be exactly {∅, E^0}.
    """
    verdict = Verdict("minimal", True)
    for v in graph.vertices:
        if saturated_closure(graph, hereditary_closure(graph, [v])) != graph.vertex_set:
            verdict = Verdict("minimal", False, {
                'vertex': v, 'invariant_set': sorted(largest_invariant_avoiding(graph, [v])),
            })
            break

    if cross_check:
        try:
            family = enumerate_invariant_sets(graph, max_vertices)
        except BoundExceededError as error:
            logger.warning("minimality cross-check skipped: %s", error)
        else:
            if (set(family) == {frozenset(), graph.vertex_set}) != verdict.value:
                raise ConsistencyError("minimality tests disagree")
    return verdict


def minimal_via_orbits(graph: DiscreteGraph, max_stem: Optional[int] = None) -> bool:
    """True iff every negative orbit of every vertex has orbit space E^0"""
    return all(
        orbit_space(graph, orbit) == graph.vertex_set
        for v in graph.vertices
        for orbit in iter_negative_orbits(graph, v, max_stem)
    )


def dense_orbit_witness(graph: DiscreteGraph, max_stem: Optional[int] = None) -> Optional[NegativeOrbit]:
    """First negative orbit found whose orbit space is all of E^0, or None"""
    for v in graph.vertices:
        for orbit in iter_negative_orbits(graph, v, max_stem):
            if orbit_space(graph, orbit) == graph.vertex_set:
                return orbit
    return None


def _is_prime_pair(pair: AdmissiblePair, pairs: List[AdmissiblePair]) -> bool:
    # rho1 ∪ rho2 ⊇ rho forces rho1 ⊇ rho or rho2 ⊇ rho
    candidates = [p for p in pairs if not p.contains(pair)]
    for i, first in enumerate(candidates):
        for second in candidates[i:]:
            if pair.X0 <= first.X0 | second.X0 and pair.Z <= first.Z | second.Z:
                return False
    return True


def transitivity_conditions(
    graph: DiscreteGraph,
    lattice: Optional[IdealLattice] = None,
) -> Dict[str, Optional[bool]]:
    """
    Equivalent forms of topological transitivity on a non-empty graph

    common_ancestor: H({v1}) ∩ H({v2}) ≠ ∅ for all vertices;
    saturated_overlap: S(H({v1})) ∩ S(H({v2})) ≠ ∅;
    top_pair_prime: (E^0, E^0_sg) is a prime pair (None without a lattice);
    maximal_head: E^0 is a maximal head.
    """
    closures = {v: hereditary_closure(graph, [v]) for v in graph.vertices}
    saturations = {v: saturated_closure(graph, closures[v]) for v in graph.vertices}
    vertices = graph.vertices
    pairs = [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]]
    return {
        'common_ancestor': all(closures[a] & closures[b] for a, b in pairs),
        'saturated_overlap': all(saturations[a] & saturations[b] for a, b in pairs),
        'top_pair_prime': _is_prime_pair(lattice.top, lattice.pairs) if lattice is not None else None,
        'maximal_head': is_maximal_head_set(graph, graph.vertex_set),
    }


def is_topologically_transitive(
    graph: DiscreteGraph,
    cross_check: bool = True,
    lattice: Optional[IdealLattice] = None,
    max_vertices: int = 16,
) -> Verdict:
    """
    True iff every two vertices have a common ancestor

    Witness of a failure is a pair of vertices without one. With cross_check
    on a non-empty graph the equivalent forms of transitivity_conditions
    must all agree.
    """
    verdict = Verdict("topologically_transitive", True)
    ancestors = {v: hereditary_closure(graph, [v]) for v in graph.vertices}
    vertices = graph.vertices
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            if not ancestors[a] & ancestors[b]:
                verdict = Verdict("topologically_transitive", False, {'vertices': [a, b]})
                break
        if not verdict.value:
            break

    if cross_check and graph.vertices:
        if lattice is None:
            try:
                lattice = enumerate_admissible_pairs(graph, max_vertices)
            except BoundExceededError as error:
                logger.warning("prime top pair check skipped: %s", error)
        conditions = transitivity_conditions(graph, lattice)
        values = {value for value in conditions.values() if value is not None}
        if values != {verdict.value}:
            raise ConsistencyError(f"transitivity conditions disagree: {conditions}")
    return verdict


def is_generated_by_loop(graph: DiscreteGraph, cross_check: bool = True, max_stem: Optional[int] = None) -> Verdict:
    """
    True iff some periodic v0 has E^0 = Orb+(v0) = S(H({v0}))

    The witness is v0 with its loop. With cross_check on a non-empty graph,
    every negative orbit must be a lasso around that loop exactly when the
    verdict is true.
    """
    points = periodic_points(graph)
    verdict = Verdict("generated_by_loop", False)
    for v in sorted(points.periods):
        if (positive_orbit(graph, v) == graph.vertex_set
                and saturated_closure(graph, hereditary_closure(graph, [v])) == graph.vertex_set):
            verdict = Verdict("generated_by_loop", True, {'vertex': v, 'loop': list(points.loops[v].edges)})
            break

    if cross_check and graph.vertices:
        if _all_orbits_wind_one_loop(graph, max_stem) != verdict.value:
            raise ConsistencyError("generated-by-loop tests disagree")
    return verdict


def _all_orbits_wind_one_loop(graph: DiscreteGraph, max_stem: Optional[int]) -> bool:
    loop = None
    for v in graph.vertices:
        for orbit in iter_negative_orbits(graph, v, max_stem):
            if orbit.kind is OrbitKind.FINITE:
                return False
            edges = frozenset(orbit.lasso.cycle.edges)
            if loop is None:
                if any(graph.edge(eid).multiplicity != 1 for eid in edges):
                    return False
                loop = edges
            elif edges != loop:
                return False
    return loop is not None


def is_simple(graph: DiscreteGraph, cross_check: bool = True, max_vertices: int = 16) -> Verdict:
    """
    Minimal and topologically free

    Also evaluates minimal ∧ free and minimal ∧ not generated by a loop, and
    raises ConsistencyError when the three forms disagree. A non-simple
    verdict names its reason: "not_minimal" or "generated_by_loop".
    """
    minimal = is_minimal(graph, cross_check, max_vertices)
    top_free = is_topologically_free(graph)
    free = is_free(graph, cross_check)
    generated = is_generated_by_loop(graph, cross_check)

    forms = {
        'minimal_and_topologically_free': minimal.value and top_free.value,
        'minimal_and_free': minimal.value and free.value,
        'minimal_and_not_generated_by_loop': minimal.value and not generated.value,
    }
    if len(set(forms.values())) != 1:
        raise ConsistencyError(f"simplicity forms disagree: {forms}")

    value = forms['minimal_and_topologically_free']
    if value:
        return Verdict("simple", True, {'forms': forms})
    if not minimal.value:
        return Verdict("simple", False, {'reason': "not_minimal", 'detail': minimal.witness, 'forms': forms})
    return Verdict("simple", False, {'reason': "generated_by_loop", 'detail': generated.witness, 'forms': forms})


def is_prime_algebra(graph: DiscreteGraph, cross_check: bool = True, max_vertices: int = 16) -> Verdict:
    """Topologically free and topologically transitive"""
    top_free = is_topologically_free(graph)
    transitive = is_topologically_transitive(graph, cross_check, max_vertices=max_vertices)
    value = top_free.value and transitive.value
    witness = None
    if not top_free.value:
        witness = {'reason': "not_topologically_free", 'detail': top_free.witness}
    elif not transitive.value:
        witness = {'reason': "not_topologically_transitive", 'detail': transitive.witness}
    return Verdict("prime", value, witness)


def prime_pairs_by_definition(lattice: IdealLattice, parallel: bool = False) -> List[AdmissiblePair]:
    """
    Definitional primality filter over the whole lattice

    The bottom pair (∅, ∅) belongs to the whole algebra, which is not a
    proper ideal, and is left out.
    """
    candidates = [p for p in lattice.pairs if p.X0 or p.Z]
    if parallel and len(candidates) > 1:
        with ThreadPoolExecutor() as executor:
            flags = list(executor.map(lambda p: _is_prime_pair(p, lattice.pairs), candidates))
    else:
        flags = [_is_prime_pair(p, lattice.pairs) for p in candidates]
    return [p for p, prime in zip(candidates, flags) if prime]


def breaking_vertex_pair(graph: DiscreteGraph, v: str) -> AdmissiblePair:
    """rho_v = (Orb+(v), X_sg ∪ {v}) with X = Orb+(v)"""
    X0 = positive_orbit(graph, v)
    return AdmissiblePair(X0, restricted_singular(graph, X0) | {v})


def head_pair(graph: DiscreteGraph, X0: VertexSet) -> AdmissiblePair:
    """rho_X0 = (X0, X0_sg)"""
    return AdmissiblePair(X0, restricted_singular(graph, X0))


def prime_admissible_pairs(
    graph: DiscreteGraph,
    max_vertices: int = 16,
    cross_check: bool = True,
    lattice: Optional[IdealLattice] = None,
) -> List[AdmissiblePair]:
    """
    Prime pairs from breaking vertices and maximal heads

    Raises:
        BoundExceededError: If the graph has more than max_vertices vertices
        ConsistencyError: If cross_check is set and the result differs from
            prime_pairs_by_definition
    """
    heads = maximal_heads(graph, max_vertices, cross_check)
    pairs = [breaking_vertex_pair(graph, v) for v in sorted(breaking_vertices(graph))]
    pairs += [head_pair(graph, head.X0) for head in heads]
    pairs.sort(key=AdmissiblePair.sort_key)

    if cross_check:
        lattice = lattice or enumerate_admissible_pairs(graph, max_vertices)
        expected = set(prime_pairs_by_definition(lattice))
        if set(pairs) != expected or len(pairs) != len(expected):
            raise ConsistencyError(
                f"prime pairs {[p.to_dict() for p in pairs]} differ from "
                f"definition {[p.to_dict() for p in sorted(expected, key=AdmissiblePair.sort_key)]}"
            )
    return pairs


class PrimeKind(Enum):
    BREAKING_VERTEX = "breaking_vertex"
    APERIODIC_HEAD = "aperiodic_head"
    CIRCLE_FAMILY = "circle_family"


@dataclass(frozen=True)
class PrimeIdealDescriptor:
    """
    One entry of the prime ideal classification

    Circle families stay symbolic: the parameter w ranges over the circle
    and only the period and the gauge orbit are recorded.
    """
    kind: PrimeKind
    pair: AdmissiblePair
    vertex: Optional[str] = None
    head: Optional[VertexSet] = None
    periodic_class: Optional[PeriodicClass] = None
    primitive: bool = True

    @property
    def period(self) -> Optional[int]:
        return self.periodic_class.period if self.periodic_class else None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'variant': self.kind.value,
            'pair': self.pair.to_dict(),
            'primitive': self.primitive,
        }
        if self.kind is PrimeKind.BREAKING_VERTEX:
            data['vertex'] = self.vertex
        elif self.kind is PrimeKind.APERIODIC_HEAD:
            data['X0'] = sorted(self.head)
        else:
            data['class'] = self.periodic_class.to_dict()
            data['period'] = self.period
            data['parameter'] = "w in T"
            data['stabilizer'] = STABILIZER_TEMPLATE.format(period=self.period)
            data['gauge'] = GAUGE_NOTE
        return data


def prime_ideals(graph: DiscreteGraph, max_vertices: int = 16, cross_check: bool = True) -> List[PrimeIdealDescriptor]:
    """
    Breaking vertices, aperiodic maximal heads and circle families

    Raises:
        BoundExceededError: If the graph has more than max_vertices vertices
        ConsistencyError: If circle families and periodic heads do not match
    """
    heads = maximal_heads(graph, max_vertices, cross_check)
    descriptors = [
        PrimeIdealDescriptor(PrimeKind.BREAKING_VERTEX, breaking_vertex_pair(graph, v), vertex=v)
        for v in sorted(breaking_vertices(graph))
    ]
    descriptors += [
        PrimeIdealDescriptor(PrimeKind.APERIODIC_HEAD, head_pair(graph, head.X0), head=head.X0)
        for head in heads if head.kind is HeadKind.APERIODIC
    ]
    for cls in periodic_classes(graph):
        X0 = positive_orbit(graph, min(cls.representatives))
        descriptors.append(PrimeIdealDescriptor(PrimeKind.CIRCLE_FAMILY, head_pair(graph, X0), periodic_class=cls))

    if cross_check:
        periodic_heads = {head_pair(graph, h.X0) for h in heads if h.kind is HeadKind.PERIODIC}
        circles = [d.pair for d in descriptors if d.kind is PrimeKind.CIRCLE_FAMILY]
        if set(circles) != periodic_heads or len(circles) != len(periodic_heads):
            raise ConsistencyError("circle families do not match the periodic maximal heads")
    logger.info("prime ideals: %d descriptors", len(descriptors))
    return descriptors


@dataclass
class PrimitivityReport:
    """Primitive ideals and the primitivity conditions for the whole algebra"""
    primes: List[PrimeIdealDescriptor]
    conditions: Dict[str, bool] = field(default_factory=dict)
    algebra_primitive: bool = False
    dense_orbit: Optional[NegativeOrbit] = None
    note: str = PRIMITIVITY_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'primitive_ideals': [d.to_dict() for d in self.primes],
            'algebra_primitive': self.algebra_primitive,
            'conditions': dict(self.conditions),
            'dense_orbit': self.dense_orbit.to_dict() if self.dense_orbit else None,
            'note': self.note,
        }


def primitivity_report(
    graph: DiscreteGraph,
    max_vertices: int = 16,
    cross_check: bool = True,
    max_stem: Optional[int] = None,
) -> PrimitivityReport:
    """
    Every prime ideal marked primitive, plus three forms of primitivity

    dense_orbit_topologically_free: topologically free with a negative orbit
    whose orbit space is E^0; prime_algebra: the zero ideal is prime;
    topologically_free_and_transitive. On finite graphs all three agree.
    """
    primes = prime_ideals(graph, max_vertices, cross_check)
    top_free = is_topologically_free(graph).value
    dense = dense_orbit_witness(graph, max_stem) if graph.vertices else None
    transitive = is_topologically_transitive(graph, cross_check, max_vertices=max_vertices).value
    conditions = {
        'dense_orbit_topologically_free': top_free and dense is not None,
        'prime_algebra': is_prime_algebra(graph, cross_check=False).value,
        'topologically_free_and_transitive': top_free and transitive,
    }
    if cross_check and graph.vertices and len(set(conditions.values())) != 1:
        raise ConsistencyError(f"primitivity conditions disagree: {conditions}")
    return PrimitivityReport(
        primes=primes,
        conditions=conditions,
        algebra_primitive=conditions['prime_algebra'],
        dense_orbit=dense,
    )


def analyze_verdicts(graph: DiscreteGraph, config: Optional[AnalysisConfig] = None) -> Dict[str, Verdict]:
    """All graph-level verdicts keyed by predicate name"""
    config = config or AnalysisConfig()
    check, bound = config.cross_check, config.max_vertices
    verdicts: Tuple[Verdict, ...] = (
        is_topologically_free(graph),
        is_free(graph, check),
        is_minimal(graph, check, bound),
        is_topologically_transitive(graph, check, max_vertices=bound),
        is_generated_by_loop(graph, check, config.max_stem),
        is_simple(graph, check, bound),
        is_prime_algebra(graph, check, bound),
    )
    return {v.predicate: v for v in verdicts}

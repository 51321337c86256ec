"""
Cross-check runner

Runs the library's characterizations against each other and against brute
force over a seeded random graph family.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import corpus
from .classification import (
    free_via_quotients,
    is_free,
    is_minimal,
    is_simple,
    is_topologically_transitive,
    dense_orbit_witness,
    minimal_via_orbits,
    prime_admissible_pairs,
    prime_ideals,
    prime_pairs_by_definition,
)
from .closures import (
    enumerate_invariant_sets,
    hereditary_closure,
    is_hereditary,
    is_invariant,
    is_negatively_invariant,
    is_positively_invariant,
    is_saturated,
    negative_invariance_conditions,
    saturated_closure,
)
from .errors import TGKError
from .graph import (
    DiscreteGraph,
    classify_vertices,
    is_row_finite,
    paths_between,
    restrict,
    restricted_classification,
    simple_loops,
)
from .lattice import AdmissiblePair, enumerate_admissible_pairs, restricted_singular, row_finite_bijection_check
from .orbits import is_maximal_head_set, iter_negative_orbits, orbit_space, positive_orbit
from .representations import build_path_rep, kernel_pair, verify_ck_pair
from .utils import VertexSet, graded_subsets

logger = logging.getLogger(__name__)

Check = Callable[[DiscreteGraph], Optional[str]]


@dataclass
class CheckResult:
    """Outcome of one named check over the family"""
    name: str
    graphs: int
    failures: List[str] = field(default_factory=list)
    time_taken: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class CheckSummary:
    seed: int
    results: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> Dict[str, object]:
        return {
            'seed': self.seed,
            'ok': self.ok,
            'results': [
                {'name': r.name, 'graphs': r.graphs, 'passed': r.passed, 'failures': r.failures}
                for r in self.results
            ],
        }


def smallest_superset(graph: DiscreteGraph, V: VertexSet, predicate) -> VertexSet:
    """Intersection of every superset of V satisfying predicate"""
    rest = graph.vertex_set - V
    result = graph.vertex_set
    for extra in graded_subsets(rest):
        candidate = V | extra
        if predicate(graph, candidate):
            result = result & candidate
    return result


def check_closures(graph: DiscreteGraph) -> Optional[str]:
    for V in graded_subsets(graph.vertices):
        if hereditary_closure(graph, V) != smallest_superset(graph, V, is_hereditary):
            return f"H({sorted(V)}) differs from brute force"
        if saturated_closure(graph, V) != smallest_superset(graph, V, is_saturated):
            return f"S({sorted(V)}) differs from brute force"
    return None


def check_complements(graph: DiscreteGraph) -> Optional[str]:
    for X in graded_subsets(graph.vertices):
        complement = graph.vertex_set - X
        if is_positively_invariant(graph, X) != is_hereditary(graph, complement):
            return f"positive invariance vs hereditary complement at {sorted(X)}"
        if is_negatively_invariant(graph, X) != is_saturated(graph, complement):
            return f"negative invariance vs saturated complement at {sorted(X)}"
        if is_positively_invariant(graph, X) and len(set(negative_invariance_conditions(graph, X))) != 1:
            return f"negative invariance conditions disagree at {sorted(X)}"
    return None


def check_prime_pairs(graph: DiscreteGraph) -> Optional[str]:
    lattice = enumerate_admissible_pairs(graph)
    classified = prime_admissible_pairs(graph, cross_check=False)
    expected = prime_pairs_by_definition(lattice)
    if set(classified) != set(expected):
        return f"classification {[p.to_dict() for p in classified]} vs definition {[p.to_dict() for p in expected]}"
    for pair in classified:
        if len(pair.Z - restricted_singular(graph, pair.X0)) > 1:
            return f"prime pair {pair.to_dict()} adds more than one vertex to X0_sg"
    return None


def check_free_quotients(graph: DiscreteGraph) -> Optional[str]:
    lattice = enumerate_admissible_pairs(graph)
    if is_free(graph).value != free_via_quotients(graph, lattice):
        return "freeness differs from topological freeness of all quotients"
    return None


def check_simplicity(graph: DiscreteGraph) -> Optional[str]:
    is_simple(graph, cross_check=True)
    return None


def check_minimality(graph: DiscreteGraph) -> Optional[str]:
    if is_minimal(graph).value != minimal_via_orbits(graph):
        return "minimality differs from density of all orbit spaces"
    return None


def check_transitivity(graph: DiscreteGraph) -> Optional[str]:
    verdict = is_topologically_transitive(graph, cross_check=True)
    if is_minimal(graph).value and not verdict.value:
        return "minimal graph that is not topologically transitive"
    if graph.vertices and verdict.value and dense_orbit_witness(graph) is None:
        return "transitive graph without a dense negative orbit"
    return None


def check_row_finite(graph: DiscreteGraph) -> Optional[str]:
    if not is_row_finite(graph):
        return None
    lattice = enumerate_admissible_pairs(graph)
    if len(lattice.pairs) != len(lattice.invariant_sets) or not row_finite_bijection_check(graph):
        return "row-finite graph with more admissible pairs than invariant sets"
    return None


def check_closure_laws(graph: DiscreteGraph) -> Optional[str]:
    subsets = list(graded_subsets(graph.vertices))
    H = {V: hereditary_closure(graph, V) for V in subsets}
    S = {V: saturated_closure(graph, V) for V in subsets}
    for V in subsets:
        if not (V <= H[V] and H[H[V]] == H[V]):
            return f"H is not an idempotent extension at {sorted(V)}"
        if not (V <= S[V] and S[S[V]] == S[V]):
            return f"S is not an idempotent extension at {sorted(V)}"
        generated = S[H[V]]
        if not (is_hereditary(graph, generated) and is_saturated(graph, generated)):
            return f"S(H({sorted(V)})) is not hereditary and saturated"
        for W in subsets:
            if V <= W and not (H[V] <= H[W] and S[V] <= S[W]):
                return f"closures not monotone on {sorted(V)} ⊆ {sorted(W)}"
    return None


def check_invariant_unions(graph: DiscreteGraph) -> Optional[str]:
    family = enumerate_invariant_sets(graph)
    classes = {X: restricted_classification(graph, X) for X in family}
    for i, X1 in enumerate(family):
        for X2 in family[i:]:
            X = X1 | X2
            union = classes[X]
            first, second = classes[X1], classes[X2]
            if union.infinite_receivers != first.infinite_receivers | second.infinite_receivers:
                return f"infinite receivers of {sorted(X)} are not the union"
            if not union.sources <= first.sources | second.sources:
                return f"sources of {sorted(X)} escape the union"
            if not union.singular <= first.singular | second.singular:
                return f"singular vertices of {sorted(X)} escape the union"
    return None


def check_orbits(graph: DiscreteGraph) -> Optional[str]:
    singular = classify_vertices(graph).singular
    on_loop = {u for loop in simple_loops(graph) for u in loop.vertices(graph)}
    forward = {v: positive_orbit(graph, v) for v in graph.vertices}
    spaces = {v: [orbit_space(graph, o) for o in iter_negative_orbits(graph, v)] for v in graph.vertices}
    for v in graph.vertices:
        if is_invariant(graph, forward[v]) != (v in singular or v in on_loop):
            return f"invariance of Orb+({v}) disagrees with singular-or-on-a-loop"
        for space in spaces[v]:
            if not is_maximal_head_set(graph, space):
                return f"orbit space {sorted(space)} of {v} is not a maximal head"
    for X in graded_subsets(graph.vertices):
        if is_positively_invariant(graph, X) != all(forward[v] <= X for v in X):
            return f"positive invariance of {sorted(X)} differs from containing every Orb+"
        if is_invariant(graph, X) != all(any(space <= X for space in spaces[v]) for v in X):
            return f"invariance of {sorted(X)} differs from the negative-orbit form"
    return None


def check_restrictions(graph: DiscreteGraph) -> Optional[str]:
    row_finite = is_row_finite(graph)
    singular = classify_vertices(graph).singular
    for X in enumerate_invariant_sets(graph):
        restricted = restrict(graph, X)
        if restrict(restricted, X) != restricted:
            return f"restriction to {sorted(X)} is not idempotent"
        if row_finite and not is_row_finite(restricted):
            return f"restriction to {sorted(X)} is not row-finite"
        if row_finite and restricted_singular(graph, X) != X & singular:
            return f"restricted singular set of {sorted(X)} is not X ∩ E_sg"
    return None


def check_paths(graph: DiscreteGraph, max_len: int = 3) -> Optional[str]:
    for start in graph.vertices:
        for end in graph.vertices:
            shorter = set(paths_between(graph, start, end, 0))
            for m in range(1, max_len + 1):
                longer = set(paths_between(graph, start, end, m))
                if not shorter <= longer:
                    return f"paths {start} -> {end} with length <= {m - 1} are lost at {m}"
                shorter = longer
    return None


def check_prime_ideals(graph: DiscreteGraph) -> Optional[str]:
    lattice = enumerate_admissible_pairs(graph)
    prime = set(prime_pairs_by_definition(lattice))
    for descriptor in prime_ideals(graph):
        if descriptor.pair not in prime:
            return f"{descriptor.kind.value} pair {descriptor.pair.to_dict()} fails the primality filter"
    return None


def check_representations(graph: DiscreteGraph) -> Optional[str]:
    """Relation checks at every vertex of an acyclic OMEGA-free graph"""
    singular = classify_vertices(graph).singular
    for v0 in graph.vertices:
        report = verify_ck_pair(build_path_rep(graph, v0))
        if v0 in singular:
            if not report.cuntz_krieger_ok:
                return f"relations fail at {v0}: {report.to_dict()['failures']}"
            X0 = positive_orbit(graph, v0)
            expected = AdmissiblePair(X0, restricted_singular(graph, X0) | {v0})
            if kernel_pair(build_path_rep(graph, v0)) != expected:
                return f"kernel pair at {v0} differs from {expected.to_dict()}"
        elif not report.toeplitz_ok or report.failing_subjects("c") != [v0]:
            return f"regular {v0}: expected (c) to fail exactly at {v0}"
    return None


GENERAL_CHECKS: Dict[str, Check] = {
    'closures': check_closures,
    'closure_laws': check_closure_laws,
    'invariant_unions': check_invariant_unions,
    'orbits': check_orbits,
    'restrictions': check_restrictions,
    'paths': check_paths,
    'complements': check_complements,
    'prime_pairs': check_prime_pairs,
    'prime_ideals': check_prime_ideals,
    'free_quotients': check_free_quotients,
    'simplicity': check_simplicity,
    'minimality': check_minimality,
    'transitivity': check_transitivity,
    'row_finite': check_row_finite,
}

ACYCLIC_CHECKS: Dict[str, Check] = {
    'representations': check_representations,
}


class CrossCheck:
    """
    Run named checks over a seeded random family

    Example:
        >>> summary = CrossCheck(seed=7, graphs=50).run()
        >>> print_summary(summary)
    """

    def __init__(self, seed: int = 0, graphs: int = 100, acyclic_vertices: int = 6):
        self.seed = seed
        self.family = corpus.random_family(seed, graphs)
        self.acyclic_family = corpus.random_family(seed, graphs, max_vertices=acyclic_vertices, acyclic=True)

    def run_single(self, name: str, check: Check, family: List[DiscreteGraph]) -> CheckResult:
        start_time = time.time()
        result = CheckResult(name=name, graphs=len(family))
        for index, graph in enumerate(family):
            try:
                failure = check(graph)
            except TGKError as error:
                failure = f"{type(error).__name__}: {error}"
            if failure:
                result.failures.append(f"graph #{index}: {failure}")
        result.time_taken = time.time() - start_time
        logger.info("check %s: %d failures in %.2fs", name, len(result.failures), result.time_taken)
        return result

    def run(self, names: Optional[List[str]] = None, parallel: bool = False) -> CheckSummary:
        jobs = [(name, check, self.family) for name, check in GENERAL_CHECKS.items()]
        jobs += [(name, check, self.acyclic_family) for name, check in ACYCLIC_CHECKS.items()]
        if names:
            jobs = [job for job in jobs if job[0] in names]

        results = []
        if parallel:
            with ThreadPoolExecutor(max_workers=len(jobs) or 1) as executor:
                futures = [executor.submit(self.run_single, *job) for job in jobs]
                for future in as_completed(futures):
                    results.append(future.result())
        else:
            for job in jobs:
                results.append(self.run_single(*job))
        results.sort(key=lambda r: r.name)
        return CheckSummary(seed=self.seed, results=results)


def print_summary(summary: CheckSummary):
    """Pretty print cross-check results"""
    print("\n" + "=" * 70)
    print(f"Cross-checks (seed {summary.seed})")
    print("=" * 70)
    for result in summary.results:
        mark = "✅" if result.passed else "❌"
        print(f"{mark} {result.name}: {result.graphs} graphs, {result.time_taken:.2f}s")
        for failure in result.failures[:5]:
            print(f"   • {failure}")
    print(f"\n{'🏆 All checks passed' if summary.ok else '❌ Some checks failed'}")

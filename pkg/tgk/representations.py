"""
Exact path-space representations and the subset-graph AF check

For a vertex v0 whose positive orbit is acyclic and free of OMEGA classes,
the paths with domain v0 form a finite basis. T0(v) projects onto the paths
with range v and T1(e) prepends e, so every Cuntz-Krieger identity becomes an
equality of 0/1 integer matrices.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np

from .errors import BoundExceededError, ConsistencyError, InfinitePathSpaceError, PreconditionError
from .graph import DiscreteGraph, EdgeClass, classify_vertices
from .lattice import AdmissiblePair, is_admissible, restricted_singular
from .orbits import positive_orbit
from .utils import graded_subsets, parse_subset_label, subset_label

logger = logging.getLogger(__name__)

MAX_REPORTED_ENTRIES = 10


class EdgeCopy(NamedTuple):
    """One of the parallel edges of a finite-multiplicity class"""
    edge: str
    index: int

    def label(self, graph: DiscreteGraph) -> str:
        if graph.edge(self.edge).multiplicity == 1:
            return self.edge
        return f"{self.edge}[{self.index}]"


@dataclass(frozen=True)
class BasisPath:
    """Path (e_1, ..., e_n) of edge copies; e_1 carries the range"""
    steps: Tuple[EdgeCopy, ...]
    range: str
    domain: str

    @property
    def length(self) -> int:
        return len(self.steps)

    def label(self, graph: DiscreteGraph) -> str:
        if not self.steps:
            return self.domain
        return ".".join(step.label(graph) for step in self.steps)


@dataclass
class PathBasis:
    v0: str
    paths: List[BasisPath]
    index: Dict[BasisPath, int] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {p: i for i, p in enumerate(self.paths)}

    def __len__(self) -> int:
        return len(self.paths)

    def position(self, path: BasisPath) -> int:
        return self.index[path]


def _cycle_witness(graph: DiscreteGraph, flow_edges) -> List[str]:
    # find_cycle walks along the flow, i.e. e_n first
    ids = [next(e.id for e in graph.out_edges[u] if e.range == w) for u, w in flow_edges]
    return list(reversed(ids))


def count_paths(graph: DiscreteGraph, v0: str) -> int:
    """|Λ_v0| for an acyclic, OMEGA-free positive orbit"""
    counts: Dict[str, int] = {}
    order = list(nx.topological_sort(graph.digraph().subgraph(positive_orbit(graph, v0))))
    # paths with domain v0 ending at v: one trivial at v0 plus extensions
    for v in order:
        counts[v] = (1 if v == v0 else 0) + sum(
            counts[e.domain] * e.multiplicity for e in graph.in_edges[v] if e.domain in counts
        )
    return sum(counts.values())


def lambda_space(graph: DiscreteGraph, v0: str, max_basis: int = 4096) -> PathBasis:
    """
    Λ_v0: every finite path with domain v0

    Finite multiplicities expand into indexed parallel edges. Paths are
    ordered by length, then by their edge copies.

    Raises:
        InfinitePathSpaceError: If a cycle or an OMEGA class is reachable
        BoundExceededError: If |Λ_v0| exceeds max_basis
    """
    graph.require_vertices([v0])
    orbit = positive_orbit(graph, v0)
    for e in graph.edges:
        if e.domain in orbit and e.is_omega:
            raise InfinitePathSpaceError(f"omega edge {e.id!r} reachable from {v0!r}", witness=e.id)
    try:
        cycle = nx.find_cycle(graph.digraph().subgraph(orbit))
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        witness = _cycle_witness(graph, cycle)
        raise InfinitePathSpaceError(f"cycle reachable from {v0!r}: {witness}", witness=witness)

    size = count_paths(graph, v0)
    if size > max_basis:
        raise BoundExceededError("path basis", max_basis, size, "--max-basis")

    paths = [BasisPath((), v0, v0)]
    layer = list(paths)
    while layer:
        following = []
        for path in layer:
            for e in graph.out_edges[path.range]:
                for k in range(e.multiplicity):
                    following.append(BasisPath((EdgeCopy(e.id, k),) + path.steps, e.range, v0))
        following.sort(key=lambda p: p.steps)
        paths.extend(following)
        layer = following
    logger.debug("path basis at %s: %d paths", v0, len(paths))
    return PathBasis(v0, paths)


@dataclass
class PathRep:
    """T0 and T1 over a path basis as dense int64 0/1 matrices"""
    graph: DiscreteGraph
    basis: PathBasis
    T0: Dict[str, np.ndarray]
    T1: Dict[EdgeCopy, np.ndarray]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self) -> Dict[str, object]:
        return {
            'v0': self.basis.v0,
            'basis': [p.label(self.graph) for p in self.basis.paths],
            'T0': {v: m.tolist() for v, m in sorted(self.T0.items())},
            'T1': {c.label(self.graph): m.tolist() for c, m in sorted(self.T1.items())},
        }


def edge_copies(e: EdgeClass) -> List[EdgeCopy]:
    if e.is_omega:
        return []
    return [EdgeCopy(e.id, k) for k in range(e.multiplicity)]


def build_path_rep(graph: DiscreteGraph, v0: str, max_basis: int = 4096) -> PathRep:
    """
    Matrices of T0 and T1 on Λ_v0

    T1(e) sends δ_λ to δ_eλ when d(e) = r(λ) and annihilates it otherwise;
    OMEGA classes get no matrix.
    """
    basis = lambda_space(graph, v0, max_basis)
    n = len(basis)
    T0 = {v: np.zeros((n, n), dtype=np.int64) for v in graph.vertices}
    for i, path in enumerate(basis.paths):
        T0[path.range][i, i] = 1

    T1: Dict[EdgeCopy, np.ndarray] = {}
    for e in graph.edges:
        for copy in edge_copies(e):
            matrix = np.zeros((n, n), dtype=np.int64)
            for i, path in enumerate(basis.paths):
                if path.range == e.domain:
                    extended = BasisPath((copy,) + path.steps, e.range, path.domain)
                    matrix[basis.position(extended), i] = 1
            T1[copy] = matrix
    return PathRep(graph, basis, T0, T1)


@dataclass(frozen=True)
class IdentityFailure:
    identity: str
    subject: str
    entries: Tuple[Tuple[int, int], ...]

    def to_dict(self) -> Dict[str, object]:
        return {'identity': self.identity, 'subject': self.subject, 'entries': [list(e) for e in self.entries]}


@dataclass
class CKReport:
    """
    Outcome of the relation checks

    "projections": T0 values are orthogonal projections summing to 1;
    "a": T1(e)^T T1(e') = δ T0(d(e)); "b": T0(v) T1(e) = δ T1(e);
    "c": T0(v) = Σ T1(e) T1(e)^T over r^{-1}(v) for regular v.
    """
    v0: str
    failures: List[IdentityFailure] = field(default_factory=list)
    checked: Counter = field(default_factory=Counter)

    @property
    def toeplitz_ok(self) -> bool:
        return not any(f.identity in ("projections", "a", "b") for f in self.failures)

    @property
    def cuntz_krieger_ok(self) -> bool:
        return self.toeplitz_ok and not any(f.identity == "c" for f in self.failures)

    def failing_subjects(self, identity: str) -> List[str]:
        return [f.subject for f in self.failures if f.identity == identity]

    def to_dict(self) -> Dict[str, object]:
        return {
            'v0': self.v0,
            'toeplitz_ok': self.toeplitz_ok,
            'cuntz_krieger_ok': self.cuntz_krieger_ok,
            'checked': dict(sorted(self.checked.items())),
            'failures': [f.to_dict() for f in self.failures],
        }


def _compare(report: CKReport, identity: str, subject: str, left: np.ndarray, right: np.ndarray):
    report.checked[identity] += 1
    if not np.array_equal(left, right):
        entries = tuple(tuple(int(x) for x in idx) for idx in np.argwhere(left != right)[:MAX_REPORTED_ENTRIES])
        report.failures.append(IdentityFailure(identity, subject, entries))


def verify_ck_pair(rep: PathRep) -> CKReport:
    """
    Check the Toeplitz and Cuntz-Krieger identities in exact integers

    For a regular v0 identity (c) fails at v0 itself, since the trivial path
    at v0 is not of the form eλ.
    """
    graph = rep.graph
    report = CKReport(rep.basis.v0)
    n = rep.dimension
    zero = np.zeros((n, n), dtype=np.int64)

    total = sum(rep.T0.values(), zero.copy())
    _compare(report, "projections", "sum", total, np.eye(n, dtype=np.int64))
    for v, p in rep.T0.items():
        _compare(report, "projections", v, p @ p, p)
        _compare(report, "projections", v, p.T, p)

    copies = sorted(rep.T1)
    for c in copies:
        domain = graph.edge(c.edge).domain
        for other in copies:
            expected = rep.T0[domain] if c == other else zero
            _compare(report, "a", f"{c.label(graph)},{other.label(graph)}", rep.T1[c].T @ rep.T1[other], expected)

    for v in graph.vertices:
        for c in copies:
            expected = rep.T1[c] if graph.edge(c.edge).range == v else zero
            _compare(report, "b", f"{v},{c.label(graph)}", rep.T0[v] @ rep.T1[c], expected)

    for v in sorted(classify_vertices(graph).regular):
        total = zero.copy()
        for e in graph.in_edges[v]:
            for c in edge_copies(e):
                total = total + rep.T1[c] @ rep.T1[c].T
        _compare(report, "c", v, rep.T0[v], total)

    logger.debug("relation checks at %s: %s, %d failures", report.v0, dict(report.checked), len(report.failures))
    return report


def kernel_pair(rep: PathRep) -> AdmissiblePair:
    """
    Admissible pair of the kernel of the path representation at a singular v0

    X0 is read off the non-zero T0 values; Z = X0_sg ∪ {v0}.

    Raises:
        PreconditionError: If v0 is regular
        ConsistencyError: If X0 differs from Orb+(v0) or the pair is not
            admissible
    """
    graph, v0 = rep.graph, rep.basis.v0
    if v0 not in classify_vertices(graph).singular:
        raise PreconditionError(f"{v0!r} is regular; the kernel pair needs a singular vertex")
    X0 = frozenset(v for v, m in rep.T0.items() if m.any())
    if X0 != positive_orbit(graph, v0):
        raise ConsistencyError(f"support {sorted(X0)} differs from the positive orbit of {v0!r}")
    pair = AdmissiblePair(X0, restricted_singular(graph, X0) | {v0})
    if not is_admissible(graph, pair.X0, pair.Z):
        raise ConsistencyError(f"kernel pair {pair.to_dict()} is not admissible")
    return pair


def commutant_dimension(rep: PathRep, limit: int = 24) -> Optional[int]:
    """
    Dimension of the commutant of {T0(v), T1(e), T1(e)^T}

    Informational only: 1 means the generated matrix algebra acts
    irreducibly. Returns None when the basis is larger than limit.
    """
    n = rep.dimension
    if n > limit:
        logger.warning("commutant check skipped: basis size %d exceeds %d", n, limit)
        return None
    identity = np.eye(n)
    generators = list(rep.T0.values()) + [m for m in rep.T1.values()] + [m.T for m in rep.T1.values()]
    if not generators:
        return n * n
    system = np.vstack([np.kron(identity, g) - np.kron(g.T, identity) for g in generators])
    return n * n - int(np.linalg.matrix_rank(system))


def subset_graph(n: int, max_n: int = 6) -> DiscreteGraph:
    """
    Finite subsets of {1, ..., n} with an edge (x;v) from v to v \\ {x}

    Raises:
        PreconditionError: If n is negative
        BoundExceededError: If n exceeds max_n
    """
    if n < 0:
        raise PreconditionError("subset graph needs n >= 0")
    if n > max_n:
        raise BoundExceededError("subset graph ground set", max_n, n, "--max-subset-n")
    ground = [str(x) for x in range(1, n + 1)]
    vertices, edges = [], []
    for members in graded_subsets(ground):
        elements = sorted(int(x) for x in members)
        label = subset_label(elements)
        vertices.append(label)
        for x in elements:
            rest = [y for y in elements if y != x]
            edges.append(EdgeClass(f"({x};{label})", label, subset_label(rest)))
    return DiscreteGraph.build(vertices, edges)


def a_sequence(m: int) -> int:
    """a(0) = 1, a(m) = m a(m-1) + 1"""
    if m < 0:
        raise PreconditionError("a(m) needs m >= 0")
    value = 1
    for k in range(1, m + 1):
        value = k * value + 1
    return value


def a_sequence_closed_form(m: int) -> int:
    """Σ_{k=0}^{m} m!/k!"""
    return sum(factorial(m) // factorial(k) for k in range(m + 1))


@dataclass(frozen=True)
class AfBlock:
    subset: str
    size: int  # a(|v|)
    path_count: int
    units_ok: Optional[bool] = None
    literal_checked: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            'subset': self.subset,
            'size': self.size,
            'path_count': self.path_count,
            'units_ok': self.units_ok,
            'literal_checked': self.literal_checked,
        }


@dataclass
class AfBlockReport:
    n: int
    v0: str
    blocks: List[AfBlock]
    census_ok: bool
    multiset_ok: bool
    units_verified: bool
    total_dimension: int

    @property
    def ok(self) -> bool:
        units = all(b.units_ok for b in self.blocks) if self.units_verified else True
        return self.census_ok and self.multiset_ok and units

    def to_dict(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'v0': self.v0,
            'blocks': [b.to_dict() for b in self.blocks],
            'census_ok': self.census_ok,
            'multiset_ok': self.multiset_ok,
            'units_verified': self.units_verified,
            'total_dimension': self.total_dimension,
            'ok': self.ok,
        }


class _DirectSum:
    """Block-diagonal sum of the path representations at every w ⊆ v0"""

    def __init__(self, graph: DiscreteGraph, components: Dict[str, PathRep]):
        self.components = components
        self.offsets: Dict[str, int] = {}
        offset = 0
        for w, rep in components.items():
            self.offsets[w] = offset
            offset += rep.dimension
        self.dimension = offset
        self.T0 = {v: self._stack(lambda rep, v=v: rep.T0[v]) for v in graph.vertices}
        self.T1 = {
            copy: self._stack(lambda rep, copy=copy: rep.T1[copy])
            for e in graph.edges for copy in edge_copies(e)
        }

    def _stack(self, pick) -> np.ndarray:
        matrix = np.zeros((self.dimension, self.dimension), dtype=np.int64)
        for w, rep in self.components.items():
            start = self.offsets[w]
            stop = start + rep.dimension
            matrix[start:stop, start:stop] = pick(rep)
        return matrix

    def unit_vector(self, w: str, path: BasisPath) -> np.ndarray:
        vector = np.zeros(self.dimension, dtype=np.int64)
        vector[self.offsets[w] + self.components[w].basis.position(path)] = 1
        return vector

    def apply(self, path: BasisPath, vector: np.ndarray) -> np.ndarray:
        """T(y) = T1(e_1) ... T1(e_k) applied to a vector, T0(r(y)) for a trivial y"""
        if not path.steps:
            return self.T0[path.range] @ vector
        for step in reversed(path.steps):
            vector = self.T1[step] @ vector
        return vector

    def apply_adjoint(self, path: BasisPath, vector: np.ndarray) -> np.ndarray:
        if not path.steps:
            return self.T0[path.range].T @ vector
        for step in path.steps:
            vector = self.T1[step].T @ vector
        return vector


def _check_block(graph: DiscreteGraph, total: _DirectSum, v: str, v0_members, literal_limit: int) -> Tuple[bool, bool]:
    members = parse_subset_label(v)
    q = total.T0[v].copy()
    for x in sorted(v0_members - members):
        edge = graph.edge(f"({x};{subset_label(members | {x})})")
        t = total.T1[EdgeCopy(edge.id, 0)]
        q = q - t @ t.T

    rep = total.components[v]
    anchor = total.unit_vector(v, BasisPath((), v, v))
    if not np.array_equal(q, np.outer(anchor, anchor)):
        return False, False

    paths = rep.basis.paths
    images = [total.apply(y, anchor) for y in paths]
    for z in paths:
        for y, image in zip(paths, images):
            expected = anchor if y == z else np.zeros_like(anchor)
            if not np.array_equal(total.apply_adjoint(z, image), expected):
                return False, False

    # Σ_y u_{y,y} is the identity of the component at v
    start = total.offsets[v]
    stop = start + rep.dimension
    diagonal = sum((np.outer(image, image) for image in images), np.zeros((total.dimension,) * 2, dtype=np.int64))
    unit = np.zeros_like(diagonal)
    unit[start:stop, start:stop] = np.eye(rep.dimension, dtype=np.int64)
    if not np.array_equal(diagonal, unit):
        return False, False

    if len(paths) > literal_limit:
        return True, False
    local = [image[start:stop] for image in images]
    size = len(local)
    units = {(i, j): np.outer(local[i], local[j]) for i in range(size) for j in range(size)}
    for (i, j), left in units.items():
        for (k, m), right in units.items():
            expected = units[(i, m)] if j == k else np.zeros_like(left)
            if not np.array_equal(left @ right, expected):
                return False, True
    return True, True


def af_block_check(n: int, max_n: int = 6, units_max_n: int = 4, literal_limit: int = 5) -> AfBlockReport:
    """
    Dimension law and matrix units of the subset graph at v0 = {1, ..., n}

    Every subset v has a(|v|) paths with domain v, the blocks come in
    C(n, m) copies of size a(m), and for n <= units_max_n the matrix units
    s_y q_v s_z^* are verified in the direct sum of the path representations
    at every w ⊆ v0. Blocks of size <= literal_limit are also multiplied out
    pair by pair.
    """
    graph = subset_graph(n, max_n)
    ground = frozenset(range(1, n + 1))
    v0 = subset_label(ground)

    components = {w: build_path_rep(graph, w) for w in graph.vertices}
    sizes = {w: a_sequence(len(parse_subset_label(w))) for w in graph.vertices}
    census_ok = all(components[w].dimension == sizes[w] for w in graph.vertices)
    expected = Counter({a_sequence(m): comb(n, m) for m in range(n + 1)})
    multiset_ok = Counter(rep.dimension for rep in components.values()) == expected

    verify = n <= units_max_n
    total = _DirectSum(graph, components) if verify else None
    blocks = []
    for w in graph.vertices:
        units_ok, literal = (None, False)
        if verify:
            units_ok, literal = _check_block(graph, total, w, ground, literal_limit)
        blocks.append(AfBlock(w, sizes[w], components[w].dimension, units_ok, literal))
    if not verify:
        logger.info("matrix units not verified for n = %d (limit %d)", n, units_max_n)

    report = AfBlockReport(
        n=n,
        v0=v0,
        blocks=blocks,
        census_ok=census_ok,
        multiset_ok=multiset_ok,
        units_verified=verify,
        total_dimension=sum(rep.dimension for rep in components.values()),
    )
    logger.info("af check n=%d: %d blocks, ok=%s", n, len(blocks), report.ok)
    return report

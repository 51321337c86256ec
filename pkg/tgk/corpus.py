"""
Built-in example graphs and the seeded random family

Corpus names with a parameter use "name:arg", e.g. "cycle:3", "subset:2"
or "cycles:2,3".
"""

import random
from typing import Callable, Dict, List

from .errors import PreconditionError, UnknownCorpusError
from .graph import OMEGA, DiscreteGraph, EdgeClass, GraphBuilder
from .representations import subset_graph


def cycle_graph(n: int) -> DiscreteGraph:
    """Vertices "0".."n-1" with edge e{k} from k to k+1 mod n"""
    if n < 1:
        raise PreconditionError("cycle length must be >= 1")
    builder = GraphBuilder().vertices(*(str(k) for k in range(n)))
    for k in range(n):
        builder.edge(f"e{k}", str(k), str((k + 1) % n))
    return builder.build()


def edge_graph() -> DiscreteGraph:
    """u -e-> w"""
    return GraphBuilder().vertices("u", "w").edge("e", "u", "w").build()


def omega_graph() -> DiscreteGraph:
    """v -e0-> w and v' -e1-> w with e1 of multiplicity OMEGA"""
    return (GraphBuilder()
            .vertices("v", "v'", "w")
            .edge("e0", "v", "w")
            .edge("e1", "v'", "w", OMEGA)
            .build())


def loop_entrance_graph() -> DiscreteGraph:
    """Self-loop l at a with the entrance f from b"""
    return GraphBuilder().vertices("a", "b").edge("l", "a", "a").edge("f", "b", "a").build()


def breaking_graph() -> DiscreteGraph:
    """Self-loop l at a and an OMEGA class g from c into a"""
    return GraphBuilder().vertices("a", "c").edge("l", "a", "a").edge("g", "c", "a", OMEGA).build()


def cycle_with_source(n: int) -> DiscreteGraph:
    """An n-cycle fed by the source t through edge s"""
    base = cycle_graph(n)
    return DiscreteGraph.build(base.vertices + ("t",), base.edges + (EdgeClass("s", "t", "0"),))


def complete_graph(n: int) -> DiscreteGraph:
    """Vertices "0".."n-1" with an edge e{i}_{j} between every ordered pair i != j"""
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    builder = GraphBuilder().vertices(*(str(k) for k in range(n)))
    for i in range(n):
        for j in range(n):
            if i != j:
                builder.edge(f"e{i}_{j}", str(i), str(j))
    return builder.build()


def disjoint_union(*graphs: DiscreteGraph) -> DiscreteGraph:
    """Union with ids prefixed by "c{i}_" per component"""
    vertices: List[str] = []
    edges: List[EdgeClass] = []
    for i, graph in enumerate(graphs):
        prefix = f"c{i}_"
        vertices.extend(prefix + v for v in graph.vertices)
        edges.extend(
            EdgeClass(prefix + e.id, prefix + e.domain, prefix + e.range, e.multiplicity)
            for e in graph.edges
        )
    return DiscreteGraph.build(vertices, edges)


def cycles(*lengths: int) -> DiscreteGraph:
    """Disjoint union of cycles of the given lengths"""
    return disjoint_union(*(cycle_graph(n) for n in lengths))


def random_graph(
    rng: random.Random,
    max_vertices: int = 5,
    max_edges: int = 8,
    omega_probability: float = 0.2,
    max_multiplicity: int = 2,
    acyclic: bool = False,
) -> DiscreteGraph:
    """
    One member of the seeded random family

    Vertices are "v0", "v1", ...; with acyclic set, edges only run from a
    higher to a lower index and carry no OMEGA multiplicity.
    """
    n = rng.randint(1, max_vertices)
    vertices = [f"v{k}" for k in range(n)]
    edges = []
    for k in range(rng.randint(0, max_edges)):
        domain, range_ = rng.choice(vertices), rng.choice(vertices)
        if acyclic:
            if domain == range_:
                continue
            if int(domain[1:]) < int(range_[1:]):
                domain, range_ = range_, domain
            multiplicity = rng.randint(1, max_multiplicity)
        elif rng.random() < omega_probability:
            multiplicity = OMEGA
        else:
            multiplicity = rng.randint(1, max_multiplicity)
        edges.append(EdgeClass(f"e{k}", domain, range_, multiplicity))
    return DiscreteGraph.build(vertices, edges)


def random_family(seed: int, count: int, **kwargs) -> List[DiscreteGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, **kwargs) for _ in range(count)]


def _int_arg(name: str, arg: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise UnknownCorpusError(f"corpus graph {name!r} needs an integer argument, got {arg!r}") from None


FIXED: Dict[str, Callable[[], DiscreteGraph]] = {
    'edge': edge_graph,
    'omega': omega_graph,
    'loop_entrance': loop_entrance_graph,
    'breaking': breaking_graph,
}

# factories taking the argument after ":" and the subset-graph bound
PARAMETRIC: Dict[str, Callable[[str, int], DiscreteGraph]] = {
    'cycle': lambda arg, _: cycle_graph(_int_arg("cycle", arg)),
    'cycle_source': lambda arg, _: cycle_with_source(_int_arg("cycle_source", arg)),
    'subset': lambda arg, max_n: subset_graph(_int_arg("subset", arg), max_n),
    'cycles': lambda arg, _: cycles(*(_int_arg("cycles", part) for part in arg.split(","))),
    'complete': lambda arg, _: complete_graph(_int_arg("complete", arg)),
}

CORPUS = sorted(FIXED) + sorted(PARAMETRIC)

EXAMPLE_NAMES = [
    "edge", "omega", "loop_entrance", "breaking",
    "cycle:1", "cycle:3", "cycle_source:3", "subset:2", "cycles:2,3",
]


def load(name: str, max_subset_n: int = 6) -> DiscreteGraph:
    """
    Resolve a corpus name such as "omega" or "subset:3"

    Raises:
        UnknownCorpusError: If the name or its argument is not recognised
    """
    key, _, arg = name.partition(":")
    if key in FIXED:
        if arg:
            raise UnknownCorpusError(f"corpus graph {key!r} takes no argument")
        return FIXED[key]()
    if key in PARAMETRIC:
        if not arg:
            raise UnknownCorpusError(f"corpus graph {key!r} needs an argument")
        return PARAMETRIC[key](arg, max_subset_n)
    raise UnknownCorpusError(f"unknown corpus graph {name!r}; known: {', '.join(sorted(CORPUS))}")

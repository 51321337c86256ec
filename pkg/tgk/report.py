"""
Analysis report: every invariant of a graph in one serializable object
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .classification import analyze_verdicts, prime_admissible_pairs, primitivity_report
from .closures import enumerate_invariant_sets
from .config import AnalysisConfig
from .graph import DiscreteGraph, classify_vertices, is_row_finite
from .io import graph_to_dict
from .lattice import enumerate_admissible_pairs
from .orbits import breaking_vertices, maximal_heads, periodic_points

logger = logging.getLogger(__name__)


@dataclass
class AnalysisReport:
    graph: Dict[str, Any]
    classification: Dict[str, List[str]]
    invariant_sets: List[List[str]]
    lattice: Dict[str, Any]
    verdicts: Dict[str, Dict[str, Any]]
    prime_pairs: List[Dict[str, List[str]]]
    prime_ideals: List[Dict[str, Any]]
    primitivity: Dict[str, Any]
    orbits: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    sections: Dict[str, Any] = field(default_factory=dict)  # optional rep / af output

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'graph': self.graph,
            'classification': self.classification,
            'invariant_set_count': len(self.invariant_sets),
            'invariant_sets': self.invariant_sets,
            'lattice': self.lattice,
            'verdicts': self.verdicts,
            'prime_pairs': self.prime_pairs,
            'prime_ideals': self.prime_ideals,
            'primitivity': self.primitivity,
            'orbits': self.orbits,
            'config': self.config,
        }
        data.update(self.sections)
        return data


def build_report(graph: DiscreteGraph, config: Optional[AnalysisConfig] = None) -> AnalysisReport:
    """
    Classify vertices, enumerate the lattice, and compute verdicts and primes

    Raises:
        BoundExceededError: If an enumeration bound is exceeded
    """
    config = config or AnalysisConfig()
    logger.info("analyzing graph with %d vertices, %d edge classes", len(graph.vertices), len(graph.edges))

    family = enumerate_invariant_sets(graph, config.max_vertices)
    lattice = enumerate_admissible_pairs(
        graph, config.max_vertices, config.parallel, config.cross_check, invariant_sets=family,
    )
    verdicts = analyze_verdicts(graph, config)
    primes = prime_admissible_pairs(graph, config.max_vertices, config.cross_check, lattice=lattice)
    primitivity = primitivity_report(graph, config.max_vertices, config.cross_check, config.max_stem)
    points = periodic_points(graph)
    heads = maximal_heads(graph, config.max_vertices, config.cross_check, invariant_sets=family)

    return AnalysisReport(
        graph=graph_to_dict(graph),
        classification=dict(classify_vertices(graph).to_dict(), row_finite=is_row_finite(graph)),
        invariant_sets=[sorted(X) for X in family],
        lattice=lattice.to_dict(),
        verdicts={name: v.to_dict() for name, v in verdicts.items()},
        prime_pairs=[p.to_dict() for p in primes],
        prime_ideals=[d.to_dict() for d in primitivity.primes],
        primitivity=primitivity.to_dict(),
        orbits={
            'periodic': {v: points.periods[v] for v in sorted(points.periods)},
            'aperiodic': sorted(points.aperiodic),
            'maximal_heads': [h.to_dict() for h in heads],
            'breaking_vertices': sorted(breaking_vertices(graph)),
        },
        config=config.to_dict(),
    )


def print_report(report: AnalysisReport):
    """Pretty print a report summary"""
    data = report.to_dict()
    graph = data['graph']
    print("\n" + "=" * 70)
    print(f"Graph Analysis: {len(graph['vertices'])} vertices, {len(graph['edges'])} edge classes")
    print("=" * 70)

    classes = data['classification']
    print(f"\n🔹 Sources: {', '.join(classes['sources']) or '-'}")
    print(f"🔹 Infinite receivers: {', '.join(classes['infinite_receivers']) or '-'}")
    print(f"🔹 Regular: {', '.join(classes['regular']) or '-'}")

    print(f"\n📊 Invariant sets: {data['invariant_set_count']}")
    print(f"📊 Admissible pairs: {data['lattice']['count']}")

    print(f"\n{'─' * 70}")
    for name, verdict in sorted(data['verdicts'].items()):
        mark = "✅" if verdict['value'] else "❌"
        print(f"{mark} {name}")

    print(f"\n{'─' * 70}")
    print(f"🧩 Prime ideals: {len(data['prime_ideals'])}")
    for descriptor in data['prime_ideals']:
        variant = descriptor['variant']
        if variant == "breaking_vertex":
            print(f"   • breaking vertex {descriptor['vertex']}")
        elif variant == "aperiodic_head":
            print(f"   • aperiodic head {{{', '.join(descriptor['X0'])}}}")
        else:
            print(f"   • circle family of period {descriptor['period']}")
    primitive = "✅" if data['primitivity']['algebra_primitive'] else "❌"
    print(f"\n{primitive} algebra primitive")

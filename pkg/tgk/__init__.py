"""
Open TGK (Topological Graph Kit)
Ideal structure of graph algebras for finite discrete graphs

Given a finite graph whose edge classes may carry an infinite multiplicity,
the kit computes hereditary and saturated closures, invariant sets, the
lattice of admissible pairs (gauge-invariant ideals), maximal heads and
periodic points, simplicity / primeness / primitivity verdicts, the list of
prime ideals, and exact matrix checks of the Cuntz-Krieger relations on
finite path spaces.

License: MIT
"""

from .errors import (
    TGKError,
    GraphValidationError,
    GraphParseError,
    UnknownCorpusError,
    PreconditionError,
    InfinitePathSpaceError,
    BoundExceededError,
    ConsistencyError,
)
from .config import AnalysisConfig, AnalysisPresets, ConfigBuilder
from .graph import (
    OMEGA,
    EdgeClass,
    DiscreteGraph,
    GraphBuilder,
    Path,
    Lasso,
    VertexClassification,
    validate,
    classify_vertices,
    is_row_finite,
    paths_between,
    simple_loops,
    loop_without_entrances,
    restrict,
)
from .closures import (
    is_positively_invariant,
    is_negatively_invariant,
    is_invariant,
    is_hereditary,
    is_saturated,
    hereditary_closure,
    saturated_closure,
    largest_invariant_avoiding,
    enumerate_invariant_sets,
)
from .orbits import (
    positive_orbit,
    negative_orbits,
    iter_negative_orbits,
    orbit_space,
    maximal_heads,
    periodic_points,
    periodic_classes,
    split_heads,
    breaking_vertices,
)
from .lattice import (
    AdmissiblePair,
    IdealLattice,
    QuotientGraph,
    HereditarySubgraph,
    is_admissible,
    pair_union,
    enumerate_admissible_pairs,
    row_finite_bijection_check,
    ideal_generated_by,
    quotient_graph,
    hereditary_subgraph,
)
from .classification import (
    Verdict,
    PrimeKind,
    PrimeIdealDescriptor,
    is_topologically_free,
    is_free,
    is_minimal,
    is_topologically_transitive,
    is_generated_by_loop,
    is_simple,
    is_prime_algebra,
    prime_admissible_pairs,
    prime_ideals,
    primitivity_report,
    analyze_verdicts,
)
from .representations import (
    PathBasis,
    PathRep,
    CKReport,
    AfBlockReport,
    lambda_space,
    build_path_rep,
    verify_ck_pair,
    kernel_pair,
    subset_graph,
    a_sequence,
    af_block_check,
)
from .report import AnalysisReport, build_report, print_report
from .experimentation import CrossCheck, CheckResult, CheckSummary, print_summary
from .cli import main

__version__ = "0.1.0"
__author__ = "Open TGK contributors"
__license__ = "MIT"
__project__ = "Open TGK (Topological Graph Kit)"

__all__ = [
    # Errors
    "TGKError",
    "GraphValidationError",
    "GraphParseError",
    "UnknownCorpusError",
    "PreconditionError",
    "InfinitePathSpaceError",
    "BoundExceededError",
    "ConsistencyError",
    # Configuration
    "AnalysisConfig",
    "AnalysisPresets",
    "ConfigBuilder",
    # Graph model
    "OMEGA",
    "EdgeClass",
    "DiscreteGraph",
    "GraphBuilder",
    "Path",
    "Lasso",
    "VertexClassification",
    "validate",
    "classify_vertices",
    "is_row_finite",
    "paths_between",
    "simple_loops",
    "loop_without_entrances",
    "restrict",
    # Closures
    "is_positively_invariant",
    "is_negatively_invariant",
    "is_invariant",
    "is_hereditary",
    "is_saturated",
    "hereditary_closure",
    "saturated_closure",
    "largest_invariant_avoiding",
    "enumerate_invariant_sets",
    # Orbits
    "positive_orbit",
    "negative_orbits",
    "iter_negative_orbits",
    "orbit_space",
    "maximal_heads",
    "periodic_points",
    "periodic_classes",
    "split_heads",
    "breaking_vertices",
    # Lattice
    "AdmissiblePair",
    "IdealLattice",
    "QuotientGraph",
    "HereditarySubgraph",
    "is_admissible",
    "pair_union",
    "enumerate_admissible_pairs",
    "row_finite_bijection_check",
    "ideal_generated_by",
    "quotient_graph",
    "hereditary_subgraph",
    # Classification
    "Verdict",
    "PrimeKind",
    "PrimeIdealDescriptor",
    "is_topologically_free",
    "is_free",
    "is_minimal",
    "is_topologically_transitive",
    "is_generated_by_loop",
    "is_simple",
    "is_prime_algebra",
    "prime_admissible_pairs",
    "prime_ideals",
    "primitivity_report",
    "analyze_verdicts",
    # Representations
    "PathBasis",
    "PathRep",
    "CKReport",
    "AfBlockReport",
    "lambda_space",
    "build_path_rep",
    "verify_ck_pair",
    "kernel_pair",
    "subset_graph",
    "a_sequence",
    "af_block_check",
    # Reports
    "AnalysisReport",
    "build_report",
    "print_report",
    # Cross-checks
    "CrossCheck",
    "CheckResult",
    "CheckSummary",
    "print_summary",
    # CLI
    "main",
]

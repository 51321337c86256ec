"""
Analysis configuration for the Topological Graph Kit

Bounds and switches shared by the enumeration, representation and
cross-check code. The CLI maps its flags onto an AnalysisConfig.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional


@dataclass
class AnalysisConfig:
    """Bounds and switches for an analysis run"""
    max_vertices: int = 16  # invariant-set / lattice enumeration
    max_basis: int = 4096  # path basis dimension
    max_stem: Optional[int] = None  # None means |E^0|
    max_subset_n: int = 6  # subset-graph ground set
    cross_check: bool = True
    parallel: bool = False
    commutant_limit: int = 24
    custom_options: Dict[str, Any] = field(default_factory=dict)

    def stem_bound(self, graph) -> int:
        """Resolve max_stem against a graph"""
        if self.max_stem is None:
            return len(graph.vertices)
        return self.max_stem

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a plain dictionary (report metadata)"""
        options = {
            'max_vertices': self.max_vertices,
            'max_basis': self.max_basis,
            'max_stem': self.max_stem,
            'max_subset_n': self.max_subset_n,
            'cross_check': self.cross_check,
            'parallel': self.parallel,
            'commutant_limit': self.commutant_limit,
        }
        options.update(self.custom_options)
        return options


class AnalysisPresets:
    """Pre-configured settings for common runs"""

    @staticmethod
    def default() -> AnalysisConfig:
        """Documented defaults"""
        return AnalysisConfig()

    @staticmethod
    def quick() -> AnalysisConfig:
        """Skip internal cross-checks"""
        return AnalysisConfig(cross_check=False)

    @staticmethod
    def thorough() -> AnalysisConfig:
        """Larger bounds, parallel enumeration"""
        return AnalysisConfig(max_vertices=20, max_basis=16384, parallel=True)

    @staticmethod
    def custom(**kwargs) -> AnalysisConfig:
        """Defaults overridden by keyword; unknown keys go to custom_options"""
        known = {k: v for k, v in kwargs.items() if k in AnalysisConfig.__dataclass_fields__}
        extra = {k: v for k, v in kwargs.items() if k not in known}
        return AnalysisConfig(**known, custom_options=extra)


class ConfigBuilder:
    """
    Fluent interface for building an AnalysisConfig

    Example:
        >>> config = (ConfigBuilder()
        ...           .with_preset("quick")
        ...           .with_max_vertices(10)
        ...           .build())
    """

    def __init__(self):
        self._config = AnalysisConfig()

    def with_preset(self, preset_name: str):
        """Start from a named preset"""
        presets = {
            'default': AnalysisPresets.default,
            'quick': AnalysisPresets.quick,
            'thorough': AnalysisPresets.thorough,
        }
        if preset_name not in presets:
            raise ValueError(f"unknown preset {preset_name!r}")
        self._config = presets[preset_name]()
        return self

    def with_max_vertices(self, value: int):
        self._config.max_vertices = value
        return self

    def with_max_basis(self, value: int):
        self._config.max_basis = value
        return self

    def with_max_stem(self, value: Optional[int]):
        self._config.max_stem = value
        return self

    def with_max_subset_n(self, value: int):
        self._config.max_subset_n = value
        return self

    def with_cross_check(self, enabled: bool = True):
        self._config.cross_check = enabled
        return self

    def with_parallel(self, enabled: bool = True):
        self._config.parallel = enabled
        return self

    def build(self) -> AnalysisConfig:
        """Return a copy so the builder can be reused"""
        return replace(self._config, custom_options=dict(self._config.custom_options))

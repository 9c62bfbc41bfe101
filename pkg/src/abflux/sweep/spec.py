"""
Sweep specification
Validated grids, options and per-point records of a cross-section sweep
"""

import math
from enum import Enum
from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..channels import TruncationPolicy
from ..cross_section import Statistics


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class EvaluationPath(str, Enum):
    """How each point is computed: Bessel closed form or model phase shifts"""
    CLOSED_FORM = "closed-form"
    PHASE_SHIFT = "phase-shift"


def _strictly_increasing(name: str, grid: List[float]) -> List[float]:
    if not grid:
        raise ValueError(f"{name} must not be empty")
    if not all(math.isfinite(value) for value in grid):
        raise ValueError(f"{name} must contain finite values only")
    if any(later <= earlier for earlier, later in zip(grid, grid[1:])):
        raise ValueError(f"{name} must be strictly increasing")
    return grid


class SweepSpec(BaseModel):
    """
    A sweep over ka (outer) and mu0 (inner) at fixed statistics.

    `normalization` selects sigma / 2 pi a^2 when true and sigma / a^2 when
    false for the `sigma_over_sigma0` column.
    """
    model_config = ConfigDict(frozen=True, use_enum_values=False)

    ka_grid: List[float]
    mu0_grid: List[float]
    statistics: Statistics = Statistics.DISTINGUISHABLE
    policy: TruncationPolicy = Field(default_factory=TruncationPolicy)
    output_format: OutputFormat = OutputFormat.CSV
    normalization: bool = True
    path: EvaluationPath = EvaluationPath.CLOSED_FORM
    model: str = "hard-sphere"
    workers: int = Field(4, ge=1, le=64)
    description: str = ""

    @field_validator("ka_grid")
    @classmethod
    def _check_ka_grid(cls, grid: List[float]) -> List[float]:
        grid = _strictly_increasing("ka_grid", grid)
        if grid[0] <= 0.0:
            raise ValueError("ka_grid values must be > 0")
        return grid

    @field_validator("mu0_grid")
    @classmethod
    def _check_mu0_grid(cls, grid: List[float]) -> List[float]:
        return _strictly_increasing("mu0_grid", grid)

    @field_validator("statistics", mode="before")
    @classmethod
    def _parse_statistics(cls, value):
        return Statistics.from_label(value) if isinstance(value, str) else value

    def points(self) -> Iterator[Tuple[float, float]]:
        """Grid points in row-major order: ka outer, mu0 inner"""
        for ka in self.ka_grid:
            for mu0 in self.mu0_grid:
                yield ka, mu0

    @property
    def size(self) -> int:
        return len(self.ka_grid) * len(self.mu0_grid)


class SweepRecord(BaseModel):
    """One evaluated grid point"""
    model_config = ConfigDict(frozen=True)

    ka: float
    mu0: float
    statistics: Statistics
    sigma_normalized: float
    sigma_raw: float
    channels_used: int
    convergence_residual: float
    degenerate_flag: bool
    converged: bool = True
    fallback_missing: bool = False

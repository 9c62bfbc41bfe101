"""
Figure presets
Sweep grids reproducing the flux-periodicity and suppression figures
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..channels import TruncationPolicy
from ..cross_section import Statistics
from ..errors import PresetError
from .spec import OutputFormat, SweepSpec


def _grid(start: float, stop: float, step: float) -> List[float]:
    count = int(round((stop - start) / step))
    return [round(start + i * step, 10) for i in range(count + 1)]


@dataclass(frozen=True)
class FigurePreset:
    """Axes of one figure; `claim` is the extremum structure it should show"""
    name: str
    title: str
    statistics: Statistics
    ka_grid: Tuple[float, ...]
    mu0_grid: Tuple[float, ...]
    claim: str

    @property
    def size(self) -> int:
        return len(self.ka_grid) * len(self.mu0_grid)

    def comments(self) -> List[str]:
        """Header comment lines documenting the grid"""
        return [
            f"{self.name}: {self.title}",
            f"statistics={self.statistics.value}",
            f"ka: {len(self.ka_grid)} points from {self.ka_grid[0]!r} to {self.ka_grid[-1]!r}",
            f"mu0: {len(self.mu0_grid)} points from {self.mu0_grid[0]!r} to {self.mu0_grid[-1]!r}",
            f"expected: {self.claim}",
        ]

    def to_spec(
        self,
        policy: Optional[TruncationPolicy] = None,
        workers: int = 4,
        output_format: OutputFormat = OutputFormat.CSV,
    ) -> SweepSpec:
        return SweepSpec(
            ka_grid=list(self.ka_grid),
            mu0_grid=list(self.mu0_grid),
            statistics=self.statistics,
            policy=policy or TruncationPolicy(),
            output_format=output_format,
            workers=workers,
            description=f"{self.name}: {self.title}",
        )


def _load_presets() -> Dict[str, FigurePreset]:
    """Predefined figure grids"""
    ka_sweep = tuple(_grid(0.1, 10.0, 0.1))
    ka_short = tuple(_grid(0.1, 5.0, 0.1))
    small_ka = (0.1, 0.3, 0.5)
    return {
        "fig1": FigurePreset(
            name="fig1",
            title="total cross section against ka at several fluxes",
            statistics=Statistics.DISTINGUISHABLE,
            ka_grid=ka_sweep,
            mu0_grid=(0.0, 0.25, 0.5, 1.0),
            claim="strong suppression at mu0=0.5 for small ka; mu0=1 equals mu0=0",
        ),
        "fig2": FigurePreset(
            name="fig2",
            title="total cross section against flux, period one",
            statistics=Statistics.DISTINGUISHABLE,
            ka_grid=small_ka,
            mu0_grid=tuple(_grid(0.0, 3.0, 0.05)),
            claim="minima at half-odd-integer mu0 for ka <= 0.5",
        ),
        "fig3": FigurePreset(
            name="fig3",
            title="identical bosons against ka at several fluxes",
            statistics=Statistics.BOSON,
            ka_grid=ka_short,
            mu0_grid=(0.0, 0.5, 1.0, 1.5, 2.0),
            claim="near zero at odd-integer mu0 for small ka",
        ),
        "fig4": FigurePreset(
            name="fig4",
            title="identical bosons against flux, period two",
            statistics=Statistics.BOSON,
            ka_grid=small_ka,
            mu0_grid=tuple(_grid(0.0, 4.0, 0.05)),
            claim="minima at odd-integer mu0 for ka <= 0.5",
        ),
        "fig5": FigurePreset(
            name="fig5",
            title="identical fermions against ka at several fluxes",
            statistics=Statistics.FERMION,
            ka_grid=ka_short,
            mu0_grid=(0.0, 0.5, 1.0, 1.5, 2.0),
            claim="near zero at even-integer mu0 for small ka",
        ),
        "fig6": FigurePreset(
            name="fig6",
            title="identical fermions against flux, period two",
            statistics=Statistics.FERMION,
            ka_grid=small_ka,
            mu0_grid=tuple(_grid(0.0, 4.0, 0.05)),
            claim="minima at even-integer mu0 for ka <= 0.5",
        ),
    }


PRESETS = _load_presets()


def get_preset(name: str) -> FigurePreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise PresetError(f"unknown figure preset {name!r}; choose from {', '.join(PRESETS)}") from None


def figure_preset(name: str) -> SweepSpec:
    """SweepSpec for a named figure (fig1 ... fig6) with default policy"""
    return get_preset(name).to_spec()


def list_presets() -> List[FigurePreset]:
    return list(PRESETS.values())

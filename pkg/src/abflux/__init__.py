"""
abflux - Aharonov-Bohm flux partial-wave scattering
Amplitudes and total cross sections for a hard sphere threaded by a flux line
"""

__version__ = "0.1.0"
__author__ = "abflux developers"

from .channels import Channel, TruncationPolicy, make_channel
from .cross_section import (
    Statistics,
    flux_free_total,
    hard_sphere_total_closed_form,
    total_cross_section,
)
from .errors import AbfluxError, ConvergenceError, DegeneracyError, DomainError
from .scattering import HardSphere, NullScatterer, scattering_amplitude
from .sweep import SweepSpec, figure_preset, run_sweep

__all__ = [
    "Channel",
    "TruncationPolicy",
    "make_channel",
    "Statistics",
    "total_cross_section",
    "hard_sphere_total_closed_form",
    "flux_free_total",
    "HardSphere",
    "NullScatterer",
    "scattering_amplitude",
    "SweepSpec",
    "figure_preset",
    "run_sweep",
    "AbfluxError",
    "ConvergenceError",
    "DegeneracyError",
    "DomainError",
    "__version__",
]

"""
Cross sections
Total, differential and limiting cross sections for the flux-threaded scatterer
"""

from .differential import differential_cross_section, integrated_cross_section
from .statistics import Statistics
from .total import (
    CrossSectionValue,
    channel_term_F,
    flux_free_total,
    hard_sphere_total_closed_form,
    high_energy_estimate,
    low_energy_estimate,
    total_cross_section,
)
from .transport import attenuated_current, mean_free_path

__all__ = [
    "Statistics",
    "CrossSectionValue",
    "channel_term_F",
    "total_cross_section",
    "hard_sphere_total_closed_form",
    "flux_free_total",
    "high_energy_estimate",
    "low_energy_estimate",
    "differential_cross_section",
    "integrated_cross_section",
    "attenuated_current",
    "mean_free_path",
]

"""
Scattering
Scatterer models, channel interference factors and the scattering amplitude
"""

from .amplitude import (
    AXIAL,
    EQUATORIAL,
    AmplitudeValue,
    IncidentDirection,
    amplitude_grid,
    modified_plane_wave,
    scattering_amplitude,
)
from .interference import DEGENERACY_THRESHOLD, channel_amplitude_factor, interference_weight
from .optical import OpticalTheoremCheck, optical_theorem_residual
from .phase_shifts import (
    HardSphere,
    NullScatterer,
    ScattererModel,
    exterior_radial_function,
    hard_sphere_degenerate,
    hard_sphere_factor,
    hard_sphere_phase_shift,
    hard_sphere_weight,
    low_energy_tan_delta,
    model_names,
    scatterer_model,
)

__all__ = [
    "ScattererModel",
    "HardSphere",
    "NullScatterer",
    "hard_sphere_phase_shift",
    "hard_sphere_weight",
    "hard_sphere_factor",
    "hard_sphere_degenerate",
    "exterior_radial_function",
    "low_energy_tan_delta",
    "scatterer_model",
    "model_names",
    "DEGENERACY_THRESHOLD",
    "channel_amplitude_factor",
    "interference_weight",
    "IncidentDirection",
    "EQUATORIAL",
    "AXIAL",
    "AmplitudeValue",
    "scattering_amplitude",
    "amplitude_grid",
    "modified_plane_wave",
    "OpticalTheoremCheck",
    "optical_theorem_residual",
]

"""
Transport
Beam attenuation by a gas of scatterers
"""

import math
from typing import Union

import numpy as np

from ..errors import DomainError
from ..specfun.elementary import require_finite


def _nonnegative(name: str, value: float) -> float:
    value = require_finite(name, value)
    if value < 0.0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    return value


def attenuated_current(
    j0: float, sigma: float, density: float, distance: Union[float, np.ndarray]
) -> Union[float, np.ndarray]:
    """
    Current left after a path through scatterers, j0 exp(-sigma n x).

    A vanishing cross section leaves the current undamped.

    Args:
        j0: Incoming current
        sigma: Total cross section
        density: Scatterer number density, in units consistent with sigma
        distance: Path length(s), >= 0

    Returns:
        float or array matching distance
    """
    j0 = require_finite("j0", j0)
    sigma = _nonnegative("sigma", sigma)
    density = _nonnegative("density", density)
    x = np.asarray(distance, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x < 0.0):
        raise DomainError("distance must be finite and >= 0")
    value = j0 * np.exp(-sigma * density * x)
    return float(value) if value.ndim == 0 else value


def mean_free_path(sigma: float, density: float) -> float:
    """1 / (sigma n); infinite when nothing scatters"""
    sigma = _nonnegative("sigma", sigma)
    density = _nonnegative("density", density)
    rate = sigma * density
    return math.inf if rate == 0.0 else 1.0 / rate

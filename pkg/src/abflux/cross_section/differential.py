"""
Differential cross sections
Angular distributions for distinguishable and symmetrized identical particles
"""

import math
from typing import Optional, Union

import numpy as np

from ..channels import FluxNumber, TruncationPolicy
from ..errors import DomainError
from ..scattering.amplitude import EQUATORIAL, IncidentDirection, amplitude_grid
from ..scattering.phase_shifts import ScattererModel
from .statistics import Statistics

Angle = Union[float, np.ndarray]


def differential_cross_section(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    statistics: Statistics,
    theta: Angle,
    phi: Angle,
    policy: Optional[TruncationPolicy] = None,
    incident: IncidentDirection = EQUATORIAL,
) -> Union[float, np.ndarray]:
    """
    dsigma/dOmega in units of a^2.

    Distinguishable particles give |f|^2; bosons and fermions give
    |f(theta, phi) +- f(pi - theta, phi + pi)|^2.

    Args:
        model: Scatterer model
        ka: Wave number times sphere radius, > 0
        mu0: Flux in units of the flux quantum
        statistics: Particle statistics
        theta: Polar angle(s) in [0, pi]
        phi: Azimuthal angle(s)
        policy: Truncation policy
        incident: Incoming direction; identical particles need equatorial incidence

    Returns:
        float for scalar angles, otherwise an array of the broadcast shape
    """
    if statistics.is_identical and not incident.is_equatorial:
        raise DomainError("identical-particle cross sections need equatorial incidence")

    polar = np.asarray(theta, dtype=float)
    azimuth = np.asarray(phi, dtype=float)
    direct = amplitude_grid(model, ka, mu0, polar, azimuth, incident, policy)
    amplitude = np.asarray(direct.f_over_a)
    if statistics.is_identical:
        exchanged = amplitude_grid(model, ka, mu0, math.pi - polar, azimuth + math.pi, incident, policy)
        sign = 1.0 if statistics is Statistics.BOSON else -1.0
        amplitude = amplitude + sign * np.asarray(exchanged.f_over_a)

    value = np.abs(amplitude) ** 2
    return float(value) if value.ndim == 0 else value


def integrated_cross_section(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    statistics: Statistics = Statistics.DISTINGUISHABLE,
    n_theta: int = 64,
    n_phi: int = 48,
    policy: Optional[TruncationPolicy] = None,
) -> float:
    """
    Integrate dsigma/dOmega over the full sphere, in units of a^2.

    Gauss-Legendre in cos(theta) and the periodic trapezoid rule in phi.
    Agrees with the channel-sum total up to the quadrature error of the
    fractional-power envelopes near the poles.
    """
    if n_theta < 2 or n_phi < 2:
        raise DomainError("quadrature needs at least two nodes per angle")
    nodes, weights = np.polynomial.legendre.leggauss(n_theta)
    polar = np.arccos(nodes)
    azimuth = 2.0 * math.pi * np.arange(n_phi) / n_phi
    grid_theta, grid_phi = np.meshgrid(polar, azimuth, indexing="ij")

    density = differential_cross_section(
        model, ka, mu0, statistics, grid_theta, grid_phi, policy, EQUATORIAL
    )
    return float(np.sum(weights[:, None] * density) * (2.0 * math.pi / n_phi))

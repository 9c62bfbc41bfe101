"""
Scattering amplitude
Partial-wave sums for f(theta, phi) and the flux-modified plane wave
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, List, Optional, Union

import numpy as np

from ..channels import (
    FluxNumber,
    PartialWave,
    SumResult,
    TruncationPolicy,
    angular_y,
    angular_y_equator,
    sum_channels,
    validate_flux,
)
from ..errors import ConvergenceError, DomainError
from ..specfun.bessel import spherical_j
from ..specfun.elementary import cos_pi, require_finite, sin_pi
from .phase_shifts import ScattererModel

logger = logging.getLogger(__name__)

Angle = Union[float, np.ndarray]


@dataclass(frozen=True)
class IncidentDirection:
    """Direction (theta', phi') of the incoming momentum"""
    theta_p: float = math.pi / 2.0
    phi_p: float = 0.0

    def __post_init__(self):
        theta_p = require_finite("theta_p", self.theta_p)
        require_finite("phi_p", self.phi_p)
        if not 0.0 <= theta_p <= math.pi:
            raise DomainError(f"incident polar angle must lie in [0, pi], got {theta_p}")

    @property
    def is_equatorial(self) -> bool:
        """Incidence perpendicular to the flux line; odd-q channels are silent"""
        return self.theta_p == math.pi / 2.0

    def conjugate_y(self, wave: PartialWave, mu0: float) -> complex:
        """Complex conjugate of Y_qm at the incident direction"""
        if self.is_equatorial:
            if wave.q % 2:
                return 0j
            value = angular_y_equator(wave.q // 2, wave.m, mu0)
            return value * complex(math.cos(wave.m * self.phi_p), -math.sin(wave.m * self.phi_p))
        return angular_y(wave.q, wave.m, mu0, self.theta_p, self.phi_p).conjugate()


EQUATORIAL = IncidentDirection(math.pi / 2.0, 0.0)
AXIAL = IncidentDirection(0.0, 0.0)


@dataclass(frozen=True)
class AmplitudeValue:
    """
    Scattering amplitude in units of 1/k, i.e. value = k f.

    `value` is a complex number, or a complex array for grid evaluations.
    """
    value: Any
    ka: float
    mu0: float
    channels_used: int
    residual: float
    converged: bool
    degenerate: bool = False
    degenerate_orders: List[float] = field(default_factory=list, compare=False, repr=False)

    @property
    def f_over_a(self) -> Any:
        """The amplitude in units of the sphere radius"""
        return self.value / self.ka

    @classmethod
    def from_sum(cls, result: SumResult, ka: float, mu0: float, orders: List[float]) -> "AmplitudeValue":
        return cls(
            value=result.value,
            ka=ka,
            mu0=mu0,
            channels_used=result.channels_used,
            residual=result.residual,
            converged=result.converged,
            degenerate=result.degenerate,
            degenerate_orders=sorted(set(orders)),
        )


def _check_angles(theta: Angle, phi: Angle) -> tuple:
    polar = np.asarray(theta, dtype=float)
    azimuth = np.asarray(phi, dtype=float)
    if not (np.all(np.isfinite(polar)) and np.all(np.isfinite(azimuth))):
        raise DomainError("angles must be finite")
    if np.any(polar < 0.0) or np.any(polar > math.pi):
        raise DomainError("polar angle must lie in [0, pi]")
    return polar, azimuth, np.broadcast(polar, azimuth).shape


def _check_ka(ka: float) -> float:
    ka = require_finite("ka", ka)
    if ka <= 0.0:
        raise DomainError(f"ka must be > 0, got {ka}")
    return ka


def amplitude_grid(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    theta: Angle,
    phi: Angle,
    incident: IncidentDirection = EQUATORIAL,
    policy: Optional[TruncationPolicy] = None,
) -> AmplitudeValue:
    """
    Evaluate k f(theta, phi) on broadcast arrays of angles.

    Every grid point shares one channel sequence and one stopping decision,
    taken on the largest term magnitude across the grid.

    Args:
        model: Scatterer supplying the channel factors
        ka: Wave number times sphere radius, > 0
        mu0: Flux in units of the flux quantum
        theta: Polar angle(s) in [0, pi]
        phi: Azimuthal angle(s)
        incident: Incoming direction; equatorial incidence sums even q only
        policy: Truncation policy, defaults to TruncationPolicy()

    Returns:
        AmplitudeValue: value has the broadcast shape of theta and phi

    Raises:
        ConvergenceError: caps reached first; `partial` is an AmplitudeValue
        DegeneracyError: degenerate channel and the model has no closed form
    """
    ka = _check_ka(ka)
    mu0 = validate_flux(mu0)
    policy = policy or TruncationPolicy()
    polar, azimuth, shape = _check_angles(theta, phi)
    orders: List[float] = []

    def term(wave: PartialWave) -> Any:
        incoming = incident.conjugate_y(wave, mu0)
        if incoming == 0:
            return np.zeros(shape, dtype=complex)
        factor, degenerate = model.channel_factor(wave.alpha, ka)
        if degenerate:
            orders.append(wave.alpha)
        if factor == 0:
            return np.zeros(shape, dtype=complex)
        weight = (2.0 * wave.alpha + 1.0) * factor * incoming
        return weight * angular_y(wave.q, wave.m, mu0, polar, azimuth)

    try:
        result = sum_channels(
            term,
            mu0,
            policy,
            scale=ka,
            even_q_only=incident.is_equatorial,
            degenerate_orders=orders,
            what=f"amplitude (ka={ka}, mu0={mu0})",
        )
    except ConvergenceError as exc:
        raise ConvergenceError(str(exc), partial=AmplitudeValue.from_sum(exc.partial, ka, mu0, orders)) from exc

    if orders:
        logger.info(f"amplitude at ka={ka}, mu0={mu0}: {len(set(orders))} degenerate orders resolved in closed form")
    return AmplitudeValue.from_sum(result, ka, mu0, orders)


def scattering_amplitude(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    incident: IncidentDirection = EQUATORIAL,
    theta: float = math.pi / 2.0,
    phi: float = 0.0,
    policy: Optional[TruncationPolicy] = None,
) -> AmplitudeValue:
    """k f(theta, phi) at a single direction; see amplitude_grid"""
    return amplitude_grid(model, ka, mu0, float(theta), float(phi), incident, policy)


def _power_of_i(alpha: float) -> complex:
    # principal branch i^a = e^{i a pi / 2}
    return complex(cos_pi(alpha / 2.0), sin_pi(alpha / 2.0))


def modified_plane_wave(
    ka: float,
    mu0: FluxNumber,
    incident: IncidentDirection,
    r: float,
    theta: float,
    phi: float,
    policy: Optional[TruncationPolicy] = None,
) -> complex:
    """
    Plane wave carrying the flux phase, expanded in generalized harmonics.

    Sums (2 alpha + 1) i^alpha j_alpha(kr) Y*_qm(theta', phi') Y_qm(theta, phi);
    r is measured in units of the sphere radius, so kr = ka * r. At r = 0
    only an alpha = 0 channel survives.

    Raises:
        ConvergenceError: caps reached first; `partial` is the SumResult
    """
    ka = _check_ka(ka)
    mu0 = validate_flux(mu0)
    r = require_finite("r", r)
    if r < 0.0:
        raise DomainError(f"r must be >= 0, got {r}")
    policy = policy or TruncationPolicy()
    polar, azimuth, _ = _check_angles(theta, phi)
    kr = ka * r

    def radial(alpha: float) -> float:
        if kr == 0.0:
            return 1.0 if alpha == 0.0 else 0.0
        return spherical_j(alpha, kr)

    def term(wave: PartialWave) -> complex:
        incoming = incident.conjugate_y(wave, mu0)
        if incoming == 0:
            return 0j
        j = radial(wave.alpha)
        if j == 0.0:
            return 0j
        weight = (2.0 * wave.alpha + 1.0) * _power_of_i(wave.alpha) * j * incoming
        return weight * angular_y(wave.q, wave.m, mu0, float(polar), float(azimuth))

    result = sum_channels(
        term,
        mu0,
        policy,
        scale=kr,
        even_q_only=incident.is_equatorial,
        what=f"plane wave (kr={kr}, mu0={mu0})",
    )
    return complex(result.value)

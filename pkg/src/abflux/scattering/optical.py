"""
Optical theorem
Forward amplitude against the total cross section
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from ..channels import FluxNumber, TruncationPolicy
from .amplitude import EQUATORIAL, scattering_amplitude
from .phase_shifts import ScattererModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OpticalTheoremCheck:
    """
    Outcome of comparing sigma_t with (4 pi / k) Im f(pi/2, 0).

    Both sides are reported in units of 4 pi / k^2. When sigma_total is
    zero the residual is absolute and `absolute` is set.
    """
    residual: float
    sigma_total: float
    forward_imag: float
    absolute: bool = False


def optical_theorem_residual(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    policy: Optional[TruncationPolicy] = None,
) -> OpticalTheoremCheck:
    """
    Relative mismatch between the total cross section and the forward amplitude.

    Incidence is equatorial; forward is (theta, phi) = (pi/2, 0).

    Args:
        model: Scatterer model
        ka: Wave number times sphere radius, > 0
        mu0: Flux in units of the flux quantum
        policy: Truncation policy for both sums

    Returns:
        OpticalTheoremCheck: residual and the two sides
    """
    from ..cross_section import Statistics, total_cross_section

    policy = policy or TruncationPolicy()
    sigma = total_cross_section(model, ka, mu0, Statistics.DISTINGUISHABLE, policy).sum_f
    forward = scattering_amplitude(model, ka, mu0, EQUATORIAL, math.pi / 2.0, 0.0, policy)
    forward_imag = forward.value.imag
    difference = abs(sigma - forward_imag)
    if sigma == 0.0:
        logger.debug(f"optical theorem at ka={ka}, mu0={mu0}: no scattering, absolute residual")
        return OpticalTheoremCheck(difference, sigma, forward_imag, absolute=True)
    return OpticalTheoremCheck(difference / sigma, sigma, forward_imag)

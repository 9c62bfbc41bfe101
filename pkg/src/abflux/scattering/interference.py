"""
Flux interference factors
Per-channel amplitude and cross-section factors in terms of a phase shift
"""

import cmath
import math

from ..errors import DegeneracyError
from ..specfun.elementary import cos_pi, require_finite, sin_pi

DEGENERACY_THRESHOLD = 1e-14


def channel_amplitude_factor(delta: float, alpha_tilde: float) -> complex:
    """
    Amplitude factor e^{i delta} sin(delta) cos^2(a pi) / (1 - e^{i(delta - a pi)} sin(delta) sin(a pi)).

    Reduces to e^{i delta} sin(delta) at integer order.

    Raises:
        DegeneracyError: the denominator modulus is below 1e-14
    """
    delta = require_finite("delta", delta)
    c = cos_pi(alpha_tilde)
    s = sin_pi(alpha_tilde)
    numerator = cmath.exp(1j * delta) * math.sin(delta) * c * c
    if s == 0.0:
        return numerator
    denominator = 1.0 - cmath.exp(1j * delta) * complex(c, -s) * math.sin(delta) * s
    if abs(denominator) < DEGENERACY_THRESHOLD:
        raise DegeneracyError(
            f"amplitude denominator vanishes at order {alpha_tilde} (delta={delta})",
            order=alpha_tilde,
        )
    return numerator / denominator


def interference_weight(delta: float, alpha_tilde: float) -> float:
    """
    Cross-section weight sin^2(delta) cos^4(a pi) / D, the squared modulus of
    the amplitude factor, with
    D = 1 - 2 sin(delta) sin(a pi) cos(a pi - delta) + sin^2(delta) sin^2(a pi).

    Raises:
        DegeneracyError: D is below 1e-14
    """
    delta = require_finite("delta", delta)
    c = cos_pi(alpha_tilde)
    s = sin_pi(alpha_tilde)
    sd = math.sin(delta)
    numerator = sd * sd * c ** 4
    if s == 0.0:
        return numerator
    denominator = 1.0 - 2.0 * sd * s * (c * math.cos(delta) + s * sd) + sd * sd * s * s
    if denominator < DEGENERACY_THRESHOLD:
        raise DegeneracyError(
            f"cross-section denominator vanishes at order {alpha_tilde} (delta={delta})",
            order=alpha_tilde,
        )
    return numerator / denominator

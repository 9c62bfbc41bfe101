"""
Bessel functions
Real-order cylinder functions and the spherical pair built on them
"""

import math

from scipy import special

from ..errors import DomainError
from .elementary import cos_pi, require_finite


def bessel_j(nu: float, z: float) -> float:
    """
    J_nu(z) for real order of either sign and z >= 0.

    Negative non-integer orders are supported directly; at z = 0 they
    diverge and the infinity is returned as is.

    Raises:
        DomainError: z < 0 or a non-finite argument
    """
    nu = require_finite("nu", nu)
    z = require_finite("z", z)
    if z < 0.0:
        raise DomainError(f"bessel_j needs z >= 0, got {z}")
    return float(special.jv(nu, z))


def bessel_y(nu: float, z: float) -> float:
    """Textbook Neumann function Y_nu(z) for z > 0"""
    nu = require_finite("nu", nu)
    z = require_finite("z", z)
    if z <= 0.0:
        raise DomainError(f"bessel_y needs z > 0, got {z}")
    return float(special.yv(nu, z))


def _check_spherical(alpha: float, z: float) -> tuple:
    alpha = require_finite("alpha", alpha)
    z = require_finite("z", z)
    if alpha < 0.0:
        raise DomainError(f"spherical order must be >= 0, got {alpha}")
    if z <= 0.0:
        raise DomainError(f"spherical Bessel functions need z > 0, got {z}")
    return alpha, z


def spherical_j(alpha: float, z: float) -> float:
    """j_alpha(z) = sqrt(pi / 2z) J_{alpha+1/2}(z)"""
    alpha, z = _check_spherical(alpha, z)
    return math.sqrt(math.pi / (2.0 * z)) * float(special.jv(alpha + 0.5, z))


def spherical_n(alpha: float, z: float) -> float:
    """
    Second spherical solution n_alpha(z) = cos((alpha+1)pi) sqrt(pi/2z) J_{-alpha-1/2}(z).

    For integer alpha this is the usual spherical Neumann function; for
    half-integer alpha the prefactor is exactly zero and so is the result.
    """
    alpha, z = _check_spherical(alpha, z)
    prefactor = cos_pi(alpha + 1.0)
    if prefactor == 0.0:
        return 0.0
    return prefactor * math.sqrt(math.pi / (2.0 * z)) * float(special.jv(-alpha - 0.5, z))

"""
Special functions
Log-gamma, real-order Bessel functions and symmetric Jacobi polynomials
"""

from .bessel import bessel_j, bessel_y, spherical_j, spherical_n
from .elementary import cos_pi, double_factorial, sin_pi
from .gamma import log_gamma
from .jacobi import (
    gegenbauer_at_zero,
    jacobi_at_zero,
    jacobi_from_gegenbauer_factor,
    jacobi_symmetric,
    jacobi_symmetric_table,
    legendre_from_jacobi,
)

__all__ = [
    "log_gamma",
    "bessel_j",
    "bessel_y",
    "spherical_j",
    "spherical_n",
    "cos_pi",
    "sin_pi",
    "double_factorial",
    "jacobi_symmetric",
    "jacobi_symmetric_table",
    "jacobi_at_zero",
    "gegenbauer_at_zero",
    "jacobi_from_gegenbauer_factor",
    "legendre_from_jacobi",
]

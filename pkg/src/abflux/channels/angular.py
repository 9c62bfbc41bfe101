"""
Generalized angular functions
Flux-shifted spherical harmonics Y_qm, their equatorial closed form and norms
"""

import math
from functools import lru_cache
from typing import Union

import numpy as np

from ..errors import DomainError
from ..specfun.gamma import log_gamma
from ..specfun.jacobi import jacobi_symmetric
from .channel import FluxNumber, validate_flux

ArrayLike = Union[float, np.ndarray]


def _log_norm(q: int, beta: float) -> float:
    # ln sqrt(Gamma(q+1) Gamma(q+2b+1) / Gamma(q+b+1)^2)
    return 0.5 * (log_gamma(q + 1.0) + log_gamma(q + 2.0 * beta + 1.0)) - log_gamma(q + beta + 1.0)


def angular_y(q: int, m: int, mu0: FluxNumber, theta: ArrayLike, phi: ArrayLike) -> Union[complex, np.ndarray]:
    """
    Evaluate the generalized angular function Y_qm(theta, phi).

    Y_qm = N (cos(theta/2) sin(theta/2))^beta P_q^(beta,beta)(cos theta) e^{i m phi}
    with beta = |m + mu0| and N the Gamma-ratio normalization, evaluated in
    log space together with the envelope.

    Args:
        q: Jacobi degree, >= 0
        m: Azimuthal number
        mu0: Flux in units of the flux quantum
        theta: Polar angle(s) in [0, pi]
        phi: Azimuthal angle(s), broadcast against theta

    Returns:
        complex for scalar angles, otherwise a complex array
    """
    beta = abs(int(m) + validate_flux(mu0))
    polar = np.asarray(theta, dtype=float)
    azimuth = np.asarray(phi, dtype=float)

    half = np.abs(np.cos(polar / 2.0) * np.sin(polar / 2.0))
    half = np.where((polar == 0.0) | (polar == math.pi), 0.0, half)
    log_scale = _log_norm(int(q), beta)
    if beta == 0.0:
        envelope = np.full_like(half, math.exp(log_scale))
    else:
        with np.errstate(divide="ignore"):
            envelope = np.exp(log_scale + beta * np.log(half))

    polynomial = jacobi_symmetric(int(q), beta, np.clip(np.cos(polar), -1.0, 1.0))
    value = envelope * polynomial * np.exp(1j * int(m) * azimuth)
    return complex(value) if np.ndim(value) == 0 else value


@lru_cache(maxsize=65536)
def _log_equator(q_tilde: int, beta: float) -> float:
    return (
        log_gamma(q_tilde + 0.5)
        + log_gamma(q_tilde + beta + 0.5)
        - log_gamma(q_tilde + beta + 1.0)
        - log_gamma(q_tilde + 1.0)
    )


def angular_y_equator(q_tilde: int, m: int, mu0: FluxNumber) -> float:
    """Y_{2q~,m}(pi/2, 0) from its Gamma-function closed form"""
    beta = abs(int(m) + validate_flux(mu0))
    sign = -1.0 if q_tilde % 2 else 1.0
    return sign * math.exp(0.5 * _log_equator(int(q_tilde), beta)) / math.sqrt(math.pi)


def equatorial_weight(q_tilde: int, beta: float) -> float:
    """Y^2 at the equator for a channel of given q~ and beta"""
    if beta < 0.0:
        raise DomainError(f"beta must be >= 0, got {beta}")
    return math.exp(_log_equator(int(q_tilde), float(beta))) / math.pi


def y_squared(q_tilde: int, m: int, mu0: FluxNumber) -> float:
    """Square of the equatorial value, the channel weight of the total cross section"""
    return equatorial_weight(q_tilde, abs(int(m) + validate_flux(mu0)))


def orthogonality_norm(q: int, m: int, mu0: FluxNumber) -> float:
    """
    Integral over the sphere of |(cos(theta/2) sin(theta/2))^beta P_q^(beta,beta)|^2.

    Multiplying by exp(2 * normalization) gives 4 pi / (2 alpha + 1), the
    norm of Y_qm itself.
    """
    beta = abs(int(m) + validate_flux(mu0))
    alpha = q + beta
    return math.exp(-2.0 * _log_norm(int(q), beta)) * 4.0 * math.pi / (2.0 * alpha + 1.0)

"""
Jacobi polynomials
Symmetric Jacobi P_q^(b,b), its zero-argument closed form and the
Gegenbauer and associated-Legendre connections
"""

import math
from typing import Union

import numpy as np

from ..errors import DomainError
from .elementary import require_finite
from .gamma import log_gamma

ArrayLike = Union[float, np.ndarray]


def _check_degree(name: str, q: int) -> int:
    if isinstance(q, bool) or int(q) != q or q < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {q!r}")
    return int(q)


def _check_beta(beta: float) -> float:
    beta = require_finite("beta", beta)
    if beta < 0.0:
        raise DomainError(f"beta must be >= 0, got {beta}")
    return beta


def _check_argument(z: ArrayLike) -> np.ndarray:
    x = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(np.abs(x) > 1.0):
        raise DomainError("Jacobi argument must lie in [-1, 1]")
    return x


def jacobi_symmetric_table(q_max: int, beta: float, z: ArrayLike) -> np.ndarray:
    """
    Evaluate P_0 ... P_{q_max} with parameters (beta, beta).

    Args:
        q_max: Highest degree
        beta: Common Jacobi parameter, >= 0
        z: Point or array of points in [-1, 1]

    Returns:
        np.ndarray: Shape (q_max + 1,) + shape(z); row n holds P_n(z)
    """
    q_max = _check_degree("q_max", q_max)
    beta = _check_beta(beta)
    x = _check_argument(z)

    table = np.empty((q_max + 1,) + x.shape)
    table[0] = 1.0
    if q_max == 0:
        return table
    table[1] = (beta + 1.0) * x

    two_beta = 2.0 * beta
    for n in range(2, q_max + 1):
        s = 2.0 * n + two_beta
        a1 = 2.0 * n * (n + two_beta) * (s - 2.0)
        a3 = (s - 2.0) * (s - 1.0) * s
        a4 = 2.0 * (n + beta - 1.0) ** 2 * s
        table[n] = (a3 * x * table[n - 1] - a4 * table[n - 2]) / a1
    return table


def jacobi_symmetric(q: int, beta: float, z: ArrayLike) -> ArrayLike:
    """
    P_q^(beta,beta)(z) by the three-term recurrence in q.

    Scalar input gives a float, array input an array of the same shape.
    """
    q = _check_degree("q", q)
    beta = _check_beta(beta)
    x = _check_argument(z)

    previous = np.ones_like(x)
    current = previous if q == 0 else (beta + 1.0) * x
    two_beta = 2.0 * beta
    for n in range(2, q + 1):
        s = 2.0 * n + two_beta
        a1 = 2.0 * n * (n + two_beta) * (s - 2.0)
        a3 = (s - 2.0) * (s - 1.0) * s
        a4 = 2.0 * (n + beta - 1.0) ** 2 * s
        previous, current = current, (a3 * x * current - a4 * previous) / a1
    return float(current) if current.ndim == 0 else current


def jacobi_at_zero(q_tilde: int, beta: float) -> float:
    """P_{2q~}^(beta,beta)(0) from its Gamma-function closed form"""
    q_tilde = _check_degree("q_tilde", q_tilde)
    beta = _check_beta(beta)
    log_value = (
        log_gamma(2.0 * beta + 1.0)
        + log_gamma(2.0 * q_tilde + beta + 1.0)
        + log_gamma(q_tilde + beta + 0.5)
        - log_gamma(beta + 1.0)
        - log_gamma(2.0 * q_tilde + 2.0 * beta + 1.0)
        - log_gamma(beta + 0.5)
        - log_gamma(q_tilde + 1.0)
    )
    sign = -1.0 if q_tilde % 2 else 1.0
    return sign * math.exp(log_value)


def gegenbauer_at_zero(q: int, lam: float) -> float:
    """C_q^lam(0): zero for odd q, (-1)^(q/2) Gamma(q/2+lam) / (Gamma(lam) (q/2)!) otherwise"""
    q = _check_degree("q", q)
    lam = require_finite("lam", lam)
    if lam <= 0.0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {lam}")
    if q % 2:
        return 0.0
    half = q // 2
    sign = -1.0 if half % 2 else 1.0
    return sign * math.exp(log_gamma(half + lam) - log_gamma(lam) - log_gamma(half + 1.0))


def jacobi_from_gegenbauer_factor(q: int, beta: float) -> float:
    """Factor c with P_q^(beta,beta) = c * C_q^(beta+1/2)"""
    q = _check_degree("q", q)
    beta = _check_beta(beta)
    return math.exp(
        log_gamma(2.0 * beta + 1.0)
        + log_gamma(q + beta + 1.0)
        - log_gamma(beta + 1.0)
        - log_gamma(q + 2.0 * beta + 1.0)
    )


def legendre_from_jacobi(l: int, m: int, theta: ArrayLike) -> ArrayLike:
    """
    Associated Legendre P_l^m(cos theta) through symmetric Jacobi polynomials.

    P_l^m = (-1)^m Gamma(l+m+1)/Gamma(l+1) (cos(theta/2) sin(theta/2))^m
    P_{l-m}^(m,m)(cos theta), Condon-Shortley phase included.
    """
    l = _check_degree("l", l)
    m = _check_degree("m", m)
    if m > l:
        raise DomainError(f"associated Legendre needs m <= l, got l={l}, m={m}")
    angle = np.asarray(theta, dtype=float)
    envelope = np.abs(np.cos(angle / 2.0) * np.sin(angle / 2.0)) ** m
    scale = math.exp(log_gamma(l + m + 1.0) - log_gamma(l + 1.0))
    sign = -1.0 if m % 2 else 1.0
    value = sign * scale * envelope * jacobi_symmetric(l - m, float(m), np.clip(np.cos(angle), -1.0, 1.0))
    return float(value) if np.ndim(value) == 0 else value

"""
Total cross sections
Channel sums for distinguishable and identical particles, the hard-sphere
closed form and the flux-free limits
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from ..channels import (
    Channel,
    ChannelSum,
    FluxNumber,
    PartialWave,
    SumResult,
    TruncationPolicy,
    equatorial_weight,
    sum_channels,
    validate_flux,
)
from ..errors import ConvergenceError, DomainError
from ..scattering.interference import interference_weight
from ..scattering.phase_shifts import (
    ScattererModel,
    hard_sphere_degenerate,
    hard_sphere_weight,
)
from ..specfun.bessel import spherical_j, spherical_n
from ..specfun.elementary import require_finite
from .statistics import Statistics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossSectionValue:
    """
    Total cross section with convergence metadata.

    `sum_f` is the parity-filtered channel sum; every other unit is derived
    from it and ka.
    """
    ka: float
    mu0: float
    statistics: Statistics
    sum_f: float
    channels_used: int
    residual: float
    converged: bool
    degenerate: bool = False

    @property
    def sigma_raw(self) -> float:
        """sigma k^2 / 4 pi"""
        return self.statistics.prefactor * self.sum_f

    @property
    def sigma(self) -> float:
        """sigma / a^2"""
        return 4.0 * math.pi * self.sigma_raw / (self.ka * self.ka)

    @property
    def sigma_normalized(self) -> float:
        """sigma / sigma0 with sigma0 = 2 pi a^2"""
        return self.sigma / (2.0 * math.pi)

    @classmethod
    def from_sum(
        cls, result: SumResult, ka: float, mu0: float, statistics: Statistics
    ) -> "CrossSectionValue":
        return cls(
            ka=ka,
            mu0=mu0,
            statistics=statistics,
            sum_f=float(result.value),
            channels_used=result.channels_used,
            residual=result.residual,
            converged=result.converged,
            degenerate=result.degenerate,
        )


def _check_ka(ka: float) -> float:
    ka = require_finite("ka", ka)
    if ka <= 0.0:
        raise DomainError(f"ka must be > 0, got {ka}")
    return ka


def channel_term_F(delta: float, channel: Channel) -> float:
    """
    Contribution of one channel to the total cross section.

    F = (2a+1) sin^2(delta) cos^4(a pi) Y^2 / D with a the channel order
    and Y^2 its equatorial weight.

    Raises:
        DegeneracyError: D below 1e-14
    """
    weight = interference_weight(delta, channel.alpha_tilde)
    return (2.0 * channel.alpha_tilde + 1.0) * weight * _channel_y_squared(channel)


def _channel_y_squared(channel: Channel) -> float:
    return equatorial_weight(channel.q_tilde, channel.beta)


def _channel_sum(
    term,
    ka: float,
    mu0: float,
    statistics: Statistics,
    policy: TruncationPolicy,
    orders: List[float],
    what: str,
) -> CrossSectionValue:
    try:
        result = sum_channels(
            term,
            mu0,
            policy,
            scale=ka,
            even_q_only=True,
            m_parity=statistics.m_parity,
            degenerate_orders=orders,
            what=what,
        )
    except ConvergenceError as exc:
        partial = CrossSectionValue.from_sum(exc.partial, ka, mu0, statistics)
        raise ConvergenceError(str(exc), partial=partial) from exc
    if orders:
        logger.info(f"{what}: {len(set(orders))} degenerate channel orders")
    return CrossSectionValue.from_sum(result, ka, mu0, statistics)


def total_cross_section(
    model: ScattererModel,
    ka: float,
    mu0: FluxNumber,
    statistics: Statistics = Statistics.DISTINGUISHABLE,
    policy: Optional[TruncationPolicy] = None,
) -> CrossSectionValue:
    """
    Total cross section from the model's phase shifts.

    Boson and fermion sums keep even and odd m respectively and carry four
    times the distinguishable prefactor. Degenerate channels fall back to
    the model's closed form and mark the result degenerate.

    Args:
        model: Scatterer model
        ka: Wave number times sphere radius, > 0
        mu0: Flux in units of the flux quantum
        statistics: Particle statistics
        policy: Truncation policy, defaults to TruncationPolicy()

    Returns:
        CrossSectionValue: the converged sum and its metadata

    Raises:
        ConvergenceError: caps reached first; `partial` is a CrossSectionValue
        DegeneracyError: degenerate channel and the model has no closed form
    """
    ka = _check_ka(ka)
    mu0 = validate_flux(mu0)
    policy = policy or TruncationPolicy()
    orders: List[float] = []

    def term(wave: PartialWave) -> float:
        channel = Channel.from_partial_wave(wave)
        weight, degenerate = model.channel_weight(channel.alpha_tilde, ka)
        if degenerate:
            orders.append(channel.alpha_tilde)
        return (2.0 * channel.alpha_tilde + 1.0) * weight * _channel_y_squared(channel)

    what = f"{model.name} total ({statistics.value}, ka={ka}, mu0={mu0})"
    return _channel_sum(term, ka, mu0, statistics, policy, orders, what)


def hard_sphere_total_closed_form(
    ka: float,
    mu0: FluxNumber,
    statistics: Statistics = Statistics.DISTINGUISHABLE,
    policy: Optional[TruncationPolicy] = None,
) -> CrossSectionValue:
    """
    Hard-sphere total cross section written with Bessel functions only.

    Each channel contributes (2a+1) W Y^2 with W = J^2 / (J^2 + Y_nu^2) at
    nu = a + 1/2, the closed-form ratio with its common factor cancelled.
    Channels where the uncancelled ratio is 0/0 are flagged degenerate.
    """
    ka = _check_ka(ka)
    mu0 = validate_flux(mu0)
    policy = policy or TruncationPolicy()
    orders: List[float] = []

    def term(wave: PartialWave) -> float:
        channel = Channel.from_partial_wave(wave)
        if hard_sphere_degenerate(channel.alpha_tilde, ka):
            orders.append(channel.alpha_tilde)
        weight = hard_sphere_weight(channel.alpha_tilde, ka)
        return (2.0 * channel.alpha_tilde + 1.0) * weight * _channel_y_squared(channel)

    what = f"hard-sphere closed form ({statistics.value}, ka={ka}, mu0={mu0})"
    return _channel_sum(term, ka, mu0, statistics, policy, orders, what)


def flux_free_total(ka: float, policy: Optional[TruncationPolicy] = None) -> CrossSectionValue:
    """
    Textbook hard-sphere sum over l of (2l+1) j_l^2 / (j_l^2 + n_l^2).

    One term per order band; l is capped at min(m_max, 2 q_max).
    """
    ka = _check_ka(ka)
    policy = policy or TruncationPolicy()
    l_cap = min(policy.m_max, 2 * policy.q_max)
    accumulator = ChannelSum(policy, scale=ka)

    for l in range(l_cap + 1):
        j = spherical_j(float(l), ka)
        n = spherical_n(float(l), ka)
        denominator = j * j + n * n
        term = (2.0 * l + 1.0) * j * j / denominator if denominator > 0.0 else 0.0
        if accumulator.add_band(l, [term]):
            logger.debug(f"flux-free total at ka={ka}: converged at l={l}")
            return CrossSectionValue.from_sum(
                accumulator.result(True), ka, 0.0, Statistics.DISTINGUISHABLE
            )

    partial = CrossSectionValue.from_sum(accumulator.result(False), ka, 0.0, Statistics.DISTINGUISHABLE)
    raise ConvergenceError(f"flux-free total at ka={ka} did not converge by l={l_cap}", partial=partial)


def high_energy_estimate(ka: float) -> CrossSectionValue:
    """Sum over l <= ka of (2l+1) sin^2(ka - l pi/2), which tends to sigma = 2 pi a^2"""
    ka = _check_ka(ka)
    terms = [(2 * l + 1) * math.sin(ka - l * math.pi / 2.0) ** 2 for l in range(int(math.floor(ka)) + 1)]
    return CrossSectionValue(
        ka=ka,
        mu0=0.0,
        statistics=Statistics.DISTINGUISHABLE,
        sum_f=math.fsum(terms),
        channels_used=len(terms),
        residual=0.0,
        converged=True,
    )


def low_energy_estimate(ka: float) -> CrossSectionValue:
    """s-wave only with delta_0 = -ka, which tends to sigma = 4 pi a^2"""
    ka = _check_ka(ka)
    return CrossSectionValue(
        ka=ka,
        mu0=0.0,
        statistics=Statistics.DISTINGUISHABLE,
        sum_f=math.sin(ka) ** 2,
        channels_used=1,
        residual=0.0,
        converged=True,
    )

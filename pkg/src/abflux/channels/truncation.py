"""
Truncated channel sums
Band-wise adaptive stopping with a fixed-order final reduction
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, List, Optional

import numpy as np

from ..errors import ConvergenceError
from .channel import FluxNumber, PartialWave
from .enumeration import iter_channel_bands
from .policy import TruncationPolicy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumResult:
    """Value of a truncated sum plus how it got there"""
    value: Any
    channels_used: int
    residual: float
    converged: bool
    degenerate: bool = False

    def with_flags(self, degenerate: bool) -> "SumResult":
        return replace(self, degenerate=self.degenerate or degenerate)


def _magnitude(term: Any) -> float:
    if np.ndim(term) == 0:
        return abs(term)
    return float(np.max(np.abs(term))) if np.size(term) else 0.0


def _reduce(terms: List[Any]) -> Any:
    """Sum in enumeration order; numpy sums 1-d arrays pairwise"""
    if not terms:
        return 0.0
    stacked = np.asarray(terms)
    total = np.sum(stacked, axis=0)
    return total.item() if np.ndim(total) == 0 else total


class ChannelSum:
    """
    Running sum over order bands.

    Bands below `scale` (the interaction range in units of 1/k) never
    count toward stopping.
    """

    def __init__(self, policy: TruncationPolicy, scale: float = 0.0):
        self.policy = policy
        self.scale = scale
        self.terms: List[Any] = []
        self.magnitude = 0.0
        self.quiet_bands = 0
        self.residual = 1.0

    def add_band(self, index: int, terms: List[Any]) -> bool:
        """
        Add one band of terms.

        Returns:
            bool: True once the stopping rule is satisfied
        """
        band_magnitude = sum(_magnitude(term) for term in terms)
        self.terms.extend(terms)
        self.magnitude += band_magnitude
        if index < self.scale:
            return False

        weight = band_magnitude / self.magnitude if self.magnitude > 0.0 else 0.0
        self.residual = weight
        if weight < self.policy.rel_tol:
            self.quiet_bands += 1
        else:
            self.quiet_bands = 0
        return self.quiet_bands >= self.policy.consecutive_below

    def result(self, converged: bool, degenerate: bool = False) -> SumResult:
        return SumResult(
            value=_reduce(self.terms),
            channels_used=len(self.terms),
            residual=self.residual,
            converged=converged,
            degenerate=degenerate,
        )


def sum_channels(
    term: Callable[[PartialWave], Any],
    mu0: FluxNumber,
    policy: TruncationPolicy,
    scale: float = 0.0,
    even_q_only: bool = True,
    m_parity: Optional[int] = None,
    degenerate_orders: Optional[List[float]] = None,
    what: str = "channel sum",
) -> SumResult:
    """
    Sum term(wave) over partial waves in band order until converged.

    Args:
        term: Contribution of one partial wave
        mu0: Flux in units of the flux quantum
        policy: Truncation policy
        scale: Order below which bands never stop the sum (ka or kr)
        even_q_only: Equatorial sums use even q only
        m_parity: Keep only even (0) or odd (1) m
        degenerate_orders: List the term callable appends to when it had
            to resolve a degenerate channel
        what: Label for log and error messages

    Returns:
        SumResult: Converged value and metadata

    Raises:
        ConvergenceError: A cap clipped a band before the sum converged;
            `partial` holds the SumResult reached so far
    """
    accumulator = ChannelSum(policy, scale)
    flagged = degenerate_orders if degenerate_orders is not None else []

    for band in iter_channel_bands(mu0, policy, even_q_only, m_parity):
        if band.clipped:
            partial = accumulator.result(False, bool(flagged))
            logger.warning(
                f"{what}: caps q_max={policy.q_max}, m_max={policy.m_max} "
                f"reached at order band {band.index} (residual {partial.residual:.3e})"
            )
            raise ConvergenceError(
                f"{what} did not converge before the truncation caps "
                f"(band {band.index}, residual {partial.residual:.3e})",
                partial=partial,
            )
        if accumulator.add_band(band.index, [term(wave) for wave in band.waves]):
            logger.debug(
                f"{what}: converged at band {band.index} with "
                f"{len(accumulator.terms)} channels"
            )
            return accumulator.result(True, bool(flagged))

    partial = accumulator.result(False, bool(flagged))
    raise ConvergenceError(f"{what} exhausted every channel without converging", partial=partial)

"""
Channel enumeration
Deterministic ordering of partial waves in unit bands of effective order
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from .channel import Channel, FluxNumber, PartialWave, validate_flux
from .policy import TruncationPolicy


@dataclass(frozen=True)
class ChannelBand:
    """Partial waves with order in [index, index + 1), in summation order"""
    index: int
    waves: Tuple[PartialWave, ...]
    clipped: bool


def flux_centre(mu0: float) -> int:
    """Integer n nearest to mu0, halves toward zero; the |m| cap is measured from m = -n"""
    return int(math.copysign(math.ceil(abs(mu0) - 0.5), mu0))


def _m_candidates(mu0: float, low: float, high: float) -> List[int]:
    # every m with low <= |m + mu0| < high, plus a margin of one
    upper = range(math.floor(low - mu0) - 1, math.ceil(high - mu0) + 1)
    lower = range(math.floor(-high - mu0) - 1, math.ceil(-low - mu0) + 2)
    return sorted(set(upper) | set(lower))


@lru_cache(maxsize=65536)
def _band(
    index: int,
    mu0: float,
    q_cap: int,
    m_max: int,
    q_step: int,
    m_parity: Optional[int],
) -> ChannelBand:
    waves = []
    clipped = False
    centre = flux_centre(mu0)
    for q in range(0, index + 1, q_step):
        for m in _m_candidates(mu0, index - q, index + 1 - q):
            if m_parity is not None and m % 2 != m_parity:
                continue
            beta = abs(m + mu0)
            alpha = q + beta
            if not (index <= alpha < index + 1):
                continue
            if q > q_cap or abs(m + centre) > m_max:
                clipped = True
                continue
            waves.append(PartialWave(q, m, beta, alpha))
    waves.sort(key=lambda w: (w.alpha, abs(w.m), w.m, w.q))
    return ChannelBand(index, tuple(waves), clipped)


def iter_channel_bands(
    mu0: FluxNumber,
    policy: TruncationPolicy,
    even_q_only: bool = True,
    m_parity: Optional[int] = None,
) -> Iterator[ChannelBand]:
    """
    Yield order bands 0, 1, 2, ... until the caps leave nothing to add.

    Args:
        mu0: Flux in units of the flux quantum
        policy: Caps on q~ and on |m + n|, n the integer nearest mu0
        even_q_only: Restrict to even Jacobi degree (equatorial sums)
        m_parity: 0 or 1 keeps only even or odd m; None keeps all

    Yields:
        ChannelBand: waves sorted by (alpha, |m|, m, q); `clipped` is set
        when a cap removed a wave from the band
    """
    mu0 = validate_flux(mu0)
    q_step = 2 if even_q_only else 1
    q_cap = 2 * policy.q_max + (0 if even_q_only else 1)
    # beta <= m_max + 1/2 once |m + centre| <= m_max
    last = int(math.floor(q_cap + policy.m_max + 0.5))
    for index in range(last + 1):
        yield _band(index, mu0, q_cap, policy.m_max, q_step, m_parity)


def iter_partial_waves(
    mu0: FluxNumber,
    policy: TruncationPolicy,
    even_q_only: bool = False,
    m_parity: Optional[int] = None,
    max_order: Optional[float] = None,
) -> Iterator[PartialWave]:
    """Flatten the band sequence, stopping after the band holding max_order"""
    for band in iter_channel_bands(mu0, policy, even_q_only, m_parity):
        if max_order is not None and band.index > max_order:
            return
        yield from band.waves


def iter_channels(
    mu0: FluxNumber,
    policy: TruncationPolicy,
    m_parity: Optional[int] = None,
    max_order: Optional[float] = None,
) -> Iterator[Channel]:
    """Equatorial channels (even q) in summation order"""
    for wave in iter_partial_waves(mu0, policy, True, m_parity, max_order):
        yield Channel.from_partial_wave(wave)

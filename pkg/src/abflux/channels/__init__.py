"""
Channels
Flux-shifted angular channels, their enumeration and the generalized
angular functions
"""

from .angular import angular_y, angular_y_equator, equatorial_weight, orthogonality_norm, y_squared
from .channel import Channel, FluxNumber, PartialWave, make_channel, validate_flux
from .enumeration import ChannelBand, iter_channel_bands, iter_channels, iter_partial_waves
from .policy import TruncationPolicy
from .truncation import ChannelSum, SumResult, sum_channels

__all__ = [
    "FluxNumber",
    "Channel",
    "PartialWave",
    "make_channel",
    "validate_flux",
    "TruncationPolicy",
    "ChannelBand",
    "iter_channel_bands",
    "iter_channels",
    "iter_partial_waves",
    "ChannelSum",
    "SumResult",
    "sum_channels",
    "angular_y",
    "angular_y_equator",
    "equatorial_weight",
    "y_squared",
    "orthogonality_norm",
]

"""
Scatterer models
Phase-shift interface and the hard-sphere model
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Type

from ..errors import DegeneracyError, DomainError
from ..specfun.bessel import bessel_j, bessel_y, spherical_j, spherical_n
from ..specfun.elementary import double_factorial, require_finite, sin_pi
from .interference import channel_amplitude_factor, interference_weight

logger = logging.getLogger(__name__)


def _check_ka(ka: float) -> float:
    ka = require_finite("ka", ka)
    if ka <= 0.0:
        raise DomainError(f"ka must be > 0, got {ka}")
    return ka


def _check_order(alpha_tilde: float) -> float:
    alpha_tilde = require_finite("alpha_tilde", alpha_tilde)
    if alpha_tilde < 0.0:
        raise DomainError(f"channel order must be >= 0, got {alpha_tilde}")
    return alpha_tilde


class ScattererModel(ABC):
    """
    Short-range scatterer seen through its phase shifts delta_alpha(ka).

    Subclasses supply `phase_shift`; models that know a finite closed form
    for the channel factor override `closed_form_factor` and
    `closed_form_weight` so degenerate channels can still be evaluated.
    """

    name = "model"

    @abstractmethod
    def phase_shift(self, alpha_tilde: float, ka: float) -> float:
        """Phase shift in (-pi/2, pi/2] for channel order alpha_tilde"""

    def closed_form_factor(self, alpha_tilde: float, ka: float) -> Optional[complex]:
        return None

    def closed_form_weight(self, alpha_tilde: float, ka: float) -> Optional[float]:
        return None

    def channel_factor(self, alpha_tilde: float, ka: float) -> Tuple[complex, bool]:
        """
        Amplitude factor of one channel.

        Returns:
            Tuple[complex, bool]: factor and whether the phase-shift form
            was degenerate and the closed form stood in for it

        Raises:
            DegeneracyError: degenerate channel and no closed form
        """
        delta = self.phase_shift(alpha_tilde, ka)
        try:
            return channel_amplitude_factor(delta, alpha_tilde), False
        except DegeneracyError:
            fallback = self.closed_form_factor(alpha_tilde, ka)
            if fallback is None:
                raise
            logger.debug(f"{self.name}: closed-form factor used at order {alpha_tilde}, ka={ka}")
            return fallback, True

    def channel_weight(self, alpha_tilde: float, ka: float) -> Tuple[float, bool]:
        """Cross-section weight of one channel, same fallback rule as channel_factor"""
        delta = self.phase_shift(alpha_tilde, ka)
        try:
            return interference_weight(delta, alpha_tilde), False
        except DegeneracyError:
            fallback = self.closed_form_weight(alpha_tilde, ka)
            if fallback is None:
                raise
            logger.debug(f"{self.name}: closed-form weight used at order {alpha_tilde}, ka={ka}")
            return fallback, True


@lru_cache(maxsize=131072)
def hard_sphere_phase_shift(alpha_tilde: float, ka: float) -> float:
    """
    Hard-sphere phase shift, tan(delta) = j(ka) / n(ka).

    Args:
        alpha_tilde: Channel order, >= 0
        ka: Wave number times sphere radius, > 0

    Returns:
        float: delta in (-pi/2, pi/2]; pi/2 where n vanishes (half-integer order)
    """
    alpha_tilde = _check_order(alpha_tilde)
    ka = _check_ka(ka)
    j = spherical_j(alpha_tilde, ka)
    n = spherical_n(alpha_tilde, ka)
    if n == 0.0:
        return math.pi / 2.0
    return math.atan(j / n)


@lru_cache(maxsize=131072)
def _bessel_pair(alpha_tilde: float, ka: float) -> Tuple[float, float, float]:
    nu = alpha_tilde + 0.5
    return bessel_j(nu, ka), bessel_y(nu, ka), bessel_j(-nu, ka)


def _cotangent(alpha_tilde: float, ka: float) -> Optional[float]:
    # Y/J; None when the channel does not scatter at all
    j, y, _ = _bessel_pair(_check_order(alpha_tilde), _check_ka(ka))
    if j == 0.0:
        return None
    ratio = y / j
    return ratio if math.isfinite(ratio) else None


def hard_sphere_weight(alpha_tilde: float, ka: float) -> float:
    """J^2 / (J^2 + Y^2) at order alpha_tilde + 1/2, the finite form of the closed-form channel ratio"""
    ratio = _cotangent(alpha_tilde, ka)
    if ratio is None:
        return 0.0
    return 1.0 / (1.0 + ratio * ratio)


def hard_sphere_factor(alpha_tilde: float, ka: float) -> complex:
    """J (Y + iJ) / (J^2 + Y^2), the finite hard-sphere amplitude factor"""
    ratio = _cotangent(alpha_tilde, ka)
    if ratio is None:
        return 0j
    return 1.0 / complex(ratio, -1.0)


def hard_sphere_degenerate(alpha_tilde: float, ka: float) -> bool:
    """
    True when the closed form written with J_{+nu} and J_{-nu} is 0/0.

    Compares J+^2 + J-^2 + 2 sin(a pi) J+ J- against 1e-14 (J+^2 + J-^2),
    after scaling both by the larger Bessel value.
    """
    j_plus, _, j_minus = _bessel_pair(_check_order(alpha_tilde), _check_ka(ka))
    if not (math.isfinite(j_plus) and math.isfinite(j_minus)):
        return False
    scale = max(abs(j_plus), abs(j_minus))
    if scale == 0.0:
        return False
    a, b = j_plus / scale, j_minus / scale
    total = a * a + b * b
    return total + 2.0 * sin_pi(alpha_tilde) * a * b <= 1e-14 * total


@dataclass(frozen=True)
class HardSphere(ScattererModel):
    """
    Impenetrable sphere of radius a; the wavefunction vanishes at r = a.

    Only ka enters the phase shifts; the radius converts amplitudes back
    to lengths.
    """
    radius: float = 1.0
    name = "hard-sphere"

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise DomainError(f"sphere radius must be > 0, got {self.radius}")

    def phase_shift(self, alpha_tilde: float, ka: float) -> float:
        return hard_sphere_phase_shift(float(alpha_tilde), float(ka))

    def closed_form_factor(self, alpha_tilde: float, ka: float) -> Optional[complex]:
        return hard_sphere_factor(float(alpha_tilde), float(ka))

    def closed_form_weight(self, alpha_tilde: float, ka: float) -> Optional[float]:
        return hard_sphere_weight(float(alpha_tilde), float(ka))


class NullScatterer(ScattererModel):
    """No interaction: every phase shift is zero"""

    name = "null"

    def phase_shift(self, alpha_tilde: float, ka: float) -> float:
        _check_order(alpha_tilde)
        _check_ka(ka)
        return 0.0

    def closed_form_factor(self, alpha_tilde: float, ka: float) -> Optional[complex]:
        return 0j

    def closed_form_weight(self, alpha_tilde: float, ka: float) -> Optional[float]:
        return 0.0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NullScatterer)

    def __hash__(self) -> int:
        return hash(self.name)


def exterior_radial_function(delta: float, alpha_tilde: float, kr: float) -> float:
    """cos(delta) j(kr) - sin(delta) n(kr): the exterior radial solution up to normalization"""
    delta = require_finite("delta", delta)
    return math.cos(delta) * spherical_j(alpha_tilde, kr) - math.sin(delta) * spherical_n(alpha_tilde, kr)


def low_energy_tan_delta(l: int, ka: float) -> float:
    """Leading small-ka behaviour of tan(delta_l): -(ka)^(2l+1) / (((2l-1)!!)^2 (2l+1))"""
    if int(l) != l or l < 0:
        raise DomainError(f"l must be a nonnegative integer, got {l!r}")
    l = int(l)
    ka = _check_ka(ka)
    return -(ka ** (2 * l + 1)) / (double_factorial(2 * l - 1) ** 2 * (2 * l + 1))


_MODELS: Dict[str, Type[ScattererModel]] = {
    HardSphere.name: HardSphere,
    NullScatterer.name: NullScatterer,
}


def scatterer_model(name: str) -> ScattererModel:
    """Instantiate a registered model by name"""
    try:
        return _MODELS[name]()
    except KeyError:
        raise DomainError(f"unknown scatterer model {name!r}; choose from {', '.join(_MODELS)}") from None


def model_names() -> List[str]:
    return list(_MODELS)

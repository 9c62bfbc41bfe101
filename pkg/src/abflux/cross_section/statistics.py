"""
Particle statistics
Distinguishable particles and flux-carrying identical bosons or fermions
"""

from enum import Enum
from typing import Optional

from ..errors import DomainError


class Statistics(Enum):
    """Statistics of the colliding pair"""
    DISTINGUISHABLE = "dist"
    BOSON = "boson"
    FERMION = "fermion"

    @property
    def m_parity(self) -> Optional[int]:
        """Parity of the azimuthal numbers that survive symmetrization"""
        if self is Statistics.BOSON:
            return 0
        if self is Statistics.FERMION:
            return 1
        return None

    @property
    def prefactor(self) -> int:
        """Multiplier of 4 pi / k^2 in front of the channel sum"""
        return 1 if self is Statistics.DISTINGUISHABLE else 4

    @property
    def is_identical(self) -> bool:
        return self is not Statistics.DISTINGUISHABLE

    @classmethod
    def from_label(cls, label: str) -> "Statistics":
        """Accept 'dist', 'distinguishable', 'boson' or 'fermion'"""
        normalized = label.strip().lower()
        if normalized == "distinguishable":
            normalized = "dist"
        for statistics in cls:
            if statistics.value == normalized:
                return statistics
        raise DomainError(f"unknown statistics {label!r}; choose dist, boson or fermion")

"""
Channel types
The (q, m) labels of a partial wave and their flux-shifted orders
"""

from dataclasses import dataclass

from ..specfun.elementary import require_finite

FluxNumber = float


def validate_flux(mu0: FluxNumber) -> float:
    """Return mu0 as a float; non-finite flux raises DomainError"""
    return require_finite("mu0", mu0)


@dataclass(frozen=True)
class PartialWave:
    """
    General partial wave: Jacobi degree q, azimuthal number m.

    beta = |m + mu0| and alpha = q + beta.
    """
    q: int
    m: int
    beta: float
    alpha: float

    @property
    def order(self) -> float:
        return self.alpha


@dataclass(frozen=True)
class Channel:
    """Equatorial channel (q~, m) with beta = |m + mu0| and alpha~ = 2q~ + beta"""
    q_tilde: int
    m: int
    beta: float
    alpha_tilde: float

    @property
    def q(self) -> int:
        return 2 * self.q_tilde

    @property
    def order(self) -> float:
        return self.alpha_tilde

    def as_partial_wave(self) -> PartialWave:
        return PartialWave(self.q, self.m, self.beta, self.alpha_tilde)

    @classmethod
    def from_partial_wave(cls, wave: PartialWave) -> "Channel":
        if wave.q % 2:
            raise ValueError(f"odd-q wave {wave} has no equatorial channel")
        return cls(wave.q // 2, wave.m, wave.beta, wave.alpha)


def make_channel(q_tilde: int, m: int, mu0: FluxNumber) -> Channel:
    """Build the channel (q~, m) at flux mu0"""
    beta = abs(m + mu0)
    return Channel(q_tilde=int(q_tilde), m=int(m), beta=beta, alpha_tilde=2 * q_tilde + beta)

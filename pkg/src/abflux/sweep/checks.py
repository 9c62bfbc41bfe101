"""
Invariant checks
Physics self-consistency suite behind the `check` command
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy import special

from ..channels import TruncationPolicy, orthogonality_norm
from ..cross_section import (
    Statistics,
    flux_free_total,
    hard_sphere_total_closed_form,
    total_cross_section,
)
from ..errors import AbfluxError
from ..scattering import (
    HardSphere,
    amplitude_grid,
    hard_sphere_phase_shift,
    low_energy_tan_delta,
    optical_theorem_residual,
)
from ..specfun import (
    bessel_j,
    cos_pi,
    gegenbauer_at_zero,
    jacobi_at_zero,
    jacobi_from_gegenbauer_factor,
    jacobi_symmetric,
    legendre_from_jacobi,
    spherical_j,
    spherical_n,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _sigma(ka: float, mu0: float, statistics: Statistics, policy: TruncationPolicy) -> float:
    return hard_sphere_total_closed_form(ka, mu0, statistics, policy).sigma_normalized


def _low_energy(policy: TruncationPolicy) -> Tuple[bool, str]:
    value = _sigma(0.01, 0.0, Statistics.DISTINGUISHABLE, policy)
    return abs(value - 2.0) <= 0.04, f"sigma/sigma0 = {value:.6f} at ka=0.01 (expect 2)"


def _high_energy(policy: TruncationPolicy) -> Tuple[bool, str]:
    value = flux_free_total(50.0, policy).sigma_normalized
    return abs(value - 1.0) <= 0.1, f"sigma/sigma0 = {value:.6f} at ka=50 (expect 1)"


def _flux_free(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for ka in (0.1, 1.0, 5.0, 20.0):
        via_delta = total_cross_section(HardSphere(), ka, 0.0, Statistics.DISTINGUISHABLE, policy).sum_f
        reference = flux_free_total(ka, policy).sum_f
        worst = max(worst, abs(via_delta - reference) / reference)
    return worst <= 1e-10, f"max relative difference {worst:.2e}"


def _half_flux(policy: TruncationPolicy) -> Tuple[bool, str]:
    ratio = _sigma(0.1, 0.5, Statistics.DISTINGUISHABLE, policy) / _sigma(
        0.1, 0.0, Statistics.DISTINGUISHABLE, policy
    )
    return ratio < 0.05, f"sigma(0.5)/sigma(0) = {ratio:.6f} at ka=0.1"


def _integer_flux(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for ka in (0.1, 1.0, 5.0):
        base = _sigma(ka, 0.0, Statistics.DISTINGUISHABLE, policy)
        worst = max(worst, abs(_sigma(ka, 1.0, Statistics.DISTINGUISHABLE, policy) - base) / base)
    return worst <= 1e-10, f"max relative difference {worst:.2e}"


def _periodicity(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    cases = [(Statistics.DISTINGUISHABLE, 1.0), (Statistics.BOSON, 2.0), (Statistics.FERMION, 2.0)]
    for statistics, period in cases:
        for mu0 in np.linspace(0.0, 2.0, 9):
            base = _sigma(0.3, float(mu0), statistics, policy)
            shifted = _sigma(0.3, float(mu0) + period, statistics, policy)
            worst = max(worst, abs(shifted - base) / base)
    return worst <= 1e-9, f"max relative difference {worst:.2e} at ka=0.3"


def _identical_extrema(statistics: Statistics, zero_at: float, peak_at: float, policy: TruncationPolicy) -> Tuple[bool, str]:
    grid = np.linspace(0.0, 2.0, 9)
    values = [_sigma(0.1, float(mu0), statistics, policy) for mu0 in grid]
    zero = values[int(np.argmin(np.abs(grid - zero_at)))]
    peak = float(grid[int(np.argmax(values))])
    # mu0 = 0 and 2 are the same point
    located = math.isclose(peak % 2.0, peak_at % 2.0)
    return zero < 0.05 and located, f"sigma(mu0={zero_at:g}) = {zero:.3e}, maximum at mu0 = {peak:g} (expect {peak_at:g})"


def _boson_extrema(policy: TruncationPolicy) -> Tuple[bool, str]:
    return _identical_extrema(Statistics.BOSON, 1.0, 0.0, policy)


def _fermion_extrema(policy: TruncationPolicy) -> Tuple[bool, str]:
    return _identical_extrema(Statistics.FERMION, 0.0, 1.0, policy)


def _sum_rule(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for ka in (0.1, 1.0, 5.0):
        for mu0 in (0.0, 0.3, 0.5, 0.7, 1.0):
            values = {
                statistics: hard_sphere_total_closed_form(ka, mu0, statistics, policy).sigma_raw
                for statistics in Statistics
            }
            identical = values[Statistics.BOSON] + values[Statistics.FERMION]
            expected = 4.0 * values[Statistics.DISTINGUISHABLE]
            worst = max(worst, abs(identical - expected) / expected)
    return worst <= 1e-10, f"max relative difference {worst:.2e}"


def _optical_theorem(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for ka in (0.1, 1.0, 5.0):
        for mu0 in (0.0, 0.3, 0.5, 0.7, 1.0):
            worst = max(worst, optical_theorem_residual(HardSphere(), ka, mu0, policy).residual)
    return worst < 1e-8, f"max residual {worst:.2e}"


def _mirror_symmetry(policy: TruncationPolicy) -> Tuple[bool, str]:
    theta, phi = np.meshgrid(np.linspace(0.1, 1.4, 6), np.linspace(0.0, 2.0 * math.pi, 7), indexing="ij")
    worst = 0.0
    for mu0 in (0.0, 0.5):
        direct = amplitude_grid(HardSphere(), 1.0, mu0, theta, phi, policy=policy).value
        mirrored = amplitude_grid(HardSphere(), 1.0, mu0, math.pi - theta, phi, policy=policy).value
        worst = max(worst, float(np.max(np.abs(direct - mirrored)) / np.max(np.abs(direct))))
    return worst <= 1e-10, f"max relative difference {worst:.2e} at ka=1"


def _legendre_bridge(policy: TruncationPolicy) -> Tuple[bool, str]:
    theta = np.linspace(0.0, math.pi, 13)
    worst = 0.0
    for l in range(9):
        for m in range(l + 1):
            expected = special.lpmv(m, l, np.cos(theta))
            scale = max(1.0, float(np.max(np.abs(expected))))
            worst = max(worst, float(np.max(np.abs(legendre_from_jacobi(l, m, theta) - expected))) / scale)
    return worst <= 1e-10, f"max scaled difference {worst:.2e} for l <= 8"


def _orthogonality(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for m, mu0 in ((0, 0.3), (1, 0.25), (-2, 0.5), (3, 0.0)):
        beta = abs(m + mu0)
        nodes, weights = special.roots_jacobi(200, beta, beta)
        table = np.array([jacobi_symmetric(q, beta, nodes) for q in range(7)])
        gram = 2.0 * math.pi * 4.0 ** (-beta) * (table * weights) @ table.T
        for q in range(7):
            norm = orthogonality_norm(q, m, mu0)
            expected = np.zeros(7)
            expected[q] = norm
            worst = max(worst, float(np.max(np.abs(gram[q] - expected))) / norm)
    return worst <= 1e-8, f"max relative deviation {worst:.2e} with 200 nodes"


def _zero_argument(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for beta in (0.0, 0.25, 0.5, 1.3):
        for q in range(11):
            recurrence = float(jacobi_symmetric(q, beta, 0.0))
            connected = jacobi_from_gegenbauer_factor(q, beta) * gegenbauer_at_zero(q, beta + 0.5)
            worst = max(worst, abs(connected - recurrence))
            if q % 2 == 0:
                worst = max(worst, abs(jacobi_at_zero(q // 2, beta) - recurrence) / max(1.0, abs(recurrence)))
    return worst <= 1e-10, f"max difference {worst:.2e} for q <= 10"


def _half_integer_bessel(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for z in (0.3, 0.7, 3.0, 12.5, 55.0):
        scale = math.sqrt(2.0 / (math.pi * z))
        expected = {
            -0.5: scale * math.cos(z),
            0.5: scale * math.sin(z),
            1.5: scale * (math.sin(z) / z - math.cos(z)),
            -1.5: -scale * (math.sin(z) + math.cos(z) / z),
        }
        for nu, value in expected.items():
            worst = max(worst, abs(bessel_j(nu, z) - value) / max(1.0, abs(value)))
    return worst <= 1e-10, f"max difference {worst:.2e}"


def _bessel_asymptotics(policy: TruncationPolicy) -> Tuple[bool, str]:
    worst = 0.0
    for alpha in (0.0, 0.5, 1.0, 2.7):
        bound = max(2.0, alpha * (alpha + 1.0))
        for z in np.linspace(50.0, 200.0, 16):
            j_limit = math.sin(z - alpha * math.pi / 2.0) / z
            n_limit = -cos_pi(alpha) * math.cos(z + alpha * math.pi / 2.0) / z
            excess = max(abs(spherical_j(alpha, z) - j_limit), abs(spherical_n(alpha, z) - n_limit)) * z * z / bound
            worst = max(worst, excess)
    return worst <= 1.0, f"largest deviation {worst:.3f} of the 1/z^2 bound on [50, 200]"


def _phase_shift_scaling(policy: TruncationPolicy) -> Tuple[bool, str]:
    ka = 1e-3
    worst = 0.0
    for l in range(4):
        ratio = math.tan(hard_sphere_phase_shift(float(l), ka)) / low_energy_tan_delta(l, ka)
        worst = max(worst, abs(ratio - 1.0))
    return worst <= 1e-2, f"max |ratio - 1| = {worst:.2e} at ka=1e-3 for l <= 3"


CHECKS: List[Tuple[str, Callable[[TruncationPolicy], Tuple[bool, str]]]] = [
    ("low-energy limit", _low_energy),
    ("high-energy limit", _high_energy),
    ("flux-free reduction", _flux_free),
    ("half-flux suppression", _half_flux),
    ("integer-flux invisibility", _integer_flux),
    ("flux periodicity", _periodicity),
    ("boson extrema", _boson_extrema),
    ("fermion extrema", _fermion_extrema),
    ("boson + fermion sum rule", _sum_rule),
    ("optical theorem", _optical_theorem),
    ("mirror symmetry", _mirror_symmetry),
    ("phase-shift low-energy law", _phase_shift_scaling),
    ("Legendre bridge", _legendre_bridge),
    ("angular orthogonality", _orthogonality),
    ("Jacobi zero-argument values", _zero_argument),
    ("half-integer Bessel forms", _half_integer_bessel),
    ("Bessel asymptotics", _bessel_asymptotics),
]


def run_checks(policy: Optional[TruncationPolicy] = None) -> List[CheckResult]:
    """Run every check; an exception inside a check counts as a failure"""
    policy = policy or TruncationPolicy()
    results = []
    for name, check in CHECKS:
        try:
            passed, detail = check(policy)
        except AbfluxError as e:
            logger.error(f"check '{name}' raised {type(e).__name__}: {e}")
            passed, detail = False, f"{type(e).__name__}: {e}"
        results.append(CheckResult(name, bool(passed), detail))
    return results

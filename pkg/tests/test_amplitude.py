"""
Test the scattering amplitude, the modified plane wave and the optical theorem
"""

import math
import unittest

import numpy as np
from scipy import special

from abflux.channels import TruncationPolicy
from abflux.errors import ConvergenceError, DomainError
from abflux.scattering import (
    AXIAL,
    EQUATORIAL,
    AmplitudeValue,
    HardSphere,
    IncidentDirection,
    NullScatterer,
    amplitude_grid,
    modified_plane_wave,
    optical_theorem_residual,
    scattering_amplitude,
)


def textbook_amplitude(ka, theta, l_max=60):
    """k f for the hard sphere without flux, from scipy spherical Bessel functions"""
    total = np.zeros_like(np.asarray(theta, dtype=float), dtype=complex)
    for l in range(l_max + 1):
        delta = math.atan(special.spherical_jn(l, ka) / special.spherical_yn(l, ka))
        factor = complex(math.cos(delta), math.sin(delta)) * math.sin(delta)
        total += (2 * l + 1) * factor * special.eval_legendre(l, np.cos(theta))
    return total


def naive_equatorial_sum(coefficient, mu0, policy, theta, phi):
    """
    Fixed-range double sum over even q and all m up to the caps of policy,
    built term by term from scipy; returns the sum and the sum of magnitudes.
    """
    q = 2 * np.arange(policy.q_max + 1)[:, None]
    m = np.arange(-policy.m_max, policy.m_max + 1)[None, :]
    beta = np.abs(m + mu0)
    alpha = q + beta
    log_norm = 0.5 * (special.gammaln(q + 1.0) + special.gammaln(q + 2.0 * beta + 1.0)) - special.gammaln(q + beta + 1.0)
    with np.errstate(all="ignore"):
        radial = coefficient(alpha)
        incoming = np.exp(log_norm - beta * math.log(2.0)) * special.eval_jacobi(q, beta, beta, 0.0)
        outgoing = (
            np.exp(log_norm + beta * math.log(math.sin(theta) / 2.0))
            * special.eval_jacobi(q, beta, beta, math.cos(theta))
            * np.exp(1j * m * phi)
        )
        terms = np.where(radial != 0, (2.0 * alpha + 1.0) * radial * incoming * outgoing, 0j)
    return complex(np.sum(terms)), float(np.sum(np.abs(terms)))


def hard_sphere_coefficient(ka):
    """J / (Y - iJ) at order alpha + 1/2, zero once J underflows"""
    def coefficient(alpha):
        j, y = special.jv(alpha + 0.5, ka), special.yv(alpha + 0.5, ka)
        with np.errstate(all="ignore"):
            ratio = y / j
        usable = np.isfinite(ratio) & (j != 0)
        return np.where(usable, 1.0 / (np.where(usable, ratio, 0.0) - 1j), 0j)
    return coefficient


def plane_wave_coefficient(kr):
    """i^alpha j_alpha(kr) for real orders"""
    def coefficient(alpha):
        return np.exp(0.5j * math.pi * alpha) * math.sqrt(math.pi / (2.0 * kr)) * special.jv(alpha + 0.5, kr)
    return coefficient


class TestIncidentDirection(unittest.TestCase):
    """Test incident directions"""

    def test_presets(self):
        """Test the equatorial and axial directions"""
        self.assertTrue(EQUATORIAL.is_equatorial)
        self.assertFalse(AXIAL.is_equatorial)
        self.assertEqual(IncidentDirection(), EQUATORIAL)

    def test_validation(self):
        """Test polar angles outside [0, pi]"""
        with self.assertRaises(DomainError):
            IncidentDirection(theta_p=4.0)
        with self.assertRaises(DomainError):
            IncidentDirection(theta_p=math.nan)


class TestScatteringAmplitude(unittest.TestCase):
    """Test k f(theta, phi)"""

    def setUp(self):
        """Set up the hard sphere"""
        self.model = HardSphere()

    def test_flux_free_reduction(self):
        """Test axial incidence without flux reproduces the Legendre series"""
        theta = np.linspace(0.0, math.pi, 13)
        for ka in (0.5, 1.0, 5.0):
            expected = textbook_amplitude(ka, theta)
            value = amplitude_grid(self.model, ka, 0.0, theta, 0.0, AXIAL).value
            scale = float(np.max(np.abs(expected)))
            np.testing.assert_allclose(value, expected, rtol=0.0, atol=1e-10 * scale)

    def test_scattering_length(self):
        """Test f = -a at very low energy"""
        value = scattering_amplitude(self.model, 0.01, 0.0, EQUATORIAL, math.pi / 2.0, 0.0)
        self.assertAlmostEqual(value.f_over_a.real, -1.0, delta=1e-3)
        self.assertLess(abs(value.f_over_a.imag), 0.02)
        self.assertTrue(value.converged)

    def test_mirror_symmetry(self):
        """Test f(theta, phi) = f(pi - theta, phi) for equatorial incidence"""
        theta, phi = np.meshgrid(np.linspace(0.1, 1.4, 5), np.array([0.0, 1.0, 2.5]), indexing="ij")
        for mu0 in (0.0, 0.3, 0.5):
            direct = amplitude_grid(self.model, 1.0, mu0, theta, phi).value
            mirrored = amplitude_grid(self.model, 1.0, mu0, math.pi - theta, phi).value
            scale = float(np.max(np.abs(direct)))
            np.testing.assert_allclose(mirrored, direct, rtol=0.0, atol=1e-10 * scale)

    def test_integer_flux_equivalence(self):
        """Test integer flux only changes the phase of f"""
        for theta, phi in ((0.7, 0.3), (1.2, 2.0), (math.pi / 2.0, 0.0)):
            with_flux = scattering_amplitude(self.model, 1.0, 1.0, EQUATORIAL, theta, phi).value
            without = scattering_amplitude(self.model, 1.0, 0.0, EQUATORIAL, theta, phi).value
            self.assertAlmostEqual(abs(with_flux) / abs(without), 1.0, places=10)

    def test_grid_shape(self):
        """Test broadcasting of angle arrays"""
        value = amplitude_grid(self.model, 0.5, 0.25, np.linspace(0.2, 2.0, 4)[:, None], np.zeros(3)).value
        self.assertEqual(value.shape, (4, 3))

    def test_against_naive_double_sum(self):
        """Test the adaptive sum against a fixed double sum at doubled caps"""
        policy = TruncationPolicy()
        for ka, mu0 in ((2.0, 0.0), (2.0, 0.3), (2.0, 0.5), (0.5, 0.7)):
            value = scattering_amplitude(self.model, ka, mu0, EQUATORIAL, 1.0, 0.4, policy)
            self.assertLess(value.channels_used, (policy.q_max + 1) * (2 * policy.m_max + 1))
            naive, scale = naive_equatorial_sum(hard_sphere_coefficient(ka), mu0, policy.doubled(), 1.0, 0.4)
            self.assertLessEqual(abs(value.value - naive), 10.0 * policy.rel_tol * scale)

    def test_degenerate_channels_are_flagged(self):
        """Test half-integer orders resolved in closed form are reported"""
        value = scattering_amplitude(self.model, 1.0, 0.5)
        self.assertTrue(value.degenerate)
        self.assertIn(0.5, value.degenerate_orders)
        self.assertTrue(math.isfinite(abs(value.value)))
        self.assertFalse(scattering_amplitude(self.model, 1.0, 0.3).degenerate)

    def test_convergence_error_keeps_partial(self):
        """Test tiny caps raise with an AmplitudeValue attached"""
        with self.assertRaises(ConvergenceError) as caught:
            scattering_amplitude(self.model, 5.0, 0.0, policy=TruncationPolicy(q_max=1, m_max=1))
        partial = caught.exception.partial
        self.assertIsInstance(partial, AmplitudeValue)
        self.assertFalse(partial.converged)

    def test_domain(self):
        """Test invalid ka and angles"""
        with self.assertRaises(DomainError):
            scattering_amplitude(self.model, 0.0, 0.0)
        with self.assertRaises(DomainError):
            scattering_amplitude(self.model, 1.0, 0.0, theta=-0.1)
        with self.assertRaises(DomainError):
            scattering_amplitude(self.model, 1.0, math.inf)


class TestModifiedPlaneWave(unittest.TestCase):
    """Test the partial-wave expansion of the flux-carrying plane wave"""

    def test_axial_plane_wave(self):
        """Test axial incidence without flux gives exp(i kr cos(theta))"""
        for r in (0.5, 3.0, 10.0):
            for theta in (0.0, 0.8, 2.2, math.pi):
                value = modified_plane_wave(1.0, 0.0, AXIAL, r, theta, 0.3)
                self.assertAlmostEqual(value, complex(math.cos(r * math.cos(theta)), math.sin(r * math.cos(theta))), delta=1e-8)

    def test_equatorial_plane_wave(self):
        """Test equatorial incidence without flux gives exp(i kx)"""
        for r, theta, phi in ((3.0, 1.0, 0.4), (7.5, 0.3, 2.0), (1.0, math.pi / 2.0, 0.0)):
            phase = r * math.sin(theta) * math.cos(phi)
            value = modified_plane_wave(1.0, 0.0, EQUATORIAL, r, theta, phi)
            self.assertAlmostEqual(value, complex(math.cos(phase), math.sin(phase)), delta=1e-8)

    def test_origin(self):
        """Test only the lowest channel survives at r = 0"""
        self.assertAlmostEqual(modified_plane_wave(1.0, 0.0, AXIAL, 0.0, 1.0, 0.0), 1.0 + 0j, places=14)

    def test_flux_against_naive_double_sum(self):
        """Test the flux-carrying expansion against a fixed double sum at doubled caps"""
        policy = TruncationPolicy()
        for mu0, r in ((0.5, 4.0), (0.3, 2.5)):
            value = modified_plane_wave(1.0, mu0, EQUATORIAL, r, 1.1, 0.7, policy)
            naive, scale = naive_equatorial_sum(plane_wave_coefficient(r), mu0, policy.doubled(), 1.1, 0.7)
            self.assertLessEqual(abs(value - naive), 10.0 * policy.rel_tol * scale)

    def test_negative_radius(self):
        """Test r < 0 is rejected"""
        with self.assertRaises(DomainError):
            modified_plane_wave(1.0, 0.0, AXIAL, -1.0, 0.0, 0.0)


class TestOpticalTheorem(unittest.TestCase):
    """Test sigma_t against the forward amplitude"""

    def test_hard_sphere_grid(self):
        """Test the residual over ka and flux"""
        model = HardSphere()
        for ka in (0.1, 1.0, 5.0):
            for mu0 in (0.0, 0.3, 0.5, 0.7, 1.0):
                check = optical_theorem_residual(model, ka, mu0)
                self.assertFalse(check.absolute)
                self.assertLess(check.residual, 1e-8, msg=f"ka={ka}, mu0={mu0}")

    def test_null_model(self):
        """Test both sides vanish without scattering"""
        check = optical_theorem_residual(NullScatterer(), 1.0, 0.3)
        self.assertTrue(check.absolute)
        self.assertEqual(check.sigma_total, 0.0)
        self.assertEqual(check.forward_imag, 0.0)
        self.assertEqual(check.residual, 0.0)


if __name__ == "__main__":
    unittest.main()

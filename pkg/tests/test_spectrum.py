import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from monosphere.errors import DomainError, EmptyTableError
from monosphere.spectrum import (
    PhysicalScale,
    QuantumNumbers,
    epsilon,
    gap_in_m,
    landau_energy,
    level_table,
    negative_m_energy,
    physical_energy,
    vector_potential,
)


def rational_energy(ell, m, p):
    """l(l+1) + |m|(l + 1/2) + (p+m)(l + (m+|m|+1)/2), in exact rationals."""
    am = abs(m)
    return ell * (ell + 1) + am * (ell + Fraction(1, 2)) + (p + m) * (ell + Fraction(m + am + 1, 2))


@st.composite
def admissible(draw, max_value=200):
    p = draw(st.integers(0, max_value))
    m = draw(st.integers(-p, p))
    ell = draw(st.integers(0, max_value))
    return ell, m, p


class TestQuantumNumbers:
    @pytest.mark.parametrize("ell,m,p", [(0, 1, 0), (0, -3, 2), (0, 11, 10), (-1, 0, 0), (0, 0, -1)])
    def test_rejects_inadmissible(self, ell, m, p):
        with pytest.raises(DomainError):
            QuantumNumbers(ell, m, p)

    def test_message_names_constraint(self):
        with pytest.raises(DomainError, match=r"-p <= m <= p"):
            QuantumNumbers(0, 11, 10)

    def test_rejects_fractional_flux(self):
        with pytest.raises(DomainError):
            QuantumNumbers(0, 0, 2.5)

    def test_rejects_beyond_guard(self):
        with pytest.raises(DomainError):
            QuantumNumbers(10**6 + 1, 0, 0)

    def test_jacobi_parameters(self):
        qn = QuantumNumbers(2, -3, 5)
        assert (qn.alpha, qn.beta) == (3, 2)


class TestEpsilon:
    def test_ground_state(self):
        assert epsilon(QuantumNumbers(0, 0, 0)).epsilon == 0

    @pytest.mark.parametrize("ell", range(12))
    def test_rigid_rotor(self, ell):
        assert epsilon(QuantumNumbers(ell, 0, 0)).two_epsilon == 2 * ell * (ell + 1)

    @pytest.mark.parametrize("m,expected", [(0, 5), (-10, 5), (10, 215)])
    def test_p10_values(self, m, expected):
        assert epsilon(QuantumNumbers(0, m, 10)).epsilon == expected

    @given(admissible())
    def test_matches_rational_formula(self, qn):
        level = epsilon(QuantumNumbers(*qn))
        assert isinstance(level.two_epsilon, int)
        assert Fraction(level.two_epsilon, 2) == rational_energy(*qn)
        assert level.epsilon == level.two_epsilon / 2
        assert level.two_epsilon >= 0

    @given(admissible())
    def test_jacobi_eigenvalue_form(self, qn):
        # eps + p^2/4 = s(s+1) with s = l + (|m| + p + m)/2
        ell, m, p = qn
        s = Fraction(2 * ell + abs(m) + p + m, 2)
        assert rational_energy(*qn) == s * (s + 1) - Fraction(p * p, 4)

    @given(admissible())
    def test_monotone_in_ell(self, qn):
        ell, m, p = qn
        assert epsilon(QuantumNumbers(ell + 1, m, p)).two_epsilon > epsilon(QuantumNumbers(ell, m, p)).two_epsilon

    def test_large_quantum_numbers_exact(self):
        level = epsilon(QuantumNumbers(10**6, 10**6, 10**6))
        assert Fraction(level.two_epsilon, 2) == rational_energy(10**6, 10**6, 10**6)


class TestGapAndFlatness:
    def test_gap_examples(self):
        assert gap_in_m(0, 0, 10) == 12
        assert gap_in_m(5, 0, 10) == 22

    def test_gap_matches_differences(self):
        for p in range(21):
            for ell in range(21):
                for m in range(0, p):
                    diff = epsilon(QuantumNumbers(ell, m + 1, p)).two_epsilon - epsilon(
                        QuantumNumbers(ell, m, p)
                    ).two_epsilon
                    assert diff == 2 * gap_in_m(ell, m, p)

    def test_gap_rejects_successor_outside(self):
        with pytest.raises(DomainError):
            gap_in_m(0, 10, 10)
        with pytest.raises(DomainError):
            gap_in_m(0, -1, 10)

    @pytest.mark.parametrize("ell,eps", [(0, 5), (5, 85), (10, 215)])
    def test_negative_m_examples(self, ell, eps):
        two = negative_m_energy(ell, 10)
        assert two == 2 * eps
        for m in range(-10, 0):
            assert epsilon(QuantumNumbers(ell, m, 10)).two_epsilon == two

    def test_negative_m_needs_flux(self):
        with pytest.raises(DomainError):
            negative_m_energy(0, 0)


class TestLevelTable:
    def test_figure1_dataset(self):
        rows = level_table(10, [0, 5, 10], range(-10, 11))
        assert len(rows) == 63
        keyed = {(r.ell, r.m): r.epsilon for r in rows}
        assert keyed[(0, -10)] == 5 and keyed[(0, 0)] == 5 and keyed[(0, 10)] == 215
        assert [(r.ell, r.m) for r in rows] == sorted((r.ell, r.m) for r in rows)

    def test_rigid_rotor_rows(self):
        assert [r.epsilon for r in level_table(0, [0, 1, 2], [0])] == [0, 2, 6]

    def test_single_flux_quantum(self):
        # m=1 is 7/2: l+1/2 from |m| plus 2 * 3/2 from p+m
        assert [r.epsilon for r in level_table(1, [0], range(-1, 2))] == [0.5, 0.5, 3.5]

    def test_inadmissible_errors_unless_skipped(self):
        with pytest.raises(DomainError):
            level_table(2, [0], range(-3, 4))
        rows = level_table(2, [0], range(-3, 4), skip_inadmissible=True)
        assert [r.m for r in rows] == [-2, -1, 0, 1, 2]

    def test_empty_table_notice(self):
        with pytest.raises(EmptyTableError):
            level_table(1, [0], [5, 6], skip_inadmissible=True)


# hbar and electron mass in gaussian units, typed in independently of the constants table
HBAR_CGS = 1.054571817e-27
E_CGS = 4.803204713e-10
C_CGS = 2.99792458e10


class TestPhysical:
    def test_zero_energy(self):
        scale = PhysicalScale(9.109e-28, 1e-6)
        assert physical_energy(epsilon(QuantumNumbers(0, 0, 0)), scale) == 0.0

    def test_unit_scale(self):
        # m* = hbar^2 / 2 at R = 1 makes the energy unit exactly one
        scale = PhysicalScale(HBAR_CGS**2 / 2, 1.0)
        level = epsilon(QuantumNumbers(1, 0, 0))
        assert physical_energy(level, scale) == pytest.approx(2.0, rel=1e-15)

    def test_rigid_rotor_in_erg(self):
        scale = PhysicalScale(9.109e-28, 1e-6)
        expected = 6 * HBAR_CGS**2 / (2 * 9.109e-28 * 1e-12)
        assert physical_energy(epsilon(QuantumNumbers(2, 0, 0)), scale) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(3.66270e-15, rel=1e-5)

    def test_flux_quanta_matches_definition(self):
        scale = PhysicalScale.electron(3e-5, 2e4)
        phi0 = 2 * math.pi * HBAR_CGS * C_CGS / E_CGS
        assert scale.flux_ratio == pytest.approx(4 * math.pi * 9e-10 * 2e4 / phi0, rel=1e-9)

    def test_flux_rounding_half_even(self):
        scale = PhysicalScale.electron(1.0, 1.0)
        phi0 = scale.flux_quantum
        for target, expected in [(2.5, 2), (3.5, 4), (4.4999, 4)]:
            radius = math.sqrt(target * phi0 / (4 * math.pi))
            assert scale.with_radius(radius).flux_quanta() == expected

    def test_si_cyclotron(self):
        scale = PhysicalScale.electron(1e-7, 1.0, "si")
        assert scale.cyclotron_frequency == pytest.approx(1.602176634e-19 / 9.109383702e-31, rel=1e-12)

    def test_si_and_gaussian_agree_on_flux(self):
        cgs = PhysicalScale.electron(1e-5, 1e4)
        si = PhysicalScale.electron(1e-7, 1.0, "si")
        assert cgs.flux_ratio == pytest.approx(si.flux_ratio, rel=1e-8)
        assert cgs.cyclotron_frequency == pytest.approx(si.cyclotron_frequency, rel=1e-8)


class TestLandau:
    scale = PhysicalScale.electron(1e-5, 1e4)

    def hw(self):
        return self.scale.hbar * self.scale.cyclotron_frequency

    def test_lowest_level(self):
        assert landau_energy(0, 0, self.scale) == pytest.approx(0.5 * self.hw(), rel=1e-15)

    @pytest.mark.parametrize("m", [-1, -2, -7])
    def test_negative_m_independent(self, m):
        assert landau_energy(0, m, self.scale) == landau_energy(0, -1, self.scale)

    def test_n1_m2(self):
        assert landau_energy(1, 2, self.scale) == pytest.approx(3.5 * self.hw(), rel=1e-15)

    def test_zero_field(self):
        with pytest.raises(DomainError):
            landau_energy(0, 0, PhysicalScale.electron(1e-5, 0.0))

    def test_flux_relation_gives_half_cyclotron(self):
        # E0 * p / 2 = hbar omega_c / 2 when p = 4 pi R^2 B / Phi_0 exactly
        s = self.scale
        assert s.energy_unit * s.flux_ratio / 2 == pytest.approx(0.5 * self.hw(), rel=1e-12)


class TestVectorPotential:
    @given(st.floats(min_value=1e-3, max_value=math.pi - 1e-3))
    def test_encircled_flux(self, theta):
        flux, radius = 7.3, 2.0
        circulation = 2 * math.pi * radius * math.sin(theta) * vector_potential(theta, flux, radius)
        assert circulation == pytest.approx(0.5 * (1 - math.cos(theta)) * flux, rel=1e-12)

    def test_regular_at_north_pole(self):
        assert vector_potential(0.0, 1.0, 1.0) == 0.0

    def test_field_is_radial_and_uniform(self):
        # B_r = (1 / (R sin)) d(sin A)/dtheta = flux / (4 pi R^2)
        flux, radius, h = 3.0, 1.5, 1e-6
        theta = np.linspace(0.2, 2.8, 9)
        g = lambda t: np.sin(t) * vector_potential(t, flux, radius)
        br = (g(theta + h) - g(theta - h)) / (2 * h) / (radius * np.sin(theta))
        assert np.allclose(br, flux / (4 * math.pi * radius**2), rtol=1e-7)

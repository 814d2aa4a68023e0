"""Exact energy levels of a charge on a sphere around a monopole flux.

Dimensionless energies are kept as the integer ``2 * epsilon``; with integer
(ell, m, p) the level is always a half-integer, so every identity in this
module is an integer identity.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, replace
from typing import Iterable

import numpy as np

from . import constants as _const
from .errors import DomainError, EmptyTableError

__all__ = [
    "QuantumNumbers",
    "EnergyLevel",
    "PhysicalScale",
    "epsilon",
    "two_epsilon",
    "physical_energy",
    "gap_in_m",
    "negative_m_energy",
    "level_table",
    "landau_energy",
    "vector_potential",
    "QN_LIMIT",
]

QN_LIMIT = 10**6


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    try:
        return operator.index(value)
    except TypeError:
        pass
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise DomainError(f"{name} must be an integer, got {value!r}")


@dataclass(frozen=True)
class QuantumNumbers:
    """Jacobi degree ``ell``, azimuthal number ``m`` and flux quanta ``p``."""

    ell: int
    m: int
    p: int

    def __post_init__(self):
        ell = _as_int(self.ell, "ell")
        m = _as_int(self.m, "m")
        p = _as_int(self.p, "p")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p", p)
        if ell < 0:
            raise DomainError(f"ell must be >= 0, got ell={ell}")
        if p < 0:
            raise DomainError(f"flux p must be >= 0, got p={p}")
        if not -p <= m <= p:
            raise DomainError(f"constraint -p <= m <= p violated: m={m}, p={p}")
        if p + m < 0:
            raise DomainError(f"constraint p + m >= 0 violated: m={m}, p={p}")
        if max(ell, abs(m), p) > QN_LIMIT:
            raise DomainError(f"quantum numbers limited to {QN_LIMIT} in magnitude")

    @property
    def alpha(self) -> int:
        return abs(self.m)

    @property
    def beta(self) -> int:
        return self.p + self.m


def two_epsilon(ell: int, m: int, p: int) -> int:
    """2 * epsilon = 2 l(l+1) + |m|(2l+1) + (p+m)(2l+m+|m|+1)."""
    am = abs(m)
    return 2 * ell * (ell + 1) + am * (2 * ell + 1) + (p + m) * (2 * ell + m + am + 1)


@dataclass(frozen=True)
class EnergyLevel:
    quantum_numbers: QuantumNumbers
    two_epsilon: int

    @property
    def epsilon(self) -> float:
        return self.two_epsilon / 2

    @property
    def ell(self) -> int:
        return self.quantum_numbers.ell

    @property
    def m(self) -> int:
        return self.quantum_numbers.m

    @property
    def p(self) -> int:
        return self.quantum_numbers.p


def epsilon(qn: QuantumNumbers) -> EnergyLevel:
    """Exact dimensionless energy epsilon = 2 m* R^2 E / hbar^2 of ``qn``."""
    if not isinstance(qn, QuantumNumbers):
        qn = QuantumNumbers(*qn)
    return EnergyLevel(qn, two_epsilon(qn.ell, qn.m, qn.p))


@dataclass(frozen=True)
class PhysicalScale:
    """Effective mass, sphere radius and field strength in one unit system.

    Gaussian: grams, centimetres, gauss. SI: kilograms, metres, tesla.
    """

    effective_mass: float
    radius: float
    magnetic_field: float = 0.0
    unit_system: str = _const.GAUSSIAN

    def __post_init__(self):
        if self.unit_system not in _const.UNIT_SYSTEMS:
            raise DomainError(f"unknown unit system {self.unit_system!r}")
        if not self.effective_mass > 0:
            raise DomainError("effective_mass must be > 0")
        if not self.radius > 0:
            raise DomainError("radius must be > 0")
        if not self.magnetic_field >= 0:
            raise DomainError("magnetic_field must be >= 0")

    @classmethod
    def electron(cls, radius: float, magnetic_field: float = 0.0, unit_system: str = _const.GAUSSIAN):
        return cls(_const.constants(unit_system)["m_e"], radius, magnetic_field, unit_system)

    @property
    def hbar(self) -> float:
        return _const.constants(self.unit_system)["hbar"]

    @property
    def energy_unit(self) -> float:
        """hbar^2 / (2 m* R^2)."""
        return self.hbar**2 / (2.0 * self.effective_mass * self.radius**2)

    @property
    def cyclotron_frequency(self) -> float:
        k = _const.constants(self.unit_system)
        if self.unit_system == _const.GAUSSIAN:
            return k["e"] * self.magnetic_field / (self.effective_mass * k["c"])
        return k["e"] * self.magnetic_field / self.effective_mass

    @property
    def flux_quantum(self) -> float:
        return _const.flux_quantum(self.unit_system)

    @property
    def flux_ratio(self) -> float:
        """Total flux 4 pi R^2 B over the flux quantum, unrounded."""
        return 4.0 * math.pi * self.radius**2 * self.magnetic_field / self.flux_quantum

    def flux_quanta(self) -> int:
        """Flux ratio rounded half-to-even to the integer p."""
        return round(self.flux_ratio)

    def with_radius(self, radius: float) -> "PhysicalScale":
        return replace(self, radius=radius)


def physical_energy(level: EnergyLevel, scale: PhysicalScale) -> float:
    """E = epsilon * hbar^2 / (2 m* R^2)."""
    if level.two_epsilon == 0:
        return 0.0
    return level.epsilon * scale.energy_unit


def gap_in_m(ell: int, m: int, p: int) -> int:
    """epsilon(ell, m+1, p) - epsilon(ell, m, p) = 2 ell + p + 2m + 2 for m >= 0."""
    if m < 0:
        raise DomainError(f"gap_in_m is defined for m >= 0, got m={m}")
    if m + 1 > p:
        raise DomainError(f"constraint -p <= m <= p violated by successor m+1={m + 1}, p={p}")
    QuantumNumbers(ell, m, p)
    return 2 * ell + p + 2 * m + 2


def negative_m_energy(ell: int, p: int) -> int:
    """2 * epsilon shared by every m in [-p, -1]: 2 l(l+1) + p(2l+1)."""
    if p < 1:
        raise DomainError(f"negative m requires p >= 1, got p={p}")
    return 2 * ell * (ell + 1) + p * (2 * ell + 1)


def level_table(
    p: int,
    ell_values: Iterable[int],
    m_range: Iterable[int],
    skip_inadmissible: bool = False,
) -> list[EnergyLevel]:
    """Levels for every (ell, m) pair at flux ``p``, ordered by ell then m."""
    rows = []
    ms = sorted(set(m_range))
    for ell in sorted(set(ell_values)):
        for m in ms:
            try:
                qn = QuantumNumbers(ell, m, p)
            except DomainError:
                if skip_inadmissible:
                    continue
                raise
            rows.append(epsilon(qn))
    if not rows:
        raise EmptyTableError(f"no admissible levels for p={p} in the requested ranges")
    return rows


def landau_energy(n: int, m: int, scale: PhysicalScale) -> float:
    """Flat-plane Landau level hbar omega_c (n + (m + |m| + 1)/2)."""
    if n < 0:
        raise DomainError(f"Landau index n must be >= 0, got {n}")
    if not scale.magnetic_field > 0:
        raise DomainError("Landau levels need magnetic_field > 0")
    return scale.hbar * scale.cyclotron_frequency * (n + (m + abs(m) + 1) / 2)


def vector_potential(theta, flux: float, radius: float):
    """Azimuthal potential A(theta) = flux (1 - cos theta) / (4 pi R sin theta).

    Written as flux tan(theta/2) / (4 pi R), regular at the north pole; the
    string singularity sits at theta = pi.
    """
    return flux * np.tan(0.5 * np.asarray(theta, dtype=float)) / (4.0 * math.pi * radius)

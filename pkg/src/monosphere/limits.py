"""Zero-field, strong-field and flat-sphere limits, measured quantitatively."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .spectrum import (
    PhysicalScale,
    QuantumNumbers,
    epsilon,
    landau_energy,
    physical_energy,
)
from .specfun import JacobiSpec, gauss_legendre, jacobi_eval, laguerre_eval, legendre_eval
from .wavefunction import build, evaluate_t, laguerre_form

__all__ = [
    "ConvergenceRecord",
    "fit_rate",
    "legendre_reduction_error",
    "laguerre_limit_error",
    "radii_for_flux",
    "landau_convergence",
    "landau_wavefunction_check",
    "profile_distance",
]


@dataclass(frozen=True)
class ConvergenceRecord:
    parameter: float
    error: float
    rate_estimate: float

    def __post_init__(self):
        if not self.error >= 0:
            raise DomainError(f"convergence error must be >= 0, got {self.error}")


def fit_rate(parameters: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(parameter); NaN if any error is 0."""
    x = np.log(np.asarray(parameters, dtype=float))
    err = np.asarray(errors, dtype=float)
    if len(x) < 2 or np.any(err <= 0):
        return math.nan
    slope, _ = np.polyfit(x, np.log(err), 1)
    return float(slope)


def legendre_reduction_error(ell_max: int, n_samples: int = 101, rooted: bool = True) -> float:
    """Max |T_ell(mu) - c_ell P_ell(mu)| at p = m = 0 over ell <= ell_max.

    ``c_ell = sqrt((2 ell + 1) / (4 pi))``; with ``rooted=False`` the square
    root is dropped, which must give a visibly wrong answer for ell >= 2.
    """
    if ell_max < 0:
        raise DomainError("ell_max must be >= 0")
    mu = np.linspace(-1.0, 1.0, n_samples)
    worst = 0.0
    for ell in range(ell_max + 1):
        c = (2 * ell + 1) / (4 * math.pi)
        if rooted:
            c = math.sqrt(c)
        ref = c * legendre_eval(ell, mu)
        got = evaluate_t(build(QuantumNumbers(ell, 0, 0)), mu)
        worst = max(worst, float(np.max(np.abs(got - ref))))
    return worst


def laguerre_limit_error(ell: int, m: int, p: int, x_samples: Sequence[float]) -> float:
    """Max |P_ell^(|m|, p+m)(1 - 2x/(p+m)) - L_ell^|m|(x)| over ``x_samples``."""
    x = np.asarray(x_samples, dtype=float)
    QuantumNumbers(ell, m, p)
    beta = p + m
    if np.any(x < 0) or np.any(x > 10):
        raise DomainError("x_samples must lie in [0, 10]")
    if not beta > 2 * np.max(x):
        raise DomainError(f"need p + m > 2 max(x); got p + m = {beta}, max(x) = {np.max(x)}")
    jac = jacobi_eval(JacobiSpec(ell, abs(m), beta), 1.0 - 2.0 * x / beta)
    return float(np.max(np.abs(jac - laguerre_eval(ell, abs(m), x))))


def radii_for_flux(flux_quanta: Sequence[int], scale: PhysicalScale) -> list[float]:
    """Radii R = sqrt(p Phi_0 / (4 pi B)) at which the flux is exactly p quanta."""
    if not scale.magnetic_field > 0:
        raise DomainError("radii_for_flux needs magnetic_field > 0")
    return [
        math.sqrt(p * scale.flux_quantum / (4.0 * math.pi * scale.magnetic_field)) for p in flux_quanta
    ]


def landau_convergence(
    n: int,
    m: int,
    radii: Sequence[float],
    scale: PhysicalScale,
    magnetic_field: float | None = None,
) -> list[ConvergenceRecord]:
    """Relative gap between the sphere level and the Landau level as R grows.

    The sphere level uses ell = n and flux p = round(4 pi R^2 B / Phi_0).
    Every record carries the same fitted log-log slope over all radii.
    """
    if magnetic_field is not None:
        scale = PhysicalScale(scale.effective_mass, scale.radius, magnetic_field, scale.unit_system)
    if not scale.magnetic_field > 0:
        raise DomainError("landau_convergence needs B > 0")
    radii = [float(r) for r in radii]
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise DomainError("radii must be strictly ascending")
    errors = []
    for radius in radii:
        at_r = scale.with_radius(radius)
        p = at_r.flux_quanta()
        try:
            qn = QuantumNumbers(n, m, p)
        except DomainError as exc:
            raise DomainError(f"radius {radius:g} gives flux p={p} inadmissible for m={m}: {exc}") from None
        landau = landau_energy(n, m, at_r)
        errors.append(abs(physical_energy(epsilon(qn), at_r) - landau) / landau)
    rate = fit_rate(radii, errors)
    return [ConvergenceRecord(r, e, rate) for r, e in zip(radii, errors)]


def profile_distance(f: np.ndarray, g: np.ndarray, weights: np.ndarray) -> float:
    """L2 distance of f and g after each is normalized under ``weights``."""
    f = f / math.sqrt(np.dot(weights, f * f))
    g = g / math.sqrt(np.dot(weights, g * g))
    return math.sqrt(max(0.0, float(np.dot(weights, (f - g) ** 2))))


def landau_wavefunction_check(n: int, m: int, p: int, x_max: float = 80.0, order: int = 400) -> float:
    """L2 distance between the sphere profile in x = (p+m)(1-mu)/2 and the Laguerre form.

    Both profiles are renormalized on the same x-grid (Gauss-Legendre on
    [0, x_max]), so the comparison does not depend on how the 2^((p+m)/2)
    prefactor is absorbed.
    """
    qn = QuantumNumbers(n, m, p)
    beta = p + m
    if beta <= 0:
        raise DomainError("landau_wavefunction_check needs p + m > 0")
    top = min(x_max, float(beta))
    rule = gauss_legendre(order)
    half = 0.5 * top
    x = half * (rule.nodes + 1.0)
    w = half * rule.weights
    mu = np.clip(1.0 - 2.0 * x / beta, -1.0, 1.0)
    sphere = evaluate_t(build(qn), mu)
    flat = laguerre_form(n, m, x)
    return profile_distance(sphere, flat, w)

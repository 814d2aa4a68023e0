"""Normalized eigenfunctions on the sphere in the variable mu = cos(theta).

T(mu) = N (1 - mu)^(|m|/2) (1 + mu)^((p+m)/2) P_ell^(|m|, p+m)(mu) and
psi = T(mu) exp(i m phi), normalized over the unit sphere. The normalization
is assembled in log space so that fluxes of several thousand quanta do not
overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectrum import QuantumNumbers, epsilon
from .specfun import (
    JacobiSpec,
    gauss_legendre,
    jacobi_deriv,
    jacobi_table,
    laguerre_eval,
    log_gamma,
)

__all__ = [
    "SphericalEigenfunction",
    "AngularSample",
    "build",
    "log_normalization",
    "evaluate_t",
    "evaluate_psi",
    "sample",
    "min_quadrature_order",
    "norm_quadrature",
    "overlap_quadrature",
    "gram_matrix",
    "ode_residual",
    "laguerre_form",
]


@dataclass(frozen=True)
class SphericalEigenfunction:
    qn: QuantumNumbers
    log_norm: float
    jacobi: JacobiSpec

    @property
    def norm(self) -> float:
        return math.exp(self.log_norm)

    @property
    def exponents(self) -> tuple[float, float]:
        """Envelope powers of (1 - mu) and (1 + mu)."""
        return self.jacobi.alpha / 2, self.jacobi.beta / 2


@dataclass(frozen=True)
class AngularSample:
    mu: float
    t_value: float
    residual: float | None = None


def log_normalization(ell: int, alpha: int, beta: int) -> float:
    """log N for the weight (1-mu)^alpha (1+mu)^beta over the sphere measure 2 pi dmu."""
    s = alpha + beta
    return 0.5 * (
        log_gamma(ell + 1)
        + math.log(2 * ell + s + 1)
        + log_gamma(ell + s + 1)
        - math.log(math.pi)
        - (s + 2) * math.log(2.0)
        - log_gamma(ell + alpha + 1)
        - log_gamma(ell + beta + 1)
    )


def build(qn: QuantumNumbers) -> SphericalEigenfunction:
    if not isinstance(qn, QuantumNumbers):
        qn = QuantumNumbers(*qn)
    jac = JacobiSpec(qn.ell, qn.alpha, qn.beta)
    return SphericalEigenfunction(qn, log_normalization(qn.ell, qn.alpha, qn.beta), jac)


def _log_envelope(a: float, b: float, mu: np.ndarray) -> np.ndarray:
    """log of (1-mu)^a (1+mu)^b; -inf where a positive power vanishes."""
    out = np.zeros_like(mu)
    with np.errstate(divide="ignore"):
        if a > 0:
            out = out + a * np.log1p(-mu)
        if b > 0:
            out = out + b * np.log1p(mu)
    return out


def _check_mu(mu) -> np.ndarray:
    mu = np.asarray(mu, dtype=float)
    if np.any(np.abs(mu) > 1.0):
        raise DomainError("mu must lie in [-1, 1]")
    return mu


def evaluate_t(f: SphericalEigenfunction, mu):
    """T(mu), with exact zeros at poles where the envelope power is positive."""
    mu = _check_mu(mu)
    a, b = f.exponents
    env = np.exp(f.log_norm + _log_envelope(a, b, mu))
    # + 0.0 turns the -0.0 of a negative polynomial at a pole into 0.0
    val = env * jacobi_table(f.jacobi.degree, f.jacobi.alpha, f.jacobi.beta, mu)[-1] + 0.0
    return float(val) if val.ndim == 0 else val


def evaluate_psi(f: SphericalEigenfunction, mu, phi):
    # m phi is reduced mod 2 pi only through cos/sin; m = 0 gives sin(0) = 0 exactly
    angle = f.qn.m * np.asarray(phi, dtype=float)
    val = evaluate_t(f, mu) * (np.cos(angle) + 1j * np.sin(angle))
    return complex(val) if np.ndim(val) == 0 else val


def sample(f: SphericalEigenfunction, mu_grid, with_residual: bool = False) -> list[AngularSample]:
    mus = np.asarray(mu_grid, dtype=float)
    t = np.atleast_1d(evaluate_t(f, mus))
    res = None
    if with_residual:
        res = _pointwise_residual(f, mus, epsilon(f.qn).epsilon)
    return [
        AngularSample(float(mu), float(tv), None if res is None else float(res[i]))
        for i, (mu, tv) in enumerate(zip(np.atleast_1d(mus), t))
    ]


def min_quadrature_order(f: SphericalEigenfunction, other: SphericalEigenfunction | None = None) -> int:
    """Smallest Gauss-Legendre order integrating T1 T2 exactly.

    The integrand is a polynomial of degree |m| + (p+m) + ell1 + ell2.
    """
    ell2 = f.qn.ell if other is None else other.qn.ell
    degree = f.jacobi.alpha + f.jacobi.beta + f.qn.ell + ell2
    return math.ceil(degree / 2) + 1


_ORDER_MARGIN = 5


def overlap_quadrature(f1: SphericalEigenfunction, f2: SphericalEigenfunction, order: int | None = None) -> float:
    """2 pi * integral of T1 T2 over mu in [-1, 1]."""
    if (f1.qn.m, f1.qn.p) != (f2.qn.m, f2.qn.p):
        raise DomainError(
            f"overlap needs matching (m, p); got {(f1.qn.m, f1.qn.p)} and {(f2.qn.m, f2.qn.p)}"
        )
    need = min_quadrature_order(f1, f2)
    if order is None:
        order = need + _ORDER_MARGIN
    elif order < need:
        raise DomainError(f"quadrature order {order} under-resolves the integrand; minimum order is {need}")
    rule = gauss_legendre(order)
    return 2.0 * math.pi * rule.integrate(evaluate_t(f1, rule.nodes) * evaluate_t(f2, rule.nodes))


def norm_quadrature(f: SphericalEigenfunction, order: int | None = None) -> float:
    return overlap_quadrature(f, f, order)


def gram_matrix(m: int, p: int, ell_max: int, order: int | None = None) -> np.ndarray:
    """Overlap matrix of all ell = 0..ell_max eigenfunctions in one (m, p) sector."""
    qn = QuantumNumbers(ell_max, m, p)
    a, b = qn.alpha, qn.beta
    need = math.ceil((a + b + 2 * ell_max) / 2) + 1
    if order is None:
        order = need + _ORDER_MARGIN
    elif order < need:
        raise DomainError(f"quadrature order {order} under-resolves the integrand; minimum order is {need}")
    rule = gauss_legendre(order)
    x = rule.nodes
    log_env = _log_envelope(a / 2, b / 2, x)
    lognorms = np.array([log_normalization(ell, a, b) for ell in range(ell_max + 1)])
    t = np.exp(lognorms[:, None] + log_env[None, :]) * jacobi_table(ell_max, a, b, x)
    return 2.0 * math.pi * (t * rule.weights) @ t.T


def _pointwise_residual(f: SphericalEigenfunction, mu: np.ndarray, eps: float) -> np.ndarray:
    m, p = f.qn.m, f.qn.p
    a, b = f.exponents
    one_m, one_p = 1.0 - mu, 1.0 + mu
    env = np.exp(f.log_norm + _log_envelope(a, b, mu))
    jac = f.jacobi
    P = jacobi_table(jac.degree, jac.alpha, jac.beta, mu)[-1]
    dP = jacobi_deriv(jac, mu, 1)
    d2P = jacobi_deriv(jac, mu, 2)
    g1 = -a / one_m + b / one_p
    g2 = -a / one_m**2 - b / one_p**2
    t0 = env * P
    t1 = env * (g1 * P + dP)
    t2 = env * ((g2 + g1 * g1) * P + 2.0 * g1 * dP + d2P)
    potential = m * m / (one_m * one_p) + m * p / one_p + 0.25 * p * p * one_m / one_p
    return one_m * one_p * t2 - 2.0 * mu * t1 + (eps - potential) * t0


def ode_residual(f: SphericalEigenfunction, mu_grid, energy: float | None = None) -> float:
    """Max |d/dmu[(1-mu^2) T'] + (eps - V) T| on the grid, divided by max |T|.

    ``energy`` overrides the exact epsilon, e.g. to confirm a wrong value fails.
    """
    mu = np.asarray(mu_grid, dtype=float)
    if np.any(np.abs(mu) > 1.0 - 1e-6):
        raise DomainError("ode_residual grid must stay at least 1e-6 inside (-1, 1)")
    eps = epsilon(f.qn).epsilon if energy is None else float(energy)
    res = _pointwise_residual(f, mu, eps)
    scale = np.max(np.abs(evaluate_t(f, mu)))
    return float(np.max(np.abs(res)) / scale)


def laguerre_form(ell: int, m: int, x):
    """N e^(-x/2) x^(|m|/2) L_ell^|m|(x) with N = sqrt(ell! / (2 pi (ell + |m|)!))."""
    am = abs(m)
    xa = np.asarray(x, dtype=float)
    log_n = 0.5 * (log_gamma(ell + 1) - math.log(2 * math.pi) - log_gamma(ell + am + 1))
    with np.errstate(divide="ignore"):
        log_env = -0.5 * xa + (0.5 * am * np.log(xa) if am else 0.0)
    val = np.exp(log_n + log_env) * laguerre_eval(ell, am, xa)
    return float(val) if np.ndim(val) == 0 else val

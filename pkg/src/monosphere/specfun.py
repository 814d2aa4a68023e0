"""Classical orthogonal polynomials, log-gamma and Gauss-Legendre quadrature.

All polynomial evaluators accept scalars or numpy arrays for ``x`` and return
the same shape. Recurrences ascend in degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NumericError

__all__ = [
    "JacobiSpec",
    "QuadratureRule",
    "jacobi_eval",
    "jacobi_table",
    "jacobi_deriv",
    "laguerre_eval",
    "legendre_eval",
    "log_gamma",
    "gauss_legendre",
]


@dataclass(frozen=True)
class JacobiSpec:
    """Degree and weight exponents of a Jacobi polynomial P_n^(alpha, beta)."""

    degree: int
    alpha: float
    beta: float

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 0:
            raise DomainError(f"Jacobi degree must be a nonnegative integer, got {self.degree}")
        if not (self.alpha > -1 and self.beta > -1):
            raise DomainError(
                f"Jacobi parameters need alpha > -1 and beta > -1, got ({self.alpha}, {self.beta})"
            )

    def endpoint_value(self) -> float:
        """P_n^(alpha, beta)(1) = binomial(n + alpha, n)."""
        n, a = self.degree, self.alpha
        return math.exp(math.lgamma(n + a + 1) - math.lgamma(n + 1) - math.lgamma(a + 1))


def _as_float_array(x):
    arr = np.asarray(x, dtype=float)
    return arr


def jacobi_table(n_max: int, alpha: float, beta: float, x) -> np.ndarray:
    """Values of P_0 .. P_{n_max} with parameters (alpha, beta) at ``x``.

    Returns an array of shape ``(n_max + 1,) + np.shape(x)``.
    """
    JacobiSpec(n_max, alpha, beta)
    x = _as_float_array(x)
    a, b = float(alpha), float(beta)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0)
    ab = a + b
    a2b2 = a * a - b * b
    for n in range(2, n_max + 1):
        c = 2 * n + ab
        k0 = 2.0 * n * (n + ab) * (c - 2.0)
        k1 = (c - 1.0) * (c * (c - 2.0) * x + a2b2)
        k2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c
        out[n] = (k1 * out[n - 1] - k2 * out[n - 2]) / k0
    return out


def jacobi_eval(spec: JacobiSpec, x):
    """Evaluate P_n^(alpha, beta)(x) by the three-term recurrence.

    Raises
    ------
    DomainError
        If any ``|x| > 1``.
    """
    xa = _as_float_array(x)
    if np.any(np.abs(xa) > 1.0):
        raise DomainError("jacobi_eval requires |x| <= 1")
    val = jacobi_table(spec.degree, spec.alpha, spec.beta, xa)[spec.degree]
    return float(val) if val.ndim == 0 else val


def jacobi_deriv(spec: JacobiSpec, x, k: int = 1):
    """k-th derivative of P_n^(alpha, beta) at ``x``.

    Uses d/dx P_n^(a,b) = (n + a + b + 1)/2 * P_{n-1}^(a+1, b+1), applied k times.
    """
    n, a, b = spec.degree, spec.alpha, spec.beta
    xa = _as_float_array(x)
    if k > n:
        val = np.zeros_like(xa)
        return float(val) if val.ndim == 0 else val
    factor = 1.0
    for j in range(1, k + 1):
        factor *= 0.5 * (n + a + b + j)
    val = factor * jacobi_table(n - k, a + k, b + k, xa)[n - k]
    return float(val) if val.ndim == 0 else val


def laguerre_eval(n: int, alpha: float, x):
    """Associated Laguerre polynomial L_n^alpha(x) for x >= 0."""
    if n < 0:
        raise DomainError("Laguerre degree must be nonnegative")
    xa = _as_float_array(x)
    if np.any(xa < 0):
        raise DomainError("laguerre_eval requires x >= 0")
    prev = np.ones_like(xa)
    if n == 0:
        return float(prev) if prev.ndim == 0 else prev
    cur = 1.0 + alpha - xa
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + alpha - xa) * cur - (j + alpha) * prev) / (j + 1)
    return float(cur) if cur.ndim == 0 else cur


def legendre_eval(n: int, x):
    """Legendre polynomial P_n(x); the alpha = beta = 0 Jacobi case."""
    return jacobi_eval(JacobiSpec(n, 0.0, 0.0), x)


# Bernoulli coefficients B_{2k} / (2k (2k - 1)) for the Stirling series.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_MIN = 12.0


def log_gamma(z: float) -> float:
    """Natural log of Gamma(z) for real z > 0.

    Stirling's series with eight correction terms for z >= 12; smaller
    arguments are shifted up by the recurrence Gamma(z + 1) = z Gamma(z).
    Small integers go through the exact factorial.
    """
    z = float(z)
    if not z > 0.0 or math.isinf(z):
        raise DomainError(f"log_gamma requires finite z > 0, got {z}")
    if z == 1.0 or z == 2.0:
        return 0.0
    if z.is_integer() and z < 30:
        return math.log(math.factorial(int(z) - 1))
    shift = 1.0
    while z < _STIRLING_MIN:
        shift *= z
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0.0
    for c in reversed(_STIRLING):
        series = series * inv2 + c
    series *= inv
    return (z - 0.5) * math.log(z) - z + _HALF_LOG_2PI + series - math.log(shift)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes (ascending) and weights on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, values) -> float:
        """Weighted sum of ``values`` sampled at the nodes."""
        return float(np.dot(self.weights, values))

    def integrate_interval(self, f, a: float, b: float) -> float:
        """Integrate callable ``f`` over [a, b] by an affine map of the rule."""
        half = 0.5 * (b - a)
        x = 0.5 * (a + b) + half * self.nodes
        return half * float(np.dot(self.weights, f(x)))


def _legendre_and_derivative(n: int, x: np.ndarray):
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    return p1, dp


@lru_cache(maxsize=256)
def gauss_legendre(order: int, tol: float = 1e-14, max_iter: int = 100) -> QuadratureRule:
    """Gauss-Legendre rule with ``order`` nodes.

    Nodes are the Legendre roots from Newton iteration seeded with
    cos(pi (i - 1/4) / (n + 1/2)); weights are 2 / ((1 - x^2) P_n'(x)^2).

    Raises
    ------
    NumericError
        If Newton does not reach ``tol`` within ``max_iter`` steps.
    """
    if int(order) != order or order < 1:
        raise DomainError(f"quadrature order must be an integer >= 1, got {order}")
    n = int(order)
    if n == 1:
        nodes = np.array([0.0])
        weights = np.array([2.0])
    else:
        i = np.arange(1, n + 1)
        x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
        for _ in range(max_iter):
            p, dp = _legendre_and_derivative(n, x)
            dx = p / dp
            x = x - dx
            if np.max(np.abs(dx)) <= tol:
                break
        else:
            raise NumericError(
                f"Gauss-Legendre Newton iteration did not converge for order {n}: "
                f"max step {np.max(np.abs(dx)):.3e} after {max_iter} iterations"
            )
        _, dp = _legendre_and_derivative(n, x)
        weights = 2.0 / ((1.0 - x * x) * dp * dp)
        order_idx = np.argsort(x)
        nodes, weights = x[order_idx], weights[order_idx]
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes, weights, n)

"""Finite-difference eigensolvers that check the closed-form spectra.

Both the angular equation on the sphere and the flat-limit radial equation
are reduced to symmetric tridiagonal matrices. The smallest eigenvalues come
from Sturm-sequence bisection, and Richardson extrapolation removes the O(h^2)
discretization error.

Two schemes are available:

``"conservative"`` (default)
    Cell-centred flux form of (w T')' / w with w = sin(theta) (or x), made
    symmetric by u = sqrt(w) T. The pole faces carry w = 0, so no boundary
    condition is imposed there and the scheme is second order for every
    (m, p), including envelope exponent zero.
``"liouville"``
    Point form -u'' + W u with u = sqrt(w) T and Dirichlet ends. Its offdiagonal
    is the constant -1/h^2. The -1/(4 theta^2) part of W is limit-circle, so
    when m = 0 or m = -p this converges only logarithmically; it is kept for
    comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NumericError
from .spectrum import QuantumNumbers

__all__ = [
    "DiscretizedOperator",
    "EigenResult",
    "SPHERE_THETA",
    "RADIAL_FLAT",
    "discretize_sphere",
    "discretize_radial",
    "sphere_potential",
    "sturm_count",
    "solve",
    "richardson",
    "convergence_order",
    "radial_exact",
]

SPHERE_THETA = "sphere_theta"
RADIAL_FLAT = "radial_flat"
SCHEMES = ("conservative", "liouville")
MIN_POINTS = 50


@dataclass(frozen=True)
class DiscretizedOperator:
    diag: np.ndarray
    offdiag: np.ndarray
    step: float
    kind: str
    nodes: np.ndarray | None = None

    def __post_init__(self):
        if len(self.offdiag) != len(self.diag) - 1:
            raise DomainError("offdiag must have length len(diag) - 1")
        if not self.step > 0:
            raise DomainError("grid step must be positive")
        if len(self.diag) < MIN_POINTS:
            raise DomainError(f"operator needs at least {MIN_POINTS} points")
        for arr in (self.diag, self.offdiag):
            arr.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray
    grid_size: int
    extrapolated: bool = False


def sphere_potential(m: int, p: int, theta):
    """[m^2 + m p (1 - cos) + (p^2/4)(1 - cos)^2] / sin^2 in dimensionless units."""
    theta = np.asarray(theta, dtype=float)
    s2 = np.sin(theta) ** 2
    # 1 - cos(theta) = 2 sin^2(theta/2), exact near the north pole
    vers = 2.0 * np.sin(0.5 * theta) ** 2
    return (m * m + m * p * vers + 0.25 * p * p * vers * vers) / s2


def _check_scheme(scheme: str):
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")


def discretize_sphere(m: int, p: int, n_points: int, scheme: str = "conservative") -> DiscretizedOperator:
    """Dimensionless angular Hamiltonian for fixed (m, p) on theta in (0, pi)."""
    _check_scheme(scheme)
    QuantumNumbers(0, m, p)
    if n_points < MIN_POINTS:
        raise DomainError(f"n_points must be >= {MIN_POINTS}, got {n_points}")
    n = int(n_points)
    if scheme == "liouville":
        h = math.pi / (n + 1)
        theta = h * np.arange(1, n + 1)
        w = sphere_potential(m, p, theta) - 0.25 - 0.25 / np.sin(theta) ** 2
        diag = 2.0 / h**2 + w
        off = np.full(n - 1, -1.0 / h**2)
        return DiscretizedOperator(diag, off, h, SPHERE_THETA, theta)
    h = math.pi / n
    theta = h * (np.arange(n) + 0.5)
    s = np.sin(theta)
    faces = np.sin(h * np.arange(1, n))
    left = np.concatenate(([0.0], faces))
    right = np.concatenate((faces, [0.0]))
    diag = (left + right) / (h * h * s) + sphere_potential(m, p, theta)
    off = -faces / (h * h * np.sqrt(s[:-1] * s[1:]))
    return DiscretizedOperator(diag, off, h, SPHERE_THETA, theta)


def radial_exact(n: int, m: int) -> int:
    """Flat-limit quantization lambda = 4n + 2|m| + 2."""
    return 4 * n + 2 * abs(m) + 2


def discretize_radial(
    m: int,
    x_max: float = 12.0,
    n_points: int = 2000,
    k_max: int = 5,
    scheme: str = "conservative",
) -> DiscretizedOperator:
    """-(1/x)(x T')' + (m^2/x^2 + x^2) T on (0, x_max] with T(x_max) = 0.

    Raises
    ------
    DomainError
        If ``x_max < 8 + sqrt(2 k_max)``, too short for ``k_max`` eigenvalues.
    """
    _check_scheme(scheme)
    if x_max < 8.0 + math.sqrt(2.0 * k_max):
        raise DomainError(
            f"x_max={x_max} too small for {k_max} eigenvalues; need x_max >= {8.0 + math.sqrt(2.0 * k_max):.3f}"
        )
    if n_points < 200:
        raise DomainError(f"radial n_points must be >= 200, got {n_points}")
    n = int(n_points)
    if scheme == "liouville":
        h = x_max / (n + 1)
        x = h * np.arange(1, n + 1)
        diag = 2.0 / h**2 + x * x + (m * m - 0.25) / (x * x)
        off = np.full(n - 1, -1.0 / h**2)
        return DiscretizedOperator(diag, off, h, RADIAL_FLAT, x)
    # cells centred at (j + 1/2) h; outer Dirichlet node sits at x_max
    h = x_max / (n + 0.5)
    x = h * (np.arange(n) + 0.5)
    faces = h * np.arange(1, n + 1)
    left = np.concatenate(([0.0], faces[:-1]))
    diag = (left + faces) / (h * h * x) + m * m / (x * x) + x * x
    off = -faces[:-1] / (h * h * np.sqrt(x[:-1] * x[1:]))
    return DiscretizedOperator(diag, off, h, RADIAL_FLAT, x)


def sturm_count(op: DiscretizedOperator, shifts) -> np.ndarray:
    """Number of eigenvalues strictly below each shift (LDL^T inertia)."""
    shifts = np.atleast_1d(np.asarray(shifts, dtype=float))
    d = op.diag
    e2 = op.offdiag**2
    tiny = np.finfo(float).tiny
    q = d[0] - shifts
    count = (q < 0).astype(np.int64)
    with np.errstate(divide="ignore", over="ignore"):
        for i in range(1, op.size):
            q = np.where(q == 0.0, tiny, q)
            q = d[i] - shifts - e2[i - 1] / q
            count += q < 0
    return count


def _gershgorin(op: DiscretizedOperator) -> tuple[float, float]:
    r = np.zeros(op.size)
    r[:-1] += np.abs(op.offdiag)
    r[1:] += np.abs(op.offdiag)
    return float(np.min(op.diag - r)), float(np.max(op.diag + r))


def solve(
    op: DiscretizedOperator,
    k: int,
    tol: float = 1e-11,
    max_iter: int = 200,
    sections: int = 16,
) -> EigenResult:
    """The ``k`` smallest eigenvalues by multisection on Sturm counts.

    Each eigenvalue j is bracketed in [lo, hi] with count(lo) <= j < count(hi).
    Every sweep evaluates ``sections - 1`` interior shifts per bracket at once
    (plain bisection when ``sections == 2``), until
    hi - lo <= tol * max(1, |lo|).

    Raises
    ------
    NumericError
        If the Gershgorin interval does not hold ``k`` eigenvalues, or if a
        bracket fails to shrink within ``max_iter`` sweeps.
    """
    if not 1 <= k <= op.size:
        raise DomainError(f"k must lie in [1, {op.size}], got {k}")
    if sections < 2:
        raise DomainError("sections must be >= 2")
    lo_g, hi_g = _gershgorin(op)
    lo_g -= 1.0
    hi_g += 1.0
    if int(sturm_count(op, hi_g)[0]) < k:
        raise NumericError(f"Gershgorin bound {hi_g:.6e} holds fewer than {k} eigenvalues")
    lo = np.full(k, lo_g)
    hi = np.full(k, hi_g)
    idx = np.arange(k)
    frac = np.arange(1, sections) / sections
    for _ in range(max_iter):
        if np.all(hi - lo <= tol * np.maximum(1.0, np.abs(lo))):
            break
        shifts = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
        counts = sturm_count(op, shifts.ravel()).reshape(shifts.shape)
        below = counts > idx[:, None]
        # first interior shift with more than j eigenvalues below it
        first = np.where(below.any(axis=1), below.argmax(axis=1), sections - 1)
        rows = np.arange(k)
        new_hi = np.where(first < sections - 1, shifts[rows, np.minimum(first, sections - 2)], hi)
        new_lo = np.where(first > 0, shifts[rows, np.maximum(first - 1, 0)], lo)
        lo, hi = new_lo, new_hi
    else:
        raise NumericError(
            f"bisection failed to converge; widths {np.array2string(hi - lo, precision=3)}"
        )
    vals = 0.5 * (lo + hi)
    if np.any(np.diff(vals) <= 0):
        raise NumericError(f"eigenvalues not strictly ascending (degenerate cluster?): {vals}")
    return EigenResult(vals, op.size, False)


def convergence_order(coarse: float, fine: float, exact: float, ratio: float = 2.0) -> float:
    """Observed order log_ratio(|coarse - exact| / |fine - exact|)."""
    return math.log(abs(coarse - exact) / abs(fine - exact)) / math.log(ratio)


def richardson(
    op_builder: Callable[[int], DiscretizedOperator],
    n1: int,
    n2: int,
    k: int,
) -> EigenResult:
    """h^2 extrapolation (r^2 e_fine - e_coarse) / (r^2 - 1), r = h_coarse / h_fine.

    With r = 2 this is (4 e_fine - e_coarse) / 3.
    """
    if n2 < 2 * n1:
        raise DomainError(f"Richardson pair needs n2 >= 2 n1, got ({n1}, {n2})")
    op1, op2 = op_builder(n1), op_builder(n2)
    e1, e2 = solve(op1, k).eigenvalues, solve(op2, k).eigenvalues
    r2 = (op1.step / op2.step) ** 2
    return EigenResult((r2 * e2 - e1) / (r2 - 1.0), op2.size, True)

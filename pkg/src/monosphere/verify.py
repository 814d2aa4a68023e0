"""Property suites behind ``monosphere verify``.

Each suite returns a list of :class:`PropertyResult`. Randomized sampling
draws from ``numpy.random.default_rng(seed)`` so a fixed seed reproduces the
report exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import mpmath
import numpy as np

from . import limits, oracle, spectrum, wavefunction
from .specfun import (
    JacobiSpec,
    gauss_legendre,
    jacobi_deriv,
    jacobi_eval,
    log_gamma,
)
from .spectrum import PhysicalScale, QuantumNumbers

__all__ = [
    "PropertyResult",
    "VerificationReport",
    "SUITES",
    "run",
    "ORACLE_CASES",
    "oracle_case",
]

LE, GE, EQ, IN = "<=", ">=", "==", "in"


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    measured: float
    threshold: float | tuple[float, float]
    relation: str
    passed: bool


@dataclass
class VerificationReport:
    seed: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.passed]


class _Collector:
    def __init__(self, suite: str, overrides: dict[str, float]):
        self.suite = suite
        self.overrides = overrides
        self.results: list[PropertyResult] = []

    def _tol(self, name: str, default: float) -> float:
        key = f"{self.suite}.{name}"
        if key in self.overrides:
            return self.overrides[key]
        return self.overrides.get(self.suite, default)

    def at_most(self, name: str, measured: float, threshold: float):
        threshold = self._tol(name, threshold)
        self._add(name, measured, threshold, LE, bool(measured <= threshold))

    def at_least(self, name: str, measured: float, threshold: float):
        self._add(name, measured, threshold, GE, bool(measured >= threshold))

    def exact(self, name: str, mismatches: int):
        self._add(name, float(mismatches), 0.0, EQ, mismatches == 0)

    def within(self, name: str, measured: float, lo: float, hi: float):
        self._add(name, measured, (lo, hi), IN, bool(lo <= measured <= hi))

    def _add(self, name, measured, threshold, relation, passed):
        self.results.append(PropertyResult(self.suite, name, float(measured), threshold, relation, passed))


def _series_jacobi(n: int, a: float, b: float, x: float) -> float:
    """(a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-x)/2), summed term by term at 50 digits."""
    with mpmath.workdps(50):
        a, b, x = mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(x)
        z = (1 - x) / 2
        term = mpmath.mpf(1)
        total = term
        for k in range(n):
            term *= (-n + k) * (n + a + b + 1 + k) / ((a + 1 + k) * (k + 1)) * z
            total += term
        pref = mpmath.mpf(1)
        for k in range(n):
            pref *= (a + 1 + k) / (k + 1)
        return float(pref * total)


def _jacobi_scale(n: int, a: float, b: float) -> float:
    """sup |P_n^(a,b)| on [-1, 1] when max(a, b) >= -1/2: max of the endpoint binomials."""
    return max(JacobiSpec(n, a, b).endpoint_value(), JacobiSpec(n, b, a).endpoint_value())


def suite_specfun(c: _Collector, rng: np.random.Generator, **_):
    rec_err = sym_err = end_err = deriv_err = 0.0
    for _ in range(30):
        n = int(rng.integers(0, 51))
        a, b = (float(v) for v in rng.uniform(0.0, 30.0, size=2))
        xs = rng.uniform(-1.0, 1.0, size=20)
        spec = JacobiSpec(n, a, b)
        scale = _jacobi_scale(n, a, b)
        got = jacobi_eval(spec, xs)
        ref = np.array([_series_jacobi(n, a, b, x) for x in xs])
        rec_err = max(rec_err, float(np.max(np.abs(got - ref))) / scale)
        mirrored = (-1) ** n * jacobi_eval(JacobiSpec(n, b, a), xs)
        sym_err = max(sym_err, float(np.max(np.abs(jacobi_eval(spec, -xs) - mirrored))) / scale)
        binom = spec.endpoint_value()
        end_err = max(end_err, abs(jacobi_eval(spec, 1.0) - binom) / binom)
        # the O(h^2) FD error grows like n^3 and with alpha, beta; keep the FD regime sane
        nd = int(rng.integers(0, 21))
        ad, bd = (float(v) for v in rng.uniform(0.0, 10.0, size=2))
        dspec = JacobiSpec(nd, ad, bd)
        h = 1e-5
        x_in = np.clip(xs, -1 + 2 * h, 1 - 2 * h)
        fd = (jacobi_eval(dspec, x_in + h) - jacobi_eval(dspec, x_in - h)) / (2 * h)
        dscale = max(1.0, float(np.max(np.abs(jacobi_deriv(dspec, x_in)))))
        deriv_err = max(deriv_err, float(np.max(np.abs(jacobi_deriv(dspec, x_in) - fd))) / dscale)
    c.at_most("recurrence_vs_series", rec_err, 1e-9)
    c.at_most("reflection_symmetry", sym_err, 1e-11)
    c.at_most("endpoint_binomial", end_err, 1e-10)
    c.at_most("derivative_vs_central_difference", deriv_err, 1e-6)

    exact_err = weight_err = 0.0
    for order in range(1, 61):
        rule = gauss_legendre(order)
        weight_err = max(weight_err, abs(float(np.sum(rule.weights)) - 2.0))
        for k in range(2 * order):
            ref = 0.0 if k % 2 else 2.0 / (k + 1)
            got = rule.integrate(rule.nodes**k)
            exact_err = max(exact_err, abs(got - ref) / max(ref, 1.0))
    c.at_most("quadrature_weight_sum", weight_err, 1e-13)
    c.at_most("quadrature_monomial_exactness", exact_err, 1e-12)

    zs = np.concatenate([rng.uniform(0.5, 30.0, 200), np.geomspace(30.0, 1e6, 200)])
    lg_err = 0.0
    for z in zs:
        ref = math.lgamma(z)
        lg_err = max(lg_err, abs(log_gamma(z) - ref) / max(1e-12, 4 * np.spacing(abs(ref))))
    c.at_most("log_gamma_accuracy_ratio", lg_err, 1.0)


def suite_spectrum(c: _Collector, rng=None, **_):
    gap = flat = mono = zero = neg_formula = 0
    two_eps = spectrum.two_epsilon
    for p in range(51):
        for ell in range(51):
            for m in range(-p, p + 1):
                e = two_eps(ell, m, p)
                if m >= 0 and m + 1 <= p:
                    gap += (two_eps(ell, m + 1, p) - e) != 2 * spectrum.gap_in_m(ell, m, p)
                if m < 0:
                    flat += e != two_eps(ell, -1, p)
                    neg_formula += e != spectrum.negative_m_energy(ell, p)
                mono += two_eps(ell + 1, m, p) <= e
        zero += two_eps(p, 0, 0) != 2 * p * (p + 1)
    c.exact("gap_law", gap)
    c.exact("negative_m_flatness", flat)
    c.exact("negative_m_closed_form", neg_formula)
    c.exact("monotone_in_ell", mono)
    c.exact("zero_field_rigid_rotor", zero)
    big = spectrum.epsilon(QuantumNumbers(10**6, 10**6, 10**6))
    c.exact("exact_integer_at_limit", int(not isinstance(big.two_epsilon, int)))


def suite_wavefunction(c: _Collector, rng=None, **_):
    ortho = 0.0
    for p in range(21):
        for m in range(-p, p + 1):
            g = wavefunction.gram_matrix(m, p, 20)
            ortho = max(ortho, float(np.max(np.abs(g - np.eye(21)))))
    c.at_most("orthonormality", ortho, 1e-10)

    grid = np.cos(np.pi * (np.arange(200) + 0.5) / 200)
    worst = 0.0
    control = math.inf
    for p in range(21):
        for m in range(-p, p + 1):
            for ell in range(11):
                f = wavefunction.build(QuantumNumbers(ell, m, p))
                worst = max(worst, wavefunction.ode_residual(f, grid))
                eps = spectrum.epsilon(f.qn).epsilon
                control = min(control, wavefunction.ode_residual(f, grid, energy=eps + 1))
    c.at_most("ode_residual", worst, 1e-8)
    c.at_least("ode_residual_wrong_energy_control", control, 1e-2)
    c.at_most("legendre_reduction", limits.legendre_reduction_error(20), 1e-12)

    bad = 0
    for p in range(6):
        for m in range(-p, p + 1):
            f = wavefunction.build(QuantumNumbers(2, m, p))
            a, b = f.exponents
            t_top, t_bot = wavefunction.evaluate_t(f, 1.0), wavefunction.evaluate_t(f, -1.0)
            bad += (a > 0 and t_top != 0.0) or (b > 0 and t_bot != 0.0)
            bad += not (math.isfinite(t_top) and math.isfinite(t_bot))
    c.exact("pole_zeros", bad)

    # a uniform rule with n points integrates e^{i k phi} exactly for |k| < n
    phi = 2 * math.pi * np.arange(64) / 64
    sector = 0.0
    for m1 in range(-10, 11):
        for m2 in range(-10, 11):
            if m1 != m2:
                val = np.mean(np.exp(1j * (m2 - m1) * phi)) * 2 * math.pi
                sector = max(sector, abs(val))
    c.at_most("phase_sector_orthogonality", sector, 1e-12)

    rule = gauss_legendre(200)
    lag = 0.0
    for ell in range(4):
        for m in range(-3, 4):
            val = 2 * math.pi * rule.integrate_interval(
                lambda x: wavefunction.laguerre_form(ell, m, x) ** 2, 0.0, 120.0
            )
            lag = max(lag, abs(val - 1.0))
    c.at_most("laguerre_form_normalization", lag, 1e-10)


def _m_values(p: int) -> list[int]:
    return sorted({-p, -((p + 1) // 2), 0, (p + 1) // 2, p})


ORACLE_CASES = [(p, m) for p in (0, 1, 2, 5, 10) for m in _m_values(p)]


def oracle_case(p: int, m: int, n_points: int = 3000, n_coarse: int = 1500, k: int = 5):
    """(exact, numeric at n_points, Richardson) eigenvalues for the lowest k levels."""
    exact = np.array([spectrum.two_epsilon(ell, m, p) / 2 for ell in range(k)])
    fine_op = oracle.discretize_sphere(m, p, n_points)
    coarse_op = oracle.discretize_sphere(m, p, n_coarse)
    fine = oracle.solve(fine_op, k).eigenvalues
    coarse = oracle.solve(coarse_op, k).eigenvalues
    r2 = (coarse_op.step / fine_op.step) ** 2
    extrap = (r2 * fine - coarse) / (r2 - 1.0)
    return exact, fine, extrap, coarse


def relative_error(values, exact) -> float:
    """max |v - e| / max(|e|, 1); the floor keeps the zero ground state meaningful."""
    values, exact = np.asarray(values), np.asarray(exact)
    return float(np.max(np.abs(values - exact) / np.maximum(np.abs(exact), 1.0)))


def suite_oracle(c: _Collector, rng=None, p: int | None = None, m: int | None = None, **_):
    if p is not None or m is not None:
        p_sel = 10 if p is None else p
        m_sel = 0 if m is None else m
        QuantumNumbers(0, m_sel, p_sel)
        cases = [(p_sel, m_sel)]
    else:
        cases = ORACLE_CASES
    raw = ext = 0.0
    orders = []
    for p_c, m_c in cases:
        exact, fine, extrap, coarse = oracle_case(p_c, m_c)
        raw = max(raw, relative_error(fine, exact))
        ext = max(ext, relative_error(extrap, exact))
        for j in range(1, 5):
            orders.append(oracle.convergence_order(coarse[j], fine[j], exact[j], 3000 / 1500))
        label = f"p={p_c},m={m_c}"
        c.at_most(f"agreement_N3000[{label}]", relative_error(fine, exact), 1e-3)
        c.at_most(f"agreement_richardson[{label}]", relative_error(extrap, exact), 1e-5)
    c.at_most("agreement_N3000", raw, 1e-3)
    c.at_most("agreement_richardson", ext, 1e-5)
    c.within("convergence_order_min", min(orders), 1.8, 2.2)
    c.within("convergence_order_max", max(orders), 1.8, 2.2)

    rad = 0.0
    for m_r in range(-3, 4):
        vals = oracle.solve(oracle.discretize_radial(m_r, 12.0, 2000), 4).eigenvalues
        exact = np.array([oracle.radial_exact(n, m_r) for n in range(4)])
        rad = max(rad, relative_error(vals, exact))
    c.at_most("radial_landau_quantization", rad, 1e-3)

    op = oracle.discretize_sphere(3, 5, 200)
    dense = np.linalg.eigvalsh(op.dense())
    shifts = np.linspace(dense[0] - 1, dense[40] + 1, 97)
    mismatch = int(np.sum(oracle.sturm_count(op, shifts) != np.searchsorted(dense, shifts)))
    c.exact("sturm_count_consistency", mismatch)
    dense_m = op.dense()
    c.exact("operator_symmetry", int(not np.array_equal(dense_m, dense_m.T)))


LAGUERRE_PS = (100, 1000, 10000)


def suite_limits(c: _Collector, rng=None, **_):
    xs = np.linspace(0.0, 10.0, 41)
    slopes = []
    non_monotone = 0
    for ell in range(1, 6):
        for m in range(-3, 4):
            errs = [limits.laguerre_limit_error(ell, m, p, xs) for p in LAGUERRE_PS]
            slopes.append(limits.fit_rate(LAGUERRE_PS, errs))
            non_monotone += any(b >= a for a, b in zip(errs, errs[1:]))
    c.within("laguerre_slope_min", min(slopes), -1.3, -0.7)
    c.within("laguerre_slope_max", max(slopes), -1.3, -0.7)
    c.exact("laguerre_monotone", non_monotone)

    scale = PhysicalScale.electron(1e-5, 1e4)
    flux = [10, 30, 100, 300, 1000, 3000, 10000, 30000, 100000]
    radii = limits.radii_for_flux(flux, scale)
    rates = []
    non_monotone = 0
    for n in range(4):
        for m in range(-3, 4):
            if n == 0 and m <= 0:
                continue
            recs = limits.landau_convergence(n, m, radii, scale)
            rates.append(recs[0].rate_estimate)
            non_monotone += any(b.error > a.error for a, b in zip(recs, recs[1:]))
    c.within("landau_rate_min", min(rates), -2.1, -1.9)
    c.within("landau_rate_max", max(rates), -2.1, -1.9)
    c.exact("landau_monotone", non_monotone)
    ground = limits.landau_convergence(0, 0, radii, scale)[-1].error
    c.at_most("landau_ground_state_exact", ground, 1e-6)

    c.at_most("wavefunction_distance_p1000", limits.landau_wavefunction_check(0, 0, 1000), 5e-2)
    non_monotone = 0
    for n in range(3):
        for m in range(-2, 3):
            d3 = limits.landau_wavefunction_check(n, m, 1000)
            d4 = limits.landau_wavefunction_check(n, m, 10000)
            non_monotone += d4 >= d3
    c.exact("wavefunction_distance_decreasing", non_monotone)
    c.at_most("legendre_reduction", limits.legendre_reduction_error(20), 1e-12)


SUITES: dict[str, Callable] = {
    "specfun": suite_specfun,
    "spectrum": suite_spectrum,
    "wavefunction": suite_wavefunction,
    "oracle": suite_oracle,
    "limits": suite_limits,
}


def run(
    suite: str = "all",
    seed: int = 0,
    tolerance_overrides: dict[str, float] | None = None,
    **options,
) -> VerificationReport:
    """Run one suite (or ``"all"``) and collect every property result."""
    overrides = dict(tolerance_overrides or {})
    for key, val in overrides.items():
        if key.split(".", 1)[0] not in SUITES:
            raise ValueError(f"tolerance override for unknown suite {key!r}")
        if not val > 0:
            raise ValueError(f"tolerance override {key}={val} must be positive")
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; expected 'all' or one of {sorted(SUITES)}")
    report = VerificationReport(seed)
    for name in names:
        rng = np.random.default_rng(seed)
        col = _Collector(name, overrides)
        SUITES[name](col, rng=rng, **options)
        report.results.extend(col.results)
    return report

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from monosphere.errors import DomainError
from monosphere.specfun import (
    JacobiSpec,
    gauss_legendre,
    jacobi_deriv,
    jacobi_eval,
    jacobi_table,
    laguerre_eval,
    legendre_eval,
    log_gamma,
)

params = st.floats(min_value=0.0, max_value=30.0, allow_nan=False)
degrees = st.integers(min_value=0, max_value=50)
unit = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


def sup_scale(n, a, b):
    return max(JacobiSpec(n, a, b).endpoint_value(), JacobiSpec(n, b, a).endpoint_value())


def explicit_series(n, a, b, x):
    """sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k), at 40 digits."""
    with mpmath.workdps(40):
        a, b, x = mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(x)
        total = mpmath.mpf(0)
        for k in range(n + 1):
            total += (
                mpmath.binomial(n + a, n - k)
                * mpmath.binomial(n + b, k)
                * ((x - 1) / 2) ** k
                * ((x + 1) / 2) ** (n - k)
            )
        return float(total)


class TestJacobi:
    def test_degree_zero_is_one(self):
        assert jacobi_eval(JacobiSpec(0, 7, 3), 0.4) == 1.0

    def test_degree_one_closed_form(self):
        # (a+1) + (a+b+2)(x-1)/2 at a=2, b=3, x=0
        assert jacobi_eval(JacobiSpec(1, 2, 3), 0.0) == pytest.approx(-0.5, abs=1e-15)

    def test_legendre_p2(self):
        assert jacobi_eval(JacobiSpec(2, 0, 0), 0.5) == pytest.approx(-0.125, abs=1e-15)

    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            JacobiSpec(2, -1.0, 0.0)
        with pytest.raises(DomainError):
            JacobiSpec(2, 0.0, -1.5)
        with pytest.raises(DomainError):
            JacobiSpec(-1, 0.0, 0.0)

    def test_outside_interval(self):
        with pytest.raises(DomainError):
            jacobi_eval(JacobiSpec(2, 0, 0), 1.5)

    def test_array_input_matches_scalar(self):
        xs = np.linspace(-1, 1, 7)
        spec = JacobiSpec(6, 1.5, 4.0)
        assert np.allclose(jacobi_eval(spec, xs), [jacobi_eval(spec, x) for x in xs], rtol=0, atol=0)

    def test_table_rows_are_degrees(self):
        xs = np.linspace(-0.9, 0.9, 5)
        table = jacobi_table(8, 2.0, 3.0, xs)
        for n in range(9):
            assert np.array_equal(table[n], jacobi_eval(JacobiSpec(n, 2.0, 3.0), xs))

    @given(degrees, params, params, st.lists(unit, min_size=1, max_size=20))
    def test_recurrence_vs_explicit_series(self, n, a, b, xs):
        got = jacobi_eval(JacobiSpec(n, a, b), np.array(xs))
        ref = np.array([explicit_series(n, a, b, x) for x in xs])
        assert np.max(np.abs(got - ref)) <= 1e-9 * sup_scale(n, a, b)

    @given(degrees, params, params, unit)
    def test_reflection_symmetry(self, n, a, b, x):
        lhs = jacobi_eval(JacobiSpec(n, a, b), -x)
        rhs = (-1) ** n * jacobi_eval(JacobiSpec(n, b, a), x)
        assert abs(lhs - rhs) <= 1e-11 * sup_scale(n, a, b)

    @given(degrees, params, params)
    def test_endpoint_binomial(self, n, a, b):
        ref = float(mpmath.binomial(n + a, n))
        assert jacobi_eval(JacobiSpec(n, a, b), 1.0) == pytest.approx(ref, rel=1e-10)

    def test_matches_scipy(self):
        xs = np.linspace(-1, 1, 33)
        for n, a, b in [(5, 0, 0), (10, 3, 17), (20, 20, 40), (7, 0.5, 2.5)]:
            ref = special.eval_jacobi(n, a, b, xs)
            assert np.allclose(jacobi_eval(JacobiSpec(n, a, b), xs), ref, rtol=1e-12, atol=1e-12 * sup_scale(n, a, b))


class TestJacobiDerivative:
    def test_constant_has_zero_derivative(self):
        assert jacobi_deriv(JacobiSpec(0, 3.0, 1.0), 0.2) == 0.0

    @pytest.mark.parametrize("x", [-0.7, 0.0, 0.9])
    def test_degree_one_slope(self, x):
        assert jacobi_deriv(JacobiSpec(1, 2, 3), x) == pytest.approx(3.5, abs=1e-15)

    def test_against_central_difference(self):
        spec, x, h = JacobiSpec(3, 1, 2), 0.3, 1e-5
        fd = (jacobi_eval(spec, x + h) - jacobi_eval(spec, x - h)) / (2 * h)
        assert jacobi_deriv(spec, x) == pytest.approx(fd, abs=1e-7)

    @given(
        st.integers(min_value=0, max_value=20),
        st.floats(min_value=0, max_value=10),
        st.floats(min_value=0, max_value=10),
        st.floats(min_value=-0.99, max_value=0.99),
    )
    def test_central_difference_property(self, n, a, b, x):
        spec, h = JacobiSpec(n, a, b), 1e-5
        fd = (jacobi_eval(spec, x + h) - jacobi_eval(spec, x - h)) / (2 * h)
        d = jacobi_deriv(spec, x)
        assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))

    def test_second_derivative_against_difference_of_first(self):
        spec, x, h = JacobiSpec(6, 2.0, 5.0), -0.2, 1e-5
        fd = (jacobi_deriv(spec, x + h) - jacobi_deriv(spec, x - h)) / (2 * h)
        assert jacobi_deriv(spec, x, 2) == pytest.approx(fd, rel=1e-7)


class TestLaguerreLegendre:
    def test_laguerre_degree_zero(self):
        assert laguerre_eval(0, 4, 2.7) == 1.0

    def test_laguerre_degree_one(self):
        assert laguerre_eval(1, 2, 1.0) == pytest.approx(2.0)

    def test_laguerre_at_origin(self):
        assert laguerre_eval(2, 0, 0.0) == pytest.approx(1.0)

    @pytest.mark.parametrize("n,a", [(3, 0), (5, 2), (8, 3.5), (12, 1)])
    def test_laguerre_matches_scipy(self, n, a):
        xs = np.linspace(0, 20, 41)
        assert np.allclose(laguerre_eval(n, a, xs), special.eval_genlaguerre(n, a, xs), rtol=1e-11, atol=1e-11)

    def test_laguerre_domain(self):
        with pytest.raises(DomainError):
            laguerre_eval(2, 1, -0.1)

    def test_legendre_values(self):
        assert legendre_eval(1, 0.9) == pytest.approx(0.9, abs=1e-15)
        assert legendre_eval(2, 0.5) == pytest.approx(-0.125, abs=1e-15)
        assert legendre_eval(5, 1.0) == pytest.approx(1.0, abs=1e-15)


class TestLogGamma:
    def test_unit_points(self):
        assert log_gamma(1) == 0.0
        assert log_gamma(2) == 0.0

    def test_factorial(self):
        assert log_gamma(11) == pytest.approx(math.log(math.factorial(10)), abs=1e-12)

    def test_half(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-12)

    @given(st.floats(min_value=0.5, max_value=1e6))
    def test_accuracy_contract(self, z):
        ref = float(mpmath.loggamma(mpmath.mpf(z)))
        # 1e-12 absolute, relaxed to a few ulps where |log Gamma| is too big to hold 1e-12
        assert abs(log_gamma(z) - ref) <= max(1e-12, 4 * np.spacing(abs(ref)))

    @pytest.mark.parametrize("z", [0.0, -1.0, float("inf"), float("nan")])
    def test_domain(self, z):
        with pytest.raises(DomainError):
            log_gamma(z)


class TestGaussLegendre:
    def test_order_one(self):
        rule = gauss_legendre(1)
        assert list(rule.nodes) == [0.0] and list(rule.weights) == [2.0]

    def test_order_two(self):
        rule = gauss_legendre(2)
        assert np.allclose(rule.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
        assert np.allclose(rule.weights, [1.0, 1.0], atol=1e-15)

    def test_quartic(self):
        rule = gauss_legendre(20)
        assert rule.integrate(rule.nodes**4) == pytest.approx(0.4, abs=1e-13)

    @pytest.mark.parametrize("order", [1, 2, 3, 7, 20, 64, 150])
    def test_exactness_and_invariants(self, order):
        rule = gauss_legendre(order)
        assert abs(rule.weights.sum() - 2.0) <= 1e-13
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)
        assert np.all(np.abs(rule.nodes) < 1)
        for k in range(2 * order):
            ref = 0.0 if k % 2 else 2.0 / (k + 1)
            assert abs(rule.integrate(rule.nodes**k) - ref) <= 1e-12 * max(ref, 1.0)

    def test_matches_numpy(self):
        x, w = np.polynomial.legendre.leggauss(40)
        rule = gauss_legendre(40)
        assert np.allclose(rule.nodes, x, atol=1e-15)
        assert np.allclose(rule.weights, w, atol=1e-14)

    def test_immutable(self):
        rule = gauss_legendre(5)
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.0

    def test_invalid_order(self):
        with pytest.raises(DomainError):
            gauss_legendre(0)

    def test_non_convergence_is_an_error(self):
        from monosphere.errors import NumericError

        with pytest.raises(NumericError):
            gauss_legendre(30, tol=0.0, max_iter=3)

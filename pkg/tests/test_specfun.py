import math

import numpy as np
import pytest

from pdmwave import specfun as sf
from pdmwave.errors import DomainError, PoleError

from conftest import central_diff, series_i, series_j


# frozen from the 60-term series / connection-formula oracles in conftest
I_03_2 = 2.177637989553738
K_03_2 = 0.11603697434811863
J_04_3 = -0.0005313074210861931
Y_025_2 = 0.3927383996153849


class TestGamma:
    @pytest.mark.parametrize("x, expected", [(1, 1.0), (4, 6.0), (0.5, math.sqrt(math.pi))])
    def test_values(self, x, expected):
        assert sf.gamma(x) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("x", [0, -1, -2, -7])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            sf.gamma(x)

    def test_recurrence_on_range(self):
        for x in np.linspace(-0.9, 9.0, 37):
            if abs(x) < 1e-12:
                continue
            assert sf.gamma(x + 1) == pytest.approx(x * sf.gamma(x), rel=1e-12)

    def test_reciprocal_series(self):
        for x in np.linspace(-0.5, 0.5, 11):
            assert sf.rgamma1p(x) == pytest.approx(1 / math.gamma(1 + x), rel=1e-14)


class TestBesselI:
    def test_half_order(self):
        z = 1.0
        assert sf.bessel_i(0.5, z) == pytest.approx(math.sqrt(2 / (math.pi * z)) * math.sinh(z), rel=1e-13)

    def test_origin(self):
        assert sf.bessel_i(0, 0) == 1.0
        assert sf.bessel_i(0.4, 0) == 0.0

    def test_series_oracle(self):
        assert series_i(0.3, 2.0) == pytest.approx(I_03_2, rel=1e-14)
        assert sf.bessel_i(0.3, 2.0) == pytest.approx(I_03_2, rel=1e-12)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            sf.bessel_i(0.2, -1.0)

    @pytest.mark.parametrize("nu", [-0.4, 0.0, 0.3, 0.7])
    def test_asymptotic_crossover(self, nu):
        z = sf.Z_ASYMPTOTIC
        assert sf._i_series(nu, z) == pytest.approx(sf._i_asym(nu, z), rel=1e-13)


class TestBesselK:
    def test_half_order(self):
        assert sf.bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-13)

    def test_symmetry(self):
        assert sf.bessel_k(-0.2, 1.5) == sf.bessel_k(0.2, 1.5)

    def test_connection_formula_oracle(self):
        oracle = math.pi / 2 * (series_i(-0.3, 2.0) - series_i(0.3, 2.0)) / math.sin(0.3 * math.pi)
        assert oracle == pytest.approx(K_03_2, rel=1e-13)
        assert sf.bessel_k(0.3, 2.0) == pytest.approx(K_03_2, rel=1e-12)

    def test_k0_log_series(self):
        # K_0(z) = -(ln(z/2) + gamma) I_0(z) + sum (z/2)^{2k}/(k!)^2 H_k
        z = 0.7
        total = -(math.log(z / 2) + 0.5772156649015329) * series_i(0, z)
        h = 0.0
        for k in range(1, 40):
            h += 1 / k
            total += (z / 2) ** (2 * k) / math.factorial(k) ** 2 * h
        assert sf.bessel_k(0.0, z) == pytest.approx(total, rel=1e-13)
        assert sf.bessel_k(5e-9, z) == sf.bessel_k(0.0, z)

    @pytest.mark.parametrize("z", [0.0, -1.0])
    def test_domain(self, z):
        with pytest.raises(DomainError):
            sf.bessel_k(0.3, z)

    @pytest.mark.parametrize("nu", [-0.4, 0.0, 0.3, 0.7])
    @pytest.mark.parametrize("z", [0.1, 1.0, 5.0, 20.0])
    def test_modified_wronskian(self, nu, z):
        lhs = sf.bessel_i(nu, z) * sf.bessel_k(nu + 1, z) + sf.bessel_i(nu + 1, z) * sf.bessel_k(nu, z)
        assert lhs == pytest.approx(1 / z, rel=1e-10)

    @pytest.mark.parametrize("nu", [-0.9, -0.45, 0.0, 0.2, 0.5, 0.8])
    def test_symmetry_exact(self, nu):
        z = np.array([0.01, 0.5, 2.0, 3.7, 30.0])
        np.testing.assert_allclose(sf.bessel_k(-nu, z), sf.bessel_k(nu, z), rtol=1e-13)

    @pytest.mark.parametrize("nu", [0.0, 0.3, -0.4, 0.7])
    def test_positive_decreasing(self, nu):
        z = np.geomspace(1e-4, 200, 300)
        k = sf.bessel_k(nu, z)
        assert np.all(k > 0)
        assert np.all(np.diff(k) < 0)

    @pytest.mark.parametrize("nu", [0.0, 0.3, 0.7])
    def test_regime_continuity(self, nu):
        for z in (2.0, sf.Z_ASYMPTOTIC):
            lo = sf.bessel_k(nu, z * (1 - 1e-12))
            hi = sf.bessel_k(nu, z * (1 + 1e-12))
            assert lo == pytest.approx(hi, rel=1e-11)
        z = sf.Z_ASYMPTOTIC
        kmu, _ = sf._k_steed(nu if nu <= 0.5 else nu - 1, z)
        if nu <= 0.5:
            assert kmu == pytest.approx(sf._k_asym(nu, z), rel=1e-13)

    def test_derivative(self):
        for nu in (0.0, 0.4, -0.2):
            for z in (0.3, 2.5, 30.0):
                fd = central_diff(lambda x: sf.bessel_k(nu, x), z, 1e-6 * z)
                assert sf.bessel_k_derivative(nu, z) == pytest.approx(fd, rel=1e-7)


class TestBesselJY:
    def test_half_order_j(self):
        z = math.pi / 2
        assert sf.bessel_j(0.5, z) == pytest.approx(math.sqrt(2 / (math.pi * z)), rel=1e-13)

    def test_origin(self):
        assert sf.bessel_j(0, 0) == 1.0

    def test_series_oracle_j(self):
        assert series_j(0.4, 3.0) == pytest.approx(J_04_3, abs=1e-14)
        assert sf.bessel_j(0.4, 3.0) == pytest.approx(J_04_3, abs=1e-13)

    def test_half_order_y(self):
        z = 1.0
        assert sf.bessel_y(0.5, z) == pytest.approx(-math.sqrt(2 / (math.pi * z)) * math.cos(z), rel=1e-13)

    def test_connection_formula_y(self):
        nu = 0.25
        oracle = (series_j(nu, 2.0) * math.cos(nu * math.pi) - series_j(-nu, 2.0)) / math.sin(nu * math.pi)
        assert oracle == pytest.approx(Y_025_2, rel=1e-13)
        assert sf.bessel_y(nu, 2.0) == pytest.approx(Y_025_2, rel=1e-12)

    def test_y_divergence(self):
        assert sf.bessel_y(0.5, 1e-6) < -700

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.bessel_j(0.3, -1.0)
        with pytest.raises(DomainError):
            sf.bessel_y(0.3, 0.0)

    @pytest.mark.parametrize("nu", [-0.4, 0.0, 0.25, 0.7])
    @pytest.mark.parametrize("z", [0.5, 1.5, 4.0, 12.0, 40.0])
    def test_wronskian(self, nu, z):
        h = 1e-6
        dj = central_diff(lambda x: sf.bessel_j(nu, x), z, h)
        dy = central_diff(lambda x: sf.bessel_y(nu, x), z, h)
        w = sf.bessel_j(nu, z) * dy - dj * sf.bessel_y(nu, z)
        assert w == pytest.approx(2 / (math.pi * z), rel=1e-6)

    @pytest.mark.parametrize("nu", [0.0, 0.3, -0.4])
    def test_asymptotic_crossover(self, nu):
        z = sf.Z_ASYMPTOTIC
        j1, y1 = sf._jy_steed(abs(nu), z)
        j2, y2 = sf._jy_asym(abs(nu), z)
        assert j1 == pytest.approx(j2, abs=1e-14)
        assert y1 == pytest.approx(y2, abs=1e-14)


def _fd2(f, z, h):
    return (
        -f(z - 2 * h) + 16 * f(z - h) - 30 * f(z) + 16 * f(z + h) - f(z + 2 * h)
    ) / (12 * h * h)


def _fd1(f, z, h):
    return (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h)


@pytest.mark.parametrize("nu", [-0.2, 0.0, 0.4, 0.7])
@pytest.mark.parametrize("z", [0.5, 1.0, 3.0, 6.0, 10.0])
@pytest.mark.parametrize(
    "fn, sign",
    [(sf.bessel_i, -1), (sf.bessel_k, -1), (sf.bessel_j, 1), (sf.bessel_y, 1)],
)
def test_bessel_equation_residual(fn, sign, nu, z):
    f = lambda x: fn(nu, x)
    h = 1e-3
    terms = [z * z * _fd2(f, z, h), z * _fd1(f, z, h), (sign * z * z - nu * nu) * f(z)]
    assert abs(sum(terms)) <= 1e-5 * max(abs(t) for t in terms)


def test_array_input():
    z = np.array([0.5, 1.0, 30.0])
    out = sf.bessel_k(0.3, z)
    assert out.shape == (3,)
    assert out[1] == sf.bessel_k(0.3, 1.0)


scipy_special = pytest.importorskip("scipy.special")


@pytest.mark.parametrize("nu", [-0.6, -0.2, 0.0, 0.1, 0.5, 0.9, 1.3])
def test_against_scipy(nu):
    z = np.array([1e-3, 0.3, 1.0, 1.99, 2.01, 7.0, 24.0, 26.0, 90.0])
    np.testing.assert_allclose(sf.bessel_k(nu, z), scipy_special.kv(nu, z), rtol=1e-12)
    np.testing.assert_allclose(sf.bessel_i(nu, z), scipy_special.iv(nu, z), rtol=1e-12)
    scale = np.sqrt(2 / (np.pi * z))
    np.testing.assert_allclose(sf.bessel_j(nu, z), scipy_special.jv(nu, z), atol=1e-12 * scale.max(), rtol=1e-11)
    np.testing.assert_allclose(sf.bessel_y(nu, z), scipy_special.yv(nu, z), atol=1e-12 * scale.max(), rtol=1e-11)

import math
from unittest import TestCase

import mpmath
import numpy as np
import pytest

from zerocount import specfun
from zerocount.types import AccuracyError, DomainError, PoleError, RangeError

mpmath.mp.dps = 30

FIRST_ZERO = 14.134725141734693790457251983562


class ZetaRealTest(TestCase):
    def test_basel(self):
        assert abs(specfun.zeta_real(2.0) - math.pi ** 2 / 6) <= 1e-12

    def test_apery(self):
        assert abs(specfun.zeta_real(3.0) - 1.2020569031595942) <= 1e-12

    def test_near_pole(self):
        value = specfun.zeta_real(1.000158)
        oracle = float(mpmath.zeta(mpmath.mpf(1.000158)))

        assert abs(value - oracle) <= 1e-12 * oracle
        # 1/eta + Euler-Mascheroni
        assert abs(value - (1 / 0.000158 + 0.5772156649)) < 1e-2

    def test_grid_against_oracle(self):
        for sigma in np.linspace(1.01, 10.0, 40):
            value = specfun.zeta_real(sigma)
            oracle = float(mpmath.zeta(mpmath.mpf(float(sigma))))

            assert abs(value - oracle) <= 2e-12 * max(1.0, oracle)

    def test_array_matches_scalar(self):
        sigmas = np.array([1.0005, 1.2, 2.0, 3.5, 7.0])
        values = specfun.zeta_real_array(sigmas)

        for sigma, value in zip(sigmas, values):
            assert abs(value - specfun.zeta_real(sigma)) <= 1e-12 * max(1.0, value)

    def test_log_zeta(self):
        assert specfun.log_zeta(2.0) == pytest.approx(math.log(math.pi ** 2 / 6))
        assert np.allclose(
            specfun.log_zeta(np.array([2.0, 4.0])),
            [math.log(math.pi ** 2 / 6), math.log(math.pi ** 4 / 90)],
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.zeta_real(1.0)

        with pytest.raises(DomainError):
            specfun.zeta_real(0.5)

        with pytest.raises(DomainError):
            specfun.zeta_real_array(np.array([2.0, 1.0]))

    def test_accuracy_error(self):
        acc = specfun.EvalAccuracy(abs_tol=1e-300, max_terms=8)

        with pytest.raises(AccuracyError):
            specfun.zeta_real(1.5, acc)

    def test_accuracy_validation(self):
        with pytest.raises(ValueError):
            specfun.EvalAccuracy(abs_tol=0.0)

        with pytest.raises(ValueError):
            specfun.EvalAccuracy(max_terms=7)


class ZetaComplexTest(TestCase):
    def test_real_axis(self):
        value = specfun.zeta_complex(2 + 0j)

        assert abs(value - math.pi ** 2 / 6) <= 1e-12

    def test_zero(self):
        assert abs(specfun.zeta_complex(0j) - (-0.5)) <= 1e-12

    def test_first_zero(self):
        assert abs(specfun.zeta_complex(complex(0.5, FIRST_ZERO))) < 1e-6

    def test_against_oracle(self):
        for s in [0.5 + 100j, 2.5 - 30j, 0.75 + 12345.5j]:
            value = specfun.zeta_complex(s)
            oracle = complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))

            assert abs(value - oracle) <= 1e-9 * max(1.0, abs(oracle))

    def test_conjugate_symmetry(self):
        for s in [0.5 + 21.0j, 3 + 7j, 0.25 + 400j]:
            left = specfun.zeta_complex(s.conjugate())
            right = specfun.zeta_complex(s).conjugate()
            assert abs(left - right) <= 1e-12

    def test_left_half_plane(self):
        for s in [-10 + 5j, -5 + 1j, -0.5 - 3j, -3.0 + 0j]:
            value = specfun.zeta_complex(s)
            oracle = complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))

            assert abs(value - oracle) <= 1e-12

    def test_trivial_zeros(self):
        for n in [2, 8, 20]:
            assert specfun.zeta_complex(complex(-n, 0.0)) == 0

    def test_left_half_plane_loose(self):
        acc = specfun.EvalAccuracy(abs_tol=1e-8)

        for s in [-20 + 1j, -0.3 + 1000j, -0.25 - 400j]:
            value = specfun.zeta_complex(s, acc)
            oracle = complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))

            assert abs(value - oracle) <= 1e-8

    def test_left_half_plane_rounding(self):
        with pytest.raises(AccuracyError):
            specfun.zeta_complex(-20 + 1j)

        with pytest.raises(AccuracyError):
            specfun.zeta_complex(-0.3 + 1000j)

    def test_errors(self):
        with pytest.raises(PoleError):
            specfun.zeta_complex(1 + 0j)

        with pytest.raises(RangeError):
            specfun.zeta_complex(0.5 + 2e7j)


class GammaTest(TestCase):
    def test_real_argument(self):
        assert specfun.im_log_gamma(0.25 + 0j) == 0.0

    def test_against_oracle(self):
        for z in [0.25 + 50j, 0.5 + 0.5j, 0.25 + 3j, 2 - 7j, 0.01 + 0.01j]:
            oracle = float(mpmath.loggamma(mpmath.mpc(z.real, z.imag)).imag)

            assert abs(specfun.im_log_gamma(z) - oracle) <= 1e-11

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.im_log_gamma(0 + 1j)

        with pytest.raises(DomainError):
            specfun.im_log_gamma(-1 + 1j)


class GTest(TestCase):
    def test_bound_on_log_grid(self):
        for T in np.exp(np.linspace(math.log(5 / 7), math.log(1e6), 200)):
            assert abs(specfun.g_of_T(T)) <= 1 / (25 * T)

    def test_edges(self):
        assert abs(specfun.g_of_T(100.0)) <= 1 / 2500
        assert abs(specfun.g_of_T(5 / 7)) <= 7 / 125

    def test_against_oracle(self):
        for T in [1.0, 30.0, 1000.0]:
            T_mp = mpmath.mpf(T)
            oracle = (
                2 / mpmath.pi * mpmath.loggamma(mpmath.mpc(0.25, T_mp / 2)).imag
                - T_mp / mpmath.pi * mpmath.log(T_mp / (2 * mpmath.e))
                + mpmath.mpf(1) / 4
            )

            assert abs(specfun.g_of_T(T) - float(oracle)) <= 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.g_of_T(0.7)


class RiemannSiegelTest(TestCase):
    def test_theta_against_oracle(self):
        for t in [1.0, 5.0, 10.0, 50.0, 1000.0, 1e5]:
            oracle = float(mpmath.siegeltheta(t))

            assert abs(specfun.rs_theta(t) - oracle) <= 1e-10 * max(1.0, abs(oracle))

    def test_theta_vectorised(self):
        ts = np.array([3.0, 20.0, 500.0])
        values = specfun.rs_theta(ts)

        assert values.shape == (3,)
        assert values[1] == specfun.rs_theta(20.0)

    def test_first_zero(self):
        assert abs(specfun.rs_Z(14.1347251417)) < 1e-4
        assert np.sign(specfun.rs_Z(14.0)) != np.sign(specfun.rs_Z(15.0))

    def test_sign_changes_below_100(self):
        values = specfun.rs_Z(np.arange(10.0, 100.0, 0.05))

        assert specfun.count_sign_changes(values) == 29

    def test_modulus_matches_zeta(self):
        for t in [20.0, 150.0, 250.0, 1000.0, 5000.5, 1e4, 1e5]:
            z_value = specfun.rs_Z(t)
            zeta_value = specfun.zeta_complex(complex(0.5, t))

            assert abs(abs(z_value) - abs(zeta_value)) <= 1e-5

    def test_against_oracle(self):
        ts = np.array([12.0, 199.9, 200.0, 1000.0, 12345.6, 1e5, 1e6])
        values = specfun.rs_Z(ts)

        for t, value in zip(ts, values):
            assert abs(value - float(mpmath.siegelz(t))) <= 1e-6

    def test_range(self):
        with pytest.raises(RangeError):
            specfun.rs_Z(9.0)

        with pytest.raises(RangeError):
            specfun.rs_theta(0.0)

    def test_gram_points(self):
        assert abs(specfun.gram_point(0) - 17.8455995404) < 1e-8

        for m in [1, 10, 100]:
            t = specfun.gram_point(m)
            assert abs(specfun.rs_theta(t) - m * math.pi) < 1e-9

    def test_count_sign_changes(self):
        assert specfun.count_sign_changes(np.array([1.0, -1.0, -2.0, 3.0])) == 2

import dataclasses
import math
from unittest import TestCase

import mpmath
import numpy as np
import pytest

from zerocount import specfun
from zerocount.constants import ConstantSet
from zerocount.testing import computed_zeros
from zerocount.types import CoverageError, DomainError
from zerocount.zeros import (
    ZeroList,
    bound_sandwich,
    count,
    main_term,
    N_exact,
    s_by_argument,
    S_exact,
)

ROW1 = ConstantSet(0.10076, 0.24460, 1.68845, 8.08344, 2.38456, 7.20844, 1.50956)


class NTest(TestCase):
    def test_first_ordinate(self):
        zeros = computed_zeros()
        t1 = zeros[0]

        assert N_exact(t1 + 1e-9, zeros) == 1
        assert N_exact(t1 - 1e-9, zeros) == 0
        assert N_exact(t1, zeros) == 1

    def test_non_decreasing(self):
        zeros = computed_zeros()
        ts = np.linspace(1.0, 1e4, 5001)
        counts = N_exact(ts, zeros)

        assert np.all(np.diff(counts) >= 0)
        assert counts[-1] == len(zeros)

    def test_coverage(self):
        zeros = computed_zeros()

        with pytest.raises(CoverageError):
            N_exact(1e4 + 1, zeros)

        with pytest.raises(CoverageError):
            S_exact(np.array([100.0, 2e4]), zeros)


class STest(TestCase):
    def test_against_oracles(self):
        zeros = computed_zeros()

        assert S_exact(50.0, zeros) == pytest.approx(
            float(mpmath.backlunds(50)), abs=1e-9
        )
        assert S_exact(50.0, zeros) == pytest.approx(s_by_argument(50.0), abs=1e-9)

    def test_jumps_at_ordinates(self):
        zeros = computed_zeros()
        t = zeros[zeros.ordinates > 10][:300]

        jumps = S_exact(t + 1e-8, zeros) - S_exact(t - 1e-8, zeros)

        assert np.allclose(jumps, 1.0, atol=1e-6)

    def test_bounded(self):
        zeros = computed_zeros()
        ts = np.linspace(1.0, 1e4, 20001)

        assert np.max(np.abs(S_exact(ts, zeros))) <= 2.5167

    def test_count_result(self):
        zeros = computed_zeros()

        for t in [20.0, 100.0, 5000.5]:
            result = count(t, zeros)
            recomposed = (
                result.S + result.main_term + 7 / 8 + specfun.g_of_T(t) / 2
            )

            assert result.N == N_exact(t, zeros)
            assert result.N == pytest.approx(recomposed, abs=1e-9)

    def test_main_term(self):
        assert main_term(2 * math.pi * math.e) == pytest.approx(0.0, abs=1e-12)
        assert main_term(math.e) == pytest.approx(
            math.e / (2 * math.pi) * math.log(1 / (2 * math.pi))
        )


class SandwichTest(TestCase):
    def test_ordinates_and_midpoints(self):
        zeros = computed_zeros()
        t = zeros.ordinates
        points = np.concatenate([t, (t[1:] + t[:-1]) / 2])

        assert all(bound_sandwich(x, ROW1, zeros) for x in points)

    def test_at_e(self):
        assert bound_sandwich(math.e, ROW1, computed_zeros())
        assert bound_sandwich(math.e, ROW1, ZeroList([], t_max_verified=10.0))

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_sandwich(2.0, ROW1, computed_zeros())

        with pytest.raises(CoverageError):
            bound_sandwich(2e4, ROW1, computed_zeros())

    def test_above_T0(self):
        zeros = computed_zeros()
        low = dataclasses.replace(ROW1, T0=50.0)
        vanishing = ConstantSet(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, T0=50.0)

        assert bound_sandwich(1000.0, low, zeros)
        assert bound_sandwich(40.0, vanishing, zeros)
        assert not bound_sandwich(1000.0, vanishing, zeros)

import math
from unittest import TestCase

import pytest

from zerocount.constants import bounds
from zerocount.constants.assemble import ConstantSet
from zerocount.constants.bounds import LinearBound
from zerocount.types import BoundMode, DomainError, NoCrossing

ROW1 = ConstantSet(0.10076, 0.24460, 1.68845, 8.08344, 2.38456, 7.20844, 1.50956)
ROW3 = ConstantSet(0.11200, 0.12567, 1.32678, 3.77417, 2.14783, 2.89916, 1.27283)
ROW4 = ConstantSet(0.12355, 0.06782, 0.97933, 6.25796, 2.05854, 5.38296, 1.18354)


class EvalBoundTest(TestCase):
    def test_small_T(self):
        assert bounds.eval_bound(10.0, ROW1, BoundMode.SMALL_T) == pytest.approx(
            3.3990576, abs=1e-7
        )
        assert bounds.eval_bound(math.e, ROW1, "small_T") == bounds.SMALL_T_BOUND

        with pytest.raises(DomainError):
            bounds.eval_bound(1e11, ROW1, BoundMode.SMALL_T)

    def test_small_T_below_unprimed_bound(self):
        unprimed = LinearBound.from_constants(ROW1, BoundMode.NT, primed=False)

        assert unprimed(math.e) == pytest.approx(0.10076 + 8.08344)
        for T in [math.e, 10.0, 1e3, 1e6, 30610046000.0]:
            assert bounds.SMALL_T_BOUND < unprimed(T)

    def test_min_of_halves(self):
        T = 30610046000.0
        log_T, loglog_T = math.log(T), math.log(math.log(T))
        expected = 0.10076 * log_T + min(
            0.24460 * loglog_T + 7.20844, 1.68845 * loglog_T + 1.50956
        )

        assert bounds.eval_bound(T, ROW1, BoundMode.ST) == pytest.approx(expected)
        assert bounds.eval_bound(T, ROW1, BoundMode.NT) > bounds.eval_bound(
            T, ROW1, BoundMode.ST
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            bounds.eval_bound(2.0, ROW1)

    def test_curve(self):
        points = bounds.curve(ROW1, BoundMode.NT, 1e3, 1e9, 7)

        assert len(points) == 7
        assert points[0][0] == pytest.approx(1e3)
        assert points[-1][0] == pytest.approx(1e9)
        assert all(a[1] < b[1] for a, b in zip(points, points[1:]))


class CrossoverTest(TestCase):
    def test_row1_against_row3(self):
        crossing = bounds.crossover(
            LinearBound.from_constants(ROW1), LinearBound.from_constants(ROW3)
        )

        assert crossing.log_T == pytest.approx(447.981, abs=1e-3)

    def test_S_bound_halves(self):
        crossing = bounds.crossover(
            LinearBound.from_constants(ROW1, BoundMode.ST, primed=False),
            LinearBound.from_constants(ROW1, BoundMode.ST, primed=True),
        )

        assert crossing.log_T == pytest.approx(51.78, abs=5e-3)

    def test_row4_halves(self):
        first = bounds.crossover(
            LinearBound.from_constants(ROW4, primed=False),
            LinearBound.from_constants(ROW4, primed=True),
        )

        assert first.log_T == pytest.approx(100.193, abs=1e-3)

    def test_corollary_halves(self):
        crossing = bounds.crossover(
            LinearBound.unit_interval(ROW1, primed=False),
            LinearBound.unit_interval(ROW1, primed=True),
        )

        assert crossing.log_T == pytest.approx(51.79, abs=2e-2)

    def test_no_crossing(self):
        with pytest.raises(NoCrossing):
            bounds.crossover(LinearBound(1.0, 0.0, 0.0), LinearBound(1.0, 0.0, 1.0))

    def test_exact_T(self):
        b1 = LinearBound(1.0, 0.0, 0.0)
        b2 = LinearBound(0.0, 0.0, 5.0)
        crossing = bounds.crossover(b1, b2)

        assert crossing.log_T == pytest.approx(5.0, abs=1e-8)
        assert crossing.T == pytest.approx(math.exp(5.0), rel=1e-6)

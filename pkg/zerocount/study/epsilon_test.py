import logging
import math
from unittest import TestCase, mock

import numpy as np
import pytest

from zerocount.study import epsilon
from zerocount.study.epsilon import (
    eps_at,
    eps_minus,
    eps_minus_infima,
    eps_plus,
    interval_averages,
    interval_extremes,
    records,
    scan_extremes,
)
from zerocount.testing import computed_zeros, database_zeros, full_database, slow
from zerocount.types import DomainError, Sign
from zerocount.zeros import ZeroList


def below(t_max: float) -> ZeroList:
    zeros = computed_zeros()
    return ZeroList(zeros.ordinates[zeros.ordinates <= t_max], t_max_verified=t_max)


class EpsTest(TestCase):
    def test_first_zero(self):
        zeros = computed_zeros()

        assert eps_at(1, zeros, Sign.PLUS) == pytest.approx(-0.3108005052, abs=1e-9)
        assert eps_at(1, zeros, Sign.MINUS) == pytest.approx(0.4122447597, abs=1e-9)

    def test_difference(self):
        zeros = computed_zeros()

        for n in [1, 10, 1000, len(zeros)]:
            t = zeros[n - 1]
            gap = eps_at(n, zeros, Sign.PLUS) - eps_at(n, zeros, Sign.MINUS)

            assert gap == pytest.approx(
                -math.sqrt(2) / math.pi * math.sqrt(math.log(t) * math.log(math.log(t)))
            )

    def test_errors(self):
        zeros = computed_zeros()

        with pytest.raises(IndexError):
            eps_at(0, zeros, Sign.PLUS)

        with pytest.raises(IndexError):
            eps_at(len(zeros) + 1, zeros, Sign.PLUS)

        with pytest.raises(DomainError):
            eps_at(1, ZeroList([2.0, 14.0]), Sign.MINUS)

    def test_skips_small_heights(self):
        with self.assertLogs(level=logging.INFO):
            found = records(ZeroList([2.0, 14.134725141734693]))

        assert [r.n for r in found] == [2]


class ExtremesTest(TestCase):
    def test_none_below_2500(self):
        zeros = below(2500.0)

        assert len(zeros) > 1000
        assert scan_extremes(zeros) == []

    def test_partitions(self):
        shifted = ZeroList(np.linspace(20.0, 2000.0, 500))

        serial = scan_extremes(shifted)
        with mock.patch.object(epsilon, "PARTITION_SIZE", 64):
            threaded = scan_extremes(shifted, workers=3)

        assert serial
        assert serial == threaded

    def test_maximum_at_left_ordinate(self):
        t = computed_zeros().ordinates[:101]

        for n in range(1, 100):
            grid = np.linspace(t[n - 1], t[n], 200, endpoint=False)
            values = eps_plus(grid, n)

            assert np.max(values) == pytest.approx(eps_plus(t[n - 1], n), abs=1e-9)
            assert np.all(np.diff(values) < 0)

    def test_infimum_below_next_ordinate(self):
        zeros = computed_zeros()
        t = zeros.ordinates[:101]
        infima = eps_minus_infima(zeros)

        assert len(infima) == len(zeros) - 1

        for n in range(1, 100):
            grid = np.linspace(t[n - 1], t[n], 2001)[:-1]
            step = grid[1] - grid[0]

            assert infima[n - 1] == pytest.approx(eps_minus(t[n], n + 1) - 1)
            assert np.min(eps_minus(grid, n)) == pytest.approx(
                infima[n - 1], abs=step * math.log(t[n])
            )

    @slow
    def test_first_exception(self):
        found = scan_extremes(computed_zeros(2.5e5), workers=4)

        assert [r.n for r in found] == [337917]
        assert found[0].t_n == pytest.approx(223936.368134, abs=1e-5)
        assert found[0].eps_minus == pytest.approx(-0.0206077, abs=2e-6)
        assert found[0].eps_plus < 0

    @full_database
    def test_database_exception(self):
        zeros = database_zeros()

        assert eps_at(337917, zeros, Sign.MINUS) == pytest.approx(-0.0206077, abs=1e-6)
        assert eps_at(2009961, zeros, Sign.MINUS) == pytest.approx(
            -0.0268423, abs=1e-6
        )


class AverageTest(TestCase):
    def test_single_chunk(self):
        zeros = computed_zeros()
        (chunk,) = interval_averages(zeros)

        assert chunk.chunk == 0
        assert abs(chunk.mean - 11 / 8) < 0.01

    def test_single_zero_chunks(self):
        zeros = below(40.0)
        values = np.arange(1, len(zeros) + 1) - zeros.ordinates / (2 * np.pi) * np.log(
            zeros.ordinates / (2 * np.pi * np.e)
        )

        means = [c.mean for c in interval_averages(zeros, chunks=len(zeros))]

        assert means == pytest.approx(list(values))

    def test_pairs(self):
        zeros = ZeroList(computed_zeros().ordinates[:4])
        first, last = interval_averages(zeros, chunks=2)
        single = [c.mean for c in interval_averages(zeros, chunks=4)]

        assert first.mean == pytest.approx((single[0] + single[1]) / 2)
        assert last.mean == pytest.approx((single[2] + single[3]) / 2)

    def test_chunk_count(self):
        zeros = ZeroList(computed_zeros().ordinates[:4])

        with pytest.raises(DomainError):
            interval_averages(zeros, chunks=0)

        with pytest.raises(DomainError):
            interval_averages(zeros, chunks=5)

        assert interval_averages(ZeroList([]), chunks=3) == []

    def test_extremes(self):
        zeros = computed_zeros()
        chunks = interval_extremes(zeros, chunks=4)
        means = interval_averages(zeros, chunks=4)

        assert [c.mean for c in chunks] == [m.mean for m in means]
        assert chunks[0].first_n == 1
        assert chunks[-1].last_n == len(zeros)

        for chunk in chunks:
            assert chunk.max_eps_plus < 0
            assert chunk.min_eps_minus > 0
            assert chunk.first_n <= chunk.max_eps_plus_n <= chunk.last_n
            assert eps_at(chunk.min_eps_minus_n, zeros, Sign.MINUS) == pytest.approx(
                chunk.min_eps_minus
            )

    @slow
    def test_hundred_thousand_zeros(self):
        zeros = computed_zeros(2.5e5).head(100000)
        (chunk,) = interval_averages(zeros)

        assert abs(chunk.mean - 11 / 8) < 0.01

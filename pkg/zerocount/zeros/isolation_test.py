import logging
from unittest import TestCase, mock

import mpmath
import numpy as np
import pytest

from zerocount import specfun
from zerocount.testing import computed_zeros, slow
from zerocount.types import CompletenessError, RangeError, Source
from zerocount.zeros import isolation


class ArgumentTest(TestCase):
    def test_s_against_oracle(self):
        for t in [50.0, 100.0, 1000.5]:
            assert isolation.s_by_argument(t) == pytest.approx(
                float(mpmath.backlunds(t)), abs=1e-8
            )

    def test_counts(self):
        assert isolation.count_by_argument(12.0) == 0
        assert isolation.count_by_argument(100.0) == 29
        assert isolation.count_by_argument(1000.0) == 649


class ScanTest(TestCase):
    def test_first_zeros(self):
        zeros = computed_zeros()

        for n in range(1, 21):
            assert zeros[n - 1] == pytest.approx(
                float(mpmath.zetazero(n).imag), abs=1e-9
            )

        assert round(zeros[0], 10) == 14.1347251417

    def test_count_to_100(self):
        zeros = computed_zeros()

        assert zeros.count(100.0) == 29

    def test_complete(self):
        zeros = computed_zeros()

        assert zeros.source == Source.COMPUTED
        assert zeros.t_max_verified == 1e4
        assert len(zeros) == int(mpmath.nzeros(1e4))
        assert zeros[-1] <= 1e4

    def test_simple(self):
        gaps = np.diff(computed_zeros().ordinates)

        assert np.all(gaps > 1e-6)

    def test_sign_changes(self):
        zeros = computed_zeros().ordinates
        zeros = zeros[zeros < specfun.RS_THRESHOLD]
        around = np.stack([zeros - 1e-7, zeros + 1e-7], axis=1)
        values = specfun.rs_Z(around.reshape(-1)).reshape(-1, 2)

        assert np.all(values[:, 0] * values[:, 1] < 0)

    def test_edges(self):
        edges = isolation.block_edges(5000.0)

        assert all(a < b for a, b in zip(edges, edges[1:]))
        assert edges[-1] >= 5000.0
        assert np.all(np.abs(specfun.rs_Z(np.array(edges))) >= isolation.EDGE_MIN_Z)

    def test_range(self):
        with pytest.raises(RangeError):
            isolation.find_zeros(14.0)

        with pytest.raises(RangeError):
            isolation.find_zeros(2e6)

    def test_workers_and_blocks(self):
        with mock.patch.object(isolation, "BLOCK_ZEROS", 40):
            serial = isolation.find_zeros(600.0)
            threaded = isolation.find_zeros(600.0, workers=3)

            assert len(isolation.block_edges(600.0)) > 2

        assert len(isolation.block_edges(600.0)) == 2
        assert np.array_equal(serial.ordinates, threaded.ordinates)
        assert np.allclose(
            serial.ordinates, computed_zeros().ordinates[: len(serial)], atol=1e-9
        )


class CompletenessTest(TestCase):
    def test_rescan_recovers(self):
        scan = isolation.scan_block
        calls = []

        def lossy(a, b, step):
            calls.append(step)
            roots = scan(a, b, step)
            return roots[1:] if len(calls) == 1 else roots

        with mock.patch.object(isolation, "scan_block", side_effect=lossy):
            with self.assertLogs(level=logging.WARNING):
                zeros = isolation.find_zeros(60.0)

        assert len(zeros) == 13
        assert calls[1] == pytest.approx(calls[0] / isolation.RESCAN_FACTOR)

    def test_missing_zero(self):
        scan = isolation.scan_block

        with mock.patch.object(
            isolation, "scan_block", side_effect=lambda a, b, step: scan(a, b, step)[1:]
        ):
            with pytest.raises(CompletenessError):
                isolation.find_zeros(60.0)


class SlowScanTest(TestCase):
    @slow
    def test_quarter_million(self):
        zeros = computed_zeros(2.5e5)

        assert np.all(np.diff(zeros.ordinates) > 1e-6)
        assert zeros.count(1e4) == len(computed_zeros())

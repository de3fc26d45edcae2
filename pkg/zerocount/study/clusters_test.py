from unittest import TestCase

import pytest

from zerocount.study import ClusterRow, cluster_first, window_counts
from zerocount.testing import computed_zeros, slow
from zerocount.types import CoverageError, DomainError
from zerocount.zeros import ZeroList

FIRST = {
    1: 13.1347251417346937904572,
    2: 48.7738324776723021819167,
    3: 356.952685101632273755128,
    4: 2261.87830538116111223015,
    5: 27134.3628475733906424560,
    6: 221227.766664702101313669,
}


class WindowTest(TestCase):
    def test_synthetic(self):
        candidates, counts = window_counts(ZeroList([10.0, 10.5, 11.8, 20.0]))

        assert list(candidates) == [9.0, 9.5, 10.8, 19.0]
        assert list(counts) == [1, 2, 3, 1]


class ClusterTest(TestCase):
    def test_first_rows(self):
        zeros = computed_zeros()
        table = cluster_first(4, zeros, t_limit=2500.0)

        assert [row.n for row in table.rows] == [1, 2, 3, 4]

        for row in table.rows:
            assert row.t_first == pytest.approx(FIRST[row.n], abs=1e-6)

        assert table.rows[0] == ClusterRow(1, zeros[0] - 1)

    def test_non_decreasing(self):
        rows = cluster_first(4, computed_zeros()).rows

        assert all(a.t_first <= b.t_first for a, b in zip(rows, rows[1:]))

    def test_max_ratio(self):
        table = cluster_first(1, computed_zeros())

        assert table.max_ratio == pytest.approx(0.517869685443, abs=1e-9)
        assert table.t_max_ratio == pytest.approx(2261.88, abs=0.01)

    def test_coverage(self):
        zeros = computed_zeros()

        with pytest.raises(CoverageError):
            cluster_first(5, zeros)

        with pytest.raises(CoverageError):
            cluster_first(4, zeros, t_limit=2000.0)

        with pytest.raises(DomainError):
            cluster_first(0, zeros)

    @slow
    def test_rows_five_and_six(self):
        table = cluster_first(6, computed_zeros(2.5e5))

        assert table.rows[4].t_first == pytest.approx(FIRST[5], abs=1e-6)
        assert table.rows[5].t_first == pytest.approx(FIRST[6], abs=1e-6)

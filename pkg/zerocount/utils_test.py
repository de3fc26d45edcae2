from unittest import TestCase

import numpy as np
import pytest

from zerocount import utils


class RoundUpTest(TestCase):
    def test_rounds_towards_infinity(self):
        assert utils.round_up(0.100757522, 5) == 0.10076
        assert utils.round_up(8.083437493, 5) == 8.08344
        assert utils.round_up(-0.0827069, 4) == -0.0827

    def test_exact_values_are_kept(self):
        assert utils.round_up(0.10076, 5) == 0.10076
        assert utils.round_up(2.0, 5) == 2.0

    def test_four_decimals(self):
        assert utils.round_up(14.20391, 4) == 14.204


class ParseNumberTest(TestCase):
    def test_fraction(self):
        assert utils.parse_number("27/164") == 27 / 164

    def test_plain(self):
        assert utils.parse_number("1e-9") == 1e-9
        assert utils.parse_number(3) == 3.0
        assert utils.parse_number(np.float64(0.5)) == 0.5

    def test_rejects(self):
        with pytest.raises(ValueError):
            utils.parse_number("abc")

        with pytest.raises(ValueError):
            utils.parse_number(True)


class FormatNumberTest(TestCase):
    def test_ten_significant_digits(self):
        assert utils.format_number(np.pi) == "3.141592654"
        assert utils.format_number(np.pi, full_precision=True) == repr(np.pi)

    def test_integers_and_text(self):
        assert utils.format_number(337917) == "337917"
        assert utils.format_number(np.int64(4)) == "4"
        assert utils.format_number("PASS") == "PASS"


class TableTest(TestCase):
    def test_table_repr(self):
        table = utils.make_table("constants", ["name", "value"], [["C1", "0.10076"]])
        text = utils.get_table_repr(table)

        assert "C1" in text
        assert "0.10076" in text

    def test_log_grid(self):
        grid = utils.log_grid(1.0, 100.0, 3)

        assert np.allclose(grid, [1.0, 10.0, 100.0])

import os
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

import pytest

from zerocount.study import TSVReport


class TSVReportTest(TestCase):
    def test_layout(self):
        report = TSVReport(["n", "t_first"])
        report.add_row([1, 13.1347251417346937])
        report.add_row({"t_first": 48.773832477672302, "n": 2})

        assert report.dumps() == "n\tt_first\n1\t13.13472514\n2\t48.77383248\n"

    def test_full_precision(self):
        report = TSVReport(["value"], full_precision=True)
        report.add_row([0.1 + 0.2])

        assert report.dumps().splitlines()[1] == repr(0.1 + 0.2)

    def test_text_and_flags(self):
        report = TSVReport(["name", "ok"])
        report.add_rows([["C1", True], ["C2", False]])

        assert report.dumps().splitlines()[1:] == ["C1\tTrue", "C2\tFalse"]

    def test_errors(self):
        report = TSVReport(["a", "b"])

        with pytest.raises(ValueError):
            report.add_row([1])

        with pytest.raises(KeyError):
            report.add_row({"a": 1})

        with pytest.raises(ValueError):
            TSVReport([])

    def test_save(self):
        report = TSVReport(["a"])
        report.add_row([1.5])

        with TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.tsv")
            report.save(path)

            assert Path(path).read_text(encoding="utf-8") == "a\n1.5\n"

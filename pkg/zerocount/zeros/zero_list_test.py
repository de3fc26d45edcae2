import os
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

import numpy as np
import pytest

from zerocount.types import (
    CoverageError,
    MonotonicityError,
    ParseError,
    Source,
    ValidationError,
)
from zerocount.zeros import ZeroList, ingest_zeros


def write(directory: str, text: str) -> Path:
    path = Path(directory) / "zeros.txt"
    path.write_text(text, encoding="utf-8")
    return path


class IngestTest(TestCase):
    def test_three_ordinates(self):
        with TemporaryDirectory() as tmp:
            zeros = ingest_zeros(write(tmp, "14.134725\n21.022040\n25.010858\n"))

        assert len(zeros) == 3
        assert zeros.source == Source.INGESTED
        assert zeros[0] == 14.134725
        assert zeros.t_max_verified == 25.010858

    def test_empty_file(self):
        with TemporaryDirectory() as tmp:
            zeros = ingest_zeros(write(tmp, ""))

        assert len(zeros) == 0
        assert zeros.t_max_verified == 0.0

    def test_comments_and_blank_lines(self):
        text = "# zeros of zeta\n\n14.134725\n  21.022040  \n# trailing\n"

        with TemporaryDirectory() as tmp:
            zeros = ingest_zeros(write(tmp, text))

        assert list(zeros) == [14.134725, 21.022040]

    def test_decreasing_pair(self):
        with TemporaryDirectory() as tmp:
            with pytest.raises(MonotonicityError) as info:
                ingest_zeros(write(tmp, "14.134725\n21.022040\n20.0\n"))

        assert info.value.index == 2

    def test_repeated_value(self):
        with TemporaryDirectory() as tmp:
            with pytest.raises(MonotonicityError) as info:
                ingest_zeros(write(tmp, "14.134725\n14.134725\n"))

        assert info.value.index == 1

    def test_parse_error_line(self):
        with TemporaryDirectory() as tmp:
            with pytest.raises(ParseError) as info:
                ingest_zeros(write(tmp, "# header\n14.134725\n21.02x\n"))

        assert info.value.line == 3
        assert info.value.text == "21.02x"

    def test_non_positive(self):
        with TemporaryDirectory() as tmp:
            with pytest.raises(ParseError):
                ingest_zeros(write(tmp, "-1.0\n"))

    def test_verified_header(self):
        text = "# source=computed\n# t_max_verified=30.5\n14.134725\n21.022040\n"

        with TemporaryDirectory() as tmp:
            zeros = ingest_zeros(write(tmp, text))

        assert zeros.t_max_verified == 30.5
        assert zeros.source == Source.INGESTED


class ZeroListTest(TestCase):
    def test_validation(self):
        with pytest.raises(MonotonicityError):
            ZeroList([14.0, 13.0])

        with pytest.raises(ValidationError):
            ZeroList([0.0, 1.0])

        with pytest.raises(ValidationError):
            ZeroList([14.0, 21.0], t_max_verified=20.0)

    def test_read_only(self):
        zeros = ZeroList([14.0, 21.0])

        with pytest.raises(ValueError):
            zeros.ordinates[0] = 1.0

    def test_count_and_coverage(self):
        zeros = ZeroList([14.0, 21.0, 25.0], t_max_verified=30.0)

        assert zeros.count(13.0) == 0
        assert zeros.count(14.0) == 1
        assert list(zeros.count(np.array([20.0, 21.0, 30.0]))) == [1, 2, 3]

        zeros.check_coverage(30.0)
        with pytest.raises(CoverageError):
            zeros.check_coverage(30.5)

    def test_head(self):
        zeros = ZeroList([14.0, 21.0, 25.0], t_max_verified=30.0)
        head = zeros.head(2)

        assert list(head) == [14.0, 21.0]
        assert head.t_max_verified == 21.0
        assert zeros.head(5) is zeros

    def test_save_and_ingest(self):
        ordinates = [14.134725141734693, 21.022039638771554, 25.01085758014569]
        zeros = ZeroList(ordinates, source=Source.COMPUTED, t_max_verified=26.0)

        with TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "zeros.txt")
            zeros.save(path)
            lines = Path(path).read_text(encoding="utf-8").splitlines()
            loaded = ingest_zeros(path)

        assert lines[0] == "# source=computed"
        assert lines[1] == "# t_max_verified=26.0"
        assert loaded.t_max_verified == 26.0
        assert list(loaded) == ordinates

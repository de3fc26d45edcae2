"""Shared inputs for the test suite."""

import functools
import os

import pytest

from zerocount.zeros import ZeroList, find_zeros, ingest_zeros

DESK_HEIGHT = 1e4

slow = pytest.mark.skipif(
    "ZEROCOUNT_SLOW" not in os.environ, reason="set ZEROCOUNT_SLOW to run slow scans"
)
full_database = pytest.mark.skipif(
    "ZEROCOUNT_ZEROS" not in os.environ,
    reason="set ZEROCOUNT_ZEROS to an ingestible zero file",
)


@functools.lru_cache(maxsize=None)
def computed_zeros(t_max: float = DESK_HEIGHT) -> ZeroList:
    return find_zeros(t_max, workers=4)


@functools.lru_cache(maxsize=None)
def database_zeros() -> ZeroList:
    return ingest_zeros(os.environ["ZEROCOUNT_ZEROS"])

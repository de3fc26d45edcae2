import logging
import math
import typing as tp
from dataclasses import dataclass, field

import numpy as np

from zerocount.types import (
    CoverageError,
    MonotonicityError,
    ParseError,
    PathLike,
    Source,
    ValidationError,
)

SAVE_DIGITS = 19
_SOURCE_KEY = "source"
_VERIFIED_KEY = "t_max_verified"


@dataclass(frozen=True, eq=False)
class ZeroList:
    """
    Ordinates of the non-trivial zeros of zeta on (0, t_max_verified], in
    ascending order.

    Arguments:
        ordinates: strictly increasing positive ordinates.
        source: whether the list was computed or read from a file.
        t_max_verified: height up to which the list is known to be complete.
            Defaults to the last ordinate (0.0 for an empty list).

    Raises:
        MonotonicityError: if two consecutive ordinates are not increasing.
        ValidationError: for non positive ordinates or a `t_max_verified`
            below the last ordinate.
    """

    ordinates: np.ndarray
    source: Source = Source.COMPUTED
    t_max_verified: tp.Optional[float] = field(default=None)

    def __post_init__(self):
        ordinates = np.array(self.ordinates, dtype=float).reshape(-1)
        ordinates.setflags(write=False)

        if len(ordinates) > 0 and not (
            np.all(np.isfinite(ordinates)) and ordinates[0] > 0
        ):
            raise ValidationError("ordinates must be finite and positive")

        decreasing = np.flatnonzero(np.diff(ordinates) <= 0)
        if len(decreasing) > 0:
            index = int(decreasing[0]) + 1
            raise MonotonicityError(
                index, float(ordinates[index - 1]), float(ordinates[index])
            )

        last = float(ordinates[-1]) if len(ordinates) > 0 else 0.0
        verified = last if self.t_max_verified is None else float(self.t_max_verified)

        if verified < last:
            raise ValidationError(
                f"t_max_verified={verified} is below the last ordinate {last}"
            )

        object.__setattr__(self, "ordinates", ordinates)
        object.__setattr__(self, "source", Source(self.source))
        object.__setattr__(self, "t_max_verified", verified)

    def __len__(self) -> int:
        return len(self.ordinates)

    def __getitem__(self, index):
        return self.ordinates[index]

    def __iter__(self) -> tp.Iterator[float]:
        return iter(self.ordinates.tolist())

    def __repr__(self) -> str:
        return (
            f"ZeroList(n={len(self)}, source={self.source.value}, "
            f"t_max_verified={self.t_max_verified})"
        )

    def check_coverage(self, t) -> None:
        t_max = float(np.max(t)) if np.ndim(t) > 0 else float(t)

        if t_max > self.t_max_verified:
            raise CoverageError(
                f"t={t_max} exceeds the verified height {self.t_max_verified} "
                f"of the zero list"
            )

    def count(self, t):
        """Number of ordinates `<= t`; accepts scalars and arrays."""
        counts = np.searchsorted(self.ordinates, t, side="right")
        return int(counts) if np.ndim(counts) == 0 else counts

    def head(self, n: int) -> "ZeroList":
        """The first `n` zeros, verified up to the n-th ordinate."""
        if n >= len(self):
            return self

        return ZeroList(
            self.ordinates[:n],
            source=self.source,
            t_max_verified=float(self.ordinates[n - 1]) if n > 0 else 0.0,
        )

    def save(self, path: PathLike) -> None:
        """
        Writes the list as plain text, one ordinate per line with 19
        significant digits, preceded by `# source=` and `# t_max_verified=`
        comment lines.
        """
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"# {_SOURCE_KEY}={self.source.value}\n")
            f.write(f"# {_VERIFIED_KEY}={self.t_max_verified!r}\n")

            for value in self.ordinates:
                f.write(f"{value:.{SAVE_DIGITS}g}\n")

        logging.info("saved %d zeros to %s", len(self), path)


def _parse_header(line: str, header: tp.Dict[str, str]):
    body = line.lstrip("#").strip()

    if "=" not in body:
        return

    key, value = body.split("=", 1)
    header[key.strip()] = value.strip()


def ingest_zeros(path: PathLike) -> ZeroList:
    """
    Reads a zero file: UTF-8 text with one ordinate per line in decimal
    notation, in strictly ascending order. Blank lines and lines starting
    with `#` are ignored, except that a `# t_max_verified=<x>` comment sets
    the verified height of the returned list.

    Arguments:
        path: file to read.

    Returns:
        A `ZeroList` with `source=ingested`.

    Raises:
        ParseError: for a line that is not a positive decimal number, with
            its 1-based line number.
        MonotonicityError: for an ordinate that does not exceed the previous
            one, with its 0-based index.
    """
    values: tp.List[float] = []
    header: tp.Dict[str, str] = {}

    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            text = line.strip()

            if not text:
                continue

            if text.startswith("#"):
                _parse_header(text, header)
                continue

            try:
                value = float(text)
            except ValueError:
                raise ParseError(line_number, text)

            if not (math.isfinite(value) and value > 0):
                raise ParseError(line_number, text, "ordinate must be positive")

            if values and value <= values[-1]:
                raise MonotonicityError(len(values), values[-1], value)

            values.append(value)

    t_max_verified = None

    if _VERIFIED_KEY in header:
        try:
            t_max_verified = float(header[_VERIFIED_KEY])
        except ValueError:
            raise ValidationError(
                f"invalid {_VERIFIED_KEY} header: {header[_VERIFIED_KEY]!r}"
            )

    logging.info("read %d zeros from %s", len(values), path)

    return ZeroList(
        np.array(values, dtype=float),
        source=Source.INGESTED,
        t_max_verified=t_max_verified,
    )

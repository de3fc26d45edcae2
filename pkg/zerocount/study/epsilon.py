"""
The functions

    eps+(T) = N(T) - main(T) - 11/8 - sqrt(log T log log T) / (sqrt(2) pi)
    eps-(T) = N(T) - main(T) - 11/8 + sqrt(log T log log T) / (sqrt(2) pi)

with `main(T) = (T / 2 pi) log(T / 2 pi e)`, evaluated at zero ordinates,
where `N(t_n) = n` for simple zeros. Both are decreasing between consecutive
zeros, so the supremum of eps+ on `[t_n, t_{n+1})` is its value at `t_n`
and the infimum of eps- is its value at `t_{n+1}` minus one.
"""

import logging
import math
import typing as tp
from multiprocessing.pool import ThreadPool

import numpy as np

from zerocount.types import DomainError, FloatLike, Sign
from zerocount.zeros import ZeroList, main_term

MEAN_OFFSET = 11.0 / 8.0
LOGLOG_MIN_T = 3.0
PARTITION_SIZE = 1 << 20


class StudyRecord(tp.NamedTuple):
    n: int
    t_n: float
    eps_plus: float
    eps_minus: float


class ChunkMean(tp.NamedTuple):
    chunk: int
    mean: float


class ChunkExtremes(tp.NamedTuple):
    chunk: int
    first_n: int
    last_n: int
    mean: float
    max_eps_plus: float
    max_eps_plus_n: int
    min_eps_minus: float
    min_eps_minus_n: int


def root_term(t: FloatLike) -> FloatLike:
    """`sqrt(log t log log t) / (sqrt(2) pi)`, for `t >= e`."""
    log_t = np.log(t)
    return np.sqrt(log_t * np.log(log_t)) / (math.sqrt(2.0) * math.pi)


def deviation(t: FloatLike, N: FloatLike) -> FloatLike:
    """`N - (t / 2 pi) log(t / 2 pi e) - 11/8`."""
    return N - main_term(t) - MEAN_OFFSET


def eps_plus(t: FloatLike, N: FloatLike) -> FloatLike:
    return deviation(t, N) - root_term(t)


def eps_minus(t: FloatLike, N: FloatLike) -> FloatLike:
    return deviation(t, N) + root_term(t)


def eps_at(n: int, z: ZeroList, sign: Sign) -> float:
    """
    eps+ or eps- at the n-th zero ordinate, with `N(t_n) = n`.

    Arguments:
        n: 1-based index of the zero.
        z: zero list.
        sign: `Sign.PLUS` for eps+, `Sign.MINUS` for eps-.

    Raises:
        IndexError: if `n` is outside `1..len(z)`.
        DomainError: if `t_n <= e`.
    """
    if not 1 <= n <= len(z):
        raise IndexError(f"zero index {n} outside 1..{len(z)}")

    t = float(z[n - 1])

    if t <= math.e:
        raise DomainError(f"eps requires t_n > e, got t_{n} = {t}")

    fn = eps_plus if Sign(sign) == Sign.PLUS else eps_minus

    return float(fn(t, n))


def _analysed(z: ZeroList) -> tp.Tuple[np.ndarray, np.ndarray]:
    """Indices and ordinates of the zeros above `LOGLOG_MIN_T`."""
    t = z.ordinates
    n = np.arange(1, len(t) + 1)
    keep = t > LOGLOG_MIN_T

    if not np.all(keep):
        logging.info(
            "skipping %d zeros at t <= %g", int(np.count_nonzero(~keep)), LOGLOG_MIN_T
        )

    return n[keep], t[keep]


def _partitions(size: int) -> tp.List[slice]:
    return [
        slice(start, min(start + PARTITION_SIZE, size))
        for start in range(0, size, PARTITION_SIZE)
    ]


def records(z: ZeroList) -> tp.List[StudyRecord]:
    n, t = _analysed(z)

    return [
        StudyRecord(int(i), float(x), float(p), float(m))
        for i, x, p, m in zip(n, t, eps_plus(t, n), eps_minus(t, n))
    ]


def scan_extremes(z: ZeroList, workers: int = 1) -> tp.List[StudyRecord]:
    """
    All zeros at which eps+ is positive or eps- is negative, in index order.

    Only the ordinates are examined since the extremes between two zeros
    are attained there (see the module docstring).

    Arguments:
        z: zero list.
        workers: threads scanning partitions of the index range.
    """
    n, t = _analysed(z)

    def run(part: slice) -> tp.List[StudyRecord]:
        plus = eps_plus(t[part], n[part])
        minus = eps_minus(t[part], n[part])
        hits = np.flatnonzero((plus > 0) | (minus < 0))
        ns, ts = n[part][hits], t[part][hits]

        return [
            StudyRecord(int(i), float(x), float(p), float(m))
            for i, x, p, m in zip(ns, ts, plus[hits], minus[hits])
        ]

    parts = _partitions(len(t))

    if workers > 1:
        with ThreadPool(workers) as pool:
            found = pool.map(run, parts)
    else:
        found = [run(part) for part in parts]

    return [record for part in found for record in part]


def eps_minus_infima(z: ZeroList) -> np.ndarray:
    """
    Infimum of eps- on each `[t_n, t_{n+1})`, that is `eps-(t_{n+1}) - 1`,
    for the consecutive pairs above `LOGLOG_MIN_T`.
    """
    n, t = _analysed(z)
    return eps_minus(t[1:], n[1:]) - 1.0


def _chunks(size: int, chunks: int) -> tp.List[np.ndarray]:
    if chunks < 1:
        raise DomainError(f"chunks must be at least 1, got {chunks}")

    if size > 0 and chunks > size:
        raise DomainError(f"cannot split {size} zeros into {chunks} chunks")

    return np.array_split(np.arange(size), chunks) if size > 0 else []


def interval_averages(z: ZeroList, chunks: int = 1) -> tp.List[ChunkMean]:
    """
    Splits the zeros into `chunks` runs of consecutive indices with equal
    counts (the first runs take one extra zero when the split is uneven) and
    returns the mean of `n - (t_n / 2 pi) log(t_n / 2 pi e)` on each run.
    """
    t = z.ordinates
    values = np.arange(1, len(t) + 1) - main_term(t)

    return [
        ChunkMean(i, float(np.mean(values[index])))
        for i, index in enumerate(_chunks(len(t), chunks))
    ]


def interval_extremes(z: ZeroList, chunks: int = 1) -> tp.List[ChunkExtremes]:
    """Per chunk of `interval_averages`, the largest eps+ and the smallest eps-."""
    t = z.ordinates
    n = np.arange(1, len(t) + 1)
    means = interval_averages(z, chunks)
    out = []

    for (i, mean), index in zip(means, _chunks(len(t), chunks)):
        index = index[t[index] > LOGLOG_MIN_T]

        if len(index) == 0:
            logging.info("chunk %d has no zeros above t = %g", i, LOGLOG_MIN_T)
            continue

        plus = eps_plus(t[index], n[index])
        minus = eps_minus(t[index], n[index])
        hi, lo = int(np.argmax(plus)), int(np.argmin(minus))

        out.append(
            ChunkExtremes(
                chunk=i,
                first_n=int(n[index[0]]),
                last_n=int(n[index[-1]]),
                mean=mean,
                max_eps_plus=float(plus[hi]),
                max_eps_plus_n=int(n[index[hi]]),
                min_eps_minus=float(minus[lo]),
                min_eps_minus_n=int(n[index[lo]]),
            )
        )

    return out

"""
Self-computed zero lists: every zero of Hardy's Z function up to a desk
scale height, located by a sign change scan and checked block by block
against the zero count given by the argument principle.
"""

import cmath
import logging
import math
import typing as tp
from multiprocessing.pool import ThreadPool

import numpy as np

from zerocount import specfun
from zerocount.specfun import DEFAULT_ACCURACY, EvalAccuracy
from zerocount.types import (
    AccuracyError,
    CompletenessError,
    DomainError,
    RangeError,
    Source,
)
from zerocount.zeros.zero_list import ZeroList

T_MIN = 15.0
T_MAX = 1e6
BLOCK_ZEROS = 500
SCAN_DENSITY = 8
RESCAN_FACTOR = 4
BISECT_TOL = 1e-10
EDGE_MIN_Z = 0.1

_FIRST_EDGE = specfun.RS_MIN
_ARG_STEPS = 16
_ARG_MAX_DEPTH = 24
_ARG_MAX_STEP = math.pi / 4
_EDGE_SAMPLES = 64
_MAX_BISECTIONS = 200


def mean_gap(t: float) -> float:
    """Average spacing `2 pi / log(t / 2 pi)` of the zeros near height `t`."""
    return 2.0 * math.pi / math.log(t / (2.0 * math.pi))


def scan_step(t: float) -> float:
    return mean_gap(max(t, T_MIN)) / SCAN_DENSITY


# ---------------------------------------------------------------------------
# counting by the argument principle
# ---------------------------------------------------------------------------


def _arg_increment(
    t: float,
    sigma0: float,
    sigma1: float,
    z0: complex,
    z1: complex,
    acc: EvalAccuracy,
    depth: int,
) -> float:
    delta = cmath.phase(z1 / z0)

    if abs(delta) <= _ARG_MAX_STEP:
        return delta

    if depth >= _ARG_MAX_DEPTH:
        raise AccuracyError(f"argument tracking did not settle at t={t}")

    sigma = 0.5 * (sigma0 + sigma1)
    z = specfun.zeta_complex(complex(sigma, t), acc)

    return _arg_increment(t, sigma0, sigma, z0, z, acc, depth + 1) + _arg_increment(
        t, sigma, sigma1, z, z1, acc, depth + 1
    )


def s_by_argument(t: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """
    S(t) = arg zeta(1/2 + it) / pi, with the argument obtained by continuous
    variation along the horizontal segment from 2 + it to 1/2 + it.

    `Re zeta(2 + it) > 0`, so tracking starts from the principal value.
    Segments whose argument moves by more than pi/4 are halved until it
    does not.

    Arguments:
        t: height, not the ordinate of a zero.
        acc: accuracy request for `zeta_complex`.

    Raises:
        DomainError: if `t` is not positive or zeta vanishes on the segment.
        AccuracyError: if the halving does not settle.
    """
    t = float(t)

    if not t > 0:
        raise DomainError(f"s_by_argument requires t > 0, got {t}")

    sigmas = np.linspace(2.0, 0.5, _ARG_STEPS + 1)
    values = [specfun.zeta_complex(complex(sigma, t), acc) for sigma in sigmas]

    if any(value == 0 for value in values):
        raise DomainError(f"zeta vanishes on the tracking segment at t={t}")

    arg = cmath.phase(values[0])

    for i in range(_ARG_STEPS):
        arg += _arg_increment(
            t, sigmas[i], sigmas[i + 1], values[i], values[i + 1], acc, 0
        )

    return arg / math.pi


def count_by_argument(t: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> int:
    """
    N(t) from `theta(t) / pi + 1 + S(t)`, for `t` away from the ordinates.

    Raises:
        AccuracyError: if the formula is not within 1/4 of an integer.
    """
    value = specfun.rs_theta(t) / math.pi + 1.0 + s_by_argument(t, acc)
    count = round(value)

    if abs(value - count) > 0.25:
        raise AccuracyError(f"zero count at t={t} is not near an integer: {value}")

    return int(count)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------


def _settle(t: float) -> float:
    """The first point of a quarter-step grid from `t` where `|Z| >= 0.1`."""
    candidates = t + 0.25 * scan_step(t) * np.arange(_EDGE_SAMPLES)
    values = np.abs(specfun.rs_Z(candidates))
    good = np.flatnonzero(values >= EDGE_MIN_Z)

    if len(good) == 0:
        raise AccuracyError(f"no block edge with |Z| >= {EDGE_MIN_Z} found after {t}")

    return float(candidates[good[0]])


def block_edges(t_max: float) -> tp.List[float]:
    """
    Edges of the scanning blocks covering `[10, t_max]`, each block holding
    about `BLOCK_ZEROS` zeros. Every edge is moved forward to a point where
    `|Z| >= 0.1`, so the last edge may lie slightly above `t_max`.
    """
    last = _settle(t_max)
    edges = [_settle(_FIRST_EDGE)]

    while True:
        t = edges[-1]
        nxt = t + BLOCK_ZEROS * mean_gap(max(t, T_MIN))

        if nxt >= t_max:
            break

        nxt = _settle(nxt)

        if nxt >= last:
            break

        edges.append(nxt)

    edges.append(last)

    return edges


def _bisect(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    z_lo = specfun.rs_Z(lo)

    for _ in range(_MAX_BISECTIONS):
        tol = np.maximum(BISECT_TOL, 4.0 * np.spacing(hi))
        open_ = hi - lo > tol

        if not np.any(open_):
            break

        mid = 0.5 * (lo + hi)
        z_mid = specfun.rs_Z(mid)
        left = np.sign(z_mid) == np.sign(z_lo)

        lo = np.where(open_ & left, mid, lo)
        z_lo = np.where(open_ & left, z_mid, z_lo)
        hi = np.where(open_ & ~left, mid, hi)

    return 0.5 * (lo + hi)


def scan_block(a: float, b: float, step: float) -> np.ndarray:
    """Zeros of Z in `(a, b)` from the sign changes on a grid of spacing `step`."""
    grid = np.linspace(a, b, int(math.ceil((b - a) / step)) + 1)
    values = specfun.rs_Z(grid)

    exact = grid[1:-1][values[1:-1] == 0]
    changes = np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)

    roots = np.concatenate([exact, _bisect(grid[changes], grid[changes + 1])])

    return np.sort(roots)


def _check_block(a: float, b: float, expected: int) -> np.ndarray:
    step = scan_step(b)
    roots = scan_block(a, b, step)

    if len(roots) != expected:
        logging.warning(
            "block [%.6f, %.6f]: found %d zeros, expected %d; rescanning",
            a,
            b,
            len(roots),
            expected,
        )
        roots = scan_block(a, b, step / RESCAN_FACTOR)

    if len(roots) != expected:
        raise CompletenessError(
            f"block [{a}, {b}]: found {len(roots)} zeros after rescanning, "
            f"expected {expected}"
        )

    logging.debug("block [%.6f, %.6f]: %d zeros", a, b, expected)

    return roots


def find_zeros(t_max: float, workers: int = 1) -> ZeroList:
    """
    Computes every zero ordinate in `(0, t_max]`.

    Each block between consecutive `block_edges` is scanned with a step of
    1/8 of the mean zero spacing, sign changes are bisected to `1e-10` and
    the number of zeros found must equal the difference of
    `count_by_argument` at the block edges. A block failing the check is
    rescanned with a quarter of the step.

    Arguments:
        t_max: height, `15 <= t_max <= 1e6`.
        workers: number of threads scanning blocks concurrently. Results
            are merged in block order, so the output does not depend on it.

    Returns:
        A `ZeroList` with `source=computed` and `t_max_verified=t_max`.

    Raises:
        RangeError: if `t_max` is outside `[15, 1e6]`.
        CompletenessError: if a block still misses zeros after rescanning.

    ```python
    zeros = find_zeros(100.0)
    len(zeros)  # 29
    ```
    """
    t_max = float(t_max)

    if not T_MIN <= t_max <= T_MAX:
        raise RangeError(f"find_zeros requires {T_MIN:g} <= t_max <= {T_MAX:g}")

    edges = block_edges(t_max)
    blocks = list(zip(edges[:-1], edges[1:]))

    logging.info(
        "scanning %d blocks up to t=%g, about %d zeros expected",
        len(blocks),
        t_max,
        int(specfun.rs_theta(t_max) / math.pi + 1),
    )

    def run(block: tp.Tuple[float, float]) -> np.ndarray:
        a, b = block
        return _check_block(a, b, counts[b] - counts[a])

    if workers > 1:
        with ThreadPool(workers) as pool:
            counts = dict(zip(edges, pool.map(count_by_argument, edges)))
            roots = pool.map(run, blocks)
    else:
        counts = {edge: count_by_argument(edge) for edge in edges}
        roots = [run(block) for block in blocks]

    if counts[edges[0]] != 0:
        raise CompletenessError(
            f"expected no zeros below t={edges[0]}, counted {counts[edges[0]]}"
        )

    ordinates = np.concatenate(roots) if roots else np.empty(0)
    ordinates = ordinates[ordinates <= t_max]

    return ZeroList(ordinates, source=Source.COMPUTED, t_max_verified=t_max)

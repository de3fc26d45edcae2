import logging
import typing as tp

import numpy as np

from zerocount.types import CoverageError, DomainError
from zerocount.zeros import ZeroList


class ClusterRow(tp.NamedTuple):
    n: int
    t_first: float


class ClusterTable(tp.NamedTuple):
    """
    First heights of the window counts `N(t + 1) - N(t - 1)` together with
    the largest ratio of that count to `log t` and where it occurs.
    """

    rows: tp.List[ClusterRow]
    max_ratio: float
    t_max_ratio: float


def window_counts(z: ZeroList) -> tp.Tuple[np.ndarray, np.ndarray]:
    """
    `N(t + 1) - N(t - 1)` at every `t = t_k - 1`.

    The count only increases when a zero enters the window through `t + 1`,
    so these are the only heights where a new value can first be reached.

    Returns:
        The heights `t_k - 1` and the counts at them.
    """
    gamma = z.ordinates
    candidates = gamma - 1.0
    counts = np.arange(1, len(gamma) + 1) - np.searchsorted(
        gamma, gamma - 2.0, side="right"
    )

    return candidates, counts


def cluster_first(
    n_max: int, z: ZeroList, t_limit: tp.Optional[float] = None
) -> ClusterTable:
    """
    For every `n <= n_max`, the smallest `t` with `N(t + 1) - N(t - 1) = n`.

    Arguments:
        n_max: largest window count sought.
        z: zero list.
        t_limit: only heights `t <= t_limit` are considered; defaults to the
            covered range `t + 1 <= z.t_max_verified`.

    Returns:
        A `ClusterTable` whose ratio fields are the maximum over the
        considered heights `t > 1` of `(N(t + 1) - N(t - 1)) / log t`.

    Raises:
        CoverageError: if some `n <= n_max` is never reached.

    ```python
    table = cluster_first(4, zeros)
    table.rows[0]  # ClusterRow(n=1, t_first=13.1347251417...)
    ```
    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")

    limit = z.t_max_verified - 1.0
    if t_limit is not None:
        limit = min(limit, float(t_limit))

    candidates, counts = window_counts(z)
    keep = candidates <= limit
    candidates, counts = candidates[keep], counts[keep]

    rows = []
    for n in range(1, n_max + 1):
        hits = np.flatnonzero(counts == n)

        if len(hits) == 0:
            raise CoverageError(
                f"no window with {n} zeros for t <= {limit}; extend the zero list"
            )

        rows.append(ClusterRow(n, float(candidates[hits[0]])))

    above_one = candidates > 1.0
    ratios = counts[above_one] / np.log(candidates[above_one])
    best = int(np.argmax(ratios))

    t_best = float(candidates[above_one][best])

    logging.info("largest window ratio %.9f at t=%.6f", ratios[best], t_best)

    return ClusterTable(rows=rows, max_ratio=float(ratios[best]), t_max_ratio=t_best)

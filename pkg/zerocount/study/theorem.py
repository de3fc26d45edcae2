import math
import typing as tp

import numpy as np

from zerocount.study.epsilon import deviation, root_term
from zerocount.zeros import ZeroList

UPPER_SLACK = 0.092094
LOWER_SLACK = 0.082707
_START_POINTS = 32


class TheoremMargins(tp.NamedTuple):
    """
    Smallest distances to the two sides of

        -root(T) - 1 - 0.082707 < N(T) - main(T) - 11/8 < root(T) + 0.092094

    over the checked heights; the inequality holds iff both are positive.
    """

    lower: float
    upper: float
    points: int

    @property
    def holds(self) -> bool:
        return self.lower > 0 and self.upper > 0


def check_points(z: ZeroList) -> tp.Tuple[np.ndarray, np.ndarray]:
    """
    Heights and zero counts where the two-sided inequality is checked. These
    are a grid on `(e, t_1)`, every ordinate, the midpoints between
    consecutive zeros, the left limits at the ordinates (`N = n - 1`) and
    finally the verified height.
    """
    t = z.ordinates
    n = np.arange(1, len(t) + 1)

    first = t[0] if len(t) > 0 else max(z.t_max_verified, math.e + 1.0)
    start = np.linspace(math.e, first, _START_POINTS + 1)[1:-1]

    heights = [start, t, 0.5 * (t[1:] + t[:-1]), t, [max(z.t_max_verified, first)]]
    counts = [np.zeros(len(start)), n, n[:-1], n - 1, [len(t)]]

    return np.concatenate(heights), np.concatenate(counts)


def theorem_margins(z: ZeroList) -> TheoremMargins:
    t, n = check_points(z)
    dev = deviation(t, n)
    root = root_term(t)

    return TheoremMargins(
        lower=float(np.min(dev + root + 1.0 + LOWER_SLACK)),
        upper=float(np.min(root + UPPER_SLACK - dev)),
        points=len(t),
    )


def appendix_theorem_check(z: ZeroList) -> bool:
    """
    Whether

        -root(T) - 1 - 0.082707 < N(T) - main(T) - 11/8 < root(T) + 0.092094,

    with `root(T) = sqrt(log T log log T) / (sqrt(2) pi)` and
    `main(T) = (T / 2 pi) log(T / 2 pi e)`, holds at every height of
    `check_points(z)`.
    """
    return theorem_margins(z).holds

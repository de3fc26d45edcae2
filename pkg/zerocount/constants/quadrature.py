"""
Adaptive composite Gauss-Legendre quadrature for vector valued integrands.
"""

import heapq
import logging
import typing as tp
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from zerocount.types import ConstraintViolation, QuadratureError

Integrand = tp.Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Tolerances for `integrate`.

    Arguments:
        abs_tol: absolute error allowed on every component of an integral.
        max_subdivisions: number of interval bisections after which
            `QuadratureError` is raised.
        order: number of Gauss-Legendre nodes per panel.
        workers: threads used to integrate independent panels.
    """

    abs_tol: float = 1e-9
    max_subdivisions: int = 2000
    order: int = 15
    workers: int = 1

    def __post_init__(self):
        violations = []

        if not self.abs_tol > 0:
            violations.append(f"abs_tol > 0 (got {self.abs_tol})")
        if not self.max_subdivisions >= 1:
            violations.append(f"max_subdivisions >= 1 (got {self.max_subdivisions})")
        if not self.order >= 2:
            violations.append(f"order >= 2 (got {self.order})")
        if not self.workers >= 1:
            violations.append(f"workers >= 1 (got {self.workers})")

        if violations:
            raise ConstraintViolation(violations)


class QuadratureResult(tp.NamedTuple):
    value: np.ndarray
    error: float
    subdivisions: int


@lru_cache(maxsize=None)
def _rule(order: int) -> tp.Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _gauss(f: Integrand, a: float, b: float, order: int) -> np.ndarray:
    x, w = _rule(order)
    half = (b - a) / 2
    return half * (f(a + half * (x + 1)) @ w)


def _estimate(f: Integrand, a: float, b: float, order: int):
    mid = (a + b) / 2
    whole = _gauss(f, a, b, order)
    left = _gauss(f, a, mid, order)
    right = _gauss(f, mid, b, order)
    fine = left + right

    return fine, float(np.max(np.abs(fine - whole)))


def integrate(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec = QuadratureSpec(),
    splits: tp.Sequence[float] = (),
) -> QuadratureResult:
    """
    Integrates `f` over `[a, b]`.

    `f` takes an array of abscissas of shape `(m,)` and returns either an array
    of shape `(m,)` or one of shape `(k, m)` for `k` simultaneous integrands.
    The interval with the largest error estimate is bisected until the summed
    estimate of every component is below `spec.abs_tol`.

    Arguments:
        f: vectorised integrand.
        a: lower limit.
        b: upper limit, `b >= a`.
        spec: tolerances.
        splits: interior points where the interval is cut before refining.

    Returns:
        A `QuadratureResult` with the integral of each component.

    Raises:
        QuadratureError: if the tolerance is not met within
            `spec.max_subdivisions` bisections.
    """
    edges = [a] + sorted(s for s in splits if a < s < b) + [b]

    heap = []
    for lo, hi in zip(edges, edges[1:]):
        if hi > lo:
            value, error = _estimate(f, lo, hi, spec.order)
            heapq.heappush(heap, (-error, lo, hi, value))

    if not heap:
        return QuadratureResult(_gauss(f, a, a, spec.order), 0.0, 0)

    subdivisions = 0
    while sum(-item[0] for item in heap) > spec.abs_tol:
        if subdivisions >= spec.max_subdivisions:
            raise QuadratureError(
                f"no convergence on [{a}, {b}] after {subdivisions} subdivisions, "
                f"error estimate {sum(-item[0] for item in heap)}"
            )

        _, lo, hi, _ = heapq.heappop(heap)
        mid = (lo + hi) / 2
        for sub_lo, sub_hi in [(lo, mid), (mid, hi)]:
            value, error = _estimate(f, sub_lo, sub_hi, spec.order)
            heapq.heappush(heap, (-error, sub_lo, sub_hi, value))

        subdivisions += 1

    if subdivisions > spec.max_subdivisions // 2:
        logging.warning(
            "quadrature on [%s, %s] needed %d subdivisions", a, b, subdivisions
        )

    # summed left to right so the result does not depend on refinement order
    pieces = sorted(heap, key=lambda item: item[1])
    total = np.sum([item[3] for item in pieces], axis=0)
    error = sum(-item[0] for item in pieces)

    return QuadratureResult(total, error, subdivisions)

import math
import typing as tp

import numpy as np

from zerocount import specfun
from zerocount.constants import SMALL_T_BOUND, ConstantSet, eval_bound
from zerocount.types import BoundMode, DomainError, FloatLike
from zerocount.zeros.zero_list import ZeroList


class CountResult(tp.NamedTuple):
    """`N(t) = S(t) + main_term + 7/8 + g(t)/2` at one height."""

    N: int
    S: float
    main_term: float


def main_term(t: FloatLike) -> FloatLike:
    """`(t / 2 pi) log(t / 2 pi e)`, the smooth part of N(t)."""
    t = np.asarray(t, dtype=float)
    value = t / (2.0 * np.pi) * np.log(t / (2.0 * np.pi * np.e))

    return float(value) if value.ndim == 0 else value


def _g_values(t) -> FloatLike:
    if np.ndim(t) == 0:
        return specfun.g_of_T(float(t))

    return np.array([specfun.g_of_T(x) for x in np.asarray(t, dtype=float)])


def N_exact(t: FloatLike, z: ZeroList):
    """
    Number of zero ordinates `<= t`.

    Raises:
        CoverageError: if `t` is above `z.t_max_verified`.
    """
    z.check_coverage(t)
    return z.count(t)


def S_exact(t: FloatLike, z: ZeroList) -> FloatLike:
    """
    `N(t) - (t / 2 pi) log(t / 2 pi e) - 7/8 - g(t) / 2` from the zero list.
    Accepts scalars and arrays; `t >= 5/7`.
    """
    return N_exact(t, z) - main_term(t) - 7.0 / 8.0 - 0.5 * _g_values(t)


def count(t: float, z: ZeroList) -> CountResult:
    n = N_exact(t, z)
    main = main_term(t)

    return CountResult(
        N=n, S=n - main - 7.0 / 8.0 - 0.5 * specfun.g_of_T(t), main_term=main
    )


def bound_sandwich(t: float, cs: ConstantSet, z: ZeroList) -> bool:
    """
    Whether `|N(t) - (t / 2 pi) log(t / 2 pi e)|` is within the explicit
    bound at `t`: the small height constant up to `cs.T0`, the NT bound
    above it.

    Raises:
        DomainError: if `t < e`.
        CoverageError: if `t` is above `z.t_max_verified`.
    """
    t = float(t)

    if t < math.e:
        raise DomainError(f"bound_sandwich requires t >= e, got {t}")

    deviation = abs(N_exact(t, z) - main_term(t))
    bound = SMALL_T_BOUND if t <= cs.T0 else eval_bound(t, cs, BoundMode.NT)

    return deviation <= bound

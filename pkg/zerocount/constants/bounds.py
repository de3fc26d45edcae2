"""
Evaluation and comparison of bounds of the form `a log T + b log log T + c`.
"""

import math
import typing as tp
from dataclasses import dataclass

from zerocount.constants.assemble import ConstantSet, corollary_constants
from zerocount.types import BoundMode, DomainError, NoCrossing
from zerocount.utils import log_grid

SMALL_T_BOUND = 2.5167 + 1 / (50 * math.e) + 7 / 8


@dataclass(frozen=True)
class LinearBound:
    """`a_log log T + a_loglog log log T + const`."""

    a_log: float
    a_loglog: float
    const: float

    def __call__(self, T: float) -> float:
        return self.at_log(math.log(T))

    def at_log(self, log_T: float) -> float:
        return self.a_log * log_T + self.a_loglog * math.log(log_T) + self.const

    @classmethod
    def from_constants(
        cls, cs: ConstantSet, mode: BoundMode = BoundMode.NT, primed: bool = False
    ) -> "LinearBound":
        """
        One half of the min in the bound for `N(T)` (`mode=NT`) or `S(T)`
        (`mode=ST`); `primed` selects the `C2'` half.
        """
        if mode == BoundMode.SMALL_T:
            raise DomainError("the small_T bound is a constant, not a linear bound")

        if mode == BoundMode.NT:
            const = cs.C3p if primed else cs.C3
        else:
            const = cs.C3ptilde if primed else cs.C3tilde

        return cls(cs.C1, cs.C2p if primed else cs.C2, const)

    @classmethod
    def unit_interval(cls, cs: ConstantSet, primed: bool = False) -> "LinearBound":
        """Upper bound for `N(T + 1) - N(T)` above `T0`, without the `1/(25T)` term."""
        cc = corollary_constants(cs)

        return cls(
            1 / (2 * math.pi) + 2 * cs.C1,
            2 * (cs.C2p if primed else cs.C2),
            cc.script_C3p if primed else cc.script_C3,
        )

    @classmethod
    def short_interval(cls, cs: ConstantSet, primed: bool = False) -> "LinearBound":
        """Upper bound for `N(T + 1) - N(T - 1)` above `T0`, without the residual."""
        cc = corollary_constants(cs)

        return cls(
            1 / math.pi + 2 * cs.C1,
            2 * (cs.C2p if primed else cs.C2),
            cc.script_D3p if primed else cc.script_D3,
        )


class Crossing(tp.NamedTuple):
    T: float
    log_T: float


def eval_bound(T: float, cs: ConstantSet, mode: BoundMode = BoundMode.NT) -> float:
    """
    Evaluates a bound at height `T`.

    Arguments:
        T: height, `T >= e`.
        cs: constants.
        mode: `NT` bounds `|N(T) - T/(2 pi) log(T/(2 pi e))|` with `(C3, C3')`,
            `ST` bounds `|S(T)|` with the tilde constants and `small_T` is the
            constant bound valid for `e <= T <= T0`.

    Returns:
        The value of the bound.
    """
    mode = BoundMode(mode)

    if not T >= math.e:
        raise DomainError(f"eval_bound requires T >= e, got {T}")

    if mode == BoundMode.SMALL_T:
        if T > cs.T0:
            raise DomainError(f"the small_T bound holds for T <= {cs.T0}, got {T}")
        return SMALL_T_BOUND

    return min(
        LinearBound.from_constants(cs, mode, primed=False)(T),
        LinearBound.from_constants(cs, mode, primed=True)(T),
    )


def crossover(
    b1: LinearBound,
    b2: LinearBound,
    log_T_min: float = 1.0,
    log_T_max: float = 700.0,
    tol: float = 1e-9,
) -> Crossing:
    """
    Finds where `b1` and `b2` cross by bisection in `log T`.

    Arguments:
        b1: first bound.
        b2: second bound.
        log_T_min: left end of the bracket, at least 1.
        log_T_max: right end of the bracket.
        tol: absolute tolerance on `log T`, hence relative tolerance on `T`.

    Returns:
        A `Crossing` with `T` and `log T`.

    Raises:
        NoCrossing: if `b1 - b2` has the same sign at both ends of the bracket.
    """
    if not 1.0 <= log_T_min < log_T_max:
        raise DomainError(
            "crossover requires 1 <= log_T_min < log_T_max, "
            f"got {log_T_min} and {log_T_max}"
        )

    def diff(x: float) -> float:
        return b1.at_log(x) - b2.at_log(x)

    lo, hi = log_T_min, log_T_max
    d_lo, d_hi = diff(lo), diff(hi)

    if d_lo == 0:
        return Crossing(math.exp(lo), lo)
    if d_hi == 0:
        return Crossing(math.exp(hi), hi)
    if (d_lo > 0) == (d_hi > 0):
        raise NoCrossing(
            f"bounds do not cross for log T in [{log_T_min}, {log_T_max}] "
            f"(differences {d_lo} and {d_hi})"
        )

    while hi - lo > tol:
        mid = (lo + hi) / 2
        d_mid = diff(mid)
        if d_mid == 0:
            lo = hi = mid
        elif (d_mid > 0) == (d_lo > 0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid

    log_T = (lo + hi) / 2
    return Crossing(math.exp(log_T), log_T)


def curve(
    cs: ConstantSet,
    mode: BoundMode,
    T_lo: float,
    T_hi: float,
    points: int = 100,
) -> tp.List[tp.Tuple[float, float]]:
    """`(T, eval_bound(T, cs, mode))` pairs on a logarithmic grid."""
    grid = log_grid(T_lo, T_hi, points)

    return [(float(T), eval_bound(float(T), cs, mode)) for T in grid]

"""
Assembly of the constants of the zero-counting bounds

    |N(T) - T/(2 pi) log(T/(2 pi e))|
        <= C1 log T + min{C2 log log T + C3, C2' log log T + C3'}

and of the bounds for `|S(T)|` and for the number of zeros in short intervals.
"""

import logging
import math
import typing as tp
from dataclasses import asdict, dataclass, fields
from functools import lru_cache

from zerocount import specfun
from zerocount.constants.backlund import E_bound
from zerocount.constants.integrals import RegionIntegrals, integrate_regions
from zerocount.constants.quadrature import QuadratureSpec
from zerocount.regions import BoundParams
from zerocount.types import ConstraintViolation, DomainError
from zerocount.utils import round_up

DEFAULT_T0 = 30610046000.0
# N(T) - T/(2 pi) log(T/(2 pi e)) for 3 <= T <= T0, up to the 7/8 and 1/(50T) terms
SMALL_T_CONSTANT = 2.5167
UNIT_SMALL_UPPER = 4.8405
UNIT_SMALL_LOWER = 5.32592
SHORT_SMALL_UPPER = 4.4798
SHORT_SMALL_LOWER = 5.66421
LOWER_C1_FACTOR = 2.000001
# B is accepted when it equals the multiplier rounded to 5 decimals
B_ROUNDING = 5e-6


@dataclass(frozen=True)
class ConstantSet:
    """
    The seven constants of the bounds for `N(T)` (`C1`, `C2`, `C2p`, `C3`,
    `C3p`) and `S(T)` (`C1`, `C2`, `C2p`, `C3tilde`, `C3ptilde`), valid for
    `T >= T0`.
    """

    C1: float
    C2: float
    C2p: float
    C3: float
    C3p: float
    C3tilde: float
    C3ptilde: float
    T0: float = DEFAULT_T0

    def rounded(self, decimals: int = 5) -> "ConstantSet":
        """Every constant rounded up at `decimals` decimals; `T0` is kept."""
        values = {
            f.name: round_up(getattr(self, f.name), decimals)
            for f in fields(self)
            if f.name != "T0"
        }
        return ConstantSet(T0=self.T0, **values)

    def to_dict(self) -> tp.Dict[str, float]:
        return asdict(self)


class CorollaryConstants(tp.NamedTuple):
    script_C3: float
    script_C3p: float
    script_D3: float
    script_D3p: float
    script_E: float
    script_Ep: float

    def rounded(self, decimals: int = 4) -> "CorollaryConstants":
        return CorollaryConstants(*(round_up(v, decimals) for v in self))


class IntervalBounds(tp.NamedTuple):
    lower: float
    upper: float


def loglog_multiplier(b: float, T0: float) -> float:
    """
    `log(b log T0) / log log T0`, the least `B` with
    `log(b log T) <= B log log T` for all `T >= T0`.
    """
    return math.log(b * math.log(T0)) / math.log(math.log(T0))


@lru_cache(maxsize=None)
def _warn_multiplier(b: float, T0: float, B: float):
    logging.warning(
        "B = %s is below log(b log T0) / log log T0 = %.9f",
        B,
        loglog_multiplier(b, T0),
    )


def assemble(
    p: BoundParams,
    ri: tp.Optional[RegionIntegrals] = None,
    q: QuadratureSpec = QuadratureSpec(),
) -> ConstantSet:
    """
    Assembles the constants from the region integrals.

    The `1/(50T)` term and the Backlund residual are evaluated at `T = T0`,
    where they are largest. In `C3tilde` the `1/(50 T0)` added in `C3` is
    removed again.

    Arguments:
        p: parameters.
        ri: the output of `integrate_regions(p, q)`; computed when omitted.
        q: quadrature tolerances used when `ri` is omitted.

    Returns:
        The unrounded `ConstantSet`; use `ConstantSet.rounded` for the
        presentation values.

    Raises:
        ConstraintViolation: if `delta` is outside `[1/4, 1/2)` or `p.B` is
            smaller than `loglog_multiplier(p.b, p.T0)` rounded to 5
            decimals.
    """
    violations = []
    if not 0.25 <= p.delta < 0.5:
        violations.append(f"1/4 <= delta < 1/2 (got delta = {p.delta})")
    multiplier = loglog_multiplier(p.b, p.T0)
    if multiplier > p.B:
        _warn_multiplier(p.b, p.T0, p.B)
    if multiplier > p.B + B_ROUNDING:
        violations.append(
            f"log(b log T0) / log log T0 <= B (got {multiplier} > {p.B})"
        )
    if violations:
        raise ConstraintViolation(violations)

    if ri is None:
        ri = integrate_regions(p, q)

    log_ratio = p.log_ratio
    scale = 2 * math.pi * log_ratio

    C1 = ri.cbar1 / scale
    C2 = ri.cbar2 / scale
    C2p = C2 + p.B / (2 * log_ratio)

    C3p = (
        7 / 8
        + 1 / 4
        + 1 / (50 * p.T0)
        + specfun.log_zeta(p.sigma1) / math.pi
        + E_bound(p.T0, p.delta) / 2
        + (ri.d3 + ri.kappa1 + ri.kappa2 + ri.kappa3) / scale
    )
    ratio = specfun.log_zeta(p.c) - specfun.log_zeta(2 * p.c)
    C3 = C3p + ratio / (2 * log_ratio)

    shift = (
        -7 / 8
        - 1 / (50 * p.T0)
        + (math.atan((p.sigma1 - 1) / p.T0) + math.atan(1 / (2 * p.T0))) / math.pi
    )

    return ConstantSet(
        C1=C1,
        C2=C2,
        C2p=C2p,
        C3=C3,
        C3p=C3p,
        C3tilde=C3 + shift,
        C3ptilde=C3p + shift,
        T0=p.T0,
    )


def corollary_constants(cs: ConstantSet) -> CorollaryConstants:
    """The constants of the unit and short interval bounds."""
    log_2pie = math.log(2 * math.pi * math.e)

    script_c = 3 / (4 * math.pi) - log_2pie / (2 * math.pi)
    script_d = (math.log(3) - log_2pie) / math.pi
    script_e = 1 / math.pi + math.log(3 / 4) / (2 * math.pi) - log_2pie / math.pi

    return CorollaryConstants(
        script_C3=2 * cs.C3tilde + script_c,
        script_C3p=2 * cs.C3ptilde + script_c,
        script_D3=2 * cs.C3tilde + script_d,
        script_D3p=2 * cs.C3ptilde + script_d,
        script_E=2 * cs.C3tilde + script_e,
        script_Ep=2 * cs.C3ptilde + script_e,
    )


def _check_interval_height(T: float):
    if not T + 1 >= 3:
        raise DomainError(f"interval bounds require T + 1 >= 3, got T = {T}")


def unit_interval_bounds(T: float, cs: ConstantSet) -> IntervalBounds:
    """
    Bounds for `N(T + 1) - N(T)`.

    Above `T0` only the upper bound is non-trivial and the lower bound is 0.

    Arguments:
        T: height, `T + 1 >= 3`.
        cs: constants, `cs.T0` separates the two regimes.

    Returns:
        The lower and upper bound.
    """
    _check_interval_height(T)
    log_T = math.log(T)

    if T + 1 <= cs.T0:
        return IntervalBounds(
            lower=log_T / (2 * math.pi) - UNIT_SMALL_LOWER - 1 / (25 * T),
            upper=log_T / (2 * math.pi) + UNIT_SMALL_UPPER,
        )

    cc = corollary_constants(cs)
    loglog_T = math.log(log_T)
    upper = (
        (1 / (2 * math.pi) + 2 * cs.C1) * log_T
        + min(
            2 * cs.C2 * loglog_T + cc.script_C3,
            2 * cs.C2p * loglog_T + cc.script_C3p,
        )
        + 1 / (25 * T)
    )

    return IntervalBounds(lower=0.0, upper=upper)


def short_interval_bounds(T: float, cs: ConstantSet) -> IntervalBounds:
    """Bounds for `N(T + 1) - N(T - 1)`, same regimes as `unit_interval_bounds`."""
    _check_interval_height(T)
    log_T = math.log(T)

    if T + 1 <= cs.T0:
        return IntervalBounds(
            lower=log_T / math.pi - SHORT_SMALL_LOWER - 1 / (25 * (T - 1)),
            upper=log_T / math.pi + SHORT_SMALL_UPPER,
        )

    cc = corollary_constants(cs)
    loglog_T = math.log(log_T)
    residual = 1 / (25 * (T - 1))

    lower = (
        (1 / math.pi - LOWER_C1_FACTOR * cs.C1) * log_T
        - min(
            2 * cs.C2 * loglog_T + cc.script_E,
            2 * cs.C2p * loglog_T + cc.script_Ep,
        )
        - residual
    )
    upper = (
        (1 / math.pi + 2 * cs.C1) * log_T
        + min(
            2 * cs.C2 * loglog_T + cc.script_D3,
            2 * cs.C2p * loglog_T + cc.script_D3p,
        )
        + residual
    )

    return IntervalBounds(lower=lower, upper=upper)

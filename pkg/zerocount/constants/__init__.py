from zerocount.constants.assemble import (
    ConstantSet,
    CorollaryConstants,
    IntervalBounds,
    assemble,
    corollary_constants,
    loglog_multiplier,
    short_interval_bounds,
    unit_interval_bounds,
)
from zerocount.constants.backlund import E_bound, E_of
from zerocount.constants.bounds import (
    SMALL_T_BOUND,
    Crossing,
    LinearBound,
    crossover,
    curve,
    eval_bound,
)
from zerocount.constants.integrals import RegionIntegrals, integrate_regions
from zerocount.constants.quadrature import QuadratureSpec, integrate

__all__ = [
    "ConstantSet",
    "CorollaryConstants",
    "Crossing",
    "E_bound",
    "E_of",
    "IntervalBounds",
    "LinearBound",
    "QuadratureSpec",
    "RegionIntegrals",
    "SMALL_T_BOUND",
    "assemble",
    "corollary_constants",
    "crossover",
    "curve",
    "eval_bound",
    "integrate",
    "integrate_regions",
    "loglog_multiplier",
    "short_interval_bounds",
    "unit_interval_bounds",
]

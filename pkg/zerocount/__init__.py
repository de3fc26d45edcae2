__version__ = "0.1.0"


from zerocount import types

from . import constants, regions, specfun, study, utils, zeros
from .config import Config, load_config
from .constants import (
    ConstantSet,
    LinearBound,
    QuadratureSpec,
    assemble,
    crossover,
    eval_bound,
    integrate_regions,
)
from .optimizer import Objective, Optimizer, optimize
from .regions import BoundParams, LineBound, check_constraints
from .zeros import ZeroList, find_zeros, ingest_zeros

__all__ = [
    "BoundParams",
    "Config",
    "ConstantSet",
    "LineBound",
    "LinearBound",
    "Objective",
    "Optimizer",
    "QuadratureSpec",
    "ZeroList",
    "assemble",
    "check_constraints",
    "crossover",
    "eval_bound",
    "find_zeros",
    "ingest_zeros",
    "integrate_regions",
    "load_config",
    "optimize",
]

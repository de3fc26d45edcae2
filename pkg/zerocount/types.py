import typing as tp
from enum import Enum
from pathlib import Path

import numpy as np

EPSILON = 1e-12
F = tp.TypeVar("F", bound=tp.Callable)

FloatLike = tp.Union[float, np.ndarray]
ComplexPoint = complex
PathLike = tp.Union[str, Path]


class Source(str, Enum):
    COMPUTED = "computed"
    INGESTED = "ingested"


class BoundMode(str, Enum):
    NT = "NT"
    ST = "ST"
    SMALL_T = "small_T"


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"


class OutputFormat(str, Enum):
    TABLE = "table"
    PLAIN = "plain"
    TSV = "tsv"
    JSON = "json"


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------


class ZeroCountError(Exception):
    pass


class ValidationError(ZeroCountError):
    pass


class ComputationError(ZeroCountError):
    pass


class ConstraintViolation(ValidationError):
    def __init__(self, violations: tp.Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DomainError(ValidationError, ValueError):
    pass


class PoleError(DomainError):
    pass


class RangeError(ValidationError, ValueError):
    pass


class ParseError(ValidationError):
    def __init__(self, line: int, text: str, reason: str = "not a decimal number"):
        self.line = line
        self.text = text
        super().__init__(f"line {line}: {reason}: {text!r}")


class MonotonicityError(ValidationError):
    def __init__(self, index: int, previous: float, value: float):
        self.index = index
        super().__init__(
            f"ordinates must be strictly increasing, got {value!r} after "
            f"{previous!r} at index {index}"
        )


class InfeasibleError(ValidationError):
    pass


class AccuracyError(ComputationError):
    pass


class QuadratureError(ComputationError):
    pass


class CoverageError(ComputationError):
    pass


class CompletenessError(ComputationError):
    pass


class NoCrossing(ComputationError):
    pass

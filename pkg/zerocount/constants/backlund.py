"""
The residual `E(T, d)` of the Backlund argument and its explicit upper bound.
"""

import math

from zerocount.types import DomainError

_TAIL = (8 + 6 * math.pi) / 45


def E_of(T: float, d: float) -> float:
    """
    Evaluates the closed form of `E(T, d)` for `T >= 5/7` and `0 <= d < 9/2`.

    Arguments:
        T: height.
        d: horizontal offset, usually `delta = 2c - sigma1 - 1/2`.

    Returns:
        The value of `E(T, d)`, positive on the whole domain.
    """
    if not T >= 5 / 7:
        raise DomainError(f"E_of requires T >= 5/7, got {T}")
    if not 0 <= d < 4.5:
        raise DomainError(f"E_of requires 0 <= d < 9/2, got {d}")

    a, b = 2 * d + 17, -2 * d + 17
    T2 = 4 * T * T

    value = (
        (2 * T / 3) / (a * a + T2)
        + (2 * T / 3) / (b * b + T2)
        - (4 * T / 3) / (17 ** 2 + T2)
    )
    value += (
        T / 2 * math.log1p(17 ** 2 / T2)
        - T / 4 * math.log1p(a * a / T2)
        - T / 4 * math.log1p(b * b / T2)
    )
    value += (
        _TAIL / (a * a + T2) ** 1.5
        + _TAIL / (b * b + T2) ** 1.5
        + 2 * _TAIL / (17 ** 2 + T2) ** 1.5
    )
    value += sum(
        2 * math.atan((1 + 4 * k) / (2 * T))
        - math.atan((2 * d + 1 + 4 * k) / (2 * T))
        - math.atan((-2 * d + 1 + 4 * k) / (2 * T))
        for k in range(4)
    )
    value += (
        (2 * d + 15) / 4 * math.atan(a / (2 * T))
        + (-2 * d + 15) / 4 * math.atan(b / (2 * T))
        - 7.5 * math.atan(17 / (2 * T))
    )

    return value


def E_bound(T: float, d: float) -> float:
    """`(640 d - 112) / (1536 (3T - 1)) + 2^-10`, an upper bound for `E(T, d) / pi`."""
    if not 0.25 <= d <= 0.625:
        raise DomainError(f"E_bound requires d in [1/4, 5/8], got {d}")
    if not T >= 5 / 7:
        raise DomainError(f"E_bound requires T >= 5/7, got {T}")

    return (640 * d - 112) / (1536 * (3 * T - 1)) + 2.0 ** -10

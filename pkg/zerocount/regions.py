"""
Geometry of the circle `s = c + r e^{i theta}` and the piecewise function
`F_{c,r}(theta)` whose integral over `[0, pi]` bounds the argument of
`(s - 1) zeta(s)`.

The circle is cut into regions by the vertical lines `sigma = 1 + eta`,
`1`, the lines `sigma_k = 1 - k / (2^k - 2)` for `k = n + 4, ..., 4`, `1/2`,
`0` and `-eta`. On each region `F_{c,r}` comes from interpolating explicit
bounds for zeta on the two bounding lines.
"""

import math
import typing as tp
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from zerocount import specfun
from zerocount.types import ConstraintViolation, DomainError, FloatLike

LOG_FACTOR = 1.00212
YANG_COEFF = 1.546
MAX_THETA_ONE_PLUS_ETA = 2.1
DEFAULT_Q = (1.0, 1.18, 1.18, 3.9, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 2.3, 3.9)

# rounding limits zeta_complex to a few digits left of Re s = 0
_EXCESS_ACCURACY = specfun.EvalAccuracy(abs_tol=1e-4)


@dataclass(frozen=True)
class LineBound:
    """
    An explicit estimate `|zeta(sigma0 + it)| <= coeff * t^t_power * (log t)^log_power`
    valid for `t >= t_min`.
    """

    coeff: float
    t_power: float
    log_power: float
    t_min: float = 3.0

    def __post_init__(self):
        violations = []

        if not self.coeff > 0:
            violations.append(f"coeff > 0 (got {self.coeff})")
        if not self.t_power >= 0:
            violations.append(f"t_power >= 0 (got {self.t_power})")
        if not self.log_power >= 0:
            violations.append(f"log_power >= 0 (got {self.log_power})")
        if not self.t_min >= math.e:
            violations.append(f"t_min >= e (got {self.t_min})")

        if violations:
            raise ConstraintViolation(violations)

    def __call__(self, t: FloatLike) -> FloatLike:
        return self.coeff * t ** self.t_power * np.log(t) ** self.log_power

    @property
    def log_constant(self) -> float:
        # log(coeff * 1.00212^log_power)
        return math.log(self.coeff) + self.log_power * math.log(LOG_FACTOR)


class ConstraintCheck(tp.NamedTuple):
    valid: bool
    violations: tp.List[str]


def _sigma1(c: float, r: float) -> float:
    return c + (c - 0.5) ** 2 / r


def check_constraints(c: float, r: float, eta: float, n: int = 5) -> ConstraintCheck:
    """
    Checks the admissibility conditions on the free parameters

    -1/2 < c - r < 1 - c < -eta < 1/4 <= delta < 1/2 < 1 + eta < sigma1 < c + r,

    with `sigma1 = c + (c - 1/2)^2 / r` and `delta = 2c - sigma1 - 1/2`, together
    with `eta > 0`, `theta_{1+eta} <= 2.1` and `1 <= n <= 5`.

    Arguments:
        c: center of the circle.
        r: radius of the circle.
        eta: width of the band to the right of the 1-line.
        n: number of bands between `sigma_4` and `sigma_{n+4}`.

    Returns:
        A `ConstraintCheck` with the list of every violated condition.
    """
    if not r > 0:
        return ConstraintCheck(False, [f"r > 0 (got r = {r})"])

    sigma1 = _sigma1(c, r)
    delta = 2 * c - sigma1 - 0.5

    chain = [
        ("-1/2 < c - r", -0.5 < c - r, f"c - r = {c - r}"),
        ("c - r < 1 - c", c - r < 1 - c, f"c - r = {c - r}, 1 - c = {1 - c}"),
        ("1 - c < -eta", 1 - c < -eta, f"1 - c = {1 - c}, -eta = {-eta}"),
        ("-eta < 1/4", -eta < 0.25, f"-eta = {-eta}"),
        ("1/4 <= delta", 0.25 <= delta, f"delta = {delta}"),
        ("delta < 1/2", delta < 0.5, f"delta = {delta}"),
        ("1/2 < 1 + eta", 0.5 < 1 + eta, f"1 + eta = {1 + eta}"),
        (
            "1 + eta < sigma1",
            1 + eta < sigma1,
            f"1 + eta = {1 + eta}, sigma1 = {sigma1}",
        ),
        ("sigma1 < c + r", sigma1 < c + r, f"sigma1 = {sigma1}, c + r = {c + r}"),
        ("eta > 0", eta > 0, f"eta = {eta}"),
    ]

    violations = [f"{name} (got {got})" for name, ok, got in chain if not ok]

    y = (1 + eta - c) / r
    if -1 <= y <= 1 and math.acos(y) > MAX_THETA_ONE_PLUS_ETA:
        violations.append(
            f"theta_(1+eta) <= {MAX_THETA_ONE_PLUS_ETA} (got {math.acos(y)})"
        )

    if not (isinstance(n, (int, np.integer)) and 1 <= n <= 5):
        violations.append(f"1 <= n <= 5 (got n = {n})")

    return ConstraintCheck(not violations, violations)


@dataclass(frozen=True)
class BoundParams:
    """
    All free parameters of the zero-counting bound.

    Arguments:
        c: center of the circle.
        r: radius of the circle.
        eta: band width to the right of the 1-line.
        n: number of interpolation bands between `sigma_4` and `sigma_{n+4}`.
        Q: twelve shifts used inside the line bounds.
        J1: number of terms in the sum that replaces the integral of
            `log zeta(sigma)` on the right arc.
        J2: same for the left arc.
        T0: height from which the bound is claimed.
        line1: bound on the 1-line, `c1 (log t)^c2`.
        line_half: bound on the 1/2-line, `k1 t^k2 (log t)^k3`.
        b: constant inside `log(b log T)`.
        B: multiplier with `log(b log T) <= B log log T` for `T >= T0`.
    """

    c: float
    r: float
    eta: float
    n: int = 5
    Q: tp.Tuple[float, ...] = DEFAULT_Q
    J1: int = 64
    J2: int = 39
    T0: float = 30610046000.0
    line1: LineBound = field(default_factory=lambda: LineBound(1.0, 0.0, 1.0, 3.0))
    line_half: LineBound = field(
        default_factory=lambda: LineBound(0.618, 1.0 / 6.0, 1.0, 3.0)
    )
    b: float = 24.302
    B: float = 2.00204

    def __post_init__(self):
        object.__setattr__(self, "Q", tuple(float(q) for q in self.Q))

        check = check_constraints(self.c, self.r, self.eta, self.n)
        violations = list(check.violations)

        if len(self.Q) != 12:
            violations.append(f"Q has 12 entries (got {len(self.Q)})")
        elif not all(q > 0 for q in self.Q):
            violations.append(f"all Q entries > 0 (got {self.Q})")

        if not (isinstance(self.J1, (int, np.integer)) and self.J1 >= 1):
            violations.append(f"J1 >= 1 (got {self.J1})")
        if not (isinstance(self.J2, (int, np.integer)) and self.J2 >= 1):
            violations.append(f"J2 >= 1 (got {self.J2})")
        if not self.T0 >= math.e:
            violations.append(f"T0 >= e (got {self.T0})")
        if self.line1.t_power != 0:
            violations.append(f"line1 has no power of t (got {self.line1.t_power})")
        if not self.b > 0:
            violations.append(f"b > 0 (got {self.b})")
        if not self.B > 0:
            violations.append(f"B > 0 (got {self.B})")

        if violations:
            raise ConstraintViolation(violations)

    @property
    def sigma1(self) -> float:
        return _sigma1(self.c, self.r)

    @property
    def delta(self) -> float:
        return 2 * self.c - self.sigma1 - 0.5

    @property
    def log_ratio(self) -> float:
        # log(r / (c - 1/2))
        return math.log(self.r / (self.c - 0.5))

    @property
    def c1(self) -> float:
        return self.line1.coeff

    @property
    def c2(self) -> float:
        return self.line1.log_power

    @property
    def k1(self) -> float:
        return self.line_half.coeff

    @property
    def k2(self) -> float:
        return self.line_half.t_power

    @property
    def k3(self) -> float:
        return self.line_half.log_power


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------


def theta_y(y: float, p: BoundParams) -> float:
    """Angle at which the circle crosses the vertical line `sigma = y`."""
    if y >= p.c + p.r:
        return 0.0

    if y <= p.c - p.r:
        return math.pi

    return math.acos((y - p.c) / p.r)


def sigma_index(k: int) -> float:
    """The abscissa `sigma_k = 1 - k / (2^k - 2)` of the k-th interior line."""
    if k < 4:
        raise DomainError(f"sigma_index requires k >= 4, got {k}")

    return 1.0 - k / (2.0 ** k - 2.0)


def sigma_of(theta: FloatLike, p: BoundParams) -> FloatLike:
    return p.c + p.r * np.cos(theta)


def L_j(j: float, theta: FloatLike, T: float, p: BoundParams) -> FloatLike:
    """`log(((j + c + r cos theta)^2 + (|r sin theta| + T)^2) / T^2)`."""
    x = j + p.c + p.r * np.cos(theta)
    y = np.abs(p.r * np.sin(theta))

    return np.log1p((x * x + y * y + 2.0 * y * T) / (T * T))


def M_j(j: float, theta: FloatLike, T: float, p: BoundParams) -> FloatLike:
    """`log log((j + c + r cos theta)^2 + (|r sin theta| + T)^2) - log log(T^2)`."""
    return np.log1p(L_j(j, theta, T, p) / (2.0 * math.log(T)))


def L_star(j: float, theta: FloatLike, p: BoundParams) -> FloatLike:
    """
    Majorant of `T L_j(theta)` for `T >= T0`:

    `((j + c + r cos theta)^2 + (r sin theta)^2) / T0 + 2 r sin theta`.
    """
    x = j + p.c + p.r * np.cos(theta)
    y = p.r * np.sin(theta)

    return (x * x + y * y) / p.T0 + 2.0 * y


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------


class RegionTag(str, Enum):
    ABOVE_ONE_PLUS_ETA = "AboveOnePlusEta"
    ONE_TO_ONE_PLUS_ETA = "OneToOnePlusEta"
    SIGMA_NP4_TO_ONE = "SigmaNp4ToOne"
    YANG_BAND = "YangBand"
    HALF_TO_SIGMA4 = "HalfToSigma4"
    ZERO_TO_HALF = "ZeroToHalf"
    MINUS_ETA_TO_ZERO = "MinusEtaToZero"
    BELOW_MINUS_ETA = "BelowMinusEta"


class RegionId(tp.NamedTuple):
    tag: RegionTag
    h: tp.Optional[int] = None

    def __str__(self) -> str:
        if self.tag == RegionTag.YANG_BAND:
            return f"{self.tag.value}({self.h})"

        return self.tag.value


class Panel(tp.NamedTuple):
    region: RegionId
    lo: float
    hi: float


def breakpoints(p: BoundParams) -> tp.List[Panel]:
    """The regions in increasing order of theta, each with its angular interval."""
    edges: tp.List[tp.Tuple[RegionId, float]] = [
        (RegionId(RegionTag.ABOVE_ONE_PLUS_ETA), 1.0 + p.eta),
        (RegionId(RegionTag.ONE_TO_ONE_PLUS_ETA), 1.0),
        (RegionId(RegionTag.SIGMA_NP4_TO_ONE), sigma_index(p.n + 4)),
    ]

    for h in reversed(range(p.n)):
        edges.append((RegionId(RegionTag.YANG_BAND, h), sigma_index(4 + h)))

    edges += [
        (RegionId(RegionTag.HALF_TO_SIGMA4), 0.5),
        (RegionId(RegionTag.ZERO_TO_HALF), 0.0),
        (RegionId(RegionTag.MINUS_ETA_TO_ZERO), -p.eta),
    ]

    panels = []
    lo = 0.0
    for region, y in edges:
        hi = theta_y(y, p)
        panels.append(Panel(region, lo, hi))
        lo = hi

    panels.append(Panel(RegionId(RegionTag.BELOW_MINUS_ETA), lo, math.pi))

    return panels


def region_of(theta: float, p: BoundParams) -> RegionId:
    """
    Region containing `sigma = c + r cos theta`. A theta on a breakpoint
    belongs to the lower-theta region.
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")

    for panel in breakpoints(p):
        if theta <= panel.hi:
            return panel.region

    return RegionId(RegionTag.BELOW_MINUS_ETA)


def q_value(region: RegionId, p: BoundParams) -> tp.Optional[float]:
    """The shift `Q` paired with a region, `None` where the region uses none."""
    Q = p.Q
    tag = region.tag

    if tag == RegionTag.ONE_TO_ONE_PLUS_ETA:
        return Q[0]
    if tag == RegionTag.SIGMA_NP4_TO_ONE:
        return max(Q[0], Q[p.n + 4])
    if tag == RegionTag.YANG_BAND:
        return max(Q[4 + region.h], Q[5 + region.h])
    if tag == RegionTag.HALF_TO_SIGMA4:
        return max(Q[1], Q[4])
    if tag == RegionTag.ZERO_TO_HALF:
        return Q[11]
    if tag == RegionTag.MINUS_ETA_TO_ZERO:
        return Q[10]

    return None


def yang_constant() -> float:
    return math.log(YANG_COEFF * LOG_FACTOR)


def F_cr(theta: float, T: float, p: BoundParams) -> float:
    """
    Evaluates `F_{c,r}(theta)` at height `T >= T0`.

    Arguments:
        theta: angle in `[0, pi]`.
        T: height, at least `p.T0`.
        p: parameters.

    Returns:
        The value of the region formula selected by `region_of(theta, p)`.
    """
    if T < p.T0:
        raise DomainError(f"F_cr requires T >= T0 = {p.T0}, got {T}")

    region = region_of(theta, p)
    tag = region.tag
    sigma = float(sigma_of(theta, p))
    log_T = math.log(T)
    loglog_T = math.log(log_T)
    q = q_value(region, p)

    def L(j: float) -> float:
        return float(L_j(j, theta, T, p))

    def M(j: float) -> float:
        return float(M_j(j, theta, T, p))

    A = yang_constant()
    LC = p.line1.log_constant
    LK = p.line_half.log_constant
    c1, c2, k2, k3, eta = p.c1, p.c2, p.k2, p.k3, p.eta

    if tag == RegionTag.ABOVE_ONE_PLUS_ETA:
        return 0.5 * L(-1) + log_T + specfun.log_zeta(sigma)

    if tag == RegionTag.ONE_TO_ONE_PLUS_ETA:
        w = (1 + eta - sigma) / eta
        return (
            w * LC
            + (sigma - 1) / eta * specfun.log_zeta(1 + eta)
            + 0.5 * L(q)
            + log_T
            + c2 * w * (M(q) + loglog_T)
        )

    if tag == RegionTag.SIGMA_NP4_TO_ONE:
        s_n = sigma_index(p.n + 4)
        K = 2.0 ** (p.n + 4)
        left = (1 - sigma) / (1 - s_n)
        right = (sigma - s_n) / (1 - s_n)
        return (
            left * A
            + right * LC
            + ((K - 1) / (K - 2) * left + right) * (L(q) / 2 + log_T)
            + (left + c2 * right) * (M(q) + loglog_T)
        )

    if tag == RegionTag.YANG_BAND:
        h = region.h
        lo, hi = sigma_index(4 + h), sigma_index(5 + h)
        K4, K5 = 2.0 ** (h + 4), 2.0 ** (h + 5)
        coef = (K4 - 1) * (hi - sigma) / ((K4 - 2) * (hi - lo)) + (K5 - 1) * (
            sigma - lo
        ) / ((K5 - 2) * (hi - lo))
        return A + (M(q) + loglog_T) + coef * (L(q) / 2 + log_T)

    if tag == RegionTag.HALF_TO_SIGMA4:
        s4 = sigma_index(4)
        left = (s4 - sigma) / (s4 - 0.5)
        right = (sigma - 0.5) / (s4 - 0.5)
        return (
            left * LK
            + right * A
            + ((k2 + 1) * left + 15.0 / 14.0 * right) * (L(q) / 2 + log_T)
            + (k3 * left + right) * (M(q) + loglog_T)
        )

    half_line = math.log(c1 * LOG_FACTOR ** c2 / math.sqrt(2 * math.pi))

    if tag == RegionTag.ZERO_TO_HALF:
        return (
            (1 - 2 * sigma) * half_line
            + 2 * sigma * LK
            + 0.5 * L(-1)
            + log_T
            + (1 - 2 * sigma + 4 * k2 * sigma) / 2 * (L(q) / 2 + log_T)
            + (c2 * (1 - 2 * sigma) + 2 * k3 * sigma) * (M(q) + loglog_T)
        )

    if tag == RegionTag.MINUS_ETA_TO_ZERO:
        return (
            -sigma / eta * math.log((1 + eta) / (c1 * (2 * math.pi) ** eta))
            + half_line
            + 0.5 * L(-1)
            + log_T
            + (-sigma * (1 + 2 * eta) / (2 * eta) + (sigma + eta) / (2 * eta))
            * (L(q) / 2 + log_T)
            + (sigma + eta) / eta * c2 * (M(q) + loglog_T)
        )

    # sigma <= -eta
    floor = math.floor(sigma)
    value = (
        specfun.log_zeta(1 - sigma)
        + 0.5 * L(-1)
        + (1 + (1 - 2 * sigma) / 2) * log_T
        - (1 - 2 * sigma) / 2 * math.log(2 * math.pi)
        + (1 - 2 * sigma + 2 * floor) / 4 * L(1 - floor)
    )
    for j in range(1, -floor + 1):
        value += 0.5 * L(j - 1)

    return value


def log_zeta_excess(theta: float, T: float, p: BoundParams) -> float:
    """`log |(s - 1) zeta(s)|` at `s = c + r cos theta + i (T + r sin theta)`."""
    s = complex(p.c + p.r * math.cos(theta), T + p.r * math.sin(theta))

    return math.log(abs((s - 1) * specfun.zeta_complex(s, _EXCESS_ACCURACY)))

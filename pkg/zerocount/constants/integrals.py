"""
The integrals of the region estimates of `F_{c,r}` over `[0, pi]`.

Each region contributes five integrands, integrated together on its panel:

- the coefficient of `log T` beyond the baseline (sums to `cbar1`),
- the coefficient of `log log T` (sums to `cbar2`),
- the constant part (enters `d3`),
- the `1 / T` residual (sums to `m1`),
- the `1 / (T log T)` residual (sums to `m2`).
"""

import logging
import math
import typing as tp
from multiprocessing.pool import ThreadPool

import numpy as np

from zerocount import regions, specfun
from zerocount.constants.quadrature import QuadratureSpec, integrate
from zerocount.regions import BoundParams, Panel, RegionId, RegionTag


class RegionIntegrals(tp.NamedTuple):
    cbar1: float
    cbar2: float
    d3: float
    kappa1: float
    kappa2: float
    kappa3: float
    m1: float
    m2: float
    per_region: tp.Dict[RegionId, float]


def _rows(theta: np.ndarray, *rows) -> np.ndarray:
    return np.vstack([np.broadcast_to(row, theta.shape) for row in rows])


def region_integrand(
    region: RegionId, p: BoundParams
) -> tp.Callable[[np.ndarray], np.ndarray]:
    """
    The five integrands of a region as one vectorised function of theta.

    Arguments:
        region: the region.
        p: parameters.

    Returns:
        A function mapping `theta` of shape `(m,)` to an array of shape `(5, m)`.
    """
    tag = region.tag
    q = regions.q_value(region, p)
    c1, c2, k2, k3, eta = p.c1, p.c2, p.k2, p.k3, p.eta
    A = regions.yang_constant()
    LC = p.line1.log_constant
    LK = p.line_half.log_constant
    half_line = math.log(c1 * regions.LOG_FACTOR ** c2 / math.sqrt(2 * math.pi))

    def star(j, theta):
        return regions.L_star(j, theta, p)

    if tag == RegionTag.ABOVE_ONE_PLUS_ETA:

        def f(theta):
            return _rows(theta, 0.0, 0.0, 0.0, star(-1, theta), 0.0)

    elif tag == RegionTag.ONE_TO_ONE_PLUS_ETA:
        log_zeta_eta = specfun.log_zeta(1 + eta)

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            w = (1 + eta - sigma) / eta
            L = star(q, theta)
            return _rows(
                theta,
                0.0,
                c2 * w,
                LC * w + log_zeta_eta * (sigma - 1) / eta,
                L,
                c2 * w * L,
            )

    elif tag == RegionTag.SIGMA_NP4_TO_ONE:
        s_n = regions.sigma_index(p.n + 4)
        K = 2.0 ** (p.n + 4)

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            left = (1 - sigma) / (1 - s_n)
            right = (sigma - s_n) / (1 - s_n)
            coef = (K - 1) / (K - 2) * left + right
            loglog = left + c2 * right
            L = star(q, theta)
            return _rows(
                theta, coef - 1, loglog, A * left + LC * right, coef * L, loglog * L
            )

    elif tag == RegionTag.YANG_BAND:
        h = region.h
        lo, hi = regions.sigma_index(4 + h), regions.sigma_index(5 + h)
        K4, K5 = 2.0 ** (h + 4), 2.0 ** (h + 5)

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            coef = (
                (K4 - 1) * (hi - sigma) / (K4 - 2) + (K5 - 1) * (sigma - lo) / (K5 - 2)
            ) / (hi - lo)
            L = star(q, theta)
            return _rows(theta, coef - 1, 1.0, A, coef * L, L)

    elif tag == RegionTag.HALF_TO_SIGMA4:
        s4 = regions.sigma_index(4)

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            left = (s4 - sigma) / (s4 - 0.5)
            right = (sigma - 0.5) / (s4 - 0.5)
            coef = (k2 + 1) * left + 15 / 14 * right
            loglog = k3 * left + right
            L = star(q, theta)
            return _rows(
                theta, coef - 1, loglog, LK * left + A * right, coef * L, loglog * L
            )

    elif tag == RegionTag.ZERO_TO_HALF:

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            coef = (1 - 2 * sigma + 4 * k2 * sigma) / 2
            loglog = c2 * (1 - 2 * sigma) + 2 * k3 * sigma
            L = star(q, theta)
            return _rows(
                theta,
                coef,
                loglog,
                half_line * (1 - 2 * sigma) + 2 * LK * sigma,
                star(-1, theta) + coef * L,
                loglog * L,
            )

    elif tag == RegionTag.MINUS_ETA_TO_ZERO:
        slope = math.log((1 + eta) / (c1 * (2 * math.pi) ** eta)) / eta

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            coef = -sigma * (1 + 2 * eta) / (2 * eta) + (sigma + eta) / (2 * eta)
            loglog = (sigma + eta) / eta * c2
            L = star(q, theta)
            return _rows(
                theta,
                coef,
                loglog,
                -sigma * slope + half_line,
                star(-1, theta) + (0.5 - sigma) * L,
                loglog * L,
            )

    else:

        def f(theta):
            sigma = regions.sigma_of(theta, p)
            coef = (1 - 2 * sigma) / 2
            return _rows(
                theta,
                coef,
                0.0,
                -math.log(2 * math.pi) * coef,
                star(-1, theta) + coef * star(1, theta),
                0.0,
            )

    return f


def _eta_splits(p: BoundParams) -> tp.List[float]:
    # narrow panel next to theta_{1+eta}, where the estimates change regime
    theta_eta = regions.theta_y(1 + p.eta, p)
    width = min(1e-3, theta_eta / 4)

    return [theta_eta - width, theta_eta + width]


def kappa1(p: BoundParams) -> float:
    """Finite sum replacing the integral of `log zeta(sigma)` for `theta <= pi/2`."""
    j = np.arange(1, p.J1)
    angles = math.pi * j / (2 * p.J1)
    sigmas = np.concatenate([[p.c + p.r], p.c + p.r * np.cos(angles)])
    weights = np.concatenate([[1.0], np.full(len(j), 2.0)])

    return math.pi / (4 * p.J1) * float(weights @ specfun.log_zeta(sigmas))


def kappa2(p: BoundParams) -> float:
    """Same as `kappa1` on the reflected arc `theta_{1-c} <= theta <= pi`."""
    theta = regions.theta_y(1 - p.c, p)
    j = np.arange(1, p.J2)
    angles = math.pi * j / p.J2 + (1 - j / p.J2) * theta
    sigmas = np.concatenate([[1 - p.c + p.r], 1 - p.c - p.r * np.cos(angles)])
    weights = np.concatenate([[1.0], np.full(len(j), 2.0)])

    return (math.pi - theta) / (2 * p.J2) * float(weights @ specfun.log_zeta(sigmas))


def zeta_terms(p: BoundParams) -> float:
    """The `log zeta(1 + eta)` and `log zeta(c)` terms of `d3` left over by the sums."""
    z_eta = specfun.log_zeta(1 + p.eta)
    z_c = specfun.log_zeta(p.c)
    theta_eta = regions.theta_y(1 + p.eta, p)
    theta_minus = regions.theta_y(-p.eta, p)
    theta_reflected = regions.theta_y(1 - p.c, p)

    return (
        (z_eta + z_c) / 2 * (theta_eta - math.pi / 2)
        + math.pi / (4 * p.J1) * z_c
        + (z_eta + z_c) / 2 * (theta_reflected - theta_minus)
        + (math.pi - theta_reflected) / (2 * p.J2) * z_c
    )


def integrate_regions(
    p: BoundParams, q: QuadratureSpec = QuadratureSpec()
) -> RegionIntegrals:
    """
    Integrates the estimates of every region and collects the sums the
    constants are assembled from.

    Arguments:
        p: parameters.
        q: quadrature tolerances; `q.workers > 1` integrates panels in threads.

    Returns:
        A `RegionIntegrals` whose `per_region` maps each region to its share
        of `cbar1`.

    Raises:
        QuadratureError: if a panel does not converge.
    """
    panels = regions.breakpoints(p)
    splits = _eta_splits(p)

    def run(panel: Panel) -> np.ndarray:
        result = integrate(
            region_integrand(panel.region, p),
            panel.lo,
            panel.hi,
            q,
            splits=splits,
        )
        logging.debug(
            "%s on [%.6f, %.6f]: %d subdivisions, error %.2e",
            panel.region,
            panel.lo,
            panel.hi,
            result.subdivisions,
            result.error,
        )
        return result.value

    if q.workers > 1:
        with ThreadPool(q.workers) as pool:
            values = pool.map(run, panels)
    else:
        values = [run(panel) for panel in panels]

    cbar1 = cbar2 = d3 = m1 = m2 = 0.0
    per_region = {}
    for panel, value in zip(panels, values):
        share, loglog, constant, residual1, residual2 = (float(v) for v in value)
        per_region[panel.region] = share
        cbar1 += share
        cbar2 += loglog
        d3 += constant
        m1 += residual1
        m2 += residual2

    d3 += zeta_terms(p)

    kappa3 = max(0.0, m1) / (2 * p.T0) + max(0.0, m2) / (
        2 * p.T0 * math.log(math.log(p.T0))
    )

    return RegionIntegrals(
        cbar1=cbar1,
        cbar2=cbar2,
        d3=d3,
        kappa1=kappa1(p),
        kappa2=kappa2(p),
        kappa3=kappa3,
        m1=m1,
        m2=m2,
        per_region=per_region,
    )

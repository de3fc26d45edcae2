"""
Special functions on which every other module depends: the Riemann zeta
function for real and complex arguments, the imaginary part of log Gamma,
the Riemann-Siegel theta and Z functions and the Stirling remainder g(T).

Everything here is double precision. Each routine certifies its own
truncation error where a rigorous remainder bound exists and raises
`AccuracyError` if the requested tolerance cannot be met.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli, loggamma

from zerocount.types import (
    AccuracyError,
    ComplexPoint,
    DomainError,
    FloatLike,
    PoleError,
    RangeError,
)

# B_2, B_4, ..., B_60
_B2K = bernoulli(60)[2::2].astype(float)

_STIRLING_TERMS = 8
_STIRLING_RADIUS = 10.0
_MAX_IMAG = 1e7
_CHUNK = 1 << 20

_LOG_2 = math.log(2.0)
_LOG_PI = math.log(math.pi)
_MAX_LOG_FACTOR = 700.0

RS_THRESHOLD = 200.0
RS_MIN = 10.0


@dataclass(frozen=True)
class EvalAccuracy:
    """
    Accuracy request for the Euler-Maclaurin evaluations of zeta.

    Arguments:
        abs_tol: target absolute error of the truncated tail.
        max_terms: maximum number of Bernoulli correction terms.
    """

    abs_tol: float = 1e-12
    max_terms: int = 12

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")

        if self.max_terms < 8:
            raise ValueError(f"max_terms must be at least 8, got {self.max_terms}")

        if self.max_terms >= len(_B2K):
            raise ValueError(
                f"max_terms must be smaller than {len(_B2K)}, got {self.max_terms}"
            )


DEFAULT_ACCURACY = EvalAccuracy()


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------


def _cutoff(im: float) -> int:
    return max(20, int(math.ceil(2.0 * abs(im) / math.pi)))


def _dirichlet_sum(s: complex, n_terms: int) -> complex:
    # sum_{n < N} n^{-s}, chunked so that huge N stays within memory
    total = 0.0 + 0.0j

    for start in range(1, n_terms, _CHUNK):
        stop = min(n_terms, start + _CHUNK)
        log_n = np.log(np.arange(start, stop, dtype=float))
        total += np.exp(-s * log_n).sum()

    return complex(total)


def _em_tail(s: complex, n_terms: int, acc: EvalAccuracy) -> complex:
    big_n = float(n_terms)
    n_pow = cmath.exp(-s * math.log(big_n))

    total = big_n * n_pow / (s - 1.0) + 0.5 * n_pow
    rising = s * n_pow / big_n
    factorial = 2.0

    for k in range(1, acc.max_terms + 1):
        total += _B2K[k - 1] / factorial * rising

        rising *= (s + 2 * k - 1) * (s + 2 * k) / (big_n * big_n)
        factorial *= (2 * k + 1) * (2 * k + 2)

        denominator = s.real + 2 * k + 1
        if denominator <= 0:
            continue

        remainder = abs(_B2K[k] / factorial * rising) * abs(s + 2 * k + 1) / denominator
        if remainder <= acc.abs_tol:
            return total

    raise AccuracyError(
        f"Euler-Maclaurin tail at s={s} did not reach abs_tol={acc.abs_tol} "
        f"within {acc.max_terms} terms"
    )


def _zeta(s: complex, acc: EvalAccuracy) -> complex:
    n_terms = _cutoff(s.imag)
    return _dirichlet_sum(s, n_terms) + _em_tail(s, n_terms, acc)


def _log_sin(z: complex) -> complex:
    # log sin z without overflow of sin for large |Im z|
    if abs(z.imag) < 1.0:
        return cmath.log(cmath.sin(z))

    if z.imag > 0:
        return -1j * z + cmath.log(0.5j) + cmath.log(1.0 - cmath.exp(2j * z))

    return 1j * z + cmath.log(-0.5j) + cmath.log(1.0 - cmath.exp(-2j * z))


def _zeta_reflected(s: complex, acc: EvalAccuracy) -> complex:
    # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) gamma(1-s) zeta(1-s), for Re s < 0
    if s.imag == 0 and s.real.is_integer() and int(s.real) % 2 == 0:
        return 0j

    w = 1.0 - s
    terms = (
        s * _LOG_2,
        (s - 1.0) * _LOG_PI,
        _log_sin(0.5 * math.pi * s),
        complex(loggamma(w)),
    )
    log_factor = sum(terms)

    if log_factor.real > _MAX_LOG_FACTOR:
        raise AccuracyError(f"reflection factor at s={s} overflows a float")

    factor = cmath.exp(log_factor)
    inner_acc = EvalAccuracy(
        abs_tol=acc.abs_tol / (2.0 * max(1.0, abs(factor))),
        max_terms=acc.max_terms,
    )
    n_terms = _cutoff(w.imag)
    value = factor * (_dirichlet_sum(w, n_terms) + _em_tail(w, n_terms, inner_acc))

    eps = np.finfo(float).eps
    rounding = 2.0 * eps * sum(abs(t) for t in terms) * abs(value)
    rounding += eps * n_terms * abs(factor)

    if rounding > 0.5 * acc.abs_tol:
        raise AccuracyError(
            f"rounding error {rounding:.3g} of zeta at s={s} "
            f"exceeds abs_tol={acc.abs_tol}"
        )

    return value


def zeta_real(sigma: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """
    Riemann zeta at a real point `sigma > 1`.

    Arguments:
        sigma: real argument, strictly greater than 1.
        acc: accuracy request.

    Returns:
        zeta(sigma) with truncation error at most `acc.abs_tol`.
    """
    sigma = float(sigma)

    if not sigma > 1.0:
        raise DomainError(f"zeta_real requires sigma > 1, got {sigma}")

    return _zeta(complex(sigma, 0.0), acc).real


def zeta_real_array(
    sigma: np.ndarray, acc: EvalAccuracy = DEFAULT_ACCURACY
) -> np.ndarray:
    """Vectorised `zeta_real` for an array of real arguments, all `> 1`."""
    sigma = np.asarray(sigma, dtype=float)

    if sigma.size and not np.all(sigma > 1.0):
        raise DomainError(f"zeta_real requires sigma > 1, got min {sigma.min()}")

    n_terms = 20
    big_n = float(n_terms)
    log_n = np.log(np.arange(1, n_terms, dtype=float))

    s = sigma[..., None]
    total = np.exp(-s * log_n).sum(axis=-1)

    n_pow = np.exp(-sigma * math.log(big_n))
    total = total + big_n * n_pow / (sigma - 1.0) + 0.5 * n_pow
    rising = sigma * n_pow / big_n
    factorial = 2.0

    for k in range(1, acc.max_terms + 1):
        total = total + _B2K[k - 1] / factorial * rising
        rising = rising * (sigma + 2 * k - 1) * (sigma + 2 * k) / (big_n * big_n)
        factorial *= (2 * k + 1) * (2 * k + 2)

    remainder = np.abs(_B2K[acc.max_terms] / factorial * rising)
    if remainder.size and remainder.max() > acc.abs_tol:
        raise AccuracyError(
            f"Euler-Maclaurin tail bound {remainder.max()} "
            f"exceeds abs_tol={acc.abs_tol}"
        )

    return total


def log_zeta(sigma: FloatLike, acc: EvalAccuracy = DEFAULT_ACCURACY) -> FloatLike:
    if np.ndim(sigma) == 0:
        return math.log(zeta_real(float(sigma), acc))

    return np.log(zeta_real_array(sigma, acc))


def zeta_complex(s: ComplexPoint, acc: EvalAccuracy = DEFAULT_ACCURACY) -> complex:
    """
    Riemann zeta at a complex point through Euler-Maclaurin summation.

    For `Re s < 0` the functional equation maps the evaluation to `1 - s`. The
    trivial zeros at the negative even integers are returned as exact zeros.

    Arguments:
        s: complex argument, `s != 1` and `|Im s| <= 1e7`.
        acc: accuracy request.

    Returns:
        zeta(s) as a Python `complex`.

    Raises:
        AccuracyError: if the truncation or the estimated rounding error
            exceeds `acc.abs_tol`.
    """
    s = complex(s)

    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"zeta_complex requires a finite argument, got {s}")

    if s == 1:
        raise PoleError("zeta has a pole at s = 1")

    if abs(s.imag) > _MAX_IMAG:
        raise RangeError(f"|Im s| must be at most {_MAX_IMAG:g}, got {abs(s.imag)}")

    if s.real < 0:
        return _zeta_reflected(s, acc)

    return _zeta(s, acc)


# ---------------------------------------------------------------------------
# Gamma and g(T)
# ---------------------------------------------------------------------------


def _stirling_correction(w: complex) -> complex:
    correction = 0.0j
    w_inv = 1.0 / w
    w_inv2 = w_inv * w_inv
    power = w_inv

    for k in range(1, _STIRLING_TERMS + 1):
        correction += _B2K[k - 1] / (2 * k * (2 * k - 1)) * power
        power *= w_inv2

    return correction


def im_log_gamma(z: ComplexPoint) -> float:
    """
    Imaginary part of log Gamma(z) on the branch that varies continuously
    from the positive real axis, for `Re z > 0`.
    """
    z = complex(z)

    if not z.real > 0:
        raise DomainError(f"im_log_gamma requires Re z > 0, got {z}")

    shift = 0.0
    w = z
    while abs(w) < _STIRLING_RADIUS:
        shift += cmath.phase(w)
        w += 1.0

    value = ((w - 0.5) * cmath.log(w) - w).imag + _stirling_correction(w).imag

    return value - shift


def g_of_T(T: float) -> float:
    """
    The remainder g(T) in

    N(T) = S(T) + (T / 2 pi) log(T / 2 pi e) + 7/8 + g(T) / 2,

    i.e. `2/pi * Im log Gamma(1/4 + iT/2) - T/pi * log(T / 2e) + 1/4`.
    """
    T = float(T)

    if T < 5.0 / 7.0:
        raise DomainError(f"g_of_T requires T >= 5/7, got {T}")

    w = complex(0.25, T / 2.0)

    if abs(w) < _STIRLING_RADIUS:
        return (
            2.0 / math.pi * im_log_gamma(w)
            - T / math.pi * math.log(T / (2.0 * math.e))
            + 0.25
        )

    # the leading Stirling terms cancel analytically against the main term
    inner = (
        T / 4.0 * math.log1p(1.0 / (4.0 * T * T))
        + math.atan(1.0 / (2.0 * T)) / 4.0
        + _stirling_correction(w).imag
    )

    return 2.0 / math.pi * inner


# ---------------------------------------------------------------------------
# Riemann-Siegel
# ---------------------------------------------------------------------------


def _theta_asymptotic(t: np.ndarray) -> np.ndarray:
    t_inv = 1.0 / t
    t_inv2 = t_inv * t_inv

    return (
        t / 2.0 * np.log(t / (2.0 * math.pi))
        - t / 2.0
        - math.pi / 8.0
        + t_inv
        * (
            1.0 / 48.0
            + t_inv2
            * (
                7.0 / 5760.0
                + t_inv2
                * (
                    31.0 / 80640.0
                    + t_inv2 * (127.0 / 430080.0 + t_inv2 * 511.0 / 1216512.0)
                )
            )
        )
    )


def _theta_small(t: float) -> float:
    return im_log_gamma(complex(0.25, t / 2.0)) - t / 2.0 * math.log(math.pi)


def rs_theta(t: FloatLike) -> FloatLike:
    """Riemann-Siegel theta function, vectorised over `t > 0`."""
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)

    if np.any(~(t_arr > 0)):
        raise RangeError("rs_theta requires t > 0")

    out = np.empty_like(t_arr)
    large = t_arr >= RS_MIN
    out[large] = _theta_asymptotic(t_arr[large])
    out[~large] = [_theta_small(x) for x in t_arr[~large]]

    return float(out[0]) if scalar else out


_CAUCHY_POINTS = 32
_CAUCHY_RADIUS = 0.5
_PHI = 2.0 * math.pi * (np.arange(_CAUCHY_POINTS) + 0.5) / _CAUCHY_POINTS
_DERIVATIVES = 10
_FOURIER = np.exp(-1j * np.outer(_PHI, np.arange(_DERIVATIVES))) / _CAUCHY_POINTS
_DERIVATIVE_SCALE = np.array(
    [math.factorial(k) / _CAUCHY_RADIUS ** k for k in range(_DERIVATIVES)]
)


def _psi(z: np.ndarray) -> np.ndarray:
    return np.cos(2.0 * np.pi * (z * z - z - 1.0 / 16.0)) / np.cos(2.0 * np.pi * z)


def _psi_derivatives(p: np.ndarray) -> np.ndarray:
    # Cauchy integral on a circle around each p; Psi is entire
    z = p[:, None] + _CAUCHY_RADIUS * np.exp(1j * _PHI)[None, :]
    coefficients = _psi(z) @ _FOURIER

    return coefficients.real * _DERIVATIVE_SCALE


def _rs_correction(p: np.ndarray, a: np.ndarray) -> np.ndarray:
    d = _psi_derivatives(p)
    pi2 = math.pi ** 2

    c0 = d[:, 0]
    c1 = -d[:, 3] / (96.0 * pi2)
    c2 = d[:, 2] / (64.0 * pi2) + d[:, 6] / (18432.0 * pi2 ** 2)
    c3 = (
        -d[:, 1] / (64.0 * pi2)
        - d[:, 5] / (3840.0 * pi2 ** 2)
        - d[:, 9] / (5308416.0 * pi2 ** 3)
    )

    a_inv = 1.0 / a
    return c0 + a_inv * (c1 + a_inv * (c2 + a_inv * c3))


def _z_riemann_siegel(t: np.ndarray) -> np.ndarray:
    out = np.empty_like(t)
    n_max = int(math.floor(math.sqrt(t.max() / (2.0 * math.pi))))
    batch = max(1, 4_000_000 // max(n_max, 1))

    log_n = np.log(np.arange(1, n_max + 1, dtype=float))
    weights = 1.0 / np.sqrt(np.arange(1, n_max + 1, dtype=float))

    for start in range(0, len(t), batch):
        ts = t[start : start + batch]
        a = np.sqrt(ts / (2.0 * math.pi))
        n = np.floor(a)
        p = a - n
        theta = _theta_asymptotic(ts)

        mask = np.arange(1, n_max + 1)[None, :] <= n[:, None]
        phases = theta[:, None] - ts[:, None] * log_n[None, :]
        main = 2.0 * np.sum(np.where(mask, weights * np.cos(phases), 0.0), axis=1)

        sign = np.where(n.astype(np.int64) % 2 == 1, 1.0, -1.0)
        remainder = sign * (ts / (2.0 * math.pi)) ** -0.25 * _rs_correction(p, a)

        out[start : start + batch] = main + remainder

    return out


def _z_euler_maclaurin(t: float) -> float:
    value = cmath.exp(1j * rs_theta(t)) * zeta_complex(complex(0.5, t))
    return value.real


def rs_Z(t: FloatLike) -> FloatLike:
    """
    Hardy's Z function, real valued with `|Z(t)| = |zeta(1/2 + it)|`.

    Riemann-Siegel with the corrections C0 to C3 is used for
    `t >= RS_THRESHOLD`; below it the value comes from the Euler-Maclaurin
    zeta rotated by `exp(i theta(t))`. Accepts scalars and arrays.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)

    if np.any(~(t_arr >= RS_MIN)):
        raise RangeError(f"rs_Z requires t >= {RS_MIN:g}")

    out = np.empty_like(t_arr)
    low = t_arr < RS_THRESHOLD

    if np.any(low):
        out[low] = [_z_euler_maclaurin(x) for x in t_arr[low]]

    if np.any(~low):
        out[~low] = _z_riemann_siegel(t_arr[~low])

    return float(out[0]) if scalar else out


def gram_point(m: int, tol: float = 1e-12) -> float:
    """Solution `t >= 10` of `rs_theta(t) = m * pi` for `m >= 0`, by Newton steps."""
    if m < 0:
        raise DomainError(f"gram_point requires m >= 0, got {m}")

    t = 2.0 * math.pi * (m + 1) / math.log(m + 2)
    t = max(t, RS_MIN)

    for _ in range(100):
        step = (rs_theta(t) - m * math.pi) / (0.5 * math.log(t / (2.0 * math.pi)))
        t = max(t - step, RS_MIN)

        if abs(step) <= tol * t:
            return t

    raise AccuracyError(f"gram_point({m}) did not converge")


def count_sign_changes(values: np.ndarray) -> int:
    signs = np.sign(values)
    return int(np.count_nonzero(signs[1:] * signs[:-1] < 0))
